"""Workspace accounting in bits.

Structures report ``bit_usage() -> (principal, auxiliary)`` and
``words_allocated()``. Algorithms register each workspace structure in a
:class:`SpaceLedger`; the input graph and the output stream never are.
"""

import csv
import io
from dataclasses import dataclass

WORD_BITS = 64


class LedgerError(ValueError):
    pass


@dataclass
class Entry:
    label: str
    principal: int
    auxiliary: int
    source: object = None

    @property
    def total(self):
        return self.principal + self.auxiliary


class SpaceLedger:
    """Live entries plus a running peak of their total."""

    def __init__(self):
        self._live = {}
        self._history = {}
        self._peak = 0
        self._peak_split = (0, 0)
        self.bound_formula = ""
        self.bound_bits = None

    def register(self, label, principal_bits, auxiliary_bits=0, source=None):
        if label in self._live:
            raise LedgerError(f"label {label!r} already live")
        if principal_bits < 0 or auxiliary_bits < 0:
            raise LedgerError("bit counts must be non-negative")
        e = Entry(label, int(principal_bits), int(auxiliary_bits), source)
        self._live[label] = e
        self._history[label] = e
        total = self.live_total()
        if total > self._peak or not self._peak:
            self._peak = total
            self._peak_split = (sum(x.principal for x in self._live.values()),
                                sum(x.auxiliary for x in self._live.values()))
        return e

    def track(self, label, structure):
        """Register a structure by its own ``bit_usage()``."""
        p, a = structure.bit_usage()
        return self.register(label, p, a, source=structure)

    def release(self, label):
        if label not in self._live:
            raise LedgerError(f"label {label!r} is not live")
        del self._live[label]

    def live_total(self):
        return sum(e.total for e in self._live.values())

    def peak(self):
        return self._peak

    def entries(self):
        """Every entry ever registered, latest per label, in registration order."""
        return list(self._history.values())

    def principal_total(self):
        return sum(e.principal for e in self._history.values())

    def auxiliary_total(self):
        return sum(e.auxiliary for e in self._history.values())

    def set_bound(self, formula, bits):
        self.bound_formula = formula
        self.bound_bits = bits

    def audit(self):
        """Check each self-reported entry against its word allocation.

        Returns a list of ``(label, declared_bits, allocated_bits)`` mismatches.
        """
        bad = []
        for e in self._history.values():
            if e.source is None or not hasattr(e.source, "words_allocated"):
                continue
            alloc = WORD_BITS * e.source.words_allocated()
            if alloc != e.total:
                bad.append((e.label, e.total, alloc))
        return bad

    def report(self):
        """Rows of (label, principal, auxiliary, bound_formula, bound_bits, ratio)."""
        rows = [(e.label, e.principal, e.auxiliary, "", "", "")
                for e in self._history.values()]
        bound = self.bound_bits
        ratio = f"{self._peak / bound:.4f}" if bound else ""
        rows.append(("peak", *self._peak_split,
                     self.bound_formula, "" if bound is None else bound, ratio))
        return rows

    def to_csv(self, path=None):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "principal_bits", "auxiliary_bits",
                    "bound_formula", "bound_bits", "ratio"])
        w.writerows(self.report())
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        return text
