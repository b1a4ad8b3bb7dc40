"""Rewrites of t(a,b,c;n) as representation counts of explicit ternary forms.

After permuting (a,b,c) so the parity hypotheses hold (first entry odd; for
even S the even entry goes last), the sum S = a+b+c selects one of seven
shapes: six single scaled counts of a substituted form at 8n+S, or, when
8 | S, a difference of two counts.  The substituted forms are produced by
exact polynomial composition, never written out by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .counting import count, count_table
from .forms import TernaryQuadForm, check_target
from .triangular import TriangularTriple, t_table

# Variable substitutions used by the case analysis, as row matrices M with
# g(v) = f(M v).
SUB_X_X2Y_X2Z = ((1, 0, 0), (1, -2, 0), (1, 0, -2))   # (x, x-2y, x-2z)
SUB_X_Y_Y2Z = ((1, 0, 0), (0, 1, 0), (0, 1, -2))      # (x, y, y-2z)
SUB_X_X4Y_Z = ((1, 0, 0), (1, -4, 0), (0, 0, 1))      # (x, x-4y, z)
SUB_X_X4Y_X2Z = ((1, 0, 0), (1, -4, 0), (1, 0, -2))   # (x, x-4y, x-2z)

BRANCHES = (
    "odd-uniform-mod4",
    "odd-general",
    "S2-c4mod8",
    "S2-cnot4mod8",
    "S4-c2mod4",
    "S4-c0mod4",
    "S0-difference",
)


def _permute_for_parity(triple):
    """Lexicographically smallest reordering meeting the parity hypotheses:
    odd S needs an odd first entry; even S needs the (unique) even entry
    last."""
    a, b, c = triple
    if (a + b + c) % 2:
        cands = [p for p in permutations((a, b, c)) if p[0] % 2 == 1]
    else:
        cands = [p for p in permutations((a, b, c))
                 if p[0] % 2 == 1 and p[1] % 2 == 1 and p[2] % 2 == 0]
    return min(cands)


@dataclass(frozen=True)
class ReductionFormula:
    """Either  t(a,b,c;n) = multiplier * r(form, 8n+S)
    or        t(a,b,c;n) = r(form, 8n+S) - r(second_form, 2n+S/4)."""

    triple: tuple
    permuted: tuple
    branch: str
    form: TernaryQuadForm
    multiplier: int = 1
    second_form: TernaryQuadForm | None = None

    @property
    def kind(self) -> str:
        return "difference" if self.second_form is not None else "single"

    @property
    def shift(self) -> int:
        return sum(self.triple)

    def targets(self, n):
        s = self.shift
        if self.second_form is None:
            return (8 * n + s,)
        return (8 * n + s, 2 * n + s // 4)

    def evaluate(self, n) -> int:
        n = check_target(n)
        s = self.shift
        if self.second_form is None:
            return self.multiplier * count(self.form, 8 * n + s)
        return count(self.form, 8 * n + s) - count(self.second_form, 2 * n + s // 4)

    def evaluate_range(self, n_max) -> np.ndarray:
        """Formula values for all n in [0, n_max] via count tables."""
        n_max = check_target(n_max, "n_max")
        s = self.shift
        tab1 = count_table(self.form, 8 * n_max + s)
        vals = tab1[s::8].astype(np.int64)
        if self.second_form is None:
            return self.multiplier * vals
        tab2 = count_table(self.second_form, 2 * n_max + s // 4)
        return vals - tab2[s // 4:: 2]

    def describe(self) -> str:
        a, b, c = self.triple
        s = self.shift
        head = f"t({a},{b},{c};n) = "
        if self.second_form is None:
            mult = "" if self.multiplier == 1 else f"{self.multiplier}*"
            body = f"{mult}r({self.form.poly_str()}, 8n+{s})"
        else:
            body = (f"r({self.form.poly_str()}, 8n+{s})"
                    f" - r({self.second_form.poly_str()}, 2n+{s // 4})")
        return head + body + f"  [order {self.permuted}, branch {self.branch}]"

    __str__ = describe


def reduce_triple(triple) -> ReductionFormula:
    """Case analysis on S = a+b+c (after the parity permutation)."""
    tt = TriangularTriple.of(triple)
    orig = tt.as_tuple()
    p = _permute_for_parity(orig)
    a, b, c = p
    s = a + b + c
    f = TernaryQuadForm.diagonal(a, b, c)

    if s % 2 == 1:
        if a % 4 == b % 4 == c % 4:
            return ReductionFormula(orig, p, "odd-uniform-mod4", f)
        return ReductionFormula(orig, p, "odd-general", f.substituted(SUB_X_X2Y_X2Z))
    if s % 4 == 2:
        if c % 8 == 4:
            return ReductionFormula(orig, p, "S2-c4mod8", f)
        return ReductionFormula(orig, p, "S2-cnot4mod8", f.substituted(SUB_X_Y_Y2Z))
    if s % 8 == 4:
        if c % 4 == 2:
            return ReductionFormula(orig, p, "S4-c2mod4",
                                    f.substituted(SUB_X_X4Y_Z), multiplier=2)
        return ReductionFormula(orig, p, "S4-c0mod4",
                                f.substituted(SUB_X_X4Y_X2Z), multiplier=2)
    return ReductionFormula(orig, p, "S0-difference",
                            f.substituted(SUB_X_X2Y_X2Z), second_form=f)


def verify_reduction(triple, n_max, identity="reduction"):
    """Compare the reduction formula with the direct triangular count for
    every n in [1, n_max]; returns a VerificationReport."""
    from .report import VerificationRecord, VerificationReport

    tt = TriangularTriple.of(triple)
    n_max = check_target(n_max, "n_max")
    formula = reduce_triple(tt)
    direct = t_table(tt, n_max)
    reduced = formula.evaluate_range(n_max)
    records = [
        VerificationRecord(identity, tt.as_tuple(), n,
                           int(direct[n]), int(reduced[n]),
                           bool(direct[n] == reduced[n]))
        for n in range(1, n_max + 1)
    ]
    return VerificationReport(records)
