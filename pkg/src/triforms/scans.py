"""Batch verification scans behind ``triforms verify`` and the acceptance
suite.

A scan expands into a deterministic list of tasks (one per triple, fixture,
residue variant, or contiguous n-chunk), each of which produces verification
records from whole count tables rather than per-n enumeration.  Tasks can
run in worker processes; the merged report is sorted by (identity, triple,
n), so output does not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .counting import count_table
from .fixtures import FIXTURES, TABLE1, TABLE2, X2_3Y2
from .forms import BinaryQuadForm
from .identities import EQUALITY_PAIRS, LEMMA31_VARIANTS, lemma32_pairs
from .localdensity import FORM_116, alpha2_of, is_excluded_116
from .reductions import reduce_triple
from .report import VerificationRecord, VerificationReport
from .triangular import TriangularTriple, t_table

SCAN_IDS = ("lemma21", "lemma22", "lemma31", "lemma32", "thm1", "thm2",
            "thm3", "thm4", "thm5", "siegel", "alpha-ratio")

_THM5_CHUNK = 25000
_ALPHA_CHUNK = 500


def _record(identity, triple, n, lhs, rhs):
    return VerificationRecord(identity, triple, n, int(lhs), int(rhs),
                              bool(lhs == rhs))


def _theorem_task(identity, triple, n_max, force=False):
    """2t = r(4N) - r(N) (thm1/thm3/thm4) or 2t = 3r(N) - r(4N) (thm2)."""
    tt = TriangularTriple.of(triple)
    s = tt.shift
    direct = t_table(tt, n_max)
    rtab = count_table(tt.form(), 4 * (8 * n_max + s))
    if identity == "thm3" and not force:
        ns = range(2, n_max + 1, 2)
    elif identity == "thm4" and not force:
        ns = (n for n in range(1, n_max + 1) if n % 3 != 1)
    else:
        ns = range(1, n_max + 1)
    out = []
    for n in ns:
        big = 8 * n + s
        if identity == "thm2":
            rhs = 3 * rtab[big] - rtab[4 * big]
        else:
            rhs = rtab[4 * big] - rtab[big]
        out.append(_record(identity, tt.as_tuple(), n, 2 * direct[n], rhs))
    return out


def _thm5_task(lo, hi):
    """Representability criterion: indicator(t > 0) vs indicator(not excluded)."""
    direct = t_table((1, 1, 6), hi)
    return [
        _record("thm5", (1, 1, 6), n,
                1 if direct[n] > 0 else 0,
                0 if is_excluded_116(n) else 1)
        for n in range(lo, hi + 1)
    ]


def _reduction_task(identity, triple, n_max):
    tt = TriangularTriple.of(triple)
    formula = reduce_triple(tt)
    direct = t_table(tt, n_max)
    reduced = formula.evaluate_range(n_max)
    return [_record(identity, tt.as_tuple(), n, direct[n], reduced[n])
            for n in range(1, n_max + 1)]


def _lemma31_task(variant, m_max):
    parity, residue, modulus, scale = LEMMA31_VARIANTS[variant]
    restricted = count_table(X2_3Y2, m_max, parity=parity)
    allodd = count_table(X2_3Y2, scale * m_max, parity=(1, 1))
    return [
        _record(f"lemma31:{variant}", None, m,
                2 * restricted[m], allodd[scale * m])
        for m in range(residue, m_max + 1, modulus)
    ]


def _lemma32_eq_task(a, b, m_max):
    f = BinaryQuadForm(a, b)
    lo = count_table(f, m_max, parity=(1, 1))
    hi = count_table(f, 4 * m_max, parity=(1, 1))
    ident = f"lemma32[{a},{b}]"
    return [_record(ident, None, m, lo[m], hi[4 * m])
            for m in range(8, m_max + 1, 8)]


def _lemma32_cex_task(a, b, m_max):
    """One record per pair: pass iff some m <= m_max breaks the equality;
    n reports the smallest such m (0 when none was found)."""
    f = BinaryQuadForm(a, b)
    lo = count_table(f, m_max, parity=(1, 1))
    hi = count_table(f, 4 * m_max, parity=(1, 1))
    ident = f"lemma32-counterexample[{a},{b}]"
    for m in range(8, m_max + 1, 8):
        if lo[m] != hi[4 * m]:
            return [VerificationRecord(ident, None, m,
                                       int(lo[m]), int(hi[4 * m]), True)]
    return [VerificationRecord(ident, None, 0, 0, 0, False)]


def _siegel_task(triple, m_max):
    fx = FIXTURES[tuple(triple)]
    top = fx.target(m_max)
    tabs = {name: count_table(f, top) for name, f in fx.forms().items()}
    out = []
    for m in range(m_max + 1):
        n = fx.target(m)
        r = {name: int(tab[n]) for name, tab in tabs.items()}
        out.append(_record("siegel", fx.triple, m,
                           r["f1"] + 2 * r["f2"] + r["f3"], r["g1"] + r["g2"]))
        out.append(_record("siegel:f1=f2", fx.triple, m, r["f1"], r["f2"]))
        out.append(_record("siegel:g2split", fx.triple, m,
                           r["g2"], r["aux1"] + r["aux2"]))
    return out


def _alpha_task(lo, hi):
    """Cross-multiplied ratio identity and the strict density inequality.

    lhs/rhs are the two sides scaled by a common denominator so the
    records stay integral.
    """
    rtab = count_table(FORM_116, 8 * hi + 8)
    out = []
    for n in range(lo, hi + 1):
        a_big = alpha2_of(8 * n + 8)
        a_small = alpha2_of(2 * n + 2)
        left = rtab[8 * n + 8] * a_small
        right = 2 * a_big * rtab[2 * n + 2]
        den = left.denominator * right.denominator // gcd(
            left.denominator, right.denominator)
        out.append(_record("alpha-ratio:eq", None, n,
                           int(left * den), int(right * den)))
        gl = 2 * a_big
        gr = a_small
        den = gl.denominator * gr.denominator // gcd(gl.denominator,
                                                     gr.denominator)
        out.append(VerificationRecord("alpha-ratio:gt", None, n,
                                      int(gl * den), int(gr * den),
                                      gl > gr))
    return out


_TASK_FUNCS = {
    "theorem": _theorem_task,
    "thm5": _thm5_task,
    "reduction": _reduction_task,
    "lemma31": _lemma31_task,
    "lemma32eq": _lemma32_eq_task,
    "lemma32cex": _lemma32_cex_task,
    "siegel": _siegel_task,
    "alpha": _alpha_task,
}


def _run_task(task):
    name, args = task
    return _TASK_FUNCS[name](*args)


def reduction_family(parity: int, entry_max: int = 8):
    """Sorted coprime triples with entries <= entry_max and S ≡ parity (mod 2);
    the built-in families behind the lemma21/lemma22 scans."""
    out = []
    for a in range(1, entry_max + 1):
        for b in range(a, entry_max + 1):
            for c in range(b, entry_max + 1):
                if gcd(gcd(a, b), c) == 1 and (a + b + c) % 2 == parity:
                    out.append((a, b, c))
    return out


def _chunks(n_max, size, start=1):
    lo = start
    while lo <= n_max:
        hi = min(lo + size - 1, n_max)
        yield lo, hi
        lo = hi + 1


def build_tasks(identity: str, n_max: int, force: bool = False):
    """Deterministic task list for one scan id; n_max bounds n (or m)."""
    if identity == "thm1":
        return [("theorem", ("thm1", t, n_max)) for t in TABLE1]
    if identity == "thm2":
        return [("theorem", ("thm2", t, n_max)) for t in TABLE2]
    if identity == "thm3":
        return [("theorem", ("thm3", t, n_max, force)) for t in sorted(FIXTURES)]
    if identity == "thm4":
        return [("theorem", ("thm4", (1, 1, 27), n_max, force))]
    if identity == "thm5":
        return [("thm5", (lo, hi)) for lo, hi in _chunks(n_max, _THM5_CHUNK)]
    if identity == "lemma21":
        return [("reduction", ("lemma21", t, n_max)) for t in reduction_family(1)]
    if identity == "lemma22":
        return [("reduction", ("lemma22", t, n_max)) for t in reduction_family(0)]
    if identity == "lemma31":
        return [("lemma31", (v, n_max)) for v in ("i", "ii", "iii")]
    if identity == "lemma32":
        tasks = [("lemma32eq", (a, b, n_max)) for a, b in EQUALITY_PAIRS]
        tasks += [("lemma32cex", (a, b, n_max)) for a, b in lemma32_pairs(48)
                  if (a, b) not in EQUALITY_PAIRS]
        return tasks
    if identity == "siegel":
        return [("siegel", (t, n_max)) for t in sorted(FIXTURES)]
    if identity == "alpha-ratio":
        return [("alpha", (lo, hi)) for lo, hi in _chunks(n_max, _ALPHA_CHUNK)]
    raise ValueError(f"unknown identity {identity!r}; "
                     f"choose one of {', '.join(SCAN_IDS)}")


def run_scan(identity: str, n_max: int, workers: int = 1,
             force: bool = False) -> VerificationReport:
    tasks = build_tasks(identity, n_max, force)
    if workers <= 1 or len(tasks) <= 1:
        batches = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_task, tasks))
    records = [r for batch in batches for r in batch]
    return VerificationReport(records)
