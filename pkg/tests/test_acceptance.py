"""Acceptance suite: every criterion is a dedicated test that prints one
pass/fail line (run with ``pytest -s tests/test_acceptance.py`` to see them
stream).  All comparisons are exact; the only tolerances are the per-
criterion wall-clock budgets, which are asserted as stated.
"""

import json
import random
import time
from math import gcd

from triforms.cli import main as cli_main
from triforms.fixtures import (CHI_FORMS, FIXTURES, LEMMA31_MAPS, PSI1, PSI3,
                               THM4_PHI, X2_3Y2, ConstrainedRepSet, thm4_sets)
from triforms.forms import LinearCongruence, ParityClass
from triforms.identities import (EQUALITY_PAIRS, lemma32_pairs,
                                 verify_bijection)
from triforms.localdensity import alpha2_of, is_excluded_116
from triforms.reductions import BRANCHES, reduce_triple, verify_reduction
from triforms.scans import run_scan
from triforms.triangular import (t_direct, t_table, t_table_via_forms,
                                 t_via_forms)

SEED = 20240817


def _criterion(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] {name}: {status}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def _random_triples(count=200, entry_max=30):
    rng = random.Random(SEED)
    triples = []
    seen = set()
    while len(triples) < count:
        t = tuple(rng.randint(1, entry_max) for _ in range(3))
        if t in seen or gcd(gcd(t[0], t[1]), t[2]) != 1:
            continue
        seen.add(t)
        triples.append(t)
    return triples


TRIPLES_200 = _random_triples()


def test_cross_oracle_200_triples():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 1)
    bad = []
    for triple in TRIPLES_200:
        direct = t_table(triple, 500)
        via = t_table_via_forms(triple, 500)
        if not (direct == via).all():
            bad.append(triple)
            continue
        for n in (rng.randint(0, 500) for _ in range(3)):
            if t_direct(triple, n) != t_via_forms(triple, n):
                bad.append((triple, n))
    elapsed = time.perf_counter() - t0
    _criterion("cross-oracle t_direct == t_via_forms (200 triples, n<=500)",
               not bad and elapsed < 30,
               f"{elapsed:.1f}s" + (f" bad={bad[:3]}" if bad else ""))


def test_reductions_200_triples_all_branches():
    t0 = time.perf_counter()
    branches = set()
    bad = []
    for triple in TRIPLES_200:
        branches.add(reduce_triple(triple).branch)
        rep = verify_reduction(triple, 500)
        if not rep.all_passed:
            bad.append(triple)
    elapsed = time.perf_counter() - t0
    coverage = branches == set(BRANCHES)
    _criterion("section-2 reductions (200 triples, n<=500, 7 branches)",
               not bad and coverage and elapsed < 60,
               f"{elapsed:.1f}s branches={len(branches)}/7"
               + (f" bad={bad[:3]}" if bad else ""))


def _scan_criterion(name, ident, nmax, budget, expected_records=None):
    t0 = time.perf_counter()
    rep = run_scan(ident, nmax)
    elapsed = time.perf_counter() - t0
    ok = rep.all_passed and elapsed < budget
    detail = f"{len(rep)} records, {elapsed:.1f}s"
    if expected_records is not None and len(rep) != expected_records:
        ok = False
        detail += f" (expected {expected_records})"
    fails = rep.failures()
    if fails:
        detail += f" first_failure={fails[0].to_text_line()}"
    _criterion(name, ok, detail)
    return rep


def test_theorem1_all_table1_triples():
    _scan_criterion("theorem 1 (21 triples, n<=2000)", "thm1", 2000, 300,
                    expected_records=21 * 2000)


def test_theorem2_all_table2_triples():
    _scan_criterion("theorem 2 (12 triples, n<=2000)", "thm2", 2000, 180,
                    expected_records=12 * 2000)


def test_theorem3_even_n():
    _scan_criterion("theorem 3 (3 triples, even n<=2000)", "thm3", 2000, 120,
                    expected_records=3 * 1000)


def test_theorem4():
    _scan_criterion("theorem 4 (n<=2000, n !≡ 1 mod 3)", "thm4", 2000, 120,
                    expected_records=2000 - 667)


def test_theorem5_representability():
    t0 = time.perf_counter()
    rep = run_scan("thm5", 100000)
    elapsed = time.perf_counter() - t0
    # t(1,1,6;4) = 16: the sixteen index triples are (x,y) hitting {1,3} in
    # either order (2 indices each) times z in {0,1}; confirmed by the raw
    # cube oracle and the all-odd form count.
    spots = (t_direct((1, 1, 6), 5) == 0 and is_excluded_116(5)
             and t_direct((1, 1, 6), 4) == 16 and not is_excluded_116(4))
    _criterion("theorem 5 representability (n<=100000, spot values)",
               rep.all_passed and spots and len(rep) == 100000 and elapsed < 120,
               f"{len(rep)} records, {elapsed:.1f}s")


def test_lemma31_and_lemma32():
    t0 = time.perf_counter()
    rep31 = run_scan("lemma31", 10000)
    rep32 = run_scan("lemma32", 10000)
    elapsed = time.perf_counter() - t0
    cex_idents = {r.identity for r in rep32 if "counterexample" in r.identity}
    expected_cex = {f"lemma32-counterexample[{a},{b}]"
                    for a, b in lemma32_pairs(48) if (a, b) not in EQUALITY_PAIRS}
    _criterion("lemma 3.1 (m<=10^4) and lemma 3.2 (+counterexamples, a+b<=48)",
               rep31.all_passed and rep32.all_passed
               and cex_idents == expected_cex and len(expected_cex) == 31,
               f"{len(rep31)}+{len(rep32)} records, "
               f"{len(cex_idents)} counterexample pairs, {elapsed:.1f}s")


def test_all_explicit_maps_bijective():
    t0 = time.perf_counter()
    bad = []

    def tilde(f, m):
        return ConstrainedRepSet(f, m, (ParityClass((1, 1)),
                                        LinearCongruence((1, 1), 4, 0)))

    for m in range(1, 201, 4):       # psi1: m ≡ 1 (mod 4)
        if not verify_bijection(PSI1, ConstrainedRepSet(
                X2_3Y2, m, (ParityClass((1, 0)),)), tilde(X2_3Y2, 4 * m)):
            bad.append(("psi1", m))
    for m in range(3, 201, 4):       # psi2: m ≡ 3 (mod 4)
        if not verify_bijection(LEMMA31_MAPS["ii"], ConstrainedRepSet(
                X2_3Y2, m, (ParityClass((0, 1)),)), tilde(X2_3Y2, 4 * m)):
            bad.append(("psi2", m))
    for m in range(4, 201, 8):       # psi3: m ≡ 4 (mod 8)
        if not verify_bijection(PSI3, ConstrainedRepSet(
                X2_3Y2, m, (ParityClass((0, 0)),)), tilde(X2_3Y2, m)):
            bad.append(("psi3", m))
    for (a, b), (f, chi) in CHI_FORMS.items():
        for m in range(8, 201, 8):   # chi maps: 8 | m
            if not verify_bijection(chi, tilde(f, m), tilde(f, 4 * m)):
                bad.append((f"chi{(a, b)}", m))
    for fx in FIXTURES.values():
        for m in range(0, 201):
            for nm, lmap, sets in (("phi1", fx.phi1, fx.phi1_sets(m)),
                                   ("phi2", fx.phi2, fx.phi2_sets(m)),
                                   ("phi3", fx.phi3, fx.phi3_sets(m)),
                                   ("phi4", fx.phi4, fx.phi4_sets(m))):
                if not verify_bijection(lmap, *sets):
                    bad.append((fx.triple, nm, m))
    for n in range(1, 201):
        if n % 3 == 1:
            continue
        if not verify_bijection(THM4_PHI, *thm4_sets(n)):
            bad.append(("thm4-phi", n))
    elapsed = time.perf_counter() - t0
    _criterion("all explicit maps bijective on their families (m<=200)",
               not bad, f"{elapsed:.1f}s" + (f" bad={bad[:3]}" if bad else ""))


def test_siegel_genus_identity():
    _scan_criterion("genus identity + sub-identities (3 fixtures, m<=500)",
                    "siegel", 500, 60, expected_records=3 * 3 * 501)


def test_alpha2_ratio_and_inequality():
    t0 = time.perf_counter()
    rep = run_scan("alpha-ratio", 2000)
    strict = all(2 * alpha2_of(8 * n + 8) > alpha2_of(2 * n + 2)
                 for n in range(1, 2001))
    elapsed = time.perf_counter() - t0
    _criterion("alpha_2 ratio identity and strict inequality (n<=2000)",
               rep.all_passed and strict and len(rep) == 4000,
               f"{len(rep)} records, {elapsed:.1f}s")


def test_cli_exit_codes_and_golden_stability(capsys):
    codes = {}
    codes["all-pass"] = cli_main(["verify", "thm3", "--nmax", "20"])
    capsys.readouterr()
    codes["failure"] = cli_main(["verify", "thm3", "--nmax", "9", "--force"])
    capsys.readouterr()
    codes["usage"] = cli_main(["verify", "thm1", "--nmax", "0"])
    capsys.readouterr()
    contract = codes == {"all-pass": 0, "failure": 1, "usage": 2}

    outputs = {}
    for fmt in ("json", "csv"):
        for workers in ("1", "8"):
            code = cli_main(["verify", "siegel", "--nmax", "40",
                             "--format", fmt, "--workers", workers])
            captured = capsys.readouterr()
            assert code == 0
            outputs[(fmt, workers)] = captured.out
    stable = (outputs[("json", "1")] == outputs[("json", "8")]
              and outputs[("csv", "1")] == outputs[("csv", "8")])
    sample = json.loads(outputs[("json", "1")].splitlines()[0])
    schema = list(sample) == ["identity", "triple", "n", "lhs", "rhs", "pass"]
    _criterion("CLI exit-code contract and worker-count byte stability",
               contract and stable and schema,
               f"codes={codes}")
