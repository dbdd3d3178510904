"""Acceptance criteria, one test (or a few) per criterion.

Every test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL/SKIP line per marked test.  Runtime bounds are asserted with the
enumeration cache cleared first so each criterion pays for its own tableaux.
"""
import time

import pytest

from syt import checks, core, csp
from syt.core import Partition, parse_tableau
from syt.descent import extended_descent
from syt.dynamics import dual_evacuate, dual_promote, evacuate, promote
from syt.embedding import embed


def run_checks(fns, universe, budget):
    core._enumerate_cached.cache_clear()
    start = time.perf_counter()
    failures = {}
    for fn in fns:
        count, bad = fn(universe)
        assert count > 0, fn.__name__
        if bad:
            failures[fn.__name__] = bad[:3]
    elapsed = time.perf_counter() - start
    assert not failures, failures
    assert elapsed < budget, f"{elapsed:.1f}s exceeds {budget}s"
    return elapsed


@pytest.fixture(scope="module")
def universe():
    return checks.Universe.build(8)


@pytest.mark.criterion(1, "golden worked examples reproduce byte-exactly")
def test_golden_examples():
    start = time.perf_counter()
    big = parse_tableau("1 4 5/2 6 8/3 7 13/9 10 15/11 14/12")
    t, p = promote(big)
    assert (str(t), str(p)) == ("1 2 6/3 5 7/4 8 9/10 11 14/12 15/13", "(4,3) (3,3) (2,3) (2,2) (1,2) (1,1)")
    t, p = dual_promote(big)
    assert (str(t), str(p)) == ("1 3 4/2 5 7/6 9 12/8 13 14/10 15/11", "(1,1) (2,1) (3,1) (3,2) (4,2) (5,2)")
    e = parse_tableau("1 3 8/2 4/5 9/6 10/7")
    assert str(evacuate(e)) == "1 3 8/2 5/4 6/7 10/9"
    assert str(dual_evacuate(e)) == "1 4 9/2 5/3 6/7 10/8"
    assert str(embed(parse_tableau("1 2 6/3 5/4"))) == "1 2 6/3 5 10/4 7 11/8 9 12"

    r3 = parse_tableau("1 3 5/2 4 6/7 9 10/8 11 12")
    s3 = parse_tableau("1 2 4/3 6/5")
    vectors = {
        "R1": (parse_tableau("1 3 6/2 5 7/4 9 11/8 10 12"), "x.x..xx.x.x."),
        "R2": (parse_tableau("1 2 4/3 5 9/6 8 11/7 10 12"), ".x.xxx..x.xx"),
        "R3": (r3, "x.x.xxx..x.x"),
        "ev(R3)": (evacuate(r3), ".x..xxx.x.xx"),
        "S1": (parse_tableau("1 4 5/2 6/3"), "xx..xx..xx.."),
        "S2": (parse_tableau("1 2 5/3 6/4"), ".xx.x.x..x.x"),
        "S3": (s3, ".x.x..x.x.xx"),
        "ev(S3)": (evacuate(s3), "x.x.x..x.x.x"),
        "dev(S3)": (dual_evacuate(s3), ".x.x.xx.x.x."),
    }
    for name, (tab, text) in vectors.items():
        assert str(extended_descent(tab)) == text, name
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "operator identities hold exhaustively (<= 8 cells, rectangles, staircases)")
def test_operator_identities(universe):
    run_checks(
        [
            checks.check_standardness,
            checks.check_inverse,
            checks.check_path_reversal,
            checks.check_involutions,
            checks.check_dihedral,
            checks.check_ev_dev_power,
            checks.check_rectangle_order,
            checks.check_rectangle_ev_eq_dev,
            checks.check_staircase_power,
            checks.check_staircase_transpose,
            checks.check_key_observation,
        ],
        universe,
        30,
    )


@pytest.mark.criterion(3, "embedding commutes with the dynamics; promotion path passes through n (sc_3, sc_4)")
def test_embedding_commutes_with_dynamics():
    u = checks.Universe([], [], [Partition.staircase(3), Partition.staircase(4)])
    assert sum(1 for _ in u.tableaux(u.staircases)) == 16 + 768
    run_checks(
        [
            checks.check_embedding_commutes,
            checks.check_path_through_n,
            checks.check_embedding_wide,
            checks.check_embedding_injective,
        ],
        u,
        30,
    )


@pytest.mark.criterion(4, "descent vectors rotate under promotion and flip under (dual-)evacuation")
def test_descent_laws(universe):
    run_checks(
        [checks.check_descent_rotation, checks.check_descent_flips, checks.check_descent_embedding],
        universe,
        30,
    )


@pytest.mark.criterion(5, "staircase orbits divide N but not N/2; column filling has a full orbit")
def test_staircase_cycle_structure():
    u = checks.Universe([], [], [Partition.staircase(3), Partition.staircase(4)])
    run_checks([checks.check_staircase_cycles], u, 10)
    for k, N, total in [(3, 12, 16), (4, 20, 768)]:
        cs = csp.cycle_structure(Partition.staircase(k), "promote")
        assert cs.order == N and cs.size == total
        assert cs.orbit_of[checks.column_filling_staircase(k).rows] == N


def _certify(k, factors, budget=30):
    core._enumerate_cached.cache_clear()
    start = time.perf_counter()
    shape = Partition.staircase(k)
    cs = csp.cycle_structure(shape, "promote")
    ok = csp.verify_cyclotomic_product(csp.parse_factors(factors), shape, "promote", cs)
    elapsed = time.perf_counter() - start
    product = csp.cyclotomic_product(csp.parse_factors(factors))
    print(f"sc_{k} {factors}: N={cs.order}, value at q=1 is {sum(product)} for {cs.size} tableaux, "
          f"CSP={'yes' if ok else 'no'}, {elapsed:.1f}s")
    assert elapsed < budget
    assert ok, f"product {factors} is not congruent to the canonical CSP polynomial of sc_{k}"


@pytest.mark.criterion(6, "cyclotomic certificates for promotion on staircases")
@pytest.mark.parametrize(
    "k, factors",
    [(3, "2,4^2,6,8,12"), (3, "2^2,4,6,10,12"), (4, "2^3,3,4^2,8,10^2,16,20")],
    ids=["sc3-first", "sc3-second", "sc4"],
)
def test_cyclotomic_certificates(k, factors):
    _certify(k, factors)


@pytest.mark.k5
@pytest.mark.criterion(6, "cyclotomic certificates for promotion on staircases")
def test_cyclotomic_certificate_sc5():
    _certify(5, "2^11,6,10^3,11,13,22,24^4,30", budget=600)


@pytest.mark.criterion(7, "q-hook length formula is a CSP polynomial for promotion on rectangles")
@pytest.mark.parametrize("c, r", [(2, 2), (3, 2), (2, 3), (3, 3), (3, 4)])
def test_rectangle_csp(c, r):
    core._enumerate_cached.cache_clear()
    start = time.perf_counter()
    shape = Partition.rectangle(c, r)
    cs = csp.cycle_structure(shape, "promote")
    qhook, _ = csp.q_hook_length(shape, cs.order)
    majgf, _ = csp.statistic_generating_function(shape, csp.MAJ, cs.order)
    shifts = csp.csp_shifts(majgf, cs)
    print(f"{c}^{r}: N={cs.order}, maj generating function certified by q^s for s in {shifts}, "
          f"-b mod N = {-csp.b_number(shape) % cs.order}")
    assert csp.is_csp_polynomial(qhook, cs)
    assert -csp.b_number(shape) % cs.order in shifts
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(8, "RSK dual-evacuation and fixed-point counts agree with direct computation")
def test_oracle_equivalences():
    u = checks.Universe.build(8)
    u.rectangles, u.staircases = [], []
    run_checks([checks.check_rsk_oracle, checks.check_fixed_points], u, 30)


@pytest.mark.criterion(9, "path dominance (general shapes) and corner displacement (staircases)")
def test_path_dominance_and_corner_displacement():
    u = checks.Universe(list(core.shapes_up_to(8)), [], [Partition.staircase(k) for k in (2, 3, 4)])
    run_checks([checks.check_path_dominance, checks.check_corner_displacement], u, 30)
