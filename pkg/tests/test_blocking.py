import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from blockingsets import (
    EqualityCase,
    PointSet,
    baer_complement,
    case_analysis,
    classify_equality,
    counting_identities_check,
    equality_conditions,
    equality_secant_sizes,
    field_of_order,
    general_design_bound,
    hermitian_curve,
    hyperplane_tangency_bound,
    hyperplane_tfold_bound,
    is_minimal_t_fold,
    is_t_fold_blocking,
    main_bound,
    pg_create,
    plane_minus_point,
    quadratic_membership,
    s_secant_bound,
    secant_spectrum,
    semiarc_bound,
    symmetric_design_bound,
    variance_slack,
    verify_point_set,
)
from blockingsets.blocking import (
    code_dimension_bound,
    removable_points,
    symmetric_design_membership,
    variance_slack_closed_form,
)
from blockingsets.errors import NotAchievable, NotBlocking, NotMinimalBlocking, NotPrimePower, NotSymmetric
from blockingsets.galois import is_prime_power


def closed_form(n, t):
    return 0.5 * n * math.sqrt(4 * t * n - (3 * t + 1) * (t - 1)) + 0.5 * (t - 1) * n + t


@pytest.mark.parametrize("n", range(2, 40))
def test_main_bound_matches_closed_form(n):
    for t in range(1, n + 1):
        rep = main_bound(n, t)
        assert rep.bound_float == pytest.approx(closed_form(n, t), rel=1e-12)
        # exact membership agrees with the float bound away from the boundary
        cap = math.floor(closed_form(n, t) + 1e-9)
        assert quadratic_membership(cap, n, t)
        assert not quadratic_membership(cap + 1, n, t)


def test_main_bound_examples():
    assert main_bound(4, 1).bound_float == 9
    assert main_bound(4, 2).bound_float == 14
    assert main_bound(9, 6).bound_float == 78
    assert main_bound(2, 2).bound_float == 6
    assert main_bound(3, 2).bound_float == pytest.approx(1.5 * math.sqrt(17) + 3.5)


def test_equality_secant_sizes():
    assert equality_secant_sizes(4, 1) == (1, 3)
    assert equality_secant_sizes(9, 6) == (6, 9)
    assert equality_secant_sizes(5, 5) == (5, 6)
    with pytest.raises(NotAchievable):
        equality_secant_sizes(3, 2)


def test_classification_small():
    assert classify_equality(4, 1) is EqualityCase.UNITAL
    assert classify_equality(4, 2) is EqualityCase.BAER_COMPLEMENT
    assert classify_equality(4, 4) is EqualityCase.PLANE_MINUS_POINT
    assert classify_equality(4, 3) is None
    assert classify_equality(8, 1) is None
    assert case_analysis(9, 1) == ("III", EqualityCase.UNITAL)
    assert case_analysis(9, 6)[0] == "II"
    assert case_analysis(7, 7) == ("IV", EqualityCase.PLANE_MINUS_POINT)
    with pytest.raises(NotPrimePower):
        classify_equality(6, 1)


def brute_admissible(q, t):
    """Integer b with |S| = bq + t on the bound, plus the divisibility condition."""
    for b in range(0, 2 * q + 2):
        if b * b + b * (1 - t) - t + t * t == t * q:
            d = b - t + 1
            return d > 0 and q % d == 0
    return False


@pytest.mark.parametrize("q", [q for q in range(2, 65) if is_prime_power(q)])
def test_conditions_match_brute_force(q):
    for t in range(1, q + 1):
        assert equality_conditions(q, t).admissible == brute_admissible(q, t)
        assert (classify_equality(q, t) is not None) == brute_admissible(q, t)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_predicates_against_definitions(q):
    P = pg_create(2, field_of_order(q))
    rng = random.Random(q)
    for _ in range(200):
        S = PointSet(P, rng.getrandbits(P.num_points))
        meets = [bin(B & S.members).count("1") for B in P.blocks]
        for t in range(1, q + 2):
            blocking = min(meets) >= t and t in meets
            assert is_t_fold_blocking(S, t) == blocking
            if blocking:
                minimal = all(any(meets[j] == t for j in range(P.num_points) if P.blocks[j] >> x & 1)
                              for x in S.indices())
                assert is_minimal_t_fold(S, t) == minimal
            else:
                with pytest.raises(NotBlocking):
                    is_minimal_t_fold(S, t)


def test_relaxed_predicates():
    P = pg_create(2, field_of_order(3))
    full = PointSet(P, P.all_points)
    assert not is_t_fold_blocking(full, 3)
    assert is_t_fold_blocking(full, 3, require_exact=False)
    pt = PointSet.from_indices(P, [0])
    assert is_minimal_t_fold(pt, 1, require_blocking=False)
    assert removable_points(full, 3) == full.indices()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9]), st.data())
def test_counting_identities(q, data):
    P = pg_create(2, field_of_order(q))
    bits = data.draw(st.integers(0, P.all_points))
    assert counting_identities_check(PointSet(P, bits))


def test_variance_slack():
    B = baer_complement(4)
    assert variance_slack(B, 2) == 0
    H = hermitian_curve(9)
    assert variance_slack(H, 1) == 0
    M = plane_minus_point(5)
    assert variance_slack(M, 5) == 0
    for S, t in [(B, 2), (H, 1), (M, 5)]:
        assert variance_slack(S, t) == variance_slack_closed_form(S.geometry.q, t, S.size)
    with pytest.raises(NotMinimalBlocking):
        variance_slack(H, 2)


def test_variance_closed_form_nonnegative_below_bound():
    for n in range(2, 20):
        for t in range(1, n + 1):
            for size in range(t, int(closed_form(n, t)) + 1):
                if quadratic_membership(size, n, t):
                    assert variance_slack_closed_form(n, t, size) >= 0


def test_design_bounds():
    for q in (4, 9, 16, 25):
        assert symmetric_design_bound(q * q + q + 1, q + 1, 1) == pytest.approx(q * math.sqrt(q) + 1, abs=1e-9)
    assert symmetric_design_bound(21, 5, 1) == 9
    assert symmetric_design_membership(9, 21, 5, 1)
    assert not symmetric_design_membership(10, 21, 5, 1)
    with pytest.raises(NotSymmetric):
        symmetric_design_bound(15, 3, 1)
    assert hyperplane_tangency_bound(3, 3) == 10
    assert hyperplane_tangency_bound(2, 4) == 9
    assert general_design_bound(15, 3, 1).trivial
    assert not general_design_bound(21, 5, 1).trivial
    assert code_dimension_bound(2, 1, 2) == 4
    assert code_dimension_bound(2, 2, 2) == 10
    assert code_dimension_bound(3, 1, 3) == 11


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 4), (2, 5), (4, 2), (3, 3)])
def test_code_dimension_matches_rank(n, q):
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix

    from blockingsets.galois import prime_power

    P = pg_create(n, field_of_order(q))
    p, h = prime_power(q)
    K = GF(p)
    rows = [[K(B >> i & 1) for i in range(P.num_points)] for B in P.blocks]
    rank = DomainMatrix(rows, (len(rows), P.num_points), K).rank()
    assert rank == code_dimension_bound(p, h, n)


def test_hyperplane_bound_reduces_to_plane():
    for q in range(2, 17):
        for t in range(1, q + 1):
            assert hyperplane_tfold_bound(2, q, t).bound_float == pytest.approx(
                main_bound(q, t).bound_float, rel=1e-12)


def test_s_secant_and_semiarc():
    for n in range(2, 30):
        for t in range(1, n + 1):
            A, B, C = s_secant_bound(n, t, 1).quadratic
            assert (A, B, C) == main_bound(n, t).quadratic
        for s in range(1, n + 1):
            try:
                value = semiarc_bound(n, s)
            except Exception:
                continue
            assert value == pytest.approx(s_secant_bound(n, 1, s).bound_float, abs=1e-9)
    assert semiarc_bound(4, 1) == 9


def test_verify_point_set_reports():
    rep = verify_point_set(baer_complement(9), 6)
    assert rep.slack == 0 and rep.equality_case is EqualityCase.BAER_COMPLEMENT
    assert rep.spectrum == {6: 13, 9: 78}
    rep = verify_point_set(hermitian_curve(4), 2)
    assert rep.blocking is False and rep.minimal is False
    assert secant_spectrum(hermitian_curve(4)).sizes == [1, 3]
