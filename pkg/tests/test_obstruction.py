import json
import random
from fractions import Fraction

import pytest

from helpers import random_symmetric_alpha
from untwist.catalog import bundled_catalog, lookup
from untwist.errors import ContractError, DomainError
from untwist.invariants import alexander_polynomial, symmetrized_form
from untwist.laurent import ONE, ZERO, LaurentPoly, parse
from untwist.linalg import laurent_matrix, matmul, transpose
from untwist.linking import isometric_bruteforce, linking_form_of, scale_form
from untwist.obstruction import (
    NOT_OBSTRUCTED,
    OBSTRUCTED,
    alexander_obstruction,
    candidate_matrix,
    cyclicity_obstruction,
    evaluate,
    is_even_form,
    linking_obstruction,
    rk_reduction,
    scan,
    ua_bound,
)

UNKNOT = []
TREFOIL = [[-1, 1], [0, -1]]
SIX_ONE = [[1, 0], [1, -2]]
GRANNY = [[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]


class TestAlexanderObstruction:
    @pytest.mark.parametrize("k", [1, -1, 2, 7])
    def test_unknot(self, k):
        r = alexander_obstruction(ONE, k)
        assert r.passed and r.alpha == ZERO

    def test_trefoil_k2_fails(self):
        r = alexander_obstruction(parse("t^-1 - 1 + t"), 2)
        assert not r.passed
        assert (r.failing_exponent, r.failing_coefficient) == (-1, 1)

    def test_six_one_k2(self):
        r = alexander_obstruction(parse("-2*t^-1 + 5 - 2*t"), 2)
        assert r.passed and r.alpha == parse("-t^-1 + 2 - t")
        assert r.alpha.evaluate(1) == 0

    def test_trefoil_k1(self):
        r = alexander_obstruction(parse("t^-1 - 1 + t"), 1)
        assert r.alpha == parse("t^-1 - 2 + t")

    def test_negative_k_divides_like_positive(self):
        delta = parse("-2*t^-1 + 5 - 2*t")
        assert alexander_obstruction(delta, -2).alpha == -alexander_obstruction(delta, 2).alpha

    def test_errors(self):
        with pytest.raises(DomainError):
            alexander_obstruction(ONE, 0)
        with pytest.raises(ContractError):
            alexander_obstruction(parse("1 - t + t^2"), 1)
        with pytest.raises(ContractError):
            alexander_obstruction(parse("-t^-1 + 1 - t"), 1)


class TestCandidateMatrix:
    def test_examples(self):
        assert candidate_matrix(ZERO, 3).determinant() == LaurentPoly.constant(-1)
        assert candidate_matrix(parse("-t^-1 + 2 - t"), 2).determinant() == -parse("-2*t^-1 + 5 - 2*t")
        assert candidate_matrix(parse("t^-1 - 2 + t"), 1).determinant() == parse("-t^-1 + 1 - t")

    def test_at_one_and_minus_one(self):
        c = candidate_matrix(parse("-t^-1 + 2 - t"), 2)
        assert c.at(1) == [[0, 1], [1, -2]]
        assert c.at(-1) == [[4, 1], [1, -2]]

    def test_contract(self):
        with pytest.raises(ContractError):
            candidate_matrix(parse("t"), 1)
        with pytest.raises(ContractError):
            candidate_matrix(parse("t^-1 + t"), 1)
        with pytest.raises(DomainError):
            candidate_matrix(ZERO, 0)

    def test_random_determinant_identity(self):
        rng = random.Random(31)
        for _ in range(50):
            alpha = random_symmetric_alpha(rng)
            k = rng.choice([k for k in range(-6, 7) if k])
            assert candidate_matrix(alpha, k).determinant() == -(1 + k * alpha)


class TestParity:
    @pytest.mark.parametrize(
        "Q, even", [([[0, 1], [1, -2]], True), ([[0, 1], [1, -3]], False), ([[0, 1], [1, 0]], True)]
    )
    def test_is_even_form(self, Q, even):
        assert is_even_form(Q) is even

    def test_non_symmetric(self):
        with pytest.raises(DomainError):
            is_even_form([[0, 1], [2, 0]])

    @pytest.mark.parametrize("k, bound", [(1, 2), (2, 3), (-3, 2), (-4, 3)])
    def test_ua_bound(self, k, bound):
        assert ua_bound(k) == bound

    def test_ua_bound_zero(self):
        with pytest.raises(DomainError):
            ua_bound(0)

    @pytest.mark.parametrize("k", [k for k in range(-8, 9) if k])
    def test_bound_matches_even_form(self, k):
        assert (ua_bound(k) == 3) == is_even_form(candidate_matrix(ZERO, k).at(1)) == (k % 2 == 0)


class TestCyclicity:
    def test_examples(self):
        assert cyclicity_obstruction(UNKNOT).to_dict() == {"pass": True, "invariant_factors": []}
        assert cyclicity_obstruction(SIX_ONE).to_dict() == {"pass": True, "invariant_factors": [9]}
        assert cyclicity_obstruction(GRANNY).to_dict() == {"pass": False, "invariant_factors": [3, 3]}


class TestLinking:
    def test_unknot(self):
        r = linking_obstruction(UNKNOT, ZERO, 5)
        assert r.status == "pass" and r.d == 0
        assert r.knot_form.n == r.candidate_form.n == 1

    def test_six_one_k2(self):
        alpha = parse("-t^-1 + 2 - t")
        r = linking_obstruction(SIX_ONE, alpha, 2)
        assert r.d == 4
        assert r.knot_form.n == r.candidate_form.n == 9
        doubled = scale_form(linking_form_of(symmetrized_form(SIX_ONE)), 2)
        candidate = linking_form_of([[4, 1], [1, -2]])
        expected = isometric_bruteforce(doubled, candidate)
        assert r.passed == expected
        # 6_1 is a twist knot: undoing its twist region is a 2-untwisting move
        assert expected

    def test_trefoil_k1_uses_evaluated_d(self):
        r = linking_obstruction(TREFOIL, parse("t^-1 - 2 + t"), 1)
        assert r.d == -4
        assert r.candidate_form.n == 3
        assert r.passed

    def test_trefoil_wrong_sign(self):
        # k = -1 is the crossing change of the wrong sign for this trefoil
        r = linking_obstruction(TREFOIL, parse("-t^-1 + 2 - t"), -1)
        assert r.d == 4 and r.status == "fail"

    def test_identity_mismatch_is_contract_error(self):
        with pytest.raises(ContractError):
            linking_obstruction(TREFOIL, ZERO, 1)


class TestEvaluate:
    def test_unknot(self):
        r = evaluate(UNKNOT, 5)
        assert r.verdict == NOT_OBSTRUCTED and r.ua_bound == 2 and r.n_Rk == 1

    def test_trefoil_k2(self):
        r = evaluate(TREFOIL, 2)
        assert r.verdict == OBSTRUCTED
        assert r.failed_tests == ["alexander"]
        assert r.linking.status == "skipped"
        assert r.ua_bound is None and r.n_Rk is None

    def test_granny_k1(self):
        r = evaluate(GRANNY, 1)
        assert r.alexander.passed
        assert r.alexander.alpha == (parse("t^-1 - 1 + t") ** 2 - 1)
        assert r.failed_tests == ["cyclicity"]
        assert r.linking.status == "skipped"

    def test_zero_k(self):
        with pytest.raises(DomainError):
            evaluate(UNKNOT, 0)

    def test_passing_report_carries_reduction(self):
        r = evaluate(SIX_ONE, 2)
        assert r.verdict == NOT_OBSTRUCTED
        assert r.reduction.diagonal == (parse("-t^-1 + 5/2 - t"), LaurentPoly.constant(-2))
        assert any("n_Rk = 1" in note for note in r.notes)

    def test_json_schema(self):
        d = evaluate(TREFOIL, 1).to_dict()
        assert list(d) == ["knot", "k", "alexander", "cyclicity", "linking", "verdict", "ua_bound", "n_Rk"]
        assert list(d["alexander"]) == ["pass", "alpha", "failing_coefficient"]
        assert list(d["linking"]) == ["status", "d", "knot_form", "candidate_form"]
        assert d["alexander"]["alpha"] == "t^-1 - 2 + t"
        json.dumps(d)

    def test_presentation_invariance_small(self):
        for record in bundled_catalog():
            V = record.seifert
            n = V.size
            E = [[int(j in (i, i + 1)) for j in range(n)] for i in range(n)]
            W = V.congruent(E)
            for k in (-2, -1, 1, 2, 3):
                assert evaluate(W, k).verdict == evaluate(V, k).verdict


class TestScan:
    def test_unknot(self):
        reports = scan(UNKNOT, -2, 2)
        assert [r.k for r in reports] == [-2, -1, 1, 2]
        assert all(r.verdict == NOT_OBSTRUCTED for r in reports)

    def test_trefoil(self):
        reports = scan(TREFOIL, 1, 3)
        assert [r.verdict for r in reports] == [NOT_OBSTRUCTED, OBSTRUCTED, OBSTRUCTED]
        assert reports[2].alexander.failing_coefficient == 1

    def test_empty(self):
        assert scan(TREFOIL, 0, 0) == []

    def test_reversed_range(self):
        with pytest.raises(DomainError):
            scan(TREFOIL, 3, 1)


def _rational_congruence(red, alpha, k):
    A = laurent_matrix([[alpha, 1], [1, -k]])
    P = laurent_matrix([list(row) for row in red.transform])
    return matmul(matmul(transpose(P), A), P)


class TestRkReduction:
    def test_k1(self):
        red = rk_reduction(ZERO, 1)
        assert red.diagonal == (ONE, LaurentPoly.constant(-1))
        assert red.transform == ((1, 0), (1, 1))

    def test_k2(self):
        red = rk_reduction(ZERO, 2)
        assert red.diagonal == (LaurentPoly.constant(Fraction(1, 2)), LaurentPoly.constant(-2))

    def test_identity(self):
        rng = random.Random(32)
        for _ in range(30):
            alpha = random_symmetric_alpha(rng)
            k = rng.choice([k for k in range(-6, 7) if k])
            red = rk_reduction(alpha, k)
            got = _rational_congruence(red, alpha, k)
            assert got == [[red.diagonal[0], ZERO], [ZERO, red.diagonal[1]]]
            assert red.diagonal[0] * red.diagonal[1] == -(1 + k * alpha)

    def test_zero_k(self):
        with pytest.raises(DomainError):
            rk_reduction(ZERO, 0)


def test_bundled_verdict_table():
    """Frozen verdicts for the bundled catalog at k = 1, 2 (each re-derivable from the reports)."""
    records = bundled_catalog()
    table = {r.name: tuple(evaluate(r.seifert, k).verdict == NOT_OBSTRUCTED for k in (1, 2)) for r in records}
    assert table == {
        "unknot": (True, True),
        "3_1": (True, False),
        "4_1": (True, False),
        "5_1": (False, False),
        "5_2": (True, True),
        "6_1": (False, True),
        "3_1#3_1": (False, False),
        "3_1#-3_1": (False, False),
        "4_1#4_1": (False, False),
    }
    assert lookup(records, "5_1").seifert.genus == 2
    assert alexander_polynomial(lookup(records, "5_1").seifert) == parse("t^-2 - t^-1 + 1 - t + t^2")


def test_prime_knot_with_noncyclic_double_cover():
    # pretzel P(3,3,3): genus-one Seifert matrix [[3, 2], [1, 3]], H_1 = Z/3 + Z/9
    V = [[3, 2], [1, 3]]
    for k in (-3, -1, 1, 3):
        r = evaluate(V, k)
        assert r.cyclicity.invariant_factors == [3, 9]
        assert r.verdict == OBSTRUCTED and "cyclicity" in r.failed_tests
