"""Obstructions to a knot being algebraically k-simple.

A knot is algebraically k-simple when one k-untwisting move (k full twists
on two antiparallel strands) turns it into a knot with Alexander
polynomial 1.  Such a knot has a 2x2 Blanchfield representative
``[[alpha, 1], [1, -k]]`` with ``alpha`` symmetric and ``alpha(1) = 0``.
Three necessary conditions follow and are checked here in order:

1. ``Delta = 1 + k*alpha`` for some ``alpha`` in Z[t, t^-1];
2. H_1 of the double branched cover is cyclic;
3. the doubled linking form ``2 l(K)`` is isometric to the form of
   ``[[d, 1], [1, -k]]`` with ``d = alpha(-1)``.

A report whose three tests pass is *not obstructed*; that never proves the
knot is k-simple.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ContractError, DomainError, NotDivisibleError
from .invariants import alexander_polynomial, double_cover_homology, symmetrized_form, validate_seifert
from .laurent import LaurentPoly
from .linalg import det_laurent, is_symmetric, laurent_matrix
from .linking import CyclicForm, as_cyclic, isometric_cyclic, linking_form_of, scale_form

OBSTRUCTED = "OBSTRUCTED"
NOT_OBSTRUCTED = "NOT_OBSTRUCTED"


def _require_k(k):
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"k must be an integer, got {k!r}")
    if k == 0:
        raise DomainError("k must be nonzero")


def _require_admissible_alpha(alpha):
    if not alpha.is_symmetric():
        raise ContractError(f"alpha = {alpha} is not symmetric")
    if alpha.evaluate(1) != 0:
        raise ContractError(f"alpha = {alpha} does not vanish at t = 1")


@dataclass(frozen=True)
class AlexanderResult:
    passed: bool
    alpha: Optional[LaurentPoly] = None
    failing_exponent: Optional[int] = None
    failing_coefficient: Optional[int] = None

    def to_dict(self):
        failing = None
        if not self.passed:
            failing = {"exponent": self.failing_exponent, "value": self.failing_coefficient}
        return {
            "pass": self.passed,
            "alpha": str(self.alpha) if self.alpha is not None else None,
            "failing_coefficient": failing,
        }


def alexander_obstruction(delta, k):
    """Solve ``1 + k*alpha = delta`` for ``alpha`` in Z[t, t^-1].

    ``delta`` must be the symmetric normalization (value 1 at t = 1).  The
    determinant of the candidate matrix is ``-(1 + k*alpha)`` and equals
    ``delta`` up to ``±t^m``; symmetry forces ``m = 0`` and the value at 1
    forces the sign, so ``alpha`` is unique when it exists.
    """
    _require_k(k)
    if not delta.is_symmetric() or delta.evaluate(1) != 1:
        raise ContractError(f"Alexander polynomial {delta} is not symmetric-normalized")
    try:
        alpha = (delta - 1).div_exact(k)
    except NotDivisibleError as exc:
        return AlexanderResult(False, failing_exponent=exc.exponent, failing_coefficient=exc.coefficient)
    _require_admissible_alpha(alpha)
    return AlexanderResult(True, alpha=alpha)


@dataclass(frozen=True)
class CandidateMatrix:
    alpha: LaurentPoly
    k: int

    @property
    def matrix(self):
        return laurent_matrix([[self.alpha, 1], [1, -self.k]])

    def determinant(self):
        return det_laurent(self.matrix)

    def at(self, x):
        """Integer matrix obtained by substituting ``t = x`` (``x = ±1``)."""
        return [[self.alpha.evaluate(x), 1], [1, -self.k]]


def candidate_matrix(alpha, k):
    _require_k(k)
    _require_admissible_alpha(alpha)
    return CandidateMatrix(alpha, k)


def is_even_form(Q):
    """True iff ``x^T Q x`` is even for every integer ``x``, i.e. the diagonal is even."""
    if not is_symmetric(Q):
        raise DomainError("form must be symmetric")
    return all(Q[i][i] % 2 == 0 for i in range(len(Q)))


def ua_bound(k):
    """Upper bound on the algebraic unknotting number of an algebraically k-simple knot.

    For odd k the matrix ``[[0, 1], [1, -k]]`` is odd, hence diagonalizable
    over Z, giving 2; for even k it is even and one extra ``(1)`` summand is
    needed, giving 3.
    """
    _require_k(k)
    return 3 if is_even_form([[0, 1], [1, -k]]) else 2


@dataclass(frozen=True)
class CyclicityResult:
    passed: bool
    invariant_factors: list

    def to_dict(self):
        return {"pass": self.passed, "invariant_factors": list(self.invariant_factors)}


def cyclicity_obstruction(V):
    factors = double_cover_homology(V)
    return CyclicityResult(len(factors) <= 1, factors)


@dataclass(frozen=True)
class LinkingResult:
    status: str  # "pass", "fail" or "skipped"
    d: Optional[int] = None
    knot_form: Optional[CyclicForm] = None
    candidate_form: Optional[CyclicForm] = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {
            "status": self.status,
            "d": self.d,
            "knot_form": self.knot_form.to_dict() if self.knot_form else None,
            "candidate_form": self.candidate_form.to_dict() if self.candidate_form else None,
        }


LINKING_SKIPPED = LinkingResult("skipped")


def linking_obstruction(V, alpha, k):
    """Compare ``2 l(K)`` with the linking form of ``[[alpha(-1), 1], [1, -k]]``.

    Requires the Alexander and cyclicity tests to have passed.
    """
    _require_k(k)
    V = validate_seifert(V)
    _require_admissible_alpha(alpha)
    det_at_minus_one = alexander_polynomial(V).evaluate(-1)
    d = alpha.evaluate(-1)
    if d * k + 1 != det_at_minus_one:
        raise ContractError(
            f"d*k + 1 = {d * k + 1} differs from Delta(-1) = {det_at_minus_one}"
        )
    doubled = scale_form(linking_form_of(symmetrized_form(V)), 2)
    knot_form = as_cyclic(doubled)
    if knot_form is None:
        raise ContractError("linking test requires a cyclic double-cover homology")
    candidate_form = as_cyclic(linking_form_of([[d, 1], [1, -k]]))
    if candidate_form is None or candidate_form.n != abs(det_at_minus_one):
        raise ContractError("candidate form group does not have order |dk + 1|")
    status = "pass" if isometric_cyclic(knot_form, candidate_form) else "fail"
    return LinkingResult(status, d, knot_form, candidate_form)


@dataclass(frozen=True)
class RkReduction:
    """Congruence ``P^T A P = diag(alpha + 1/k, -k)`` over Z[1/k][t, t^-1]."""

    diagonal: tuple
    transform: tuple
    k: int

    def to_dict(self):
        return {
            "diagonal": [str(p) for p in self.diagonal],
            "transform": [[str(x) for x in row] for row in self.transform],
        }


def rk_reduction(alpha, k):
    """Explicit size-one reduction of the candidate matrix after inverting ``k``.

    The second diagonal entry ``-k`` is a unit of Z[1/k][t, t^-1], so the
    first entry alone carries the pairing.
    """
    _require_k(k)
    _require_admissible_alpha(alpha)
    inv_k = Fraction(1, k)
    P = ((Fraction(1), Fraction(0)), (inv_k, Fraction(1)))
    return RkReduction((alpha + inv_k, LaurentPoly.constant(-k)), P, k)


@dataclass(frozen=True)
class ObstructionReport:
    k: int
    alexander: AlexanderResult
    cyclicity: CyclicityResult
    linking: LinkingResult
    knot: str = "inline"
    notes: list = field(default_factory=list)
    reduction: Optional[RkReduction] = None

    @property
    def verdict(self):
        ok = self.alexander.passed and self.cyclicity.passed and self.linking.passed
        return NOT_OBSTRUCTED if ok else OBSTRUCTED

    @property
    def obstructed(self):
        return self.verdict == OBSTRUCTED

    @property
    def ua_bound(self):
        return None if self.obstructed else ua_bound(self.k)

    @property
    def n_Rk(self):
        return None if self.obstructed else 1

    @property
    def failed_tests(self):
        return [
            name
            for name, passed in (
                ("alexander", self.alexander.passed),
                ("cyclicity", self.cyclicity.passed),
                ("linking", self.linking.status != "fail"),
            )
            if not passed
        ]

    def to_dict(self):
        return {
            "knot": self.knot,
            "k": self.k,
            "alexander": self.alexander.to_dict(),
            "cyclicity": self.cyclicity.to_dict(),
            "linking": self.linking.to_dict(),
            "verdict": self.verdict,
            "ua_bound": self.ua_bound,
            "n_Rk": self.n_Rk,
        }


def evaluate(V, k, name="inline"):
    """Run the Alexander, cyclicity and linking tests for one value of k."""
    _require_k(k)
    V = validate_seifert(V)
    alex = alexander_obstruction(alexander_polynomial(V), k)
    cyc = cyclicity_obstruction(V)
    if alex.passed and cyc.passed:
        link = linking_obstruction(V, alex.alpha, k)
    else:
        link = LINKING_SKIPPED
    notes = []
    reduction = None
    if link.passed:
        reduction = rk_reduction(alex.alpha, k)
        notes.append(
            f"n_Rk = 1 over Z[1/{abs(k)}]: candidate matrix is congruent to "
            f"diag({reduction.diagonal[0]}, {reduction.diagonal[1]})"
        )
    return ObstructionReport(k, alex, cyc, link, knot=name, notes=notes, reduction=reduction)


def scan(V, k_min, k_max, name="inline"):
    """Evaluate every nonzero k in ``[k_min, k_max]`` in ascending order."""
    if k_min > k_max:
        raise DomainError(f"empty range: k_min = {k_min} > k_max = {k_max}")
    V = validate_seifert(V)
    return [evaluate(V, k, name) for k in range(k_min, k_max + 1) if k != 0]
