"""Classical invariants of a knot read off from a Seifert matrix."""

from dataclasses import dataclass

from .errors import ContractError, DimensionError, NormalizationError, SeifertValidationError
from .laurent import LaurentPoly, T
from .linalg import (
    cokernel_invariants,
    det_int,
    det_laurent,
    matadd,
    matmul,
    shape,
    transpose,
)


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated Seifert matrix; construct through :func:`validate_seifert`.

    Size 0 is the unknot.
    """

    rows: tuple

    @property
    def size(self):
        return len(self.rows)

    @property
    def genus(self):
        return self.size // 2

    def to_list(self):
        return [list(r) for r in self.rows]

    def congruent(self, E):
        """The Seifert matrix ``E^T V E`` of the same knot, for unimodular ``E``."""
        return validate_seifert(matmul(matmul(transpose(E), self.to_list()), E))


def _alexander_determinant(V):
    n = len(V)
    tV_minus_Vt = [
        [T * V[i][j] - LaurentPoly.constant(V[j][i]) for j in range(n)] for i in range(n)
    ]
    return det_laurent(tV_minus_Vt)


def validate_seifert(V):
    """Check the Seifert matrix invariants and wrap ``V``.

    Raises :class:`SeifertValidationError` naming the first failed invariant.
    """
    if isinstance(V, SeifertMatrix):
        return V
    try:
        rows, cols = shape(V)
    except DimensionError as exc:
        raise SeifertValidationError("square", str(exc)) from None
    if any(isinstance(x, bool) or not isinstance(x, int) for r in V for x in r):
        raise SeifertValidationError("integer entries", "entries must be integers")
    if rows != cols:
        raise SeifertValidationError("square", f"matrix is {rows}x{cols}")
    if rows % 2:
        raise SeifertValidationError("even size", f"size {rows} is odd")
    skew = [[V[i][j] - V[j][i] for j in range(rows)] for i in range(rows)]
    d = det_int(skew)
    if d != 1:
        raise SeifertValidationError(
            "V - V^T unimodular", f"det(V - V^T) = {d}, expected 1"
        )
    at_one = _alexander_determinant(V).evaluate(1)
    if abs(at_one) != 1:
        raise SeifertValidationError("|Delta(1)| = 1", f"Delta(1) = {at_one}")
    return SeifertMatrix(tuple(tuple(int(x) for x in r) for r in V))


def alexander_polynomial(V):
    """det(t V - V^T), normalized to be symmetric with value 1 at t = 1."""
    V = validate_seifert(V)
    raw = _alexander_determinant(V.rows)
    try:
        return raw.normalize_symmetric()
    except NormalizationError as exc:  # impossible for a valid Seifert matrix
        raise ContractError(f"Alexander determinant {raw} did not normalize: {exc}") from exc


def signed_determinant(V):
    """The symmetrized Alexander polynomial evaluated at t = -1 (always odd)."""
    return alexander_polynomial(V).evaluate(-1)


def symmetrized_form(V):
    V = validate_seifert(V).to_list()
    return matadd(V, transpose(V))


def double_cover_homology(V):
    """Invariant factors (> 1) of H_1 of the double branched cover, coker(V + V^T)."""
    return cokernel_invariants(symmetrized_form(V))


@dataclass(frozen=True)
class KnotInvariants:
    alexander: LaurentPoly
    signed_alexander_at_minus_one: int
    symmetrized: list
    dbc_invariant_factors: list

    def to_dict(self):
        return {
            "alexander": str(self.alexander),
            "determinant_at_minus_one": self.signed_alexander_at_minus_one,
            "dbc_invariant_factors": list(self.dbc_invariant_factors),
        }


def knot_invariants(V):
    V = validate_seifert(V)
    delta = alexander_polynomial(V)
    return KnotInvariants(
        alexander=delta,
        signed_alexander_at_minus_one=delta.evaluate(-1),
        symmetrized=symmetrized_form(V),
        dbc_invariant_factors=double_cover_homology(V),
    )
