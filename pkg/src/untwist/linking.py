"""Linking forms on finite abelian groups of odd order.

A form is stored on the invariant-factor generators of its group: for
``H = Z/n_1 + ... + Z/n_r`` the Gram matrix holds ``l(g_i, g_j)`` as
rationals reduced into ``[0, 1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm, prod

from sympy import factorint

from .errors import CapacityError, DegeneracyError, DomainError
from .linalg import det_int, is_symmetric, shape, smith_normal_form, solve_rational

BRUTEFORCE_MAX_ORDER = 5000


def _mod1(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class LinkingForm:
    invariant_factors: tuple
    gram: tuple

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(n) for n in self.invariant_factors))
        object.__setattr__(self, "gram", tuple(tuple(_mod1(x) for x in row) for row in self.gram))
        r = len(self.invariant_factors)
        if len(self.gram) != r or any(len(row) != r for row in self.gram):
            raise DomainError("Gram matrix size does not match the number of generators")
        if self.order % 2 == 0:
            raise DomainError(f"group order {self.order} is even")

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return lcm(*self.invariant_factors) if self.invariant_factors else 1

    def pair(self, x, y):
        """l(x, y) for coordinate vectors on the generators."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * self.gram[i][j]
        return _mod1(total)

    def elements(self):
        return product(*(range(n) for n in self.invariant_factors))


@dataclass(frozen=True)
class CyclicForm:
    """The form ``l(g, g) = a/n`` on ``Z/n``; ``CyclicForm(1, 0)`` is the trivial form."""

    n: int
    a: int

    @property
    def is_trivial(self):
        return self.n == 1

    def to_linking_form(self):
        if self.is_trivial:
            return LinkingForm((), ())
        return LinkingForm((self.n,), ((Fraction(self.a, self.n),),))

    def to_dict(self):
        return {"n": self.n, "a": self.a}


TRIVIAL = CyclicForm(1, 0)


def linking_form_of(P):
    """The linking form ``(a, b) -> a^T P^-1 b mod 1`` on ``coker(P)``.

    Generators are the columns of ``U^-1`` (``U`` the SNF row transform)
    at the positions of the nontrivial invariant factors.
    """
    n, _ = shape(P)
    if not is_symmetric(P):
        raise DomainError("linking matrix must be symmetric")
    d = det_int(P)
    if d % 2 == 0:
        raise DomainError(f"determinant {d} must be odd and nonzero")
    snf = smith_normal_form(P)
    keep = [i for i in range(n) if snf.D[i][i] > 1]
    factors = tuple(snf.D[i][i] for i in keep)
    gens = [[snf.U_inv[r][i] for r in range(n)] for i in keep]
    solved = [solve_rational(P, g) for g in gens]
    gram = tuple(
        tuple(sum(gi * x for gi, x in zip(g, s)) for s in solved) for g in gens
    )
    return LinkingForm(factors, gram)


def scale_form(L, m):
    """Same group, pairing multiplied by ``m``; ``m`` must be a unit mod the order."""
    if gcd(m, L.order) != 1:
        raise DegeneracyError(f"scaling by {m} degenerates a form on a group of order {L.order}")
    return LinkingForm(L.invariant_factors, tuple(tuple(m * x for x in row) for row in L.gram))


def as_cyclic(L):
    """Descriptor for a cyclic (or trivial) form, ``None`` when the group is not cyclic."""
    if not L.invariant_factors:
        return TRIVIAL
    if len(L.invariant_factors) > 1:
        return None
    n = L.invariant_factors[0]
    x = L.gram[0][0]
    return CyclicForm(n, x.numerator * (n // x.denominator) % n)


def _odd_primes(n):
    primes = list(factorint(n))
    if 2 in primes:
        raise DomainError(f"order {n} is even")
    return primes


def isometric_cyclic(f, g):
    """Decide whether ``a/n`` and ``b/n`` forms on ``Z/n`` are isometric.

    They are iff ``b/a`` is a square unit mod ``n``.  For odd ``n`` that holds
    iff its reduction is a quadratic residue mod every prime dividing ``n``.
    """
    if f.n != g.n:
        return False
    n = f.n
    if n == 1:
        return True
    for p in _odd_primes(n):
        if f.a % p == 0 or g.a % p == 0:
            raise DegeneracyError("cyclic form coefficient must be a unit")
        ratio = g.a * pow(f.a, -1, p) % p
        if pow(ratio, (p - 1) // 2, p) != 1:
            return False
    return True


def _element_order(x, factors):
    o = 1
    for xi, n in zip(x, factors):
        o = lcm(o, n // gcd(xi, n))
    return o


def isometric_bruteforce(L1, L2):
    """Exhaustive isometry test for groups of order at most 5000.

    Searches generator images of the right orders whose pairings match,
    then checks that the induced homomorphism is injective.
    """
    for L in (L1, L2):
        if L.order > BRUTEFORCE_MAX_ORDER:
            raise CapacityError(f"group order {L.order} exceeds {BRUTEFORCE_MAX_ORDER}")
    if L1.invariant_factors != L2.invariant_factors:
        return False
    f = L1.invariant_factors
    r = len(f)
    if r == 0:
        return True
    N = L1.exponent

    def int_gram(L):
        return [[int(x * N) for x in row] for row in L.gram]

    G1, G2 = int_gram(L1), int_gram(L2)

    def pair2(x, y):
        return sum(x[i] * y[j] * G2[i][j] for i in range(r) for j in range(r) if x[i] and y[j]) % N

    elements = list(L2.elements())
    candidates = [
        [h for h in elements if _element_order(h, f) == f[i] and pair2(h, h) == G1[i][i] % N]
        for i in range(r)
    ]
    domain = list(L1.elements())

    def injective(images):
        for x in domain:
            if any(x):
                y = [0] * r
                for xi, h in zip(x, images):
                    if xi:
                        for j in range(r):
                            y[j] += xi * h[j]
                if all(y[j] % f[j] == 0 for j in range(r)):
                    return False
        return True

    def search(i, images):
        if i == r:
            return injective(images)
        for h in candidates[i]:
            if all(pair2(images[j], h) == G1[j][i] % N for j in range(i)):
                if search(i + 1, images + [h]):
                    return True
        return False

    return search(0, [])


def is_nondegenerate(L):
    """Brute-force check that x -> l(x, .) is injective."""
    if L.order > BRUTEFORCE_MAX_ORDER:
        raise CapacityError(f"group order {L.order} exceeds {BRUTEFORCE_MAX_ORDER}")
    gens = [tuple(int(i == j) for j in range(len(L.invariant_factors))) for i in range(len(L.invariant_factors))]
    for x in L.elements():
        if any(x) and all(L.pair(x, g) == 0 for g in gens):
            return False
    return True
