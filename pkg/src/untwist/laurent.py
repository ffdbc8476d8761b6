"""Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].

Coefficients are Python ints (arbitrary precision).  ``fractions.Fraction``
coefficients are also accepted, which gives the rational Laurent ring used
by the Z[1/k] reduction; integral fractions are stored as ints so that the
two rings share one canonical form.

The textual form is ``-2*t^-1 + 5 - 2*t``: terms in ascending exponent
order, unit coefficients elided, ``t^1`` written as ``t``.
"""

import re
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, NormalizationError, NotDivisibleError

__all__ = [
    "LaurentPoly",
    "RationalLaurentPoly",
    "T",
    "ONE",
    "ZERO",
    "lp_add",
    "lp_mul",
    "lp_involute",
    "lp_eval_int",
    "lp_is_symmetric",
    "lp_normalize_symmetric",
    "lp_div_exact_int",
    "parse",
]


def _canon(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an int or Fraction, got {c!r}")
    return int(c)


class LaurentPoly:
    """An immutable element of Z[t, t^-1] (or Q[t, t^-1])."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                c = _canon(c)
                if c:
                    clean[int(e)] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs, low=0):
        """Build ``coeffs[0]*t^low + coeffs[1]*t^(low+1) + ...``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e):
        return self._terms.get(e, 0)

    def is_zero(self):
        return not self._terms

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    @property
    def min_exponent(self):
        return next(iter(self._terms)) if self._terms else None

    @property
    def max_exponent(self):
        return next(reversed(self._terms)) if self._terms else None

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are supported")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, m):
        """Multiply by t^m."""
        return LaurentPoly({e + m: c for e, c in self._terms.items()})

    def involute(self):
        """Apply t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def is_symmetric(self):
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Substitute ``t = x`` for a nonzero rational ``x``; the result is exact."""
        if x == 0:
            raise DomainError("cannot evaluate a Laurent polynomial at t = 0")
        x = Fraction(x)
        total = sum((c * x**e for e, c in self._terms.items()), Fraction(0))
        return _canon(total)

    def normalize_symmetric(self):
        """Return the unique ``±t^m * self`` that is symmetric with value 1 at t = 1."""
        if not self._terms:
            raise NormalizationError("the zero polynomial has no symmetric normalization")
        at_one = self.evaluate(1)
        if at_one not in (1, -1):
            raise NormalizationError(f"value at t = 1 is {at_one}, not a unit")
        span = self.min_exponent + self.max_exponent
        if span % 2:
            raise NormalizationError("odd exponent span: no unit multiple is symmetric")
        shifted = self.shift(-span // 2)
        if not shifted.is_symmetric():
            raise NormalizationError("no unit multiple of the polynomial is symmetric")
        return shifted if at_one == 1 else -shifted

    def div_exact(self, k):
        """Divide every coefficient by the integer ``k``.

        Raises :class:`NotDivisibleError` naming the lowest-degree term whose
        coefficient is not a multiple of ``k``.
        """
        if k == 0:
            raise DomainError("division by zero")
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise NotDivisibleError(e, c, k)
            out[e] = q
        return LaurentPoly(out)

    def map_coefficients(self, f):
        return LaurentPoly({e: f(c) for e, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


# Same class; the name marks where rational coefficients are expected.
RationalLaurentPoly = LaurentPoly

ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<coef>\d+(?:/\d+)?) (?:\*? (?P<tvar1>t) (?:\^(?P<exp1>[+-]?\d+))? )?
      | (?P<tvar2>t) (?:\^(?P<exp2>[+-]?\d+))?
    )
    """,
    re.VERBOSE,
)


def parse(text):
    """Parse the textual form produced by ``str(LaurentPoly)``.

    Also accepts explicit coefficients on every term (``1*t^1``), ``t^k``
    shorthand, rational coefficients (``1/2*t^-1``) and free whitespace.
    """
    if re.search(r"\d\s+\d", text):
        raise ValueError(f"cannot parse Laurent polynomial {text!r}: adjacent numbers")
    s = "".join(text.split()).replace("−", "-")
    if not s:
        raise ValueError("empty polynomial string")
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if m.group("tvar1"):
                exp = int(m.group("exp1")) if m.group("exp1") is not None else 1
            else:
                exp = 0
        else:
            coef = Fraction(1)
            exp = int(m.group("exp2")) if m.group("exp2") is not None else 1
        terms[exp] = terms.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def lp_add(p, q):
    return p + q


def lp_mul(p, q):
    return p * q


def lp_involute(p):
    return p.involute()


def lp_eval_int(p, x):
    return p.evaluate(x)


def lp_is_symmetric(p):
    return p.is_symmetric()


def lp_normalize_symmetric(p):
    return p.normalize_symmetric()


def lp_div_exact_int(p, k):
    """Exact division by ``k``; returns ``None`` when some coefficient is not divisible."""
    try:
        return p.div_exact(k)
    except NotDivisibleError:
        return None
