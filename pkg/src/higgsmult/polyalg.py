"""Exact polynomial arithmetic over the integers in one variable t.

Everything is exact: coefficients are arbitrary-precision Python ints,
division is classical long division, and a failed division is reported
as a value (NotPolynomial), never as a rounded answer.  Graded
characters are carried around in the factored form

    prod_k (1 - t^k)^{e_k},   e_k integer (possibly negative),

and `expand` converts that to an honest polynomial exactly when the
denominator divides the numerator.  `series_expand` gives the power
series expansion to a finite order whether or not the quotient is a
polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import DomainError, InternalError


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients listed by ascending power.

    >>> p = IntPoly((1, 0, 1))   # 1 + t^2
    >>> p.degree
    2
    >>> (p * p).coeffs
    (1, 0, 2, 0, 1)
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(a) for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        if power < 0:
            raise DomainError(f"monomial power must be >= 0, got {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if k < 0:
            raise DomainError(f"shift must be >= 0, got {k}")
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * x for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise DomainError(f"polynomial power must be >= 0, got {n}")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                c = "" if a == 1 else "-" if a == -1 else str(a) + "*"
                terms.append(f"{c}t" if k == 1 else f"{c}t^{k}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class NotPolynomial:
    """Witness that a factored character fails to expand to a polynomial.

    Carries the degree of the nonzero remainder left by the attempted
    long division of numerator by denominator.
    """

    remainder_degree: int


def poly_divmod(num: IntPoly, den: IntPoly) -> "tuple[IntPoly, IntPoly] | None":
    """Classical long division over the integers.

    Returns (q, r) with num = q*den + r and deg r < deg den.  Returns
    None when some leading-coefficient step is inexact over the
    integers; in that case no exact integer-coefficient quotient of num
    by den exists.
    """
    if den.is_zero:
        raise DomainError("division by the zero polynomial")
    rem = list(num.coeffs)
    dc = den.coeffs
    dn = len(dc)
    lead = dc[-1]
    if len(rem) < dn:
        return IntPoly.zero(), num
    qlen = len(rem) - dn + 1
    quot = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = rem[i + dn - 1]
        if c % lead:
            return None
        q = c // lead
        quot[i] = q
        if q:
            for j, d in enumerate(dc):
                rem[i + j] -= q * d
    return IntPoly(tuple(quot)), IntPoly(tuple(rem[: dn - 1]))


def qint(n: int) -> IntPoly:
    """Quantum integer [n]_t = 1 + t + ... + t^(n-1).

    >>> qint(3).coeffs
    (1, 1, 1)
    """
    if n <= 0:
        raise DomainError(f"quantum integer needs n >= 1, got {n}")
    return IntPoly((1,) * n)


def qbinom(n: int, k: int) -> IntPoly:
    """Quantum binomial coefficient, by exact division.

    The product prod_{j=1..k} (1-t^(n-j+1))/(1-t^j); the division is
    exact, giving the Poincare polynomial of the Grassmannian of
    k-planes in n-space.

    >>> qbinom(4, 2).coeffs
    (1, 1, 2, 1, 1)
    >>> qbinom(5, 0).coeffs
    (1,)
    """
    if n < 1:
        raise DomainError(f"quantum binomial needs n >= 1, got n={n}")
    if k < 0 or k > n:
        raise DomainError(f"quantum binomial needs 0 <= k <= n, got k={k}, n={n}")
    result = expand(qbinom_factored(n, k))
    if not isinstance(result, IntPoly):
        raise InternalError(f"quantum binomial ({n},{k}) did not divide exactly")
    return result


def qbinom_factored(n: int, k: int) -> "FactoredChar":
    """Factored form of qbinom(n, k): +1 at n-j+1, -1 at j, for j = 1..k."""
    if n < 1 or k < 0 or k > n:
        raise DomainError(f"quantum binomial needs 0 <= k <= n, n >= 1; got k={k}, n={n}")
    exps: dict[int, int] = {}
    for j in range(1, k + 1):
        exps[n - j + 1] = exps.get(n - j + 1, 0) + 1
        exps[j] = exps.get(j, 0) - 1
    return FactoredChar(exps)


FactorsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


@dataclass(frozen=True)
class FactoredChar:
    """A product prod_k (1 - t^k)^{e_k} with integer exponents e_k.

    Canonical form: keys are positive integers, zero exponents are
    dropped, entries are kept sorted by k.  Multiplication adds
    exponents pointwise; integer powers scale them.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __init__(self, factors: FactorsLike = ()) -> None:
        items = factors.items() if isinstance(factors, Mapping) else factors
        merged: dict[int, int] = {}
        for k, e in items:
            k = int(k)
            e = int(e)
            if k < 1:
                raise DomainError(f"factor index must be >= 1, got {k}")
            merged[k] = merged.get(k, 0) + e
        canon = tuple(sorted((k, e) for k, e in merged.items() if e != 0))
        object.__setattr__(self, "factors", canon)

    @classmethod
    def one(cls) -> "FactoredChar":
        return cls(())

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, k: int) -> int:
        return dict(self.factors).get(k, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __mul__(self, other: "FactoredChar") -> "FactoredChar":
        return FactoredChar(self.factors + other.factors)

    def __pow__(self, m: int) -> "FactoredChar":
        return FactoredChar(tuple((k, m * e) for k, e in self.factors))

    def inverse(self) -> "FactoredChar":
        return self ** -1

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"(1-t^{k})^{e}" for k, e in self.factors)


def _one_minus_t_power(k: int) -> IntPoly:
    return IntPoly((1,) + (0,) * (k - 1) + (-1,))


def expand(f: FactoredChar) -> "IntPoly | NotPolynomial":
    """Expand a factored character to a polynomial, if it is one.

    Splits f into numerator (positive exponents) and denominator
    (negative exponents) and long-divides.  An inexact division returns
    a NotPolynomial witness carrying the remainder's degree.

    >>> expand(FactoredChar({2: 3, 1: -3})).coeffs
    (1, 3, 3, 1)
    >>> expand(FactoredChar({3: 5, 1: -6}))
    NotPolynomial(remainder_degree=5)
    """
    num = IntPoly.one()
    den = IntPoly.one()
    for k, e in f:
        block = _one_minus_t_power(k) ** abs(e)
        if e > 0:
            num = num * block
        else:
            den = den * block
    if den == IntPoly.one():
        return num
    qr = poly_divmod(num, den)
    if qr is None:
        # den is a product of (1 - t^k) factors, so its leading
        # coefficient is +-1 and every division step is exact
        raise InternalError("denominator with unit leading coefficient failed to divide")
    q, r = qr
    if r.is_zero:
        return q
    return NotPolynomial(remainder_degree=r.degree)


def is_palindromic_monic(p: IntPoly) -> bool:
    """True when p has constant term 1 and palindromic coefficients.

    >>> is_palindromic_monic(qbinom(4, 2))
    True
    >>> is_palindromic_monic(IntPoly((1, 2)))
    False
    """
    if p.is_zero:
        raise DomainError("the zero polynomial is neither palindromic nor monic")
    return p.coeffs[0] == 1 and p.coeffs == p.coeffs[::-1]


def divides(d: IntPoly, p: IntPoly) -> bool:
    """True when d divides p exactly in integer-coefficient arithmetic."""
    if d.is_zero:
        raise DomainError("divisibility by the zero polynomial is undefined")
    if p.is_zero:
        return True
    qr = poly_divmod(p, d)
    if qr is None:
        return False
    return qr[1].is_zero


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known through t^order; coeffs has length order + 1."""

    order: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise DomainError(f"series order must be >= 0, got {self.order}")
        c = tuple(int(a) for a in self.coeffs)
        if len(c) > self.order + 1:
            raise DomainError("more coefficients than the order allows")
        c = c + (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    def coeff(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise DomainError(f"coefficient index {k} outside order {self.order}")
        return self.coeffs[k]

    def __mul__(self, other: "TruncatedSeries | IntPoly") -> "TruncatedSeries":
        if isinstance(other, IntPoly):
            other = TruncatedSeries(self.order, other.coeffs[: self.order + 1])
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, x in enumerate(self.coeffs[: order + 1]):
            if x:
                for j, y in enumerate(other.coeffs[: order + 1 - i]):
                    out[i + j] += x * y
        return TruncatedSeries(order, tuple(out))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order,
            tuple(x + y for x, y in zip(self.coeffs[: order + 1], other.coeffs[: order + 1])),
        )


def _truncated_power(base: tuple[int, ...], n: int, order: int) -> TruncatedSeries:
    result = TruncatedSeries(order, (1,))
    b = TruncatedSeries(order, base[: order + 1])
    while n:
        if n & 1:
            result = result * b
        b = b * b
        n >>= 1
    return result


def series_expand(f: FactoredChar, order: int) -> TruncatedSeries:
    """Power series of a factored character through t^order.

    Negative exponents expand through the geometric series
    1/(1-t^k) = sum_j t^(jk), so the result is exact whether or not
    the character is a polynomial.

    >>> series_expand(FactoredChar({2: 1, 1: -1}), 3).coeffs
    (1, 1, 0, 0)
    """
    if order < 1:
        raise DomainError(f"series order must be >= 1, got {order}")
    out = TruncatedSeries(order, (1,))
    for k, e in f:
        if e > 0:
            out = out * _truncated_power(_one_minus_t_power(k).coeffs, e, order)
        else:
            geom = tuple(1 if i % k == 0 else 0 for i in range(order + 1))
            out = out * _truncated_power(geom, -e, order)
    return out
