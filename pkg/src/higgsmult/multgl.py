"""Virtual equivariant multiplicities for GL_n fixed-point components.

The multiplicity of the nilpotent-cone component attached to a fixed
point E is the ratio of equivariant characters

    m_E(t) = chi_T(Sym T+*) / chi_T(Sym A*),

a product of (1-t^k) factors with integer exponents read off from the
two weight gradings.  For the types handled here it expands to an
exact integer polynomial (or provably fails to): the downward-flow
closure of the Hitchin section (type (n)), chains of line bundles
(type (1,...,1)), and the rank-3 type (1,2) family that witnesses the
wobbly polynomiality threshold.  `value_at_1` of the polynomial is the
honest multiplicity of the component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import ChainHiggsBundle, WeightDims, gl_hitchin_base_dims, is_stable, tplus_dims
from .errors import DomainError, InternalError
from .polyalg import (
    FactoredChar,
    IntPoly,
    NotPolynomial,
    TruncatedSeries,
    divides,
    expand,
    qbinom_factored,
    series_expand,
)


@dataclass(frozen=True)
class MultResult:
    """A multiplicity in factored form together with its expansion.

    polynomial is either the exact IntPoly or the NotPolynomial
    witness; value_at_1 is defined only in the polynomial case.
    """

    factored: FactoredChar
    polynomial: "IntPoly | NotPolynomial"

    @classmethod
    def from_factored(cls, f: FactoredChar) -> "MultResult":
        return cls(factored=f, polynomial=expand(f))

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.polynomial, IntPoly)

    @property
    def value_at_1(self) -> "int | None":
        if isinstance(self.polynomial, IntPoly):
            return self.polynomial.value_at_one()
        return None


def virtual_multiplicity(tplus: WeightDims, base: WeightDims) -> MultResult:
    """The ratio of Sym characters in factored form: exponent of
    (1-t^k) is base[k] - tplus[k]."""
    exps: dict[int, int] = {}
    for k, d in tplus:
        exps[k] = exps.get(k, 0) - d
    for k, d in base:
        exps[k] = exps.get(k, 0) + d
    return MultResult.from_factored(FactoredChar(exps))


def mult_type_n(g: int, n: int) -> MultResult:
    """Multiplicity of the component downstream of the Hitchin section:
    prod_{i=2..n} [i]_t^{(2i-1)(g-1)}."""
    base = gl_hitchin_base_dims(g, n)
    tplus = WeightDims({1: n * n * (g - 1) + 1})
    result = virtual_multiplicity(tplus, base)
    if not result.is_polynomial:
        raise InternalError("the type (n) multiplicity must expand to a polynomial")
    return result


def mult_type111(c: ChainHiggsBundle) -> MultResult:
    """Multiplicity of a chain fixed point's component:
    prod_i qbinom(n, i)^{m_i}, cross-checked against the weight-ratio
    definition on every call."""
    if not is_stable(c):
        raise DomainError("multiplicity of a chain needs a stable chain")
    n = c.rank
    factored = FactoredChar.one()
    for i, m in enumerate(c.m_vector, start=1):
        factored = factored * (qbinom_factored(n, i) ** m)
    closed = MultResult.from_factored(factored)
    ratio = virtual_multiplicity(tplus_dims(c), gl_hitchin_base_dims(c.genus, n))
    if closed.polynomial != ratio.polynomial or closed.factored != ratio.factored:
        raise InternalError(
            "chain multiplicity: quantum binomial closed form disagrees with the weight ratio"
        )
    return closed


def mult_type12_rank3(g: int, twol_minus_v: int) -> MultResult:
    """Rank-3 type (1,2) component multiplicity, parameterized by the
    single integer 2l - v inside the stability window 0 < 2l - v < 3g-3:

        (1+t)^(g-1-(2l-v)) * (1+t+t^2)^(5g-5),

    a polynomial exactly when 2l - v <= g - 1 (the wobbly threshold);
    past the threshold the (1+t) factors sit in the denominator and do
    not cancel."""
    w = twol_minus_v
    if not 0 < w < 3 * g - 3:
        raise DomainError(
            f"2l-v = {w} outside the stability window 0 < 2l-v < {3 * g - 3} at genus {g}"
        )
    e1 = g - 1 - w
    e2 = 5 * g - 5
    factored = FactoredChar({2: e1, 3: e2, 1: -e1 - e2})
    return MultResult.from_factored(factored)


def master_divisibility(m: MultResult, g: int, n: int) -> bool:
    """Whether m divides the type (n) master multiplicity at (g, n)."""
    if not isinstance(m.polynomial, IntPoly):
        raise DomainError("divisibility needs a polynomial multiplicity")
    master = mult_type_n(g, n).polynomial
    assert isinstance(master, IntPoly)
    return divides(m.polynomial, master)


def euler_prefactor(g: int, n: int) -> int:
    """Exponent of the monomial character of the weight-1 line against
    the dual base: (4n+1)(n-1)n(g-1)/6; equals 3g-3 at n = 2."""
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    if n < 1:
        raise DomainError(f"rank must be >= 1, got {n}")
    num = (4 * n + 1) * (n - 1) * n * (g - 1)
    if num % 6:
        raise InternalError(f"prefactor {num}/6 is not integral")
    return num // 6


def euler_pairing_series(
    mA: "MultResult | IntPoly",
    mB: "MultResult | IntPoly",
    g: int,
    n: int,
    order: int,
) -> TruncatedSeries:
    """Series of m_A(t) * m_B(t) * chi_T(Sym A*) through t^order.

    The character pairing of the two components' structure sheaves over
    the moduli space; visibly symmetric in its two arguments.
    """
    polys = []
    for m in (mA, mB):
        p = m.polynomial if isinstance(m, MultResult) else m
        if not isinstance(p, IntPoly):
            raise DomainError("the pairing needs polynomial multiplicities")
        polys.append(p)
    base = gl_hitchin_base_dims(g, n)
    sym = FactoredChar({k: -d for k, d in base})
    out = series_expand(sym, order)
    for p in polys:
        out = out * p
    return out


def cotangent_cross_character(g: int, i: int) -> IntPoly:
    """Equivariant character pairing a rank-2 chain component with the
    mirror of a cotangent fibre: 2^(2i) t^i (1+t)^(3g-3-2i)."""
    if not 0 <= i <= g - 1:
        raise DomainError(f"component index must satisfy 0 <= i <= g-1, got i={i}, g={g}")
    if 3 * g - 3 - 2 * i < 0:
        raise DomainError(f"exponent 3g-3-2i is negative at g={g}, i={i}")
    return (IntPoly((1, 1)) ** (3 * g - 3 - 2 * i)).shift(i) * (4 ** i)
