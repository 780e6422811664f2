"""Fixed-point chains of Higgs bundles and their tangent weight data.

A type (1,...,1) fixed point on a curve of genus g >= 2 is a chain

    E = L_0 + L_1 + ... + L_{n-1},    b_i : L_{i-1} -> L_i (x) K,

encoded here by the line bundle degrees l_i, the effective zero divisor
of each b_i, and a signed divisor presenting L_0.  Writing
m_i = l_i - l_{i-1} + 2g - 2, each b_i is nonzero exactly when
m_i >= 0, and deg(div b_i) = m_i.  The choice of all the divisors pins
the chain down completely: L_i is recovered from L_0 and the div b_j.

`tplus_dims` computes the dimensions of the positive-weight part of the
tangent space at the fixed point, weight by weight, from hypercohomology
Euler characteristics; `gl_hitchin_base_dims` gives the weights of the
Hitchin base, which double as the weights of a moduli-space cotangent
fibre.  Both feed the virtual multiplicity ratio downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Point:
    """A closed point of the curve, identified by its label."""

    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise DomainError("point label must be a nonempty string")


PointLike = Union[Point, str]


def as_point(p: PointLike) -> Point:
    return p if isinstance(p, Point) else Point(p)


@dataclass(frozen=True)
class Divisor:
    """Formal integer combination of points, stored without zero terms."""

    multiplicities: tuple[tuple[Point, int], ...] = ()

    def __init__(self, multiplicities: "Mapping[PointLike, int] | Iterable[tuple[PointLike, int]]" = ()) -> None:
        items = (
            multiplicities.items()
            if isinstance(multiplicities, Mapping)
            else multiplicities
        )
        merged: dict[Point, int] = {}
        for p, m in items:
            p = as_point(p)
            merged[p] = merged.get(p, 0) + int(m)
        canon = tuple(sorted((p, m) for p, m in merged.items() if m != 0))
        object.__setattr__(self, "multiplicities", canon)

    @classmethod
    def zero(cls) -> "Divisor":
        return cls(())

    @classmethod
    def of_points(cls, *labels: PointLike) -> "Divisor":
        """Sum of the given points, with multiplicity per repetition."""
        return cls([(p, 1) for p in labels])

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.multiplicities)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.multiplicities)

    @property
    def is_reduced(self) -> bool:
        """Effective with every multiplicity exactly one."""
        return all(m == 1 for _, m in self.multiplicities)

    def multiplicity(self, p: PointLike) -> int:
        p = as_point(p)
        for q, m in self.multiplicities:
            if q == p:
                return m
        return 0

    def points(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self.multiplicities)

    def __iter__(self) -> Iterator[tuple[Point, int]]:
        return iter(self.multiplicities)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.multiplicities + other.multiplicities)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.multiplicities + tuple((p, -m) for p, m in other.multiplicities))

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        return " + ".join(
            p.label if m == 1 else f"{m}({p.label})" for p, m in self.multiplicities
        )


def point_divisor(p: PointLike, mult: int = 1) -> Divisor:
    return Divisor([(p, mult)])


@dataclass(frozen=True)
class WeightDims:
    """Dimensions of a graded vector space, indexed by positive weight.

    Absent weights mean dimension zero; zero entries are dropped on
    construction so equal gradings compare equal.
    """

    dims: tuple[tuple[int, int], ...] = ()

    def __init__(self, dims: "Mapping[int, int] | Iterable[tuple[int, int]]" = ()) -> None:
        items = dims.items() if isinstance(dims, Mapping) else dims
        merged: dict[int, int] = {}
        for k, d in items:
            k, d = int(k), int(d)
            if k < 1:
                raise DomainError(f"weight must be >= 1, got {k}")
            merged[k] = merged.get(k, 0) + d
        canon = tuple(sorted((k, d) for k, d in merged.items() if d != 0))
        object.__setattr__(self, "dims", canon)

    def __getitem__(self, k: int) -> int:
        return dict(self.dims).get(k, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.dims)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def total(self) -> int:
        return sum(d for _, d in self.dims)


@dataclass(frozen=True)
class ChainHiggsBundle:
    """A chain fixed point: genus, line bundle degrees, and divisors.

    zero_divisors[i-1] is the divisor of b_i for i = 1..n-1 and must be
    effective of degree m_i = l_i - l_{i-1} + 2g - 2; delta0 is a signed
    divisor of degree l_0 presenting the first line bundle.
    """

    genus: int
    degrees: tuple[int, ...]
    delta0: Divisor = Divisor.zero()
    zero_divisors: tuple[Divisor, ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise DomainError(f"genus must be >= 2, got {self.genus}")
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) < 1:
            raise DomainError("a chain needs at least one line bundle degree")
        zeros = tuple(self.zero_divisors)
        object.__setattr__(self, "zero_divisors", zeros)
        if len(zeros) != len(degrees) - 1:
            raise DomainError(
                f"expected {len(degrees) - 1} zero divisors for rank {len(degrees)}, got {len(zeros)}"
            )
        if self.delta0.degree != degrees[0]:
            raise DomainError(
                f"delta0 has degree {self.delta0.degree}, the first line bundle needs {degrees[0]}"
            )
        for i, div in enumerate(zeros, start=1):
            m = self.m_vector[i - 1]
            if m < 0:
                raise DomainError(
                    f"m_{i} = {m} < 0: degrees {degrees} admit no nonzero map at step {i}"
                )
            if not div.is_effective:
                raise DomainError(f"zero divisor at step {i} is not effective")
            if div.degree != m:
                raise DomainError(
                    f"zero divisor at step {i} has degree {div.degree}, expected m_{i} = {m}"
                )

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def m_vector(self) -> tuple[int, ...]:
        """m_i = l_i - l_{i-1} + 2g - 2 for i = 1..n-1."""
        g = self.genus
        l = self.degrees
        return tuple(l[i] - l[i - 1] + 2 * g - 2 for i in range(1, len(l)))

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def zero_divisor(self, i: int) -> Divisor:
        """Divisor of b_i, 1-based."""
        if not 1 <= i <= self.rank - 1:
            raise DomainError(f"map index must be in 1..{self.rank - 1}, got {i}")
        return self.zero_divisors[i - 1]


def make_chain(
    genus: int,
    degrees: Iterable[int],
    zeros: Iterable[Divisor | Mapping] = (),
    delta0: "Divisor | None" = None,
) -> ChainHiggsBundle:
    """Build a chain, defaulting delta0 to a multiple of a base point.

    Plain mappings like {"p": 2} are accepted wherever a Divisor is.
    """
    degrees = tuple(degrees)
    if delta0 is None:
        delta0 = Divisor({Point("o"): degrees[0]}) if degrees and degrees[0] else Divisor.zero()
    coerced = tuple(z if isinstance(z, Divisor) else Divisor(z) for z in zeros)
    return ChainHiggsBundle(genus, degrees, delta0, coerced)


def chain_from_m(genus: int, m: Iterable[int], top_degree: int = 0) -> ChainHiggsBundle:
    """The chain with the given m-vector, fresh reduced disjoint zeros.

    Degrees start at top_degree and descend by 2g - 2 - m_i; the zero
    divisor of b_i takes m_i distinct points labelled zi.1, zi.2, ...
    so the result is very stable whenever it is stable.
    """
    m = tuple(int(x) for x in m)
    if any(x < 0 for x in m):
        raise DomainError(f"m-vector entries must be >= 0, got {m}")
    degrees = [int(top_degree)]
    for mi in m:
        degrees.append(degrees[-1] + mi - (2 * genus - 2))
    zeros = tuple(
        Divisor.of_points(*(f"z{i}.{j}" for j in range(1, mi + 1)))
        for i, mi in enumerate(m, start=1)
    )
    return make_chain(genus, degrees, zeros)


def is_stable(c: ChainHiggsBundle) -> bool:
    """Exact slope test over the invariant subbundles L_j + ... + L_{n-1}.

    Strict inequality n*(l_j + ... + l_{n-1}) < (n-j)*(l_0 + ... + l_{n-1})
    for every 1 <= j <= n-1; rank one is vacuously stable.
    """
    l = c.degrees
    n = c.rank
    total = sum(l)
    tail = 0
    for j in range(n - 1, 0, -1):
        tail += l[j]
        if not n * tail < (n - j) * total:
            return False
    return True


def unstable_index(c: ChainHiggsBundle) -> "int | None":
    """Smallest j whose invariant subbundle violates stability, if any."""
    l = c.degrees
    n = c.rank
    total = sum(l)
    for j in range(1, n):
        if not n * sum(l[j:]) < (n - j) * total:
            return j
    return None


def is_very_stable(c: ChainHiggsBundle) -> bool:
    """Stable, and the combined zero divisor of b_1 + ... + b_{n-1} is reduced.

    A repeated zero (within one b_i or shared between two of them)
    admits a nonzero nilpotent second-order deformation, so the fixed
    point fails to be very stable.
    """
    if not is_stable(c):
        return False
    combined = Divisor.zero()
    for div in c.zero_divisors:
        combined = combined + div
    return combined.is_reduced


def tplus_dims(c: ChainHiggsBundle) -> WeightDims:
    """Weight-space dimensions of the positive-weight tangent part.

    For weight k, the relevant Euler characteristic over ordered index
    pairs (i, j) with 0 <= i, j <= n-1 is

      chi_k = sum_{i-j=k} (l_j - l_i + 1 - g)
            - sum_{i-j=k-1} (l_j - l_i + (2g-2) + 1 - g),

    and dim = -chi_k, corrected by +1 at k = 1 for the trace of the
    Higgs field.  Requires a stable chain, where the relevant
    cohomology vanishing makes the Euler characteristics compute actual
    dimensions; the total is then n^2 (g-1) + 1.
    """
    if not is_stable(c):
        raise DomainError("positive tangent weights need a stable chain")
    g = c.genus
    l = c.degrees
    n = c.rank
    dims: dict[int, int] = {}
    for k in range(1, n + 1):
        chi = 0
        for i in range(n):
            for j in range(n):
                if i - j == k:
                    chi += l[j] - l[i] + 1 - g
                if i - j == k - 1:
                    chi -= l[j] - l[i] + (2 * g - 2) + 1 - g
        dims[k] = -chi + (1 if k == 1 else 0)
    return WeightDims(dims)


def gl_hitchin_base_dims(genus: int, n: int) -> WeightDims:
    """Weights of the rank-n Hitchin base: g at weight 1, then
    (2k-1)(g-1) at each weight 2 <= k <= n."""
    if genus < 2:
        raise DomainError(f"genus must be >= 2, got {genus}")
    if n < 1:
        raise DomainError(f"rank must be >= 1, got {n}")
    dims = {1: genus}
    for k in range(2, n + 1):
        dims[k] = (2 * k - 1) * (genus - 1)
    return WeightDims(dims)


def twist(c: ChainHiggsBundle, p: PointLike, mult: int = -1) -> ChainHiggsBundle:
    """Tensor the whole chain by O(mult * p): every degree moves by mult,
    delta0 absorbs the twist, all zero divisors stay put."""
    p = as_point(p)
    return ChainHiggsBundle(
        c.genus,
        tuple(l + mult for l in c.degrees),
        c.delta0 + Divisor({p: mult}),
        c.zero_divisors,
    )


def _divisor_to_json(d: Divisor) -> dict[str, int]:
    return {p.label: m for p, m in d}


def _divisor_from_json(obj: object, where: str) -> Divisor:
    if not isinstance(obj, dict):
        raise DomainError(f"{where}: expected an object mapping labels to multiplicities")
    items = []
    for label, m in obj.items():
        if not isinstance(label, str) or not label:
            raise DomainError(f"{where}: point labels must be nonempty strings")
        if not isinstance(m, int) or isinstance(m, bool):
            raise DomainError(f"{where}: multiplicity of {label!r} must be an integer")
        items.append((Point(label), m))
    return Divisor(items)


def chain_to_json(c: ChainHiggsBundle) -> dict:
    """Plain-JSON form: genus, degrees, delta0, and one object per b_i."""
    return {
        "genus": c.genus,
        "degrees": list(c.degrees),
        "delta0": _divisor_to_json(c.delta0),
        "zeros": [_divisor_to_json(d) for d in c.zero_divisors],
    }


def chain_from_json(obj: object) -> ChainHiggsBundle:
    """Parse and validate a chain, naming the failed invariant on error."""
    if not isinstance(obj, dict):
        raise DomainError("chain: expected a JSON object")
    unknown = set(obj) - {"genus", "degrees", "delta0", "zeros"}
    if unknown:
        raise DomainError(f"chain: unknown fields {sorted(unknown)}")
    for key in ("genus", "degrees", "delta0", "zeros"):
        if key not in obj:
            raise DomainError(f"chain: missing field {key!r}")
    genus = obj["genus"]
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise DomainError("chain: genus must be an integer")
    degrees = obj["degrees"]
    if not isinstance(degrees, list) or not all(
        isinstance(d, int) and not isinstance(d, bool) for d in degrees
    ):
        raise DomainError("chain: degrees must be a list of integers")
    zeros_json = obj["zeros"]
    if not isinstance(zeros_json, list):
        raise DomainError("chain: zeros must be a list of divisor objects")
    delta0 = _divisor_from_json(obj["delta0"], "chain delta0")
    zeros = tuple(
        _divisor_from_json(z, f"chain zeros[{i}]") for i, z in enumerate(zeros_json)
    )
    return ChainHiggsBundle(genus, tuple(degrees), delta0, zeros)
