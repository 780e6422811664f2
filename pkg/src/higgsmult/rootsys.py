"""Self-contained root system engine for the simple Lie types.

Everything is computed from the Cartan matrix in Bourbaki numbering:
positive roots by height induction with the root-string criterion,
invariant-polynomial degrees by conjugating the height histogram,
cominuscule nodes from maximal root coefficients, Levi subsystems by
Dynkin node deletion, and minuscule Weyl orbits (in the dual system)
with their principal-grading depths.  No lookup tables are consulted at
runtime; the classical tables live in the tests as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalError

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_POSITIVE_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple type: family letter plus rank, Bourbaki numbering."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise DomainError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            span = f">= {lo}" if hi is None else f"in {lo}..{hi}"
            raise DomainError(f"family {self.family} needs rank {span}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix a_ij = <alpha_i, alpha_j^v> in Bourbaki numbering."""
    l = t.rank
    a = [[0] * l for _ in range(l)]
    for i in range(l):
        a[i][i] = 2

    def join(i: int, j: int, down: int = -1, up: int = -1) -> None:
        a[i][j] = down
        a[j][i] = up

    fam = t.family
    if fam in ("A", "B", "C"):
        for i in range(l - 1):
            join(i, i + 1)
        if fam == "B" and l >= 2:
            a[l - 2][l - 1] = -2  # alpha_l short
        if fam == "C" and l >= 2:
            a[l - 1][l - 2] = -2  # alpha_l long
    elif fam == "D":
        for i in range(l - 3):
            join(i, i + 1)
        join(l - 3, l - 2)
        join(l - 3, l - 1)
    elif fam == "E":
        join(0, 2)
        join(1, 3)
        for i in range(2, l - 1):
            join(i, i + 1)
    elif fam == "F":
        join(0, 1)
        join(1, 2, down=-2, up=-1)
        join(2, 3)
    elif fam == "G":
        join(0, 1, down=-1, up=-3)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True, order=True)
class Root:
    """A positive root in simple-root coordinates c_1..c_l."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All positive roots of a Cartan matrix, by height induction.

    alpha + alpha_j is a root iff p - <alpha, alpha_j^v> > 0 where p is
    the largest k with alpha - k*alpha_j still a root; processing one
    height layer at a time keeps every downward string already known.
    """
    l = len(cartan)
    found: set[tuple[int, ...]] = set()
    layer = []
    for j in range(l):
        unit = tuple(1 if i == j else 0 for i in range(l))
        found.add(unit)
        layer.append(unit)
    while layer:
        nxt: list[tuple[int, ...]] = []
        for alpha in layer:
            for j in range(l):
                pairing = sum(alpha[i] * cartan[i][j] for i in range(l))
                p = 0
                down = list(alpha)
                while True:
                    down[j] -= 1
                    if down[j] < 0 or tuple(down) not in found:
                        break
                    p += 1
                if p - pairing > 0:
                    up = list(alpha)
                    up[j] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        layer = nxt
    return sorted(found, key=lambda c: (sum(c), c))


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def build(t: LieType) -> RootSystem:
    """Enumerate the positive roots of t; deterministic order by height
    then lexicographic coordinates."""
    cartan = cartan_matrix(t)
    roots = _positive_roots(cartan)
    expected = _POSITIVE_COUNT[t.family](t.rank)
    if len(roots) != expected:
        raise InternalError(
            f"{t}: found {len(roots)} positive roots, classical count is {expected}"
        )
    return RootSystem(t, cartan, tuple(Root(c) for c in roots))


def height_histogram(r: RootSystem) -> dict[int, int]:
    """N_j = number of positive roots of height j."""
    hist: dict[int, int] = {}
    for root in r.positive_roots:
        hist[root.height] = hist.get(root.height, 0) + 1
    return dict(sorted(hist.items()))


@dataclass(frozen=True)
class DegreeSet:
    """Multiset of invariant-polynomial degrees, sorted ascending."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(int(d) for d in self.degrees)))
        if any(d < 1 for d in self.degrees):
            raise DomainError("degrees must be positive")

    @property
    def weyl_order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


def _degrees_from_histogram(hist: dict[int, int], rank: int) -> DegreeSet:
    """Decompose sum_j N_j x^j as sum_i (x + ... + x^(d_i - 1)).

    The parts (N_1, N_2, ...) form a partition whose conjugate is the
    multiset {d_i - 1}; a non-monotone histogram cannot come from a
    root system and flags a bug.
    """
    if not hist:
        return DegreeSet(())
    top = max(hist)
    parts = [hist.get(j, 0) for j in range(1, top + 1)]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InternalError(f"height histogram {hist} is not a partition")
    if parts[0] != rank:
        raise InternalError(f"histogram has {parts[0]} simple roots, rank is {rank}")
    degs = []
    for i in range(1, parts[0] + 1):
        degs.append(sum(1 for p in parts if p >= i) + 1)
    return DegreeSet(tuple(degs))


def degrees(r: RootSystem) -> DegreeSet:
    """Invariant degrees d_1..d_l from the height histogram."""
    return _degrees_from_histogram(height_histogram(r), r.rank)


def cominuscule_nodes(r: RootSystem) -> frozenset[int]:
    """Nodes i (1-based) whose coefficient never exceeds 1 in any
    positive root."""
    l = r.rank
    peak = [0] * l
    for root in r.positive_roots:
        for i, c in enumerate(root.coeffs):
            if c > peak[i]:
                peak[i] = c
    return frozenset(i + 1 for i in range(l) if peak[i] == 1)


def _components(nodes: list[int], cartan: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for w in remaining - comp:
                if cartan[v][w] != 0:
                    comp.add(w)
                    frontier.append(w)
        comps.append(sorted(comp))
        remaining -= comp
    return comps


def levi_degrees(r: RootSystem, i: int) -> DegreeSet:
    """Degrees of the Levi subgroup from deleting node i (1-based):
    union over remaining Dynkin components, plus one degree-1 entry per
    torus rank lost, so the result always has rank many entries."""
    l = r.rank
    if not 1 <= i <= l:
        raise DomainError(f"node index must be in 1..{l}, got {i}")
    keep = [j for j in range(l) if j != i - 1]
    degs: list[int] = []
    for comp in _components(keep, r.cartan):
        sub = tuple(tuple(r.cartan[a][b] for b in comp) for a in comp)
        hist: dict[int, int] = {}
        for c in _positive_roots(sub):
            hist[sum(c)] = hist.get(sum(c), 0) + 1
        degs.extend(_degrees_from_histogram(hist, len(comp)))
    degs.extend([1] * (l - len(keep)))
    return DegreeSet(tuple(degs))


def _solve_root_coordinates(
    cartan: tuple[tuple[int, ...], ...], vec: tuple[int, ...]
) -> list[Fraction]:
    """Solve sum_j c_j * (row j of cartan) = vec for c by elimination."""
    l = len(cartan)
    m = [[Fraction(cartan[j][k]) for j in range(l)] + [Fraction(vec[k])] for k in range(l)]
    for col in range(l):
        pivot = next((row for row in range(col, l) if m[row][col] != 0), None)
        if pivot is None:
            raise InternalError("singular Cartan matrix")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for row in range(l):
            if row != col and m[row][col] != 0:
                f = m[row][col]
                m[row] = [x - f * y for x, y in zip(m[row], m[col])]
    return [m[j][l] for j in range(l)]


def weyl_orbit_minuscule(r: RootSystem, i: int) -> list[tuple[tuple[int, ...], int]]:
    """Weyl orbit of the i-th fundamental weight of the dual system.

    Works in fundamental-weight coordinates of the dual (transposed
    Cartan) system, where the reflection s_j subtracts mu_j times row j
    of the Cartan matrix.  Each orbit element mu is graded by
    depth = height of lambda - mu as a nonnegative integer combination
    of dual simple roots, computed through the inverse Cartan matrix.
    Sorted by depth, then lexicographically.
    """
    if i not in cominuscule_nodes(r):
        raise DomainError(f"node {i} of {r.lie_type} is not cominuscule")
    l = r.rank
    dual = tuple(tuple(r.cartan[b][a] for b in range(l)) for a in range(l))
    start = tuple(1 if j == i - 1 else 0 for j in range(l))
    orbit = {start}
    frontier = [start]
    while frontier:
        mu = frontier.pop()
        for j in range(l):
            if mu[j] == 0:
                continue
            nu = tuple(x - mu[j] * dual[j][k] for k, x in enumerate(mu))
            if nu not in orbit:
                orbit.add(nu)
                frontier.append(nu)
    graded = []
    for mu in orbit:
        diff = tuple(a - b for a, b in zip(start, mu))
        coords = _solve_root_coordinates(dual, diff)
        if any(c.denominator != 1 or c < 0 for c in coords):
            raise InternalError(f"orbit element {mu} has non-integral depth data {coords}")
        graded.append((mu, int(sum(coords))))
    graded.sort(key=lambda pair: (pair[1], pair[0]))
    return graded
