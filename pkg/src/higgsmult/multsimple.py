"""Multiplicity formulas for simple structure groups.

For a simple group with root system ``r`` and a vector of zero counts
``m = (m_1, ..., m_l)`` (one entry per simple root, in Bourbaki order), the
virtual multiplicity of the corresponding nilpotent-cone component is the
exact rational character

    prod over i, prod over positive roots a:
        ((1 - t^(h+1)) / (1 - t^h)) ** (m_i * c_i(a)),

where ``h`` is the height of ``a`` and ``c_i(a)`` its coefficient on the
i-th simple root.  The product usually fails to be a polynomial; this module
evaluates it exactly, provides the always-polynomial closed form attached to
cominuscule nodes (a quotient of invariant-degree factors), cross-checks the
latter against minuscule Weyl orbits, and runs brute-force polynomiality
scans over grids of m.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, InternalError, ResourceLimitError
from .multgl import MultResult
from .polyalg import FactoredChar, IntPoly, NotPolynomial, expand
from .rootsys import (
    LieType,
    RootSystem,
    cominuscule_nodes,
    degrees,
    levi_degrees,
    weyl_orbit_minuscule,
)

# Grids larger than this are refused; (bound+1)**rank grows fast and every
# point costs a full expand().
SCAN_CAP = 100_000


def _checked_m(r: RootSystem, m: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(m)
    if len(entries) != r.rank:
        raise DomainError(
            f"m has {len(entries)} entries but {r.lie_type} has rank {r.rank}"
        )
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise DomainError(f"entries of m must be nonnegative integers, got {x!r}")
    return entries


def unit_multiplicity_factored(r: RootSystem, i: int) -> FactoredChar:
    """Factored multiplicity for a single zero of b_i (m = i-th unit vector)."""
    if not 1 <= i <= r.rank:
        raise DomainError(f"node {i} out of range for {r.lie_type}")
    exponents: dict[int, int] = {}
    for root in r.positive_roots:
        c = root.coeffs[i - 1]
        if c == 0:
            continue
        h = root.height
        exponents[h + 1] = exponents.get(h + 1, 0) + c
        exponents[h] = exponents.get(h, 0) - c
    return FactoredChar(exponents)


def mult_simple(r: RootSystem, m: Sequence[int]) -> MultResult:
    """Virtual multiplicity for zero counts m, one entry per simple root.

    Multiplicative in m: the factored form for m + m' is the product of the
    factored forms, so the all-zero vector gives the constant 1.
    """
    entries = _checked_m(r, m)
    acc = FactoredChar.one()
    for i, mi in enumerate(entries, start=1):
        if mi:
            acc = acc * unit_multiplicity_factored(r, i) ** mi
    return MultResult.from_factored(acc)


def q_group(r: RootSystem) -> FactoredChar:
    """Group factor prod_j (1 - t^{d_j}) / (1 - t)^l over the invariant degrees.

    The torus contributes the (1-t)^{-l} denominator explicitly; this matches
    the Levi convention of padding degree lists with 1s.
    """
    exponents: dict[int, int] = {1: -r.rank}
    for d in degrees(r):
        exponents[d] = exponents.get(d, 0) + 1
    return FactoredChar(exponents)


def mult_cominuscule(r: RootSystem, i: int) -> MultResult:
    """Closed-form multiplicity at a cominuscule node: full degrees over Levi degrees.

    Always a polynomial (the quotient is the Poincare polynomial of G/P);
    a non-polynomial outcome indicates a bug, not bad input.
    """
    if i not in cominuscule_nodes(r):
        raise DomainError(f"node {i} of {r.lie_type} is not cominuscule")
    exponents: dict[int, int] = {}
    for d in degrees(r):
        exponents[d] = exponents.get(d, 0) + 1
    for n in levi_degrees(r, i):
        exponents[n] = exponents.get(n, 0) - 1
    result = MultResult.from_factored(FactoredChar(exponents))
    if not result.is_polynomial:
        raise InternalError(
            f"cominuscule quotient for {r.lie_type} node {i} is not a polynomial"
        )
    return result


def gross_check(r: RootSystem, i: int) -> bool:
    """True iff sum of t^depth over the minuscule orbit equals mult_cominuscule."""
    orbit = weyl_orbit_minuscule(r, i)
    counts: dict[int, int] = {}
    for _, depth in orbit:
        counts[depth] = counts.get(depth, 0) + 1
    coeffs = [counts.get(k, 0) for k in range(max(counts) + 1)]
    return IntPoly(tuple(coeffs)) == mult_cominuscule(r, i).polynomial


@dataclass(frozen=True)
class ScanEntry:
    """One grid point of a polynomiality scan."""

    m: tuple[int, ...]
    result: IntPoly | NotPolynomial

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.result, IntPoly)


@dataclass(frozen=True)
class ScanReport:
    lie_type: LieType
    bound: int
    entries: tuple[ScanEntry, ...]

    @property
    def polynomial_count(self) -> int:
        return sum(1 for e in self.entries if e.is_polynomial)

    @property
    def non_polynomial_count(self) -> int:
        return len(self.entries) - self.polynomial_count


def polynomiality_scan(r: RootSystem, bound: int, cap: int = SCAN_CAP) -> ScanReport:
    """Evaluate mult_simple on every m with 0 <= m_i <= bound.

    Entries come out in lexicographic order of m, so the all-zero vector
    (always polynomial, value 1) is first.  Each unit factored form is
    computed once and exponentiated, which agrees with the per-root product
    by multiplicativity.
    """
    if bound < 1:
        raise DomainError(f"scan bound must be >= 1, got {bound}")
    size = (bound + 1) ** r.rank
    if size > cap:
        raise ResourceLimitError(f"scan grid has {size} points, above the cap {cap}")
    units = [unit_multiplicity_factored(r, i) for i in range(1, r.rank + 1)]
    entries = []
    for m in itertools.product(range(bound + 1), repeat=r.rank):
        acc = FactoredChar.one()
        for unit, mi in zip(units, m):
            if mi:
                acc = acc * unit ** mi
        entries.append(ScanEntry(m=m, result=expand(acc)))
    return ScanReport(lie_type=r.lie_type, bound=bound, entries=tuple(entries))
