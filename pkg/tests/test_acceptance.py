"""End-to-end acceptance suite.

One test per headline guarantee; pytest -v gives one pass/fail line each.
Every test measures its own runtime against a stated budget and, when run
with -s, prints a one-line summary with the elapsed time.  All comparisons
are bit-exact: this toolkit has no tolerances to tune.
"""
import itertools
import json
import time

from higgsmult.chain import (
    ChainHiggsBundle,
    chain_from_m,
    gl_hitchin_base_dims,
    is_stable,
    is_very_stable,
    tplus_dims,
    twist,
)
from higgsmult.cli import run
from higgsmult.hecke import (
    hecke_add_zero,
    hecke_remove_zero,
    intersection_count,
    intersection_enumerate,
)
from higgsmult.errors import UnstableResultError
from higgsmult.multgl import (
    euler_pairing_series,
    euler_prefactor,
    mult_type111,
    mult_type12_rank3,
    mult_type_n,
    virtual_multiplicity,
)
from higgsmult.multsimple import gross_check, mult_cominuscule, mult_simple
from higgsmult.polyalg import IntPoly, divides, is_palindromic_monic, qbinom
from higgsmult.rootsys import LieType, build, cominuscule_nodes, degrees

ROOT_GRID = (
    [("A", l) for l in range(1, 9)]
    + [("B", l) for l in range(2, 9)]
    + [("C", l) for l in range(2, 9)]
    + [("D", l) for l in range(4, 9)]
    + [("E", l) for l in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


def _classical_degrees(family, rank):
    if family == "A":
        return tuple(range(2, rank + 2))
    if family in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * rank - 1, 2)) + [rank]))
    return {
        ("G", 2): (2, 6),
        ("F", 4): (2, 6, 8, 12),
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    }[(family, rank)]


def _budget(label, start, cap_seconds):
    elapsed = time.perf_counter() - start
    assert elapsed < cap_seconds, f"{label}: took {elapsed:.3f}s, budget {cap_seconds}s"
    print(f"PASS {label} in {elapsed * 1000:.1f} ms (budget {cap_seconds * 1000:.0f} ms)")


def _stable_grid():
    """Criterion grid: every stable chain with g in 2..4, n in 2..6, m_i in 0..3."""
    out = []
    for g in (2, 3, 4):
        for n in range(2, 7):
            for m in itertools.product(range(4), repeat=n - 1):
                chain = chain_from_m(g, m)
                if is_stable(chain):
                    out.append((g, n, m, chain))
    return out


def _closed_form(n, m):
    poly = IntPoly.one()
    for i, mi in enumerate(m, start=1):
        if mi:
            poly = poly * qbinom(n, i) ** mi
    return poly


def test_01_full_cone_multiplicity_via_cli(capsys):
    # mult gl --type n --g 2 --n 3 -> (1+t)^3 (1+t+t^2)^5, value 1944 = 2^3 3^5
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        code = run(["mult", "gl", "--type", "n", "--g", "2", "--n", "3"])
        best = min(best, time.perf_counter() - start)
        assert code == 0
    report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    expected = IntPoly((1, 1)) ** 3 * IntPoly((1, 1, 1)) ** 5
    assert report["result"]["polynomial"] == list(expected.coeffs)
    assert report["result"]["value"] == "1944"
    assert 1944 == 2 ** 3 * 3 ** 5
    assert best < 0.010, f"took {best * 1000:.2f} ms, budget 10 ms"
    with capsys.disabled():
        print(f"PASS criterion 1 (full-cone multiplicity, CLI) in {best * 1000:.1f} ms (budget 10 ms)")


def test_02_closed_form_equals_character_ratio():
    start = time.perf_counter()
    grid = _stable_grid()
    assert len(grid) >= 2000
    for g, n, m, chain in grid:
        ratio = virtual_multiplicity(tplus_dims(chain), gl_hitchin_base_dims(g, n))
        assert ratio.polynomial == _closed_form(n, m)
    _budget(f"criterion 2 (oracle equivalence, {len(grid)} cases)", start, 30.0)


def test_03_wobbly_threshold():
    start = time.perf_counter()
    for g in range(2, 7):
        for w in range(1, 3 * g - 3):
            result = mult_type12_rank3(g, w)
            assert result.is_polynomial == (w <= g - 1), (g, w)
    _budget("criterion 3 (wobbly threshold)", start, 1.0)


def test_04_rank2_multiplicities():
    start = time.perf_counter()
    for g in range(2, 6):
        for i in range(0, 2 * g - 2):
            result = mult_type111(chain_from_m(g, (i,)))
            assert result.polynomial == IntPoly((1, 1)) ** i
            assert result.value_at_1 == 2 ** i
    _budget("criterion 4 (rank-2 multiplicities)", start, 1.0)


def test_05_hecke_round_trips():
    start = time.perf_counter()
    chains = []
    for g in (2, 3, 4):
        for n in (2, 3, 4, 5):
            for m in itertools.product(range(3), repeat=n - 1):
                for top in (0, 1):
                    chain = chain_from_m(g, m, top_degree=top)
                    if is_stable(chain):
                        chains.append(chain)
    assert len(chains) >= 500
    removals = 0
    for chain in chains:
        n = chain.rank
        # remove then re-add at an existing simple zero
        for i in range(1, n):
            if chain.m_vector[i - 1] == 0:
                continue
            point = chain.zero_divisor(i).points()[0]
            removed = hecke_remove_zero(chain, i, point)
            assert is_stable(removed)
            removals += 1
            assert hecke_add_zero(removed, n - i, point) == twist(chain, point, -1)
        # add a fresh zero then remove it
        for k in range(1, n):
            try:
                added = hecke_add_zero(chain, k, "w")
            except UnstableResultError:
                continue
            assert hecke_remove_zero(added, n - k, "w") == twist(chain, "w", -1)
    assert removals >= 500
    _budget(f"criterion 5 (hecke round trips, {len(chains)} chains)", start, 5.0)


def test_06_intersection_count_bridge():
    start = time.perf_counter()
    grid = _stable_grid()
    sweep_cap = 50_000
    enumerated = 0
    for g, n, m, chain in grid:
        assert is_very_stable(chain)
        count = intersection_count(chain)
        assert count == _closed_form(n, m).value_at_one()
        if count <= sweep_cap:
            assert len(intersection_enumerate(chain, cap=sweep_cap)) == count
            enumerated += 1
    # one near-the-default-cap case, enumerated with the default cap
    big = max(
        (c for _, _, _, c in grid if intersection_count(c) <= 10 ** 6),
        key=intersection_count,
    )
    assert len(intersection_enumerate(big)) == intersection_count(big)
    _budget(
        f"criterion 6 (count bridge, {len(grid)} counts, {enumerated} enumerations)",
        start,
        30.0,
    )


def test_07_root_system_tables():
    start = time.perf_counter()
    for family, rank in ROOT_GRID:
        system = build(LieType(family, rank))
        d = degrees(system)
        assert tuple(d) == _classical_degrees(family, rank)
        assert sum(x - 1 for x in d) == len(system.positive_roots)
    _budget(f"criterion 7 (degree tables, {len(ROOT_GRID)} types)", start, 2.0)


def test_08_g2_never_polynomial_via_cli(capsys):
    start = time.perf_counter()
    code = run(["scan", "--type", "G", "--rank", "2", "--bound", "4"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    entries = report["result"]["entries"]
    nonzero = [e for e in entries if e["m"] != [0, 0]]
    assert len(nonzero) == 24
    assert all(e["polynomial"] is None for e in nonzero)
    with capsys.disabled():
        _budget("criterion 8 (G2 scan via CLI)", start, 5.0)


def test_09_cominuscule_polynomiality():
    start = time.perf_counter()
    empties = set()
    checked = 0
    for family, rank in ROOT_GRID:
        system = build(LieType(family, rank))
        nodes = cominuscule_nodes(system)
        if not nodes:
            empties.add((family, rank))
            continue
        for node in sorted(nodes):
            unit = tuple(1 if j == node else 0 for j in range(1, rank + 1))
            via_roots = mult_simple(system, unit)
            assert via_roots.is_polynomial
            assert is_palindromic_monic(via_roots.polynomial)
            assert via_roots.polynomial == mult_cominuscule(system, node).polynomial
            checked += 1
    assert empties == {("G", 2), ("F", 4), ("E", 8)}
    _budget(f"criterion 9 (cominuscule polynomiality, {checked} nodes)", start, 10.0)


def test_10_gross_check():
    start = time.perf_counter()
    grid = (
        [("A", l) for l in range(1, 6)]
        + [("B", l) for l in (2, 3, 4)]
        + [("C", l) for l in (2, 3, 4)]
        + [("D", 4), ("D", 5), ("E", 6), ("E", 7)]
    )
    checked = 0
    for family, rank in grid:
        system = build(LieType(family, rank))
        for node in sorted(cominuscule_nodes(system)):
            assert gross_check(system, node), (family, rank, node)
            checked += 1
    _budget(f"criterion 10 (orbit gross check, {checked} nodes incl. E7)", start, 30.0)


def test_11_divisibility_into_master():
    start = time.perf_counter()
    masters = {}

    def master(g, n):
        if (g, n) not in masters:
            masters[(g, n)] = mult_type_n(g, n).polynomial
        return masters[(g, n)]

    cases = 0
    for g, n, m, chain in _stable_grid():
        assert divides(_closed_form(n, m), master(g, n))
        cases += 1
    for g in range(2, 7):
        for w in range(1, g):
            assert divides(mult_type12_rank3(g, w).polynomial, master(g, 3))
            cases += 1
    for g in range(2, 6):
        for i in range(0, 2 * g - 2):
            assert divides(IntPoly((1, 1)) ** i, master(g, 2))
            cases += 1
    _budget(f"criterion 11 (divisibility, {cases} cases)", start, 30.0)


def test_12_euler_prefactor_and_pairing_symmetry():
    start = time.perf_counter()
    for g in range(2, 7):
        assert euler_prefactor(g, 2) == 3 * g - 3
    order = 20
    pairs = [
        (2, 2, mult_type_n(2, 2), mult_type111(chain_from_m(2, (1,)))),
        (3, 2, mult_type111(chain_from_m(3, (3,))), mult_type_n(3, 2)),
        (2, 3, mult_type_n(2, 3), mult_type111(chain_from_m(2, (1, 1)))),
    ]
    for g, n, a, b in pairs:
        forward = euler_pairing_series(a, b, g, n, order)
        backward = euler_pairing_series(b, a, g, n, order)
        assert forward.coeffs == backward.coeffs
        assert len(forward.coeffs) == order + 1
    _budget("criterion 12 (Euler prefactor and pairing symmetry)", start, 1.0)
