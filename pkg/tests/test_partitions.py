from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from orbivertex.partitions import (
    add_border_strips,
    as_partition,
    beta_set,
    box_color,
    color_counts,
    color_data,
    colored_hooks,
    contains,
    dim_sym_hook,
    has_empty_core,
    hook_length,
    n_quotient,
    n_quotient_inverse,
    n_size,
    negate,
    npartitions,
    partition_from_beta,
    partitions,
    remove_border_strips,
    size,
    strip_height,
    transpose,
    z_sym,
    z_wreath,
)


@st.composite
def partition_st(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    parts = sorted(draw(st.lists(st.integers(1, 6), max_size=5)), reverse=True)
    acc, out = 0, []
    for p in parts:
        if acc + p > max_size:
            break
        out.append(p)
        acc += p
    return tuple(out)


def test_transpose_examples():
    assert transpose((2, 1)) == (2, 1)
    assert transpose((3,)) == (1, 1, 1)
    assert transpose(()) == ()


@given(partition_st())
def test_transpose_involution(p):
    assert transpose(transpose(p)) == p
    assert size(transpose(p)) == size(p)


def test_z_sym_examples():
    assert z_sym((2, 1)) == 2
    assert z_sym((1, 1)) == 2
    assert z_sym((3, 3)) == 18


@given(partition_st())
def test_z_sym_depends_only_on_multiset(p):
    assert z_sym(p) == z_sym(tuple(sorted(p, reverse=True)))


def test_z_wreath_examples():
    assert z_wreath(2, ((1,), ())) == 2
    assert z_wreath(2, ((1, 1), ())) == 8
    assert z_wreath(3, ((), (2,), ())) == 6


def test_negate_examples():
    assert negate(((1,), (2,))) == ((1,), (2,))
    assert negate(((), (2,), ())) == ((), (), (2,))
    assert negate(((1,), (1,), (1,))) == ((1,), (1,), (1,))


@given(st.integers(1, 4), st.integers(0, 4))
def test_negate_involution(n, d):
    for mu in npartitions(n, d):
        assert negate(negate(mu)) == mu


def test_partition_validation():
    assert as_partition([3, 2, 0]) == (3, 2)
    with pytest.raises(ValueError):
        as_partition([1, 2])


def test_beta_set_roundtrip():
    p = (4, 2, 1)
    for m in (3, 5, 8):
        assert partition_from_beta(beta_set(p, m)) == p


# ---------------------------------------------------------------------------
# cores and quotients
# ---------------------------------------------------------------------------

def test_quotient_of_empty():
    for n in (1, 2, 3, 4):
        core, quot = n_quotient((), n)
        assert core == () and quot == ((),) * n
        assert n_quotient_inverse(((),) * n, n) == ()


def test_one_box_has_core():
    core, quot = n_quotient((1,), 2)
    assert core == (1,) and quot == ((), ())


def test_quotient_inverse_size_identity():
    import random

    rng = random.Random(7)
    for n in range(1, 5):
        for _ in range(50):
            d = rng.randrange(0, 4)
            lam = rng.choice(npartitions(n, d))
            assert size(n_quotient_inverse(lam, n)) == n * d


def test_quotient_roundtrip_small():
    for n in range(1, 5):
        for d in range(0, 6):
            for lam in npartitions(n, d):
                lam_bar = n_quotient_inverse(lam, n)
                assert n_quotient(lam_bar, n) == ((), lam)


def test_roundtrip_from_diagram_side():
    for n in (2, 3, 4):
        for d in range(0, 13):
            for p in partitions(d):
                core, quot = n_quotient(p, n)
                if core == ():
                    assert n_quotient_inverse(quot, n) == p


def test_pinned_two_quotient_of_two_boxes():
    # brute-force oracle: the partitions of 2 with empty 2-core are (2) and
    # (1,1); the one whose quotient is ((1), ()) is (1,1) in this labeling
    matches = [p for p in partitions(2)
               if n_quotient(p, 2) == ((), ((1,), ()))]
    assert matches == [(1, 1)]
    assert n_quotient_inverse(((1,), ()), 2) == (1, 1)
    assert n_quotient_inverse(((), (1,)), 2) == (2,)


def test_color_balance_iff_empty_core():
    for n in (2, 3):
        for d in range(0, 9):
            for p in partitions(d):
                balanced = len(set(color_counts(p, n))) == 1
                assert balanced == has_empty_core(p, n)


# ---------------------------------------------------------------------------
# colored diagrams
# ---------------------------------------------------------------------------

def test_displayed_four_row_coloring():
    grid, _ = color_data((4, 3, 3, 1), 3)
    assert grid[0] == (0, 1, 2, 0)
    assert grid[1] == (2, 0, 1)
    assert grid[2] == (1, 2, 0)
    assert grid[3] == (0,)


def test_n_stat_classical_case():
    _, stat = color_data((4, 2, 1), 1)
    assert stat == (sum(k * part for k, part in enumerate((4, 2, 1))),)


def test_color_data_two_one():
    grid, stat = color_data((2, 1), 2)
    assert grid == [(0, 1), (1,)]
    assert stat == (0, 1)


def test_colored_hooks_examples():
    assert colored_hooks((1,), 1, (1, 1)) == {0: 1}
    assert colored_hooks((2, 1), 1, (1, 1)) == {0: 3}
    assert colored_hooks((2, 1), 2, (1, 1)) == {0: 1, 1: 2}
    with pytest.raises(ValueError):
        colored_hooks((2, 1), 2, (2, 2))


@given(partition_st(), st.integers(1, 4))
def test_colored_hooks_sum_to_hook_length(p, n):
    for i, row in enumerate(p, 1):
        for j in range(1, row + 1):
            assert sum(colored_hooks(p, n, (i, j)).values()) == hook_length(p, i, j)


# ---------------------------------------------------------------------------
# border strips
# ---------------------------------------------------------------------------

def _skew_cells(rho, omega):
    return {(i, j) for i, row in enumerate(rho, 1)
            for j in range(1, row + 1)
            if j > (omega[i - 1] if i - 1 < len(omega) else 0)}


def _is_border_strip(rho, omega):
    """Brute-force oracle: connected skew shape with no 2x2 block."""
    if not contains(rho, omega) or size(rho) == size(omega):
        return None
    cells = _skew_cells(rho, omega)
    for (i, j) in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return None
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                stack.append(nb)
    if seen != cells:
        return None
    return len({i for i, _ in cells}) - 1


def test_add_strips_to_empty():
    assert add_border_strips((), 1) == [((1,), 0)]
    assert sorted(add_border_strips((), 2)) == [((1, 1), 1), ((2,), 0)]


def test_add_strips_vs_bruteforce():
    for base in [(), (1,), (2, 1), (3, 1, 1)]:
        for d in (1, 2, 3):
            got = sorted(add_border_strips(base, d))
            want = sorted(
                (rho, _is_border_strip(rho, base))
                for rho in partitions(size(base) + d)
                if _is_border_strip(rho, base) is not None
            )
            assert got == want


def test_remove_strips_inverse_of_add():
    for base in [(2, 1), (3, 2)]:
        for d in (1, 2, 3):
            for rho, ht in add_border_strips(base, d):
                assert (base, ht) in remove_border_strips(rho, d)


@given(partition_st(8), st.integers(1, 4))
def test_strip_height_matches_bruteforce(omega, d):
    for rho in partitions(size(omega) + d):
        assert strip_height(rho, omega) == _is_border_strip(rho, omega)


def test_dim_hook_small():
    assert dim_sym_hook((2, 1)) == 2
    assert dim_sym_hook((3, 2)) == 5
    assert dim_sym_hook(()) == 1


def test_npartitions_count():
    # number of 2-partitions of d is sum over splittings of p(a) p(b)
    ps = [len(partitions(k)) for k in range(5)]
    for d in range(5):
        assert len(npartitions(2, d)) == sum(ps[a] * ps[d - a] for a in range(d + 1))
        assert all(n_size(mu) == d for mu in npartitions(2, d))
