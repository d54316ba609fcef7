"""Partitions and n-partitions: cores, quotients, colored diagrams, strips.

Partitions are canonical tuples of weakly decreasing positive integers;
an n-partition is an n-tuple of partitions, the i-th component holding the
parts twisted by the i-th power of the chosen cyclic generator.

Conventions pinned here (and frozen by golden tests):

* beta-sets of size m, n | m, with runner r collecting the beta numbers
  congruent to r mod n; quotient component r is read off runner r directly;
* the box in row i, column j (1-indexed) has color (j - i) mod n;
* a border strip's stored ``height`` is (number of rows spanned) - 1, so the
  strip character below carries the sign (-1)^height.
"""

from __future__ import annotations

from functools import cache
from math import factorial

__all__ = [
    "as_partition",
    "size",
    "length",
    "transpose",
    "contains",
    "partitions",
    "z_sym",
    "content_sum",
    "hook_length",
    "npartitions",
    "n_size",
    "n_length",
    "negate",
    "underlying",
    "decorated_parts",
    "z_wreath",
    "add_part",
    "npartition_transpose",
    "beta_set",
    "partition_from_beta",
    "n_quotient",
    "n_quotient_inverse",
    "has_empty_core",
    "box_color",
    "color_counts",
    "n_stat",
    "color_data",
    "colored_hooks",
    "add_border_strips",
    "remove_border_strips",
    "strip_height",
]


# ---------------------------------------------------------------------------
# ordinary partitions
# ---------------------------------------------------------------------------

def as_partition(seq):
    """Canonical form: tuple, trailing zeros stripped, validated."""
    p = tuple(int(x) for x in seq if x != 0)
    if any(a < b for a, b in zip(p, p[1:])) or any(x < 0 for x in p):
        raise ValueError(f"not a partition: {seq!r}")
    return p


def size(p):
    return sum(p)


def length(p):
    return len(p)


def transpose(p):
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def contains(rho, omega):
    """omega subseteq rho as Young diagrams."""
    if len(omega) > len(rho):
        return False
    return all(o <= r for o, r in zip(omega, rho))


@cache
def partitions(d):
    """All partitions of d, in reverse-lexicographic order."""
    out = []

    def rec(rest, mx, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, mx), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(d, d if d else 1, [])
    return tuple(out) if d else ((),)


def _aut(parts):
    """Product of factorials of part multiplicities."""
    out, i = 1, 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out *= factorial(j - i)
        i = j
    return out


def z_sym(tau):
    """Centralizer order |Aut(tau)| * prod(tau_i)."""
    out = _aut(tau)
    for t in tau:
        out *= t
    return out


def content_sum(p):
    """Sum of (j - i) over boxes (1-indexed rows/columns)."""
    return sum(j - i for i, row in enumerate(p, 1) for j in range(1, row + 1))


def hook_length(p, i, j):
    """Classical hook length of box (i, j), 1-indexed."""
    t = transpose(p)
    return (p[i - 1] - j) + (t[j - 1] - i) + 1


def dim_sym_hook(p):
    """Number of standard tableaux, by the hook length formula."""
    num = factorial(size(p))
    for i, row in enumerate(p, 1):
        for j in range(1, row + 1):
            num //= hook_length(p, i, j)
    return num


# ---------------------------------------------------------------------------
# n-partitions
# ---------------------------------------------------------------------------

@cache
def npartitions(n, d):
    """All n-partitions of total size d."""
    if n == 1:
        return tuple((p,) for p in partitions(d))
    out = []
    for first in range(d, -1, -1):
        for p in partitions(first):
            for rest in npartitions(n - 1, d - first):
                out.append((p,) + rest)
    return tuple(out)


def n_size(mu):
    return sum(sum(c) for c in mu)


def n_length(mu):
    return sum(len(c) for c in mu)


def negate(mu):
    """Opposite twistings: the part xi^i d becomes xi^(-i) d."""
    n = len(mu)
    return tuple(mu[(-i) % n] for i in range(n))


def underlying(mu):
    """Forget decorations: the multiset of all parts as one partition."""
    return tuple(sorted((x for c in mu for x in c), reverse=True))


def decorated_parts(mu):
    """Parts as (size, twist) pairs, twists in Z_n."""
    return [(d, i) for i, comp in enumerate(mu) for d in comp]


def z_wreath(n, mu):
    """Centralizer order in the wreath product: |Aut(mu)| * prod(n * part)."""
    out = 1
    for comp in mu:
        out *= _aut(comp)
        for d in comp:
            out *= n * d
    return out


def add_part(n, mu, d):
    """Add a part of size d to component (d mod n)."""
    k = d % n
    comp = tuple(sorted(mu[k] + (d,), reverse=True))
    return mu[:k] + (comp,) + mu[k + 1:]


# ---------------------------------------------------------------------------
# beta sets, cores and quotients
# ---------------------------------------------------------------------------

def beta_set(p, m):
    """First-column hook lengths padded to m rows: strictly decreasing."""
    if m < len(p):
        raise ValueError("beta set needs m >= length of the partition")
    return [(p[i] if i < len(p) else 0) + m - 1 - i for i in range(m)]


def partition_from_beta(beta):
    """Inverse of ``beta_set``; beta must be distinct nonnegative integers."""
    b = sorted(beta, reverse=True)
    m = len(b)
    if len(set(b)) != m or (b and b[-1] < 0):
        raise ValueError("beta numbers must be distinct and nonnegative")
    return as_partition(b[i] - (m - 1 - i) for i in range(m))


def _quotient_m(p, n):
    m = len(p) + 1
    return m + (-m) % n


def n_quotient(lam_bar, n):
    """Abacus decomposition of a partition into its n-core and n-quotient."""
    m = _quotient_m(lam_bar, n)
    beta = beta_set(lam_bar, m)
    runners = [[] for _ in range(n)]
    for b in beta:
        runners[b % n].append(b // n)
    quotient = tuple(partition_from_beta(r) for r in runners)
    core_beta = [j * n + r for r, rr in enumerate(runners) for j in range(len(rr))]
    core = partition_from_beta(core_beta)
    return core, quotient


def n_quotient_inverse(lam, n):
    """The unique partition of n*|lam| with empty n-core and n-quotient lam."""
    K = max((len(c) for c in lam), default=0) + 1
    beta = []
    for c, comp in enumerate(lam):
        for j in range(K):
            part = comp[j] if j < len(comp) else 0
            beta.append(n * (part + K - 1 - j) + c)
    return partition_from_beta(beta)


def has_empty_core(lam_bar, n):
    return n_quotient(lam_bar, n)[0] == ()


def npartition_transpose(n, lam):
    """The n-partition whose associated diagram is the transposed one."""
    return n_quotient(transpose(n_quotient_inverse(lam, n)), n)[1]


# ---------------------------------------------------------------------------
# colored diagrams
# ---------------------------------------------------------------------------

def box_color(i, j, n):
    """Color of box (i, j), 1-indexed: (j - i) mod n."""
    return (j - i) % n


def color_counts(lam_bar, n):
    counts = [0] * n
    for i, row in enumerate(lam_bar, 1):
        for j in range(1, row + 1):
            counts[box_color(i, j, n)] += 1
    return tuple(counts)


def n_stat(lam_bar, n):
    """n_i = sum over rows k of (k-1) * (number of color-i boxes in row k)."""
    stat = [0] * n
    for i, row in enumerate(lam_bar, 1):
        for j in range(1, row + 1):
            stat[box_color(i, j, n)] += i - 1
    return tuple(stat)


def color_data(lam_bar, n):
    """Per-box color grid (row-major, 1-indexed boxes) and the n_i statistics."""
    grid = [tuple(box_color(i, j, n) for j in range(1, row + 1))
            for i, row in enumerate(lam_bar, 1)]
    return grid, n_stat(lam_bar, n)


def colored_hooks(lam_bar, n, box):
    """Counts of each color over the hook of ``box`` = (i, j), 1-indexed."""
    i, j = box
    if not (1 <= i <= len(lam_bar) and 1 <= j <= lam_bar[i - 1]):
        raise ValueError(f"box {box} outside the diagram of {lam_bar}")
    t = transpose(lam_bar)
    counts = {}
    for jj in range(j, lam_bar[i - 1] + 1):
        c = box_color(i, jj, n)
        counts[c] = counts.get(c, 0) + 1
    for ii in range(i + 1, t[j - 1] + 1):
        c = box_color(ii, j, n)
        counts[c] = counts.get(c, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# border strips
# ---------------------------------------------------------------------------

def add_border_strips(base, d):
    """All ways to add a connected border strip of size d.

    Returns (result, height) pairs; height = rows spanned - 1.
    """
    if d < 1:
        raise ValueError("strip size must be >= 1")
    m = len(base) + d
    beta = beta_set(base, m)
    bset = set(beta)
    out = []
    for b in beta:
        nb = b + d
        if nb in bset:
            continue
        crossed = sum(1 for x in beta if b < x < nb)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        out.append((partition_from_beta(new), crossed))
    return out


def remove_border_strips(p, d):
    """All ways to remove a connected border strip of size d."""
    if d < 1:
        raise ValueError("strip size must be >= 1")
    m = len(p)
    if m == 0:
        return []
    beta = beta_set(p, m)
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - d
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        out.append((partition_from_beta(new), crossed))
    return out


def strip_height(rho, omega):
    """Height of rho minus omega if it is a connected border strip, else None.

    Height counts rows spanned minus one, so the associated strip character
    is (-1)^height.
    """
    d = size(rho) - size(omega)
    if d <= 0 or not contains(rho, omega):
        return None
    m = max(len(rho), len(omega)) + 1
    br = beta_set(rho, m)
    bo = set(beta_set(omega, m))
    moved = [b for b in br if b not in bo]
    if len(moved) != 1:
        return None
    b = moved[0]
    lost = [x for x in bo if x not in br]
    assert len(lost) == 1 and b - lost[0] == d
    return sum(1 for x in bo if lost[0] < x < b)
