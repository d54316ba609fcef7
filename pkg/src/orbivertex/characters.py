"""Characters of the symmetric group and of its cyclic wreath products.

Symmetric-group values come from the Murnaghan-Nakayama recursion.  Wreath
values are obtained by distributing the decorated parts of a class among the
component diagrams of the representation: each way of coloring the parts
contributes the product of component symmetric-group characters weighted by
zeta_n^(-i*c) per part of twist i sent to component c.  The sign of that
Fourier pairing, together with the quotient labeling in ``partitions``, is
the convention pinned by the conjugation and twist identities in the tests.

Wreath values live in Z[zeta_n]; they are cached as integer vectors indexed
by powers of zeta_n and rendered into a requested cyclotomic field on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .exactalg import cyc_field
from .partitions import (
    decorated_parts,
    dim_sym_hook,
    n_size,
    npartitions,
    remove_border_strips,
    size,
    strip_height,
)

__all__ = [
    "chi_sym",
    "dim_sym",
    "chi_rel",
    "chi_wreath_counts",
    "chi_wreath",
    "dim_wreath",
    "central_chars",
    "twist_class",
    "CharTable",
]


# ---------------------------------------------------------------------------
# symmetric group
# ---------------------------------------------------------------------------

@cache
def chi_sym(rho, tau):
    """Character of S_d: irrep rho on conjugacy class tau (|rho| = |tau|)."""
    if size(rho) != size(tau):
        raise ValueError(f"size mismatch: |{rho}| != |{tau}|")
    if not rho:
        return 1
    d, rest = tau[0], tau[1:]
    total = 0
    for smaller, height in remove_border_strips(rho, d):
        total += (-1) ** height * chi_sym(smaller, rest)
    return total


def dim_sym(rho):
    return chi_sym(rho, (1,) * size(rho))


def chi_rel(rho, omega, d):
    """Strip character: (-1)^height if rho minus omega is a connected
    border strip of size d, else 0."""
    if size(rho) != size(omega) + d:
        raise ValueError(f"size mismatch: |{rho}| != |{omega}| + {d}")
    h = strip_height(rho, omega)
    return 0 if h is None else (-1) ** h


# ---------------------------------------------------------------------------
# wreath products
# ---------------------------------------------------------------------------

@cache
def chi_wreath_counts(n, lam, mu):
    """chi_lambda(mu) as an integer vector: value = sum_k counts[k] zeta_n^k."""
    if n_size(lam) != n_size(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    parts = decorated_parts(mu)
    capacities = [size(c) for c in lam]
    counts = [0] * n
    chosen = [[] for _ in range(n)]

    def rec(idx, phase):
        if idx == len(parts):
            prod = 1
            for c in range(n):
                tau = tuple(sorted(chosen[c], reverse=True))
                prod *= chi_sym(lam[c], tau)
                if prod == 0:
                    return
            counts[phase % n] += prod
            return
        d, twist = parts[idx]
        for c in range(n):
            if capacities[c] >= d:
                capacities[c] -= d
                chosen[c].append(d)
                rec(idx + 1, phase - twist * c)
                chosen[c].pop()
                capacities[c] += d

    rec(0, 0)
    return tuple(counts)


def chi_wreath(n, lam, mu, field):
    """chi_lambda(mu) rendered in ``field`` (order divisible by n)."""
    counts = chi_wreath_counts(n, lam, mu)
    out = field.zero
    for k, c in enumerate(counts):
        if c:
            out = out + field.root_of_unity(n, k) * c
    return out


def dim_wreath(n, lam):
    """Dimension: the character on the identity class."""
    d = n_size(lam)
    out = factorial(d)
    for comp in lam:
        out //= factorial(size(comp))
        out *= dim_sym_hook(comp)
    return out


def _single_twist_class(n, d, i):
    """The class {xi^i * 1, 1, ..., 1} of total size d."""
    comps = [()] * n
    if i == 0:
        comps[0] = (1,) * d
    else:
        comps[0] = (1,) * (d - 1)
        comps[i] = (1,)
    return tuple(comps)


def central_chars(n, lam, field):
    """Central characters (f_T, (f_0, ..., f_(n-1))).

    f_T = n|lam|(|lam|-1) chi(transposition class) / (2 dim); zero for
    |lam| < 2 since the transposition class is then empty.
    f_i = |lam| chi({xi^i,1,...,1}) / dim.
    """
    d = n_size(lam)
    dim = dim_wreath(n, lam)
    if d < 2:
        f_t = field.zero
    else:
        cls = ([(2,) + (1,) * (d - 2)] + [()] * (n - 1))
        chi_t = chi_wreath(n, lam, tuple(cls), field)
        f_t = chi_t * Fraction(n * d * (d - 1), 2 * dim)
    f_i = []
    for i in range(n):
        if d == 0:
            f_i.append(field.zero)
            continue
        chi_i = chi_wreath(n, lam, _single_twist_class(n, d, i), field)
        f_i.append(chi_i * Fraction(d, dim))
    return f_t, tuple(f_i)


def twist_class(n, mu, k):
    """Re-twist a class: the part of size d and twist i becomes twist d*k - i."""
    comps = [[] for _ in range(n)]
    for d, i in decorated_parts(mu):
        comps[(d * k - i) % n].append(d)
    return tuple(tuple(sorted(c, reverse=True)) for c in comps)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

class CharTable:
    """Full character table of S_d (n = 1) or of the wreath product Z_n wr S_d.

    Rows and columns are indexed by the same set: partitions of d for n = 1,
    n-partitions of d otherwise.  Values are exact cyclotomic numbers in
    Q(zeta_n) (integers for n <= 2).
    """

    def __init__(self, n, d):
        self.n = n
        self.d = d
        self.labels = npartitions(n, d)
        self.field = cyc_field(max(n, 1))

    def value(self, lam, mu, field=None):
        field = field or self.field
        return chi_wreath(self.n, lam, mu, field)

    def items(self, field=None):
        field = field or self.field
        for lam in self.labels:
            for mu in self.labels:
                yield lam, mu, self.value(lam, mu, field)

    def to_json_dict(self):
        rows = []
        for lam in self.labels:
            row = []
            for mu in self.labels:
                counts = chi_wreath_counts(self.n, lam, mu)
                row.append(list(counts))
            rows.append(row)
        return {
            "n": self.n,
            "d": self.d,
            "labels": [[list(c) for c in lab] for lab in self.labels],
            "coeff_basis": f"powers of zeta_{self.n}",
            "values": rows,
        }
