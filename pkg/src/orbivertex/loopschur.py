"""Loop Schur series of colored diagrams, by three independent routes.

A diagram colored mod n has loop Schur series in q_0..q_(n-1) computable by

* direct tableau enumeration (entries are integers >= 0, weakly increasing
  along rows and strictly increasing down columns; the box of color i and
  entry w contributes q_i^w) -- ``ssyt_loop_schur``;
* the colored hook/content product -- ``hook_content_loop_schur``;
* a determinant of shifted complete-homogeneous series with fractional
  exponents -- ``loop_jacobi_trudi``, which computes the "hatted" series
  carrying the extra monomial prod q_(j-i)^((i-j)/n).

The tableau entry range starts at 0, not 1: the single-box diagram must
equal 1/(1-q_0) for the hook/content product to hold.

``det_forms_check`` verifies the chain of determinantal rewritings of the
hatted series (column reduction to a pure power-matrix determinant, and the
inversion symmetry relating the series at q and at q^(-1)) at finite matrix
size m, n | m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import FracSeries, cyc_field
from .partitions import (
    box_color,
    colored_hooks,
    length,
    n_quotient_inverse,
    n_stat,
    size,
    transpose,
)

__all__ = [
    "q_variables",
    "q_monomial",
    "consecutive_exps",
    "LoopSchurValue",
    "ssyt_loop_schur",
    "hook_content_loop_schur",
    "hhat",
    "f_factor",
    "loop_jacobi_trudi",
    "hat_monomial_exps",
    "schur_det",
    "series_det",
    "det_forms_check",
]


def q_variables(n):
    return tuple(f"q{i}" for i in range(n))


def q_monomial(field, n, exps, coeff=1, bound=None):
    """Monomial in q_0..q_(n-1); ``exps`` maps arbitrary integer indices
    (reduced mod n) to Fraction exponents, accumulated per residue."""
    acc = {}
    for t, e in exps.items():
        key = f"q{t % n}"
        acc[key] = acc.get(key, Fraction(0)) + Fraction(e)
    acc = {k: v for k, v in acc.items() if v}
    return FracSeries.monomial(field, q_variables(n), 2 * n, acc, coeff=coeff, bound=bound)


def consecutive_exps(start, count, step=1):
    """Exponent dict of q_start * q_(start+1) * ... (count factors)."""
    exps = {}
    for t in range(start, start + count):
        exps[t] = exps.get(t, Fraction(0)) + step
    return exps


@dataclass(frozen=True)
class LoopSchurValue:
    """A loop Schur evaluation together with its index data."""

    n: int
    lam: tuple
    lam_bar: tuple
    series: FracSeries


def _diagram(lam, n):
    return n_quotient_inverse(lam, n)


# ---------------------------------------------------------------------------
# route 1: tableaux
# ---------------------------------------------------------------------------

def ssyt_loop_schur(lam, n, bound, field=None):
    """Loop Schur series from semi-standard tableaux with entries >= 0."""
    field = field or cyc_field(2 * n)
    lam_bar = _diagram(lam, n)
    out = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    if not lam_bar:
        return out + 1
    rows = len(lam_bar)
    cols = list(lam_bar)
    entries = [[0] * c for c in cols]
    bnum = out.bound_num
    scale = 2 * n

    def emit():
        key = [0] * n
        for i in range(rows):
            for j in range(cols[i]):
                key[box_color(i + 1, j + 1, n)] += entries[i][j]
        k = tuple(e * scale for e in key)
        w = out.terms.get(k)
        out.terms[k] = (w + field.one) if w else field.one

    def fill(i, j, total):
        if i == rows:
            emit()
            return
        ni, nj = (i, j + 1) if j + 1 < cols[i] else (i + 1, 0)
        lo = 0
        if j > 0:
            lo = max(lo, entries[i][j - 1])
        if i > 0 and j < cols[i - 1]:
            lo = max(lo, entries[i - 1][j] + 1)
        v = lo
        while (total + v) * scale <= bnum:
            entries[i][j] = v
            fill(ni, nj, total + v)
            v += 1

    fill(0, 0, 0)
    return out


# ---------------------------------------------------------------------------
# route 2: hook/content product
# ---------------------------------------------------------------------------

def hook_content_loop_schur(lam, n, bound, field=None):
    """prod_i q_i^(n_i) / prod_boxes (1 - prod_i q_i^(h_i(box)))."""
    field = field or cyc_field(2 * n)
    lam_bar = _diagram(lam, n)
    return hook_content_from_diagram(lam_bar, n, bound, field)


def hook_content_from_diagram(lam_bar, n, bound, field, invert_vars=False):
    """Hook/content product for an explicit diagram.

    With ``invert_vars`` the series at q^(-1) is produced, each geometric
    factor rewritten as -M/(1-M) to stay expandable at q = 0.
    """
    sgn = -1 if invert_vars else 1
    stat = n_stat(lam_bar, n)
    out = q_monomial(field, n, {i: sgn * stat[i] for i in range(n)}, bound=None)
    out = out + FracSeries.zero(field, q_variables(n), 2 * n, bound)
    for i, row in enumerate(lam_bar, 1):
        for j in range(1, row + 1):
            hooks = colored_hooks(lam_bar, n, (i, j))
            mon = q_monomial(field, n, hooks)
            if invert_vars:
                out = out * (-mon) * (1 - mon).inverse(bound=_safe_bound(out, mon))
            else:
                out = out * (1 - mon).inverse(bound=_safe_bound(out, mon))
    return out


def _safe_bound(acc, mon):
    # expansion bound for a geometric factor multiplying ``acc``
    return Fraction(acc.bound_num - min(0, acc.min_degree_num()), acc.scale)


# ---------------------------------------------------------------------------
# route 3: Jacobi-Trudi determinant
# ---------------------------------------------------------------------------

def hhat(l, r, n, bound, field=None):
    """Shifted complete-homogeneous series with fractional exponents.

    hhat(0) = 1, hhat(l) = 0 for l < 0, and otherwise
    prod_(t=r)^(r+l-1) q_t^(-t/n) / prod_(i=1)^l (1 - q_(l-i+r)...q_(l-1+r)).
    """
    field = field or cyc_field(2 * n)
    base = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    if l < 0:
        return base
    if l == 0:
        return base + 1
    pre = q_monomial(field, n, {t: Fraction(-t, n) for t in range(r, r + l)})
    out = base + pre
    for i in range(1, l + 1):
        mon = q_monomial(field, n, consecutive_exps(l - i + r, i))
        out = out * (1 - mon).inverse(bound=_safe_bound(out, mon))
    return out


def f_factor(a, b, r, n, field=None):
    """q_r^(r/n)...q_(r+b-1)^((r+b-1)/n) * prod_(i=1)^b (1 - q_(r+i-1)...q_(r+a-1)).

    A polynomial times a fractional monomial (exact, no truncation), tied to
    hhat by  hhat(l, r) = hhat(m, r+l-m) * f(m, m-l, r+l-m)  for l <= m.
    """
    if b < 0:
        raise ValueError("b must be >= 0")
    field = field or cyc_field(2 * n)
    out = q_monomial(field, n, {t: Fraction(t, n) for t in range(r, r + b)})
    for i in range(1, b + 1):
        mon = q_monomial(field, n, consecutive_exps(r + i - 1, a - i + 1))
        out = out * (1 - mon)
    return out


def series_det(matrix):
    """Determinant of a square matrix of FracSeries, by subset DP."""
    m = len(matrix)
    if m == 0:
        raise ValueError("empty matrix")
    template = matrix[0][0]
    states = {0: FracSeries.one(template.field, template.variables, template.scale)}
    for i in range(m):
        new = {}
        for mask, val in states.items():
            for j in range(m):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = matrix[i][j]
                if entry.is_zero():
                    continue
                term = val * entry
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                prev = new.get(mask | bit)
                new[mask | bit] = term if prev is None else prev + term
        states = new
    return states[(1 << m) - 1]


def loop_jacobi_trudi(lam, n, m, bound, field=None):
    """det(hhat(lam_bar_i - i + j, 1 - j))_(i,j <= m): the hatted series.

    Multiplying by prod_(boxes) q_(j-i)^((j-i)/n) recovers the loop Schur
    series itself.
    """
    field = field or cyc_field(2 * n)
    lam_bar = _diagram(lam, n)
    if m < length(lam_bar):
        raise ValueError(f"matrix size {m} below diagram length {length(lam_bar)}")
    if m == 0:
        return FracSeries.one(field, q_variables(n), 2 * n, bound)
    rows = []
    for i in range(1, m + 1):
        li = lam_bar[i - 1] if i <= len(lam_bar) else 0
        rows.append([hhat(li - i + j, 1 - j, n, bound, field) for j in range(1, m + 1)])
    return series_det(rows)


def hat_monomial_exps(lam_bar, n, sign=1):
    """Exponents of prod_(boxes (i,j)) q_(j-i)^(sign*(i-j)/n)."""
    exps = {}
    for i, row in enumerate(lam_bar, 1):
        for j in range(1, row + 1):
            t = j - i
            exps[t] = exps.get(t, Fraction(0)) + Fraction(sign * (i - j), n)
    return exps


# ---------------------------------------------------------------------------
# alternant ratio
# ---------------------------------------------------------------------------

def schur_det(omega, spec, m, bound):
    """Classical bialternant det(x_i^(m-j+omega_j)) / det(x_i^(m-j)).

    ``spec`` lists the m evaluation monomials x_i (FracSeries, single term
    each) in strictly increasing total degree; the Vandermonde denominator is
    inverted factor by factor as a geometric expansion.
    """
    if m < length(omega):
        raise ValueError("m below length of the partition")
    if len(spec) != m:
        raise ValueError("need exactly m evaluation monomials")
    keys = []
    for x in spec:
        if len(x.terms) != 1:
            raise ValueError("spec entries must be monomials")
        keys.append(next(iter(x.terms)))
    if len(set(keys)) != m:
        raise ValueError("degenerate alternant: repeated evaluation monomials")
    degs = [sum(k) for k in keys]
    if sorted(degs) != degs or len(set(degs)) != m:
        raise ValueError("evaluation monomials must have strictly increasing degree")

    template = spec[0]
    field = template.field
    num_rows = []
    for x in spec:
        row = []
        for j in range(1, m + 1):
            oj = omega[j - 1] if j <= len(omega) else 0
            row.append(x ** (m - j + oj))
        num_rows.append(row)
    num = series_det(num_rows)
    out = num + FracSeries.zero(field, template.variables, template.scale, bound)
    # 1/(x_i - x_j) = x_i^(-1) (1 - x_j/x_i)^(-1), deg x_j/x_i > 0 for i < j
    for i in range(m):
        for j in range(i + 1, m):
            ratio = spec[j] * _mono_inverse(spec[i])
            out = out * _mono_inverse(spec[i])
            out = out * (1 - ratio).inverse(bound=_safe_bound(out, ratio))
    return out


def _mono_inverse(mono):
    key = next(iter(mono.terms))
    coeff = mono.terms[key]
    return FracSeries(
        mono.field, mono.variables, mono.scale, mono.bound_num,
        {tuple(-e for e in key): coeff.inv()},
    )


# ---------------------------------------------------------------------------
# determinantal-form battery
# ---------------------------------------------------------------------------

def _elem_monomial(field, n, j, invert=True):
    # e_j(1, c_1, c_1 c_2, ...) over j prefix products of q_1^(+-1)..;
    # as all j arguments multiply together this is a single monomial.
    exps = {}
    sgn = -1 if invert else 1
    for t in range(1, j):
        for s in range(1, t + 1):
            exps[s] = exps.get(s, Fraction(0)) + sgn
    return q_monomial(field, n, exps)


def det_forms_check(sigma, n, m, bound, field=None):
    """Verify the determinantal rewritings of the hatted loop Schur series.

    Checks, modulo ``bound``:
      a. the column-operation form (hhat prefactors times an f-determinant)
         equals the Jacobi-Trudi determinant;
      b. its fully factored version (pure power-matrix determinant) agrees;
      c. the q <-> q^(-1) inversion symmetry of the hatted series;
      d. the inverted factored form agrees as well.
    Requires n | m and m >= length of the diagram.
    """
    field = field or cyc_field(2 * n)
    if m % n != 0:
        raise ValueError("m must be a multiple of n")
    lam_bar = _diagram(sigma, n)
    if m < length(lam_bar):
        raise ValueError("m below diagram length")
    report = {"sigma": sigma, "n": n, "m": m, "bound": str(bound), "checks": {}}

    sb = [lam_bar[i] if i < len(lam_bar) else 0 for i in range(m)]
    jt = loop_jacobi_trudi(sigma, n, m, bound, field)

    # (a) hhat prefactor times f-matrix determinant
    pre = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for i in range(1, m + 1):
        pre = pre * hhat(sb[i - 1] - i + m, 1 - m, n, bound, field)
    fmat = [
        [f_factor(sb[i - 1] - i + m, m - j, 1 - m, n, field) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    form2 = pre * series_det(fmat)
    report["checks"]["column_form"] = _verdict(form2, jt)

    # (b) fully factored: monomial prefactors times det((q_1..q_(sb_i+m-i))^(m-j))
    mono = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for j in range(1, m + 1):
        mono = mono * q_monomial(field, n, {t: Fraction(t - m, n) for t in range(1, m - j + 1)})
    elem = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for j in range(1, m):
        elem = elem * _elem_monomial(field, n, j, invert=True) * (-1) ** j
    pmat = [
        [q_monomial(field, n, consecutive_exps(1, sb[i - 1] + m - i)) ** (m - j)
         for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    form4 = pre * mono * elem * series_det(pmat)
    report["checks"]["factored_form"] = _verdict(form4, form2)

    # (c) inversion symmetry via the hook/content closed forms
    hs = hook_content_from_diagram(lam_bar, n, bound, field) * q_monomial(
        field, n, hat_monomial_exps(lam_bar, n)
    )
    hs_inv = hook_content_from_diagram(lam_bar, n, bound, field, invert_vars=True)
    hs_inv = hs_inv * q_monomial(field, n, hat_monomial_exps(lam_bar, n, sign=-1))
    flip = {}
    d = size(lam_bar)
    for t in range(n):
        flip[t] = flip.get(t, Fraction(0)) - Fraction(d, n)
    for i, row in enumerate(lam_bar, 1):
        for j in range(1, row + 1):
            t = j - i
            flip[t] = flip.get(t, Fraction(0)) + Fraction(2 * (i - j), n) + (i - j)
    rhs5 = hs_inv * q_monomial(field, n, flip) * (-1) ** d
    report["checks"]["inversion_symmetry"] = _verdict(hs, rhs5)
    report["checks"]["jt_vs_hook_content"] = _verdict(jt, hs)

    # (d) the factored form after the q <-> q^(-1) bookkeeping.  Note the
    # middle monomial prefactor is the inverse of the one in (b): it comes
    # from substituting q -> q^(-1) into the factored form, so its exponents
    # flip along with everything else.
    pre_inv = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for i in range(1, m + 1):
        pre_inv = pre_inv * _hhat_inverted(sb[i - 1] - i + m, 1 - m, n, bound, field)
    mono_inv = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for j in range(1, m + 1):
        mono_inv = mono_inv * q_monomial(
            field, n, {t: Fraction(m - t, n) for t in range(1, m - j + 1)}
        )
    elem_inv = FracSeries.one(field, q_variables(n), 2 * n, bound)
    for j in range(1, m):
        elem_inv = elem_inv * _elem_monomial(field, n, j, invert=False) * (-1) ** j
    imat = [
        [q_monomial(field, n,
                    {t: Fraction(-(m - j)) for t in range(0, sb[i - 1] + m - i + 1)})
         for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    form6 = (
        q_monomial(field, n, {0: Fraction(m * (m - 1), 2)})
        * q_monomial(field, n, flip)
        * (-1) ** d
        * pre_inv
        * mono_inv
        * elem_inv
        * series_det(imat)
    )
    report["checks"]["inverted_factored_form"] = _verdict(form6, jt)

    report["status"] = "pass" if all(
        c["status"] == "pass" for c in report["checks"].values()
    ) else "fail"
    return report


def _hhat_inverted(l, r, n, bound, field):
    """hhat(l, r) with every variable inverted, kept expandable at q = 0."""
    base = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    if l < 0:
        return base
    if l == 0:
        return base + 1
    out = base + q_monomial(field, n, {t: Fraction(t, n) for t in range(r, r + l)})
    for i in range(1, l + 1):
        mon = q_monomial(field, n, consecutive_exps(l - i + r, i))
        out = out * (-mon) * (1 - mon).inverse(bound=_safe_bound(out, mon))
    return out


def _verdict(a, b, label=None):
    mism = a.first_mismatch(b)
    if mism is None:
        return {"status": "pass"}
    key, ca, cb = mism
    return {
        "status": "fail",
        "witness": {
            "monomial": a.monomial_str(key),
            "lhs": repr(ca),
            "rhs": repr(cb),
        },
    }
