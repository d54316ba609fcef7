"""Executable identity checks with localized failure reports.

Every check returns a ``CheckCase``: deterministic given its parameters and
truncation bound, carrying a witness monomial with both coefficients when it
fails.  ``run_suite`` executes a JSON-configured sweep and produces a
byte-stable machine-readable report.

Series bookkeeping: several identities mix honest power series with exact
monomials of negative total degree, so each assembly helper pads its internal
truncation so that the returned series is valid at least to the requested
bound; the bound propagation in ``FracSeries`` then guarantees that no
under-truncated comparison can happen silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .characters import (
    CharTable,
    chi_rel,
    chi_sym,
    chi_wreath,
    chi_wreath_counts,
    dim_sym,
    dim_wreath,
    twist_class,
)
from .exactalg import FracSeries, cyc_field
from .loopschur import (
    consecutive_exps,
    det_forms_check,
    hat_monomial_exps,
    hook_content_from_diagram,
    hook_content_loop_schur,
    loop_jacobi_trudi,
    q_monomial,
    q_variables,
    series_det,
    ssyt_loop_schur,
)
from .partitions import (
    add_border_strips,
    add_part,
    content_sum,
    has_empty_core,
    length,
    n_length,
    n_quotient,
    n_quotient_inverse,
    n_size,
    n_stat,
    negate,
    npartition_transpose,
    npartitions,
    partitions,
    size,
    strip_height,
    transpose,
    z_sym,
    z_wreath,
)
from .vertex import (
    FramingWeights,
    central_lemma_check,
    dt_sym_vertex_ws_q,
    dt_sym_vertex_ws_xu,
    dt_vertex_framed,
    framing_prefactor,
    gw_sym_vertex_ws,
    hurwitz_bullet,
    hurwitz_gen,
    monomial_image,
    skew_schur_spec,
    xu_field,
    xu_variables,
)

__all__ = [
    "CheckCase",
    "check_thm_comb",
    "check_combident_forms",
    "check_sym_correspondence",
    "check_reduction",
    "check_gw_symmetry",
    "loopschur_cases",
    "characters_cases",
    "hurwitz_cases",
    "framing_cases",
    "default_config",
    "run_suite",
]


@dataclass
class CheckCase:
    identity: str
    params: dict
    status: str = "pass"
    witness: dict | None = None
    note: str | None = None

    def fail(self, series_a, series_b, mismatch):
        key, ca, cb = mismatch
        self.status = "fail"
        self.witness = {
            "monomial": series_a.monomial_str(key),
            "lhs": repr(ca),
            "rhs": repr(cb),
        }
        return self

    def compare(self, lhs, rhs):
        mism = lhs.first_mismatch(rhs)
        if mism is not None:
            return self.fail(lhs, rhs, mism)
        return self

    def to_json_dict(self):
        out = {
            "identity": self.identity,
            "params": _jsonable(self.params),
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return obj


# ---------------------------------------------------------------------------
# assembly helpers (each returns a series valid at least to ``bound``)
# ---------------------------------------------------------------------------

def _hat_monomial_drop(lam_bar, n):
    """How far below zero the hat monomial pulls the total degree."""
    t = sum(Fraction(i - j, n) for i, row in enumerate(lam_bar, 1)
            for j in range(1, row + 1))
    return max(0, -t)


def hat_loop_schur(lam_bar, n, bound, field):
    """The hatted loop Schur series of a diagram, valid to ``bound``."""
    inner = Fraction(bound) + _hat_monomial_drop(lam_bar, n) + 1
    return (hook_content_from_diagram(lam_bar, n, inner, field)
            * q_monomial(field, n, hat_monomial_exps(lam_bar, n)))


def hat_loop_schur_min_deg(lam_bar, n):
    return (Fraction(sum(n_stat(lam_bar, n)))
            + sum(Fraction(i - j, n) for i, row in enumerate(lam_bar, 1)
                  for j in range(1, row + 1)))


def bar_hat_skew(rho, omega, lam, n, bound, field):
    """bar of the hatted skew evaluation at the alphabet shifted by lam."""
    c = content_sum(rho) - content_sum(omega)
    inner = Fraction(bound) + n * max(0, c) + 1
    s = skew_schur_spec(rho, omega, lam, n, inner, barred=True, field=field)
    return s * q_monomial(field, n, {t: Fraction(-c) for t in range(n)})


def bar_hat_skew_min_deg(rho, omega, lam_bar, n):
    r = size(rho) - size(omega)
    degs = [i - 1 - (lam_bar[i - 1] if i <= len(lam_bar) else 0)
            for i in range(1, len(lam_bar) + 2)]
    c = content_sum(rho) - content_sum(omega)
    return Fraction(-n * max(0, c) + r * min(0, min(degs, default=0)))


# ---------------------------------------------------------------------------
# the strip-transfer identity
# ---------------------------------------------------------------------------

def check_thm_comb(omega, sigma, d, n, bound, field=None):
    """Two-leg strip-transfer identity.

    Left: the hatted loop Schur of sigma times the signed sum of barred
    hatted skew evaluations over single d-strip additions to omega.
    Right: the fractional monomial (q_1^(1/n)...q_(n-1)^((n-1)/n))^d times
    the signed sum over nd-strip additions to the diagram of sigma of hatted
    loop Schur values times the barred evaluation of omega at the shifted
    alphabet.  The size of the representations summed on the right is
    |sigma| + d (the nd-strip support forces it; we flag the alternative
    reading |sigma| + n as inconsistent).
    """
    field = field or cyc_field(2 * n)
    bound = Fraction(bound)
    case = CheckCase(
        "thm-comb",
        {"omega": omega, "sigma": sigma, "d": d, "n": n, "bound": bound},
        note="right-hand sum taken over representations of size |sigma|+d",
    )
    sig_bar = n_quotient_inverse(sigma, n)
    hs_min = hat_loop_schur_min_deg(sig_bar, n)

    lhs = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    for rho, ht in add_border_strips(omega, d):
        b_skew = bound - min(0, hs_min)
        b_hat = bound - min(0, bar_hat_skew_min_deg(rho, (), sig_bar, n))
        term = (hat_loop_schur(sig_bar, n, b_hat, field)
                * bar_hat_skew(rho, (), sigma, n, b_skew, field))
        lhs = lhs + term.smul((-1) ** ht)
    lhs = lhs.truncated(bound)

    rhs = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    for lam_bar, ht in add_border_strips(sig_bar, n * d):
        core, lam = n_quotient(lam_bar, n)
        assert core == (), "strip addition must preserve the empty core"
        b_skew = bound - min(0, hat_loop_schur_min_deg(lam_bar, n))
        b_hat = bound - min(0, bar_hat_skew_min_deg(omega, (), lam_bar, n))
        term = (hat_loop_schur(lam_bar, n, b_hat, field)
                * bar_hat_skew(omega, (), lam, n, b_skew, field))
        rhs = rhs + term.smul((-1) ** ht)
    rhs = rhs * q_monomial(field, n, {t: Fraction(t * d, n) for t in range(1, n)})
    return case.compare(lhs, rhs.truncated(bound))


# ---------------------------------------------------------------------------
# finite-size determinant expansions (row vs column route)
# ---------------------------------------------------------------------------

def _conv_monomial(field, n, k, power=1):
    """(q_0^(-1)...q_k^(-1))^power as an exact monomial."""
    exps = {}
    if k >= 0:
        for j in range(0, k + 1):
            exps[j] = exps.get(j, 0) - power
    else:
        for j in range(k + 1, 0):
            exps[j] = exps.get(j, 0) + power
    return q_monomial(field, n, exps)


def combident_policy_m(omega, sigma, d, n, bound):
    """Matrix size certified to reach agreement modulo ``bound``.

    The two finite-size expansions agree only below a degree that grows
    linearly with m (shifted down by the widths of the index shapes); this
    picks the smallest multiple of n past bound + width + 2.
    """
    sig_bar = n_quotient_inverse(sigma, n)
    w = (sig_bar[0] if sig_bar else 0) + (omega[0] if omega else 0)
    need = int(Fraction(bound)) + w + n * d + 2
    return need + (-need) % n


def check_combident_forms(omega, sigma, d, n, m, bound, field=None):
    """Finite-size agreement of the column- and row-expanded double sums.

    Both routes expand the same alternant ratio after adding a d-strip to a
    part of omega (columns) or an nd-strip to a row of the diagram of sigma
    (rows).  The two double sums agree modulo the bound once m is large
    enough (``combident_policy_m``); agreement degree grows with m and is
    roughly m minus the shape widths, so small m cannot certify large
    bounds.  Pass ``m=None`` to use the policy size.
    """
    field = field or cyc_field(2 * n)
    bound = Fraction(bound)
    if m is None:
        m = combident_policy_m(omega, sigma, d, n, bound)
    case = CheckCase(
        "combident",
        {"omega": omega, "sigma": sigma, "d": d, "n": n, "m": m, "bound": bound},
    )
    if m % n != 0:
        case.status = "error"
        case.note = "m must be a multiple of n"
        return case
    sig_bar = n_quotient_inverse(sigma, n)
    if m < max(length(sig_bar), length(omega)) + 1:
        case.status = "error"
        case.note = "m too small for the index shapes"
        return case
    sb = [sig_bar[i] if i < len(sig_bar) else 0 for i in range(m)]
    om = [omega[j] if j < len(omega) else 0 for j in range(m)]
    scale = 2 * n

    # shared data: x_i = conv(sb_i + m - i), full Vandermonde denominator
    xs = [_conv_monomial(field, n, sb[i - 1] + m - i) for i in range(1, m + 1)]
    xdeg = [Fraction(sum(next(iter(x.terms))), scale) for x in xs]

    def minor_entry(i, j):
        return xs[i - 1] ** (m - j + om[j - 1])

    minors = {}
    for s in range(1, m + 1):
        for t in range(1, m + 1):
            rows = [
                [minor_entry(i, j) for j in range(1, m + 1) if j != t]
                for i in range(1, m + 1) if i != s
            ]
            if rows:
                minors[(s, t)] = series_det(rows)
            else:
                minors[(s, t)] = FracSeries.one(field, q_variables(n), scale)

    vdm_min = sum(xdeg[i - 1] * (m - i) for i in range(1, m + 1))

    def coeff_left(s, t):
        exps = {tt: Fraction(tt * d, -n) for tt in range(1, n)}
        exps = _merge(exps, {tt: Fraction(m, n) * (size(omega) + d) for tt in range(n)})
        exps = _merge(exps, {tt: Fraction(-content_sum(omega)) for tt in range(n)})
        q_extra = -sum(om[t - 1] - t + l for l in range(1, d + 1))
        exps = _merge(exps, {tt: Fraction(q_extra) for tt in range(n)})
        conv = _conv_monomial(field, n, sb[s - 1] + m - s, power=m - t + om[t - 1] + d)
        mono = q_monomial(field, n, exps) * conv
        return mono.smul((-1) ** (s + t))

    def coeff_right_parts(s, t):
        exps = {}
        for l in range(1, n * d + 1):
            idx = sb[s - 1] - s + l
            exps = _merge(exps, {idx: -idx * (Fraction(1, n) + 1)})
        exps = _merge(exps, {tt: Fraction(m, n) * size(omega) - d for tt in range(n)})
        exps = _merge(exps, {tt: Fraction(-content_sum(omega)) for tt in range(n)})
        conv = _conv_monomial(field, n, sb[s - 1] + m - s + n * d, power=m + om[t - 1] - t)
        mono = q_monomial(field, n, exps) * conv
        mono = mono.smul((-1) ** (s + t + n * d))
        geo = []
        for l in range(1, n * d + 1):
            geo.append(consecutive_exps(l, sb[s - 1] - s + m + n * d - l + 1))
        return mono, geo

    # choose a global pad from exact minimal degrees of every summand
    drops = [Fraction(0)]
    for s in range(1, m + 1):
        for t in range(1, m + 1):
            base = min(Fraction(sum(k), scale) for k in minors[(s, t)].terms) \
                if minors[(s, t)].terms else Fraction(0)
            cl = coeff_left(s, t)
            if cl.terms:
                dl = base + vdm_min + Fraction(sum(next(iter(cl.terms))), scale)
                drops.append(min(Fraction(0), dl))
            mono, geo = coeff_right_parts(s, t)
            if mono.terms:
                dg = sum(Fraction(sum(g.values())) for g in geo)
                dr = base + vdm_min + Fraction(sum(next(iter(mono.terms))), scale) + dg
                drops.append(min(Fraction(0), dr))
    pad = -min(drops)
    inner = bound + pad + 1

    inv_vdm = FracSeries.one(field, q_variables(n), scale, inner)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ratio = xs[j - 1] * _inv_monomial(xs[i - 1])
            inv_vdm = inv_vdm * _inv_monomial(xs[i - 1])
            inv_vdm = inv_vdm * (1 - ratio).inverse(
                bound=Fraction(inv_vdm.bound_num - min(0, inv_vdm.min_degree_num()),
                               scale))

    lhs = FracSeries.zero(field, q_variables(n), scale, inner)
    rhs = FracSeries.zero(field, q_variables(n), scale, inner)
    for s in range(1, m + 1):
        for t in range(1, m + 1):
            base = minors[(s, t)] * inv_vdm
            lhs = lhs + base * coeff_left(s, t)
            mono, geo = coeff_right_parts(s, t)
            term = base * mono
            for g in geo:
                gm = q_monomial(field, n, g)
                term = term * (-gm) * (1 - gm).inverse(
                    bound=Fraction(term.bound_num - min(0, term.min_degree_num()),
                                   scale))
            rhs = rhs + term
    return case.compare(lhs.truncated(bound), rhs.truncated(bound))


def _merge(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def _inv_monomial(mono):
    key = next(iter(mono.terms))
    return FracSeries(mono.field, mono.variables, mono.scale, mono.bound_num,
                      {tuple(-e for e in key): mono.terms[key].inv()})


# ---------------------------------------------------------------------------
# the symmetric correspondence and its symmetries
# ---------------------------------------------------------------------------

def check_sym_correspondence(tau_p, tau_m, alpha, n, bound, negate_q=False,
                             field=None):
    """Disconnected curve-count series versus the character-weighted lattice
    sum, both as series in (x, u) at the symmetric initial framing."""
    field = field or xu_field(n, negate_q)
    bound = Fraction(bound)
    case = CheckCase(
        "sym-corr",
        {"tau_plus": tau_p, "tau_minus": tau_m, "alpha": alpha, "n": n,
         "bound": bound, "negate_q": negate_q},
    )
    lhs = gw_sym_vertex_ws(tau_p, tau_m, alpha, n, bound, field).value
    rhs = FracSeries.zero(field, xu_variables(n), 1, bound)
    for rp in partitions(sum(tau_p)):
        cp = chi_sym(rp, tau_p)
        if cp == 0:
            continue
        for rm in partitions(sum(tau_m)):
            cm = chi_sym(rm, tau_m)
            if cm == 0:
                continue
            img = dt_sym_vertex_ws_xu(rp, rm, alpha, n, bound, field, negate_q)
            rhs = rhs + img.smul(Fraction(cp * cm, z_sym(tau_p) * z_sym(tau_m)))
    return case.compare(lhs, rhs)


def check_gw_symmetry(tau_p, tau_m, alpha, n, bound, field=None):
    """Leg-exchange symmetry of the curve-count series at the symmetric
    initial framing: swapping legs, signs, and x_i <-> x_(n-i)."""
    field = field or xu_field(n)
    bound = Fraction(bound)
    case = CheckCase(
        "gw-symmetry",
        {"tau_plus": tau_p, "tau_minus": tau_m, "alpha": alpha, "n": n,
         "bound": bound},
    )
    lhs = gw_sym_vertex_ws(tau_p, tau_m, alpha, n, bound, field).value
    swapped = gw_sym_vertex_ws(tau_m, tau_p, (alpha[1], alpha[0]), n, bound,
                               field).value
    xbar = {f"x{i}": f"x{n - i}" for i in range(1, n)}
    return case.compare(lhs, swapped.permute_variables(xbar))


# ---------------------------------------------------------------------------
# the one-gerby-leg reduction
# ---------------------------------------------------------------------------

def check_reduction(tau, mu, d, n, alpha_plus, bound, field=None):
    """Part-transfer identity for the framed lattice vertex at the
    asymmetric initial framing: moving a part of size d from the ordinary
    leg onto the gerby leg multiplies the character-weighted sum by
    (alpha_+)^(d+1) (-1)^d zeta_2n^d.

    In the conventions pinned by the twist and conjugation identities, the
    transferred part acquires twist -d (the raw statement's +d and its sign
    (-1)^(d+1) zeta_2n^(-d) belong to the mirrored convention); the form
    checked here is the one forced by the strip-transfer identity together
    with the verified strip expansions.
    """
    field = field or cyc_field(2 * n)
    bound = Fraction(bound)
    case = CheckCase(
        "reduction",
        {"tau": tau, "mu": mu, "d": d, "n": n, "alpha_plus": alpha_plus,
         "bound": bound},
        note="transferred part twisted by -d; prefactor (-1)^d zeta_2n^(+d)",
    )
    wa = FramingWeights.asymmetric_initial(n)
    alpha = (alpha_plus, 1)
    big = sum(tau) + d
    dmu = n_size(mu)
    taud = tuple(sorted(tau + (d,), reverse=True))
    lhs = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    for rho in partitions(big):
        c = chi_sym(rho, taud)
        if c == 0:
            continue
        for lam in npartitions(n, dmu):
            val = dt_vertex_framed(rho, (), lam, alpha, wa, n, bound, field).value
            lhs = lhs + val.smul(chi_wreath(n, lam, mu, field) * c)
    rhs = FracSeries.zero(field, q_variables(n), 2 * n, bound)
    k = (-d) % n
    mud = mu[:k] + (tuple(sorted(mu[k] + (d,), reverse=True)),) + mu[k + 1:]
    for rho in partitions(big - d):
        c = chi_sym(rho, tau)
        if c == 0:
            continue
        for lam in npartitions(n, dmu + d):
            val = dt_vertex_framed(rho, (), lam, alpha, wa, n, bound, field).value
            rhs = rhs + val.smul(chi_wreath(n, lam, mud, field) * c)
    pref = field.from_rational(alpha_plus ** ((d + 1) % 2) * (-1) ** (d % 2))
    pref = pref * field.root_of_unity(2 * n, d)
    return case.compare(lhs, rhs.smul(pref))


# ---------------------------------------------------------------------------
# module batteries
# ---------------------------------------------------------------------------

def loopschur_cases(n_values=(1, 2, 3), size_max=8, bound=10, jt_bound=None):
    """Three-way agreement of the loop Schur routes on empty-core diagrams."""
    out = []
    jt_bound = jt_bound if jt_bound is not None else bound
    for n in n_values:
        field = cyc_field(2 * n)
        for dsize in range(0, size_max + 1, n):
            for lam_bar in partitions(dsize):
                if not has_empty_core(lam_bar, n):
                    continue
                core, lam = n_quotient(lam_bar, n)
                case = CheckCase(
                    "loopschur",
                    {"n": n, "diagram": lam_bar, "bound": Fraction(bound)},
                )
                a = ssyt_loop_schur(lam, n, bound, field)
                b = hook_content_loop_schur(lam, n, bound, field)
                mism = a.first_mismatch(b)
                if mism is not None:
                    out.append(case.fail(a, b, mism))
                    continue
                m = max(1, length(lam_bar))
                jt = loop_jacobi_trudi(lam, n, m, jt_bound, field)
                c = jt * q_monomial(field, n, hat_monomial_exps(lam_bar, n, sign=-1))
                common = min(Fraction(bound), c.bound)
                out.append(case.compare(b.truncated(common), c.truncated(common)))
    return out


def det_forms_cases(n_values=(1, 2, 3), sigma_bar_max=4, m_max=4, bound=6):
    """The determinantal-form battery across small diagrams."""
    out = []
    for n in n_values:
        field = cyc_field(2 * n)
        m = (m_max // n) * n
        if m == 0:
            continue
        for dsize in range(0, sigma_bar_max + 1, n):
            for sig_bar in partitions(dsize):
                if not has_empty_core(sig_bar, n) or length(sig_bar) > m:
                    continue
                sig = n_quotient(sig_bar, n)[1]
                case = CheckCase(
                    "det-forms",
                    {"n": n, "diagram": sig_bar, "m": m, "bound": Fraction(bound)},
                )
                rep = det_forms_check(sig, n, m, bound, field)
                if rep["status"] != "pass":
                    case.status = "fail"
                    bad = {k: v for k, v in rep["checks"].items()
                           if v["status"] != "pass"}
                    first = next(iter(bad.values()))
                    case.witness = first.get("witness")
                    case.note = "failing sub-identities: " + ", ".join(bad)
                out.append(case)
    return out


def characters_cases(sym_d_max=6, wreath_n_max=3, wreath_d_max=4,
                     strip_mu_max=2, strip_d=1):
    """Orthogonality, convention-pinning identities, and strip expansions."""
    out = []

    # symmetric group column orthogonality
    for d in range(1, sym_d_max + 1):
        case = CheckCase("characters", {"group": f"S_{d}", "check": "orthogonality"})
        ok = True
        parts = partitions(d)
        for t in parts:
            for e in parts:
                s = sum(chi_sym(r, t) * chi_sym(r, e) for r in parts)
                want = z_sym(t) if t == e else 0
                if s != want:
                    ok = False
                    case.status = "fail"
                    case.witness = {"classes": [list(t), list(e)],
                                    "lhs": str(s), "rhs": str(want)}
                    break
            if not ok:
                break
        out.append(case)

    for n in range(2, wreath_n_max + 1):
        field = cyc_field(2 * n)
        for d in range(1, wreath_d_max + 1):
            labels = npartitions(n, d)
            case = CheckCase(
                "characters",
                {"group": f"Z_{n} wr S_{d}", "check": "orthogonality"},
            )
            ok = True
            for a in labels:
                for b in labels:
                    tot = field.zero
                    for mu in labels:
                        tot = tot + (chi_wreath(n, a, mu, field)
                                     * chi_wreath(n, b, mu, field).conj()
                                     * Fraction(1, z_wreath(n, mu)))
                    want = field.one if a == b else field.zero
                    if tot != want:
                        ok = False
                        case.status = "fail"
                        case.witness = {"irreps": [repr(a), repr(b)],
                                        "lhs": repr(tot), "rhs": repr(want)}
                        break
                if not ok:
                    break
            out.append(case)

            # conjugation pinning: transposed diagram against negated class
            case = CheckCase(
                "characters",
                {"group": f"Z_{n} wr S_{d}", "check": "conjugation-pinning"},
            )
            for lam in labels:
                lamt = npartition_transpose(n, lam)
                for mu in labels:
                    lhs = chi_wreath(n, lamt, negate(mu), field)
                    wt = field.root_of_unity(n, -sum(i * len(mu[i]) for i in range(n)))
                    rhs = (wt * chi_wreath(n, lam, mu, field)
                           * ((-1) ** (n_size(mu) + n_length(mu))))
                    if lhs != rhs:
                        case.status = "fail"
                        case.witness = {"irrep": repr(lam), "class": repr(mu),
                                        "lhs": repr(lhs), "rhs": repr(rhs)}
                        break
                if case.status == "fail":
                    break
            out.append(case)

            # twist pinning: re-twisted classes against conjugated values
            case = CheckCase(
                "characters",
                {"group": f"Z_{n} wr S_{d}", "check": "twist-pinning"},
            )
            for lam in labels:
                tw = sum(i * size(lam[i]) for i in range(n))
                for mu in labels:
                    base = chi_wreath(n, lam, mu, field).conj()
                    for k in range(n):
                        lhs = chi_wreath(n, lam, twist_class(n, mu, k), field)
                        rhs = field.root_of_unity(n, -k * tw) * base
                        if lhs != rhs:
                            case.status = "fail"
                            case.witness = {"irrep": repr(lam), "class": repr(mu),
                                            "k": k, "lhs": repr(lhs),
                                            "rhs": repr(rhs)}
                            break
                    if case.status == "fail":
                        break
                if case.status == "fail":
                    break
            out.append(case)

    # wreath strip expansion
    for n in range(2, wreath_n_max + 1):
        field = cyc_field(2 * n)
        for dmu in range(0, strip_mu_max + 1):
            for mu in npartitions(n, dmu):
                for lam in npartitions(n, dmu + strip_d):
                    case = CheckCase(
                        "characters",
                        {"group": f"Z_{n} wr S_{dmu + strip_d}",
                         "check": "strip-expansion", "mu": mu, "lam": lam,
                         "d": strip_d},
                    )
                    if not _strip_expansion_holds(n, lam, mu, strip_d, field):
                        case.status = "fail"
                        case.witness = {"irrep": repr(lam), "class": repr(mu)}
                    out.append(case)
    return out


def _strip_expansion_holds(n, lam, mu, d, field):
    lam_bar = n_quotient_inverse(lam, n)
    w_lam = field.one
    for k in range(n):
        w_lam = w_lam * field.root_of_unity(n, k * size(lam[k]))
    lhs = (w_lam * chi_sym(lam_bar, (n,) * n_size(lam))
           * chi_wreath(n, lam, add_part(n, mu, d), field)
           * Fraction(1, dim_wreath(n, lam)))
    rhs = field.zero
    for sig in npartitions(n, n_size(lam) - d):
        sig_bar = n_quotient_inverse(sig, n)
        h = strip_height(lam_bar, sig_bar)
        if h is None:
            continue
        w_sig = field.one
        for k in range(n):
            w_sig = w_sig * field.root_of_unity(n, k * size(sig[k]))
        rhs = rhs + ((-1) ** h * w_sig
                     * chi_sym(sig_bar, (n,) * n_size(sig))
                     * chi_wreath(n, sig, mu, field)
                     * Fraction(1, dim_wreath(n, sig)))
    return lhs == rhs


def hurwitz_cases(n_max=3, d_max=3, central_n_max=4, central_size_max=3):
    """Orthogonality and composition of the wreath cover series, plus the
    central-character exponential identity."""
    out = []
    for n in range(1, n_max + 1):
        field = xu_field(n)
        for d in range(0, d_max + 1):
            labels = npartitions(n, d)
            case = CheckCase("hurwitz", {"n": n, "d": d, "check": "orthogonality"})
            for nu in labels:
                for mu in labels:
                    val = hurwitz_gen(nu, negate(mu), 1, n, 0, field)
                    c = val.constant_term()
                    want = (field.from_rational(Fraction(1, z_wreath(n, mu)))
                            if nu == mu else field.zero)
                    if c != want or not all(sum(k) == 0 for k in val.terms):
                        case.status = "fail"
                        case.witness = {"nu": repr(nu), "mu": repr(mu),
                                        "lhs": repr(c), "rhs": repr(want)}
                if case.status == "fail":
                    break
            out.append(case)
        # composition in doubled variables, desk scale
        for d in range(0, min(d_max, 2) + 1):
            out.append(_hurwitz_composition_case(n, d))
    for n in range(1, central_n_max + 1):
        for d in range(0, central_size_max + 1):
            for lam in npartitions(n, d):
                case = CheckCase("central-lemma", {"n": n, "lam": lam})
                if not central_lemma_check(lam, n):
                    case.status = "fail"
                out.append(case)
    return out


def _hurwitz_composition_case(n, d, bound=2):
    """H(x+y, u+v) = sum_sigma H_(nu,sigma)(x,u) z_sigma H_(-sigma,mu)(y,v)."""
    field = xu_field(n)
    case = CheckCase("hurwitz", {"n": n, "d": d, "check": "composition",
                                 "bound": Fraction(bound)})
    vs = ("u", "v") + tuple(f"x{i}" for i in range(1, n)) + \
        tuple(f"y{i}" for i in range(1, n))
    iu = field.imaginary_unit()

    def lin(names, coeff):
        s = FracSeries.zero(field, vs, 1, bound)
        for nm in names:
            s = s + FracSeries.monomial(field, vs, 1, {nm: 1}, coeff=coeff)
        return s

    u_both = lin(("u", "v"), iu)
    x_both = [None] + [lin((f"x{i}", f"y{i}"), field.root_of_unity(2 * n, -i))
                       for i in range(1, n)]
    u_only = lin(("u",), iu)
    x_only = [None] + [lin((f"x{i}",), field.root_of_unity(2 * n, -i))
                       for i in range(1, n)]
    v_only = lin(("v",), iu)
    y_only = [None] + [lin((f"y{i}",), field.root_of_unity(2 * n, -i))
                       for i in range(1, n)]
    labels = npartitions(n, d)
    for nu in labels:
        for mu in labels:
            lhs = hurwitz_bullet(nu, mu, n, bound, field, u_both, x_both)
            rhs = FracSeries.zero(field, vs, 1, bound)
            for sig in labels:
                a = hurwitz_bullet(nu, sig, n, bound, field, u_only, x_only)
                b = hurwitz_bullet(negate(sig), mu, n, bound, field, v_only, y_only)
                rhs = rhs + (a * b).smul(z_wreath(n, sig))
            mism = lhs.first_mismatch(rhs)
            if mism is not None:
                return case.fail(lhs, rhs, mism)
    return case


def framing_cases(rho_max=3, lam_max=2, bound=4):
    """Framing exponentials against images of the framing monomials, at
    integer-exponent weight choices."""
    out = []

    # choice 1: n = 2, w = (1, 1, -2): both symmetric exponents are -1
    n = 2
    field = xu_field(n)
    w = FramingWeights(1, 1, -2, n)
    for sp in range(0, rho_max + 1):
        for rp in partitions(sp):
            for sm in range(0, rho_max + 1):
                for rm in partitions(sm):
                    for alpha in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                        case = CheckCase(
                            "framing",
                            {"kind": "symmetric", "n": n, "w": (1, 1, -2),
                             "rho_plus": rp, "rho_minus": rm, "alpha": alpha},
                        )
                        lhs = framing_prefactor("symmetric", (rp, rm), alpha,
                                                w, n, bound, field)
                        e_p = -content_sum(rp if alpha[0] == 1 else transpose(rp))
                        e_m = -content_sum(rm if alpha[1] == 1 else transpose(rm))
                        exps = {t: e_p * Fraction(w.w3, n * w.w1)
                                + e_m * Fraction(w.w3, n * w.w2)
                                for t in range(n)}
                        rhs = monomial_image(n, exps, bound, field=field)
                        out.append(case.compare(lhs, rhs))

    # choice 2: one ordinary leg only, integer w3/(n w1), n = 3
    n = 3
    field = xu_field(n)
    w = FramingWeights(Fraction(1, n), Fraction(-1, n) - 2, 2, n)
    for sp in range(0, rho_max + 1):
        for rp in partitions(sp):
            for ap in (1, -1):
                case = CheckCase(
                    "framing",
                    {"kind": "symmetric-one-leg", "n": n,
                     "w": "(1/3, -19/3... w3=2)", "rho_plus": rp, "alpha": ap},
                )
                lhs = framing_prefactor("symmetric", (rp, ()), (ap, 1), w, n,
                                        bound, field)
                e_p = -content_sum(rp if ap == 1 else transpose(rp))
                exps = {t: e_p * Fraction(w.w3, n * w.w1) for t in range(n)}
                rhs = monomial_image(n, exps, bound, field=field)
                out.append(case.compare(lhs, rhs))

    # choice 3: the gerby-leg pair at n = 3, w = (1, 2, -3):
    # w3/(n w1) = n w1 / w3 = -1, so both displayed exponents are -2
    n = 3
    field = xu_field(n)
    w = FramingWeights(1, 2, -3, n)
    for sp in range(0, rho_max + 1):
        for rp in partitions(sp):
            for dl in range(0, lam_max + 1):
                for lam in npartitions(n, dl):
                    for am in (1, -1):
                        case = CheckCase(
                            "framing",
                            {"kind": "asymmetric", "n": n, "w": (1, 2, -3),
                             "rho": rp, "lam": lam, "alpha_minus": am},
                        )
                        alpha = (1, am)
                        lhs = framing_prefactor("asymmetric", (rp, lam), alpha,
                                                w, n, bound, field)
                        rho_eff = rp if am == 1 else transpose(rp)
                        t_rho = Fraction(w.w3, n * w.w1) - 1
                        exps = {t: -content_sum(rho_eff) * t_rho for t in range(n)}
                        lam_bar = n_quotient_inverse(lam, n)
                        t_lam = Fraction(n * w.w1, w.w3) - 1
                        exps = _merge(exps, {k: v * t_lam for k, v in
                                             hat_monomial_exps(lam_bar, n).items()})
                        e_unit = ((n + 1) * (-n_size(lam))
                                  - 2 * sum(k * size(lam[k]) for k in range(n)))
                        unit = field.root_of_unity(2 * n, e_unit) ** int(t_lam) \
                            if t_lam.denominator == 1 else None
                        rhs = monomial_image(n, exps, bound, field=field).smul(unit)
                        out.append(case.compare(lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

def default_config():
    """Desk-scale sweep used by ``verify all``."""
    return {
        "checks": [
            {"identity": "loopschur", "n": [1, 2, 3], "size_max": 6, "bound": 8},
            {"identity": "det-forms", "n": [1, 2, 3], "sigma_bar_max": 4,
             "m_max": 4, "bound": 6},
            {"identity": "characters", "sym_d_max": 5, "wreath_n_max": 3,
             "wreath_d_max": 3},
            {"identity": "thm-comb", "n": [1, 2, 3], "d": [1], "omega_max": 2,
             "sigma_max": 1, "bound": 5},
            {"identity": "combident", "n": [1, 2], "d": [1], "omega_max": 1,
             "sigma_max": 1, "m_max": 4, "bound": 3},
            {"identity": "sym-corr", "n": [1, 2], "tau_max": 2, "bound": 4},
            {"identity": "gw-symmetry", "n": [2, 3], "tau_max": 2, "bound": 4},
            {"identity": "reduction", "n": [2, 3], "d": [1], "tau_max": 1,
             "mu_max": 1, "bound": 4},
            {"identity": "hurwitz", "n_max": 2, "d_max": 2},
            {"identity": "framing", "rho_max": 2, "lam_max": 1, "bound": 3},
        ]
    }


def _sweep_cases(spec):
    ident = spec["identity"]
    if ident == "loopschur":
        return loopschur_cases(tuple(spec.get("n", (1, 2, 3))),
                               spec.get("size_max", 6), spec.get("bound", 8))
    if ident == "det-forms":
        return det_forms_cases(tuple(spec.get("n", (1, 2, 3))),
                               spec.get("sigma_bar_max", 4),
                               spec.get("m_max", 4), spec.get("bound", 6))
    if ident == "characters":
        return characters_cases(spec.get("sym_d_max", 5),
                                spec.get("wreath_n_max", 3),
                                spec.get("wreath_d_max", 3),
                                spec.get("strip_mu_max", 2),
                                spec.get("strip_d", 1))
    if ident == "hurwitz":
        return hurwitz_cases(spec.get("n_max", 2), spec.get("d_max", 2),
                             spec.get("central_n_max", 3),
                             spec.get("central_size_max", 2))
    if ident == "framing":
        return framing_cases(spec.get("rho_max", 2), spec.get("lam_max", 1),
                             spec.get("bound", 3))
    out = []
    if ident == "thm-comb":
        for n in spec.get("n", (1, 2, 3)):
            for d in spec.get("d", (1,)):
                for so in range(spec.get("omega_max", 2) + 1):
                    for omega in partitions(so):
                        for ss in range(spec.get("sigma_max", 1) + 1):
                            for sigma in npartitions(n, ss):
                                out.append(check_thm_comb(
                                    omega, sigma, d, n, spec.get("bound", 5)))
        return out
    if ident == "combident":
        for n in spec.get("n", (1, 2)):
            m = (spec.get("m_max", 4) // n) * n
            if m == 0:
                continue
            for d in spec.get("d", (1,)):
                for so in range(spec.get("omega_max", 1) + 1):
                    for omega in partitions(so):
                        for ss in range(spec.get("sigma_max", 1) + 1):
                            for sigma in npartitions(n, ss):
                                if length(n_quotient_inverse(sigma, n)) + 1 > m \
                                        or length(omega) + 1 > m:
                                    continue
                                out.append(check_combident_forms(
                                    omega, sigma, d, n, m, spec.get("bound", 3)))
        return out
    if ident == "sym-corr":
        for n in spec.get("n", (1, 2)):
            for sp in range(spec.get("tau_max", 2) + 1):
                for tp in partitions(sp):
                    for sm in range(spec.get("tau_max", 2) + 1):
                        for tm in partitions(sm):
                            for alpha in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                                out.append(check_sym_correspondence(
                                    tp, tm, alpha, n, spec.get("bound", 4),
                                    spec.get("negate_q", False)))
        return out
    if ident == "gw-symmetry":
        for n in spec.get("n", (2, 3)):
            for sp in range(spec.get("tau_max", 2) + 1):
                for tp in partitions(sp):
                    for sm in range(spec.get("tau_max", 2) + 1):
                        for tm in partitions(sm):
                            for alpha in ((1, 1), (1, -1)):
                                out.append(check_gw_symmetry(
                                    tp, tm, alpha, n, spec.get("bound", 4)))
        return out
    if ident == "reduction":
        for n in spec.get("n", (2,)):
            for d in spec.get("d", (1,)):
                for st in range(spec.get("tau_max", 1) + 1):
                    for tau in partitions(st):
                        for sm in range(spec.get("mu_max", 1) + 1):
                            for mu in npartitions(n, sm):
                                for ap in (1, -1):
                                    out.append(check_reduction(
                                        tau, mu, d, n, ap, spec.get("bound", 4)))
        return out
    raise ValueError(f"unknown identity {ident!r}")


def run_suite(config):
    """Run a configured sweep; returns the machine-readable report dict.

    The report is deterministic and byte-stable: case order follows the
    configuration, and no timing or environment data is embedded.
    """
    cases = []
    for spec in config.get("checks", []):
        cases.extend(_sweep_cases(spec))
    passed = sum(1 for c in cases if c.status == "pass")
    failed = sum(1 for c in cases if c.status == "fail")
    errors = sum(1 for c in cases if c.status not in ("pass", "fail"))
    return {
        "cases": [c.to_json_dict() for c in cases],
        "summary": {
            "total": len(cases),
            "passed": passed,
            "failed": failed,
            "errors": errors,
            "status": "pass" if passed == len(cases) else "fail",
        },
    }


def report_to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
