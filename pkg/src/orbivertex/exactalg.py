"""Exact coefficient arithmetic.

Two layers:

* ``CycField`` / ``Cyc`` -- the field Q(zeta_N), represented as residues
  modulo the N-th cyclotomic polynomial with ``fractions.Fraction``
  coefficients.  All downstream algebra is exact; there is no floating
  point anywhere in this package.

* ``FracSeries`` -- truncated multivariate series whose exponents are
  rationals stored as integer numerators at a fixed per-series ``scale``
  (so exponent denominators always divide the scale).  Negative exponents
  are permitted (bounded below); they occur transiently in the vertex
  formulas.  Every series carries a truncation bound and binary operations
  propagate the tightest bound that remains exact, so under-truncation is
  impossible by construction.  Exact values (monomials, polynomials built
  from them) carry an effectively infinite bound.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

__all__ = [
    "CycField",
    "Cyc",
    "FracSeries",
    "cyc_field",
    "cyc_arith",
    "series_arith",
    "series_exp",
    "series_log",
    "series_substitute",
    "EXACT_BOUND",
]

# Sentinel bound (at scale) for exactly-known series; min() against any real
# bound keeps the real one.
EXACT_BOUND = 10 ** 12


# ---------------------------------------------------------------------------
# dense polynomial helpers over Q (lists, lowest degree first)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim(out)


def _poly_divmod(num, den):
    num = list(num)
    q = [0] * max(0, len(num) - len(den) + 1)
    inv_lead = Fraction(1, 1) / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        if c == 0:
            q[k] = 0
            continue
        q[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    return _poly_trim(q), _poly_trim(num)


@cache
def _cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial (exact, monic)."""
    p = [-1] + [0] * (n - 1) + [1]          # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(p, list(_cyclotomic_poly(d)))
            assert not r
            p = q
    return tuple(Fraction(c) for c in p)


def _euler_phi(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            out *= p - 1
            m //= p
            while m % p == 0:
                out *= p
                m //= p
        p += 1
    if m > 1:
        out *= m - 1
    return out


# ---------------------------------------------------------------------------
# cyclotomic field
# ---------------------------------------------------------------------------

class CycField:
    """The field Q(zeta_N), zeta_N = exp(2*pi*i/N).

    Elements are residues mod the N-th cyclotomic polynomial: vectors of
    length phi(N) in the basis 1, zeta, ..., zeta^(phi(N)-1).
    """

    def __init__(self, order):
        if order < 1:
            raise ValueError("field order must be positive")
        self.order = order
        self.phi = _euler_phi(order)
        self.modulus = _cyclotomic_poly(order)
        # x^k reduced mod the cyclotomic polynomial, for k up to
        # max(order, 2*phi - 1); enough for products and zeta powers.
        top = max(order, 2 * self.phi - 1)
        table = []
        for k in range(top + 1):
            if k < self.phi:
                row = [Fraction(0)] * self.phi
                row[k] = Fraction(1)
            else:
                prev = table[k - 1]
                row = [Fraction(0)] + list(prev[: self.phi - 1])
                lead = prev[self.phi - 1]
                if lead:
                    for j in range(self.phi):
                        row[j] -= lead * self.modulus[j]
            table.append(tuple(row))
        self._pow = table
        self.zero = Cyc(self, (Fraction(0),) * self.phi)
        one = [Fraction(0)] * self.phi
        one[0] = Fraction(1)
        self.one = Cyc(self, tuple(one))

    def __repr__(self):
        return f"CycField(order={self.order})"

    def __eq__(self, other):
        return isinstance(other, CycField) and other.order == self.order

    def __hash__(self):
        return hash(("CycField", self.order))

    def from_rational(self, q):
        q = Fraction(q)
        c = [Fraction(0)] * self.phi
        c[0] = q
        return Cyc(self, tuple(c))

    def zeta(self, power=1):
        """zeta_N ** power (any integer power, reduced mod N)."""
        return Cyc(self, self._pow[power % self.order])

    def root_of_unity(self, m, power=1):
        """zeta_m ** power, for m dividing the field order."""
        if self.order % m != 0:
            raise ValueError(f"zeta_{m} does not lie in Q(zeta_{self.order})")
        return self.zeta((self.order // m) * power)

    def imaginary_unit(self):
        return self.root_of_unity(4)

    def _reduce(self, conv):
        out = list(conv[: self.phi]) + [Fraction(0)] * max(0, self.phi - len(conv))
        for k in range(self.phi, len(conv)):
            ck = conv[k]
            if ck:
                row = self._pow[k]
                for j in range(self.phi):
                    out[j] += ck * row[j]
        return tuple(out)

    def embed(self, elt):
        """Lift an element of a subfield Q(zeta_m), m | N, into this field."""
        if elt.field == self:
            return elt if elt.field is self else Cyc(self, elt.c)
        m = elt.field.order
        if self.order % m != 0:
            raise ValueError("no canonical embedding between these fields")
        step = self.order // m
        acc = [Fraction(0)] * self.phi
        for j, cj in enumerate(elt.c):
            if cj:
                row = self._pow[(j * step) % self.order]
                for t in range(self.phi):
                    acc[t] += cj * row[t]
        return Cyc(self, tuple(acc))


@cache
def cyc_field(order):
    return CycField(order)


class Cyc:
    """An element of Q(zeta_N).  Immutable."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs):
        self.field = field
        self.c = coeffs

    # -- basics ------------------------------------------------------------

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.order != self.field.order:
                raise ValueError("cyclotomic elements of different order")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash((self.field.order, self.c))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        phi = self.field.phi
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, ai in enumerate(self.c):
            if ai:
                for j, bj in enumerate(other.c):
                    if bj:
                        conv[i + j] += ai * bj
        return Cyc(self.field, self.field._reduce(conv))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in coefficient field")
        r0, r1 = list(self.field.modulus), _poly_trim(list(self.c))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = r1[0]
        inv = [ci / lead for ci in s1]
        return Cyc(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.field.from_rational(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        """The involution zeta |-> zeta^(-1) (complex conjugation)."""
        f = self.field
        acc = [Fraction(0)] * f.phi
        for j, cj in enumerate(self.c):
            if cj:
                row = f._pow[(-j) % f.order]
                for t in range(f.phi):
                    acc[t] += cj * row[t]
        return Cyc(f, tuple(acc))

    def zeta_log(self):
        """If self is a power of zeta_N, return the exponent; else None."""
        for k in range(self.field.order):
            if self.c == self.field._pow[k]:
                return k
        return None

    def __repr__(self):
        f = self.field
        bits = []
        for j, cj in enumerate(self.c):
            if cj == 0:
                continue
            base = "1" if j == 0 else (f"z{f.order}" if j == 1 else f"z{f.order}^{j}")
            if j == 0:
                bits.append(f"{cj}")
            elif cj == 1:
                bits.append(base)
            else:
                bits.append(f"{cj}*{base}")
        return " + ".join(bits) if bits else "0"


def cyc_arith(a, b, op):
    """Dispatch wrapper: op in {"add", "mul", "inv", "conj"}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

def _num(bound, scale):
    if bound is None:
        return EXACT_BOUND
    num = Fraction(bound) * scale
    if num.denominator != 1:
        raise ValueError(f"bound {bound} not representable at scale {scale}")
    return int(num)


class FracSeries:
    """Truncated series in named variables with fractional exponents.

    ``terms`` maps exponent tuples (integer numerators at ``scale``, one per
    variable) to nonzero ``Cyc`` coefficients.  The total degree of a term is
    ``sum(exps)/scale``.  Invariant: the stored terms agree with the exact
    value on every monomial of total degree <= ``bound``.
    """

    __slots__ = ("field", "variables", "scale", "bound_num", "terms")

    def __init__(self, field, variables, scale, bound_num, terms):
        self.field = field
        self.variables = variables
        self.scale = scale
        self.bound_num = bound_num
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field, variables, scale, bound=None):
        return cls(field, tuple(variables), scale, _num(bound, scale), {})

    @classmethod
    def constant(cls, field, variables, scale, coeff, bound=None):
        s = cls.zero(field, variables, scale, bound)
        if not isinstance(coeff, Cyc):
            coeff = field.from_rational(coeff)
        if coeff:
            s.terms[(0,) * len(s.variables)] = coeff
        return s

    @classmethod
    def one(cls, field, variables, scale, bound=None):
        return cls.constant(field, variables, scale, 1, bound)

    @classmethod
    def monomial(cls, field, variables, scale, exps, coeff=1, bound=None):
        """exps: dict variable -> Fraction/int exponent (must fit the scale)."""
        s = cls.zero(field, variables, scale, bound)
        key = [0] * len(s.variables)
        for v, e in exps.items():
            num = Fraction(e) * scale
            if num.denominator != 1:
                raise ValueError(f"exponent {e} of {v} not representable at scale {scale}")
            key[s.variables.index(v)] = int(num)
        if not isinstance(coeff, Cyc):
            coeff = field.from_rational(coeff)
        if coeff and sum(key) <= s.bound_num:
            s.terms[tuple(key)] = coeff
        return s

    # -- inspection -----------------------------------------------------------

    @property
    def bound(self):
        return Fraction(self.bound_num, self.scale)

    def is_exact(self):
        return self.bound_num >= EXACT_BOUND // 2

    def min_degree_num(self):
        """Lower bound (at scale) on the degree of the exact value."""
        if self.terms:
            return min(sum(e) for e in self.terms)
        return self.bound_num + 1

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        """Coefficient of the monomial given by {variable: exponent}."""
        key = [0] * len(self.variables)
        for v, e in exps.items():
            num = Fraction(e) * self.scale
            if num.denominator != 1:
                return self.field.zero
            key[self.variables.index(v)] = int(num)
        return self.terms.get(tuple(key), self.field.zero)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), self.field.zero)

    def _check_compatible(self, other):
        if (
            self.field != other.field
            or self.variables != other.variables
            or self.scale != other.scale
        ):
            raise ValueError("incompatible gradings")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = FracSeries.constant(self.field, self.variables, self.scale, other)
        self._check_compatible(other)
        bound = min(self.bound_num, other.bound_num)
        terms = {k: v for k, v in self.terms.items() if sum(k) <= bound}
        for k, v in other.terms.items():
            if sum(k) > bound:
                continue
            w = terms.get(k)
            s = v if w is None else v + w
            if s:
                terms[k] = s
            elif w is not None:
                del terms[k]
        return FracSeries(self.field, self.variables, self.scale, bound, terms)

    __radd__ = __add__

    def __neg__(self):
        return FracSeries(
            self.field, self.variables, self.scale, self.bound_num,
            {k: -v for k, v in self.terms.items()},
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = FracSeries.constant(self.field, self.variables, self.scale, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def smul(self, c):
        """Scalar multiple (c may be int, Fraction or Cyc)."""
        if not isinstance(c, Cyc):
            c = self.field.from_rational(c)
        if not c:
            return FracSeries(self.field, self.variables, self.scale, self.bound_num, {})
        return FracSeries(
            self.field, self.variables, self.scale, self.bound_num,
            {k: c * v for k, v in self.terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return self.smul(other)
        self._check_compatible(other)
        bound = min(
            self.bound_num + other.min_degree_num(),
            other.bound_num + self.min_degree_num(),
            EXACT_BOUND,
        )
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        if len(a) == 1:
            ((ka, va),) = a.items()
            da = sum(ka)
            for kb, vb in b.items():
                if da + sum(kb) > bound:
                    continue
                s = va * vb
                if s:
                    terms[tuple(x + y for x, y in zip(ka, kb))] = s
            return FracSeries(self.field, self.variables, self.scale, bound, terms)
        # bucket by total degree so pairs beyond the bound are never visited
        buckets_a, buckets_b = {}, {}
        for k, v in a.items():
            buckets_a.setdefault(sum(k), []).append((k, v))
        for k, v in b.items():
            buckets_b.setdefault(sum(k), []).append((k, v))
        degs_b = sorted(buckets_b)
        for da, items_a in sorted(buckets_a.items()):
            for db in degs_b:
                if da + db > bound:
                    break
                items_b = buckets_b[db]
                for ka, va in items_a:
                    for kb, vb in items_b:
                        k = tuple(x + y for x, y in zip(ka, kb))
                        w = terms.get(k)
                        s = va * vb if w is None else w + va * vb
                        if s:
                            terms[k] = s
                        elif w is not None:
                            del terms[k]
        return FracSeries(self.field, self.variables, self.scale, bound, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = FracSeries.one(self.field, self.variables, self.scale)
        base, kk = self, k
        while kk:
            if kk & 1:
                out = out * base
            kk >>= 1
            if kk:
                base = base * base
        return out

    def truncated(self, bound):
        b = _num(bound, self.scale)
        if b > self.bound_num:
            raise ValueError("cannot raise a truncation bound")
        return FracSeries(
            self.field, self.variables, self.scale, b,
            {k: v for k, v in self.terms.items() if sum(k) <= b},
        )

    def inverse(self, bound=None):
        """Inverse, provided the minimal-degree part is a single monomial.

        Writes self = m*(1 + T) with deg T > 0 and expands geometrically.
        Exactly-known series require an explicit ``bound``.
        """
        s = self if bound is None else self.truncated(bound)
        if not s.terms:
            raise ZeroDivisionError("inverting a zero series")
        mdeg = s.min_degree_num()
        low = [k for k in s.terms if sum(k) == mdeg]
        if len(low) != 1:
            raise ValueError("lowest-degree part is not a single monomial; cannot invert")
        kmin = low[0]
        minv = FracSeries(
            s.field, s.variables, s.scale, EXACT_BOUND,
            {tuple(-e for e in kmin): s.terms[kmin].inv()},
        )
        t = (s * minv) - 1
        if not t.is_zero() and t.is_exact():
            raise ValueError("inverse of an exact non-monomial series requires a bound")
        out = FracSeries.one(s.field, s.variables, s.scale, t.bound)
        if not t.is_zero():
            tmin = t.min_degree_num()
            power = FracSeries.one(s.field, s.variables, s.scale, t.bound)
            k = 1
            while k * tmin <= t.bound_num:
                power = power * t
                out = out + (power if k % 2 == 0 else -power)
                k += 1
        return out * minv

    # -- transcendental (power-series) operations ------------------------------

    def exp(self, bound=None):
        s = self if bound is None else self.truncated(bound)
        c = s.constant_term()
        if c:
            raise ValueError(f"exp requires zero constant term, got {c!r}")
        if s.terms and s.min_degree_num() <= 0:
            raise ValueError("exp requires strictly positive valuation")
        if s.terms and s.is_exact():
            raise ValueError("exp of an exact series requires a bound")
        out = FracSeries.one(s.field, s.variables, s.scale, s.bound)
        power = FracSeries.one(s.field, s.variables, s.scale, s.bound)
        k, fact = 1, 1
        mdeg = s.min_degree_num()
        while s.terms and k * mdeg <= s.bound_num:
            power = power * s
            fact *= k
            out = out + power.smul(Fraction(1, fact))
            k += 1
        return out

    def log(self, bound=None):
        s = self if bound is None else self.truncated(bound)
        c = s.constant_term()
        if c != s.field.one:
            raise ValueError(f"log requires constant term 1, got {c!r}")
        t = s - 1
        out = FracSeries.zero(s.field, s.variables, s.scale, s.bound)
        if t.is_zero():
            return out
        if t.is_exact():
            raise ValueError("log of an exact series requires a bound")
        mdeg = t.min_degree_num()
        if mdeg <= 0:
            raise ValueError("log requires the non-constant part to have positive degree")
        power = FracSeries.one(s.field, s.variables, s.scale, t.bound)
        k = 1
        while k * mdeg <= t.bound_num:
            power = power * t
            out = out + power.smul(Fraction((-1) ** (k + 1), k))
            k += 1
        return out

    # -- structure maps ---------------------------------------------------------

    def map_coefficients(self, fn):
        terms = {}
        for k, v in self.terms.items():
            w = fn(v)
            if w:
                terms[k] = w
        return FracSeries(self.field, self.variables, self.scale, self.bound_num, terms)

    def permute_variables(self, mapping):
        """Relabel variables, e.g. the bar involution q_i <-> q_(n-i)."""
        perm = [self.variables.index(mapping.get(v, v)) for v in self.variables]
        terms = {}
        for k, v in self.terms.items():
            nk = [0] * len(k)
            for src, dst in enumerate(perm):
                nk[dst] = k[src]
            terms[tuple(nk)] = v
        return FracSeries(self.field, self.variables, self.scale, self.bound_num, terms)

    def embed(self, field):
        """Push coefficients into a larger cyclotomic field."""
        if field == self.field:
            return self
        return FracSeries(
            field, self.variables, self.scale, self.bound_num,
            {k: field.embed(v) for k, v in self.terms.items()},
        )

    # -- substitution -------------------------------------------------------------

    def substitute(self, bindings):
        """Substitute variables via ``bindings``: variable -> FracSeries.

        Images must share one variable set/scale/field.  A variable occurring
        with only nonnegative integer exponents may map to any series; a
        variable with fractional or negative exponents must map to an
        exponential monomial c*exp(L) with c a root of unity, so rational
        powers are defined by scaling the exponent.
        """
        if not bindings:
            raise ValueError("substitute requires at least one binding")
        missing = set(self.variables) - set(bindings)
        used = [v for i, v in enumerate(self.variables) if any(k[i] for k in self.terms)]
        if any(v in missing for v in used):
            raise ValueError(f"no binding for variable(s) {sorted(set(used) & missing)}")
        images = [bindings.get(v) for v in self.variables]
        template = next(im for im in images if im is not None)
        out = FracSeries.zero(template.field, template.variables, template.scale,
                              template.bound)
        decomposed = {}

        def image_power(i, num):
            im = images[i]
            if num % self.scale == 0 and num >= 0:
                return im ** (num // self.scale)
            if i not in decomposed:
                c = im.constant_term()
                k = c.zeta_log() if c else None
                if k is None:
                    raise ValueError("branch-ambiguous substitution")
                decomposed[i] = (k, im.smul(c.inv()).log())
            k, logpart = decomposed[i]
            e = Fraction(num, self.scale)
            ke = k * e
            if ke.denominator != 1:
                raise ValueError("branch-ambiguous substitution")
            unit = template.field.zeta(int(ke))
            return logpart.smul(e).exp().smul(unit)

        for key, coeff in self.terms.items():
            term = FracSeries.constant(
                template.field, template.variables, template.scale, coeff
            )
            for i, num in enumerate(key):
                if num:
                    term = term * image_power(i, num)
            out = out + term
        return out

    # -- comparison and reporting ---------------------------------------------

    def first_mismatch(self, other):
        """First differing monomial (by degree, then exponents) up to the
        common bound, or None if the truncations agree."""
        self._check_compatible(other)
        bound = min(self.bound_num, other.bound_num)
        keys = {k for k in self.terms if sum(k) <= bound}
        keys |= {k for k in other.terms if sum(k) <= bound}
        for k in sorted(keys, key=lambda k: (sum(k), k)):
            a = self.terms.get(k, self.field.zero)
            b = other.terms.get(k, self.field.zero)
            if a != b:
                return (k, a, b)
        return None

    def agrees_with(self, other):
        return self.first_mismatch(other) is None

    def monomial_str(self, key):
        bits = []
        for v, e in zip(self.variables, key):
            if e:
                ex = Fraction(e, self.scale)
                bits.append(v if ex == 1 else f"{v}^{ex}")
        return "*".join(bits) if bits else "1"

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        body = " + ".join(f"({v})*{self.monomial_str(k)}" for k, v in items[:8])
        more = "" if len(items) <= 8 else f" + ... ({len(items)} terms)"
        b = "exact" if self.is_exact() else str(self.bound)
        return f"<series mod deg>{b}: {body or '0'}{more}>"

    # -- serialization -----------------------------------------------------------

    def normalized(self):
        """Assert all exponents are nonnegative and return self.

        Exported q-side series must be normalized: the global-monomial
        cancellations in the assembled vertex formulas guarantee nonnegative
        exponents, so a violation here flags an upstream bug.
        """
        for k in self.terms:
            if any(e < 0 for e in k):
                raise ValueError(
                    f"unnormalized series: negative exponent in {self.monomial_str(k)}"
                )
        return self

    def to_json_dict(self):
        terms = []
        for k in sorted(self.terms, key=lambda k: (sum(k), k)):
            coeff = self.terms[k]
            terms.append({
                "exps": {v: e for v, e in zip(self.variables, k) if e},
                "coeff": [f"{c.numerator}/{c.denominator}" for c in coeff.c],
            })
        return {
            "variables": list(self.variables),
            "scale": self.scale,
            "order": self.field.order,
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "terms": terms,
        }

    @classmethod
    def from_json_dict(cls, data):
        field = cyc_field(data["order"])
        variables = tuple(data["variables"])
        scale = data["scale"]
        bound = Fraction(data["bound"])
        s = cls.zero(field, variables, scale, bound)
        for t in data["terms"]:
            key = tuple(t["exps"].get(v, 0) for v in variables)
            coeff = Cyc(field, tuple(Fraction(c) for c in t["coeff"]))
            if coeff:
                s.terms[key] = coeff
        return s


# spec-facing functional wrappers ------------------------------------------------

def series_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def series_exp(a):
    return a.exp()


def series_log(a):
    return a.log()


def series_substitute(a, bindings):
    return a.substitute(bindings)
