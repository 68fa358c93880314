"""Multivariate integer Laurent polynomials, exactly.

A polynomial is a finite map from exponent vectors in Z^n to nonzero
integer coefficients.  Values are immutable; the ring operators (+, -, *)
return exact representatives, while :meth:`LaurentPoly.canonical` picks the
distinguished associate (componentwise-minimal exponent 0 in every variable,
positive coefficient on the lexicographically largest exponent) so that
"equal up to a unit" becomes plain equality.

The gcd is computed dependency-free: recursion on variables with
content/primitive-part splitting and univariate subresultant remainder
sequences.  The number of variables is capped (default 6, override with the
ALEXLAB_MAX_VARS environment variable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

from .errors import DomainError, LimitError
from . import exactla

DEFAULT_MAX_VARS = 6


def max_gcd_vars() -> int:
    raw = os.environ.get("ALEXLAB_MAX_VARS")
    if raw is None:
        return DEFAULT_MAX_VARS
    try:
        return int(raw)
    except ValueError:
        raise LimitError("ALEXLAB_MAX_VARS must be an integer, got %r" % raw)


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in `nvars` variables.

    `terms` is a tuple of (exponent vector, coefficient) pairs, sorted
    lexicographically by exponent vector, with no zero coefficients.
    """

    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    # -- construction -------------------------------------------------

    @staticmethod
    def _make(nvars: int, mapping) -> "LaurentPoly":
        items = tuple(sorted((tuple(e), c) for e, c in mapping.items() if c))
        return LaurentPoly(nvars, items)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, ())

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        c = int(c)
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exps, c: int = 1) -> "LaurentPoly":
        exps = tuple(int(x) for x in exps)
        if len(exps) != nvars:
            raise DomainError("exponent vector length does not match nvars")
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, ((exps, int(c)),))

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        return cls.monomial(nvars, tuple(1 if j == i else 0 for j in range(nvars)))

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e, _ in self.terms)

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise DomainError("not a constant polynomial")
        return self.terms[0][1]

    def is_unit(self) -> bool:
        """Units of Z[H]: plus or minus a single monomial."""
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exps) -> int:
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return 0

    def min_exponents(self) -> tuple[int, ...]:
        if self.is_zero():
            return (0,) * self.nvars
        return tuple(min(e[i] for e, _ in self.terms) for i in range(self.nvars))

    def total_degree_spread(self) -> int:
        """max minus min of the total degree over the support (0 for 0)."""
        if self.is_zero():
            return 0
        sums = [sum(e) for e, _ in self.terms]
        return max(sums) - min(sums)

    # -- arithmetic ----------------------------------------------------

    def _check_ambient(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise DomainError(
                "ambient mismatch: %d vs %d variables" % (self.nvars, other.nvars)
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_ambient(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return self._make(self.nvars, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_ambient(other)
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return self._make(self.nvars, acc)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        out = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly(self.nvars, tuple((e, c * x) for e, x in self.terms))

    def shift(self, by) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector `by`."""
        by = tuple(by)
        return LaurentPoly(
            self.nvars,
            tuple((tuple(a + b for a, b in zip(e, by)), c) for e, c in self.terms),
        )

    # -- normalization ---------------------------------------------------

    def canonical(self) -> "LaurentPoly":
        """The distinguished associate: min exponent 0 in each variable and a
        positive coefficient on the lex-largest exponent vector."""
        if self.is_zero():
            return self
        shift = tuple(-m for m in self.min_exponents())
        p = self.shift(shift)
        if p.terms[-1][1] < 0:
            p = -p
        return p

    def unit_equal(self, other: "LaurentPoly") -> bool:
        return self.canonical() == other.canonical()

    # -- views in one variable ------------------------------------------

    def degree_in(self, v: int) -> int:
        """Largest exponent of variable v (input must be nonzero)."""
        if self.is_zero():
            raise DomainError("degree of the zero polynomial")
        return max(e[v] for e, _ in self.terms)

    def coefficient_in(self, v: int, k: int) -> "LaurentPoly":
        """Coefficient of v^k, as a polynomial with the v-slot set to 0."""
        acc = {}
        for e, c in self.terms:
            if e[v] == k:
                acc[e[:v] + (0,) + e[v + 1 :]] = c
        return self._make(self.nvars, acc)

    def leading_in(self, v: int) -> "LaurentPoly":
        return self.coefficient_in(v, self.degree_in(v))

    # -- text form --------------------------------------------------------

    def _term_str(self, e, c, names) -> str:
        parts = []
        for name, k in zip(names, e):
            if k == 1:
                parts.append(name)
            elif k != 0:
                parts.append("%s^%d" % (name, k))
        mono = "*".join(parts)
        if not mono:
            return str(abs(c))
        if abs(c) == 1:
            return mono
        return "%d*%s" % (abs(c), mono)

    def text(self) -> str:
        """Canonical text form.  Univariate polynomials print in descending
        powers of `t`; multivariate ones ascending lex in t1..tn."""
        if self.is_zero():
            return "0"
        if self.nvars == 0:
            return str(self.terms[0][1])
        if self.nvars == 1:
            names = ("t",)
            ordered = sorted(self.terms, reverse=True)
        else:
            names = tuple("t%d" % (i + 1) for i in range(self.nvars))
            ordered = list(self.terms)
        out = []
        for i, (e, c) in enumerate(ordered):
            body = self._term_str(e, c, names)
            if i == 0:
                out.append("-" + body if c < 0 else body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self) -> str:
        return self.text()

    def to_doc(self) -> dict:
        """Machine-readable form: terms ascending lex by exponent vector."""
        return {
            "nvars": self.nvars,
            "terms": [{"e": list(e), "c": c} for e, c in self.terms],
        }


# -- exact division ---------------------------------------------------------


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly | None:
    """p / d when d divides p exactly in the Laurent ring, else None."""
    p._check_ambient(d)
    if d.is_zero():
        raise DomainError("division by zero polynomial")
    if p.is_zero():
        return p
    sp = p.min_exponents()
    sd = d.min_exponents()
    P = dict(p.shift(tuple(-x for x in sp)).terms)
    D = p._make(p.nvars, dict(d.shift(tuple(-x for x in sd)).terms))
    dl_e, dl_c = D.terms[-1]
    quo: dict = {}
    while P:
        le = max(P)
        lc = P[le]
        qe = tuple(a - b for a, b in zip(le, dl_e))
        if any(x < 0 for x in qe) or lc % dl_c:
            return None
        qc = lc // dl_c
        quo[qe] = quo.get(qe, 0) + qc
        for e, c in D.terms:
            ke = tuple(a + b for a, b in zip(qe, e))
            nc = P.get(ke, 0) - qc * c
            if nc:
                P[ke] = nc
            else:
                P.pop(ke, None)
    q = LaurentPoly._make(p.nvars, quo)
    return q.shift(tuple(a - b for a, b in zip(sp, sd)))


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    if d.is_zero():
        return p.is_zero()
    return exact_div(p, d) is not None


def multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact ring product.  The product of canonical inputs is canonical
    (minimal exponents and lex-max signs both multiply)."""
    return p * q


# -- gcd -------------------------------------------------------------------


def _int_content(p: LaurentPoly) -> int:
    return exactla.content(c for _, c in p.terms)


def _prem(F: LaurentPoly, G: LaurentPoly, v: int) -> LaurentPoly:
    """Pseudo-remainder of F by G with respect to variable v:
    lc(G)^(deg F - deg G + 1) * F = Q*G + R with deg_v R < deg_v G."""
    dG = G.degree_in(v)
    lG = G.leading_in(v)
    R = F
    e = F.degree_in(v) - dG + 1
    while not R.is_zero() and R.degree_in(v) >= dG:
        dR = R.degree_in(v)
        lR = R.leading_in(v)
        vshift = tuple(dR - dG if i == v else 0 for i in range(F.nvars))
        R = lG * R - lR.shift(vshift) * G
        e -= 1
    for _ in range(e):
        R = lG * R
    return R


def _content_in(p: LaurentPoly, v: int) -> LaurentPoly:
    g = LaurentPoly.zero(p.nvars)
    for k in sorted({e[v] for e, _ in p.terms}):
        g = _gcd_poly(g, p.coefficient_in(v, k))
        if not g.is_zero() and g.canonical() == LaurentPoly.one(p.nvars):
            break
    return g


def _gcd_poly(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """gcd of two polynomials with nonnegative exponents, up to sign."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    v = None
    for i in reversed(range(p.nvars)):
        if any(e[i] for e, _ in p.terms) or any(e[i] for e, _ in q.terms):
            v = i
            break
    if v is None:
        return LaurentPoly.constant(p.nvars, igcd(p.constant_value(), q.constant_value()))

    if not any(e[v] for e, _ in p.terms):
        # v occurs only in q: a common divisor is v-free, so it divides
        # the v-content of q.
        return _gcd_poly(p, _content_in(q, v))
    if not any(e[v] for e, _ in q.terms):
        return _gcd_poly(_content_in(p, v), q)

    cp = _content_in(p, v)
    cq = _content_in(q, v)
    cont = _gcd_poly(cp, cq)
    F = exact_div(p, cp)
    G = exact_div(q, cq)
    if F.degree_in(v) < G.degree_in(v):
        F, G = G, F

    one = LaurentPoly.one(p.nvars)
    g = one
    h = one
    while True:
        delta = F.degree_in(v) - G.degree_in(v)
        R = _prem(F, G, v)
        if R.is_zero():
            break
        if R.degree_in(v) == 0:
            # Nonzero v-free remainder: primitive parts are coprime.
            G = one
            break
        F, G = G, exact_div(R, g * h**delta)
        g = F.leading_in(v)
        h = exact_div(g**delta, h ** (delta - 1)) if delta > 0 else h
    Gpp = exact_div(G, _content_in(G, v))
    return cont * Gpp


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """gcd in the Laurent ring, canonically normalized.  gcd(p, 0) = p."""
    p._check_ambient(q)
    if p.is_zero():
        return q.canonical()
    if q.is_zero():
        return p.canonical()
    limit = max_gcd_vars()
    if p.nvars > limit:
        raise LimitError(
            "gcd supports at most %d variables (have %d); "
            "set ALEXLAB_MAX_VARS to raise the limit" % (limit, p.nvars)
        )
    P = p.canonical()
    Q = q.canonical()
    return _gcd_poly(P, Q).canonical()


# -- Newton polytope -------------------------------------------------------


def newton_dim(p: LaurentPoly) -> int:
    """Dimension of the affine hull of the support."""
    if p.is_zero():
        raise DomainError("Newton polytope of the zero polynomial")
    pts = p.support()
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(s, base)) for s in pts[1:]]
    if not diffs:
        return 0
    return exactla.integer_rank(exactla.IntMatrix.from_rows(diffs))


@dataclass(frozen=True)
class UnivariateForm:
    """A polynomial with at most 1-dimensional support, rewritten as p(h)
    for a primitive direction h."""

    direction: tuple[int, ...]
    poly: LaurentPoly  # univariate, in t

    def reassemble(self, nvars: int) -> LaurentPoly:
        out = LaurentPoly.zero(nvars)
        for e, c in self.poly.terms:
            k = e[0]
            out = out + LaurentPoly.monomial(
                nvars, tuple(k * h for h in self.direction), c
            )
        return out


def line_support(p: LaurentPoly) -> UnivariateForm | None:
    """When the support is a point or a segment, the primitive direction h
    and the univariate polynomial along it; None when the support is wider."""
    if p.is_zero():
        raise DomainError("line_support of the zero polynomial")
    pts = p.support()
    if len(pts) == 1:
        direction = tuple(1 if i == 0 else 0 for i in range(p.nvars))
        return UnivariateForm(direction, LaurentPoly.constant(1, p.terms[0][1]))
    if newton_dim(p) > 1:
        return None
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(s, base)) for s in pts]
    d0 = next(d for d in diffs if any(d))
    g = exactla.content(d0)
    h = tuple(x // g for x in d0)
    for i, x in enumerate(h):
        if x:
            if x < 0:
                h = tuple(-y for y in h)
            break
    # Every support point is base + k*h for an integer k.
    href = next(i for i, x in enumerate(h) if x)
    ks = []
    for d in diffs:
        k, r = divmod(d[href], h[href])
        if r or any(d[i] != k * h[i] for i in range(p.nvars)):
            raise DomainError("support not collinear")  # unreachable after rank check
        ks.append(k)
    kmin = min(ks)
    acc = {}
    for (e, c), k in zip(p.terms, ks):
        acc[(k - kmin,)] = c
    return UnivariateForm(h, LaurentPoly._make(1, acc))


# -- cyclotomic machinery ----------------------------------------------------


@lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    n, out, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial as a univariate LaurentPoly."""
    if d < 1:
        raise DomainError("cyclotomic index must be positive")
    num = LaurentPoly.monomial(1, (d,)) - LaurentPoly.one(1)
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, cyclotomic_polynomial(e))
    return num


@dataclass(frozen=True)
class CyclotomicDecomposition:
    """content * prod Phi_d^mult * remainder = input, up to a unit."""

    content: int
    factors: tuple[tuple[int, int], ...]
    remainder: LaurentPoly

    @property
    def is_cyclotomic_product(self) -> bool:
        return self.remainder == LaurentPoly.one(1)

    def reassemble(self) -> LaurentPoly:
        out = LaurentPoly.constant(1, self.content)
        for d, m in self.factors:
            out = out * cyclotomic_polynomial(d) ** m
        return out * self.remainder


def cyclotomic_decompose(p: LaurentPoly) -> CyclotomicDecomposition:
    """Split a nonzero univariate polynomial into integer content, cyclotomic
    factors found by exhaustive trial division, and a cyclotomic-free
    remainder.  Trial indices run over all d with phi(d) <= degree, which
    is covered by d <= 2*deg^2 since phi(d) >= sqrt(d/2)."""
    if p.nvars != 1:
        raise DomainError("cyclotomic_decompose expects a univariate polynomial")
    if p.is_zero():
        raise DomainError("cyclotomic_decompose of the zero polynomial")
    P = p.canonical()
    c = _int_content(P)
    P = exact_div(P, LaurentPoly.constant(1, c))
    deg = P.degree_in(0)
    factors = []
    bound = 2 * deg * deg
    for d in range(1, bound + 1):
        if P.degree_in(0) == 0:
            break
        if euler_phi(d) > P.degree_in(0):
            continue
        mult = 0
        phi_d = cyclotomic_polynomial(d)
        while True:
            q = exact_div(P, phi_d)
            if q is None:
                break
            P = q
            mult += 1
        if mult:
            factors.append((d, mult))
    return CyclotomicDecomposition(c, tuple(factors), P)


# -- evaluation at torsion characters ----------------------------------------


def _qpoly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = _qpoly_trim(list(a))
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        f = r[-1] / b[-1]
        q[k] = f
        for i, bc in enumerate(b):
            r[i + k] -= f * bc
        _qpoly_trim(r)
    return _qpoly_trim(q), r


def _qpoly_invmod(b: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of b modulo `mod` in Q[t] (mod irreducible, b != 0 mod it)."""
    r0, r1 = list(mod), list(b)
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while _qpoly_trim(list(r1)):
        q, r = _qpoly_divmod(r0, r1)
        qs = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                qs[i + j] += qc * sc
        s = [x - y for x, y in zip(s0 + [Fraction(0)] * len(qs), qs + [Fraction(0)] * len(s0))]
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_trim(s)
    if len(r0) != 1:
        raise DomainError("element not invertible in the cyclotomic field")
    lead = r0[0]
    return [x / lead for x in s0]


@dataclass(frozen=True)
class CycloElement:
    """An element of the m-th cyclotomic field, reduced modulo Phi_m."""

    order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, order: int, coeffs) -> "CycloElement":
        phi = cyclotomic_polynomial(order)
        deg = phi.degree_in(0)
        mod = [Fraction(phi.coefficient((k,))) for k in range(deg + 1)]
        a = [Fraction(x) for x in coeffs]
        _, r = _qpoly_divmod(a, mod)
        r = r + [Fraction(0)] * (deg - len(r))
        return cls(order, tuple(r))

    @classmethod
    def from_int(cls, order: int, c) -> "CycloElement":
        return cls.from_poly(order, [Fraction(c)])

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.coeffs[1:])

    def _lift(self, other):
        if isinstance(other, CycloElement):
            if other.order != self.order:
                raise DomainError("cyclotomic orders differ")
            return other
        return CycloElement.from_int(self.order, other)

    def __add__(self, other):
        o = self._lift(other)
        return CycloElement(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, other):
        o = self._lift(other)
        return CycloElement(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return CycloElement(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        prod = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloElement.from_poly(self.order, prod)

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise DomainError("inverse of zero")
        phi = cyclotomic_polynomial(self.order)
        deg = phi.degree_in(0)
        mod = [Fraction(phi.coefficient((k,))) for k in range(deg + 1)]
        inv = _qpoly_invmod(_qpoly_trim(list(self.coeffs)), mod)
        inv = inv + [Fraction(0)] * (deg - len(inv))
        return CycloElement(self.order, tuple(inv[:deg]))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloElement.from_int(self.order, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "CycloElement(order=%d, coeffs=%s)" % (self.order, list(self.coeffs))


def character_order(rho) -> int:
    m = 1
    for x in rho:
        m = m * Fraction(x).denominator // igcd(m, Fraction(x).denominator)
    return m


def evaluate_at_character(p: LaurentPoly, rho) -> CycloElement:
    """Exact value of p at the torsion character exp(2*pi*i*rho), as an
    element of the cyclotomic field of the character's order."""
    rho = [Fraction(x) for x in rho]
    if len(rho) != p.nvars:
        raise DomainError("character length does not match variable count")
    m = character_order(rho)
    nums = [int(x * m) % m for x in rho]
    acc: dict[int, int] = {}
    for e, c in p.terms:
        k = sum(ei * ai for ei, ai in zip(e, nums)) % m
        acc[k] = acc.get(k, 0) + c
    coeffs = [Fraction(0)] * (max(acc) + 1 if acc else 1)
    for k, c in acc.items():
        coeffs[k] = Fraction(c)
    return CycloElement.from_poly(m, coeffs)


# -- misc helpers used by higher layers --------------------------------------


def apply_exponent_map(p: LaurentPoly, rows, target_nvars: int) -> LaurentPoly:
    """Push p through the monomial map sending exponent e to M e, where M
    has the given rows (target_nvars x p.nvars)."""
    rows = [tuple(r) for r in rows]
    if len(rows) != target_nvars or any(len(r) != p.nvars for r in rows):
        raise DomainError("exponent map shape mismatch")
    acc: dict = {}
    for e, c in p.terms:
        ne = tuple(sum(m * x for m, x in zip(row, e)) for row in rows)
        acc[ne] = acc.get(ne, 0) + c
    return LaurentPoly._make(target_nvars, acc)


def poly_from_pairs(nvars: int, pairs) -> LaurentPoly:
    acc: dict = {}
    for e, c in pairs:
        e = tuple(e)
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly._make(nvars, acc)
