import random
from fractions import Fraction

import pytest

from alexlab import exactla, laurent
from alexlab.errors import DomainError, LimitError
from alexlab.laurent import LaurentPoly


def P(nvars, *terms):
    return laurent.poly_from_pairs(nvars, [(e, c) for e, c in terms])


def V(nvars, i):
    return LaurentPoly.variable(nvars, i)


def C(nvars, c):
    return LaurentPoly.constant(nvars, c)


T = V(1, 0)
ONE = C(1, 1)


def random_poly(rng, nvars, max_terms=3, max_exp=3, max_coeff=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[e] = rng.randint(-max_coeff, max_coeff)
    p = laurent.poly_from_pairs(nvars, terms.items())
    return p if not p.is_zero() else LaurentPoly.one(nvars)


# -- arithmetic and canonical form -------------------------------------------


def test_multiply_examples():
    assert laurent.multiply(T - ONE, T + ONE) == T * T - ONE
    assert laurent.multiply(T - ONE, LaurentPoly.zero(1)).is_zero()
    x, y = V(2, 0), V(2, 1)
    assert laurent.multiply(x + y, x - y) == x * x - y * y


def test_multiply_ambient_mismatch():
    with pytest.raises(DomainError):
        laurent.multiply(ONE, C(2, 1))


def test_canonical_shift_and_sign():
    p = P(1, ((-1,), 1), ((0,), -1))  # t^-1 - 1
    assert p.canonical() == P(1, ((0,), -1), ((1,), 1)).canonical() == T - ONE
    # lex-max term gets a positive coefficient
    assert (ONE - T).canonical() == T - ONE
    assert LaurentPoly.zero(3).canonical().is_zero()


def test_canonical_product_of_canonicals_is_canonical():
    rng = random.Random(5)
    for _ in range(100):
        p = random_poly(rng, 2).canonical()
        q = random_poly(rng, 2).canonical()
        prod = p * q
        assert prod == prod.canonical()


def test_text_form():
    assert (T * T - T + ONE).text() == "t^2 - t + 1"
    x, y = V(2, 0), V(2, 1)
    p = C(2, 1) - C(2, 3) * x * y + (x * y) ** 2
    assert p.text() == "1 - 3*t1*t2 + t1^2*t2^2"
    assert LaurentPoly.zero(2).text() == "0"
    assert C(0, -7).text() == "-7"


# -- exact division ------------------------------------------------------------


def test_exact_div_laurent_shifts():
    p = P(1, ((-2,), 1), ((1,), -1))  # t^-2 - t
    d = P(1, ((-1,), 1))  # t^-1
    q = laurent.exact_div(p, d)
    assert q == P(1, ((-1,), 1), ((2,), -1))
    assert laurent.exact_div(T * T - ONE, T + C(1, 2)) is None


def test_divides():
    assert laurent.divides(T - ONE, T * T - ONE)
    assert not laurent.divides(T - ONE, T + ONE)
    assert laurent.divides(LaurentPoly.zero(1), LaurentPoly.zero(1))


# -- gcd ------------------------------------------------------------------------


def test_gcd_examples():
    # factorization oracle: t^2-1 = (t-1)(t+1), t^3-1 = (t-1)(t^2+t+1)
    assert laurent.gcd(T**2 - ONE, T**3 - ONE) == T - ONE
    p = T**5 - C(1, 3)
    assert laurent.gcd(p, LaurentPoly.zero(1)) == p.canonical()
    x, y = V(2, 0), V(2, 1)
    one2 = C(2, 1)
    # (x-1)(y-1) vs (x-1)(y+1), expanded
    a = (x - one2) * (y - one2)
    b = (x - one2) * (y + one2)
    assert laurent.gcd(a, b) == (x - one2).canonical()


def test_gcd_zero_conventions():
    z = LaurentPoly.zero(2)
    assert laurent.gcd(z, z).is_zero()


def test_gcd_divides_and_coprime_cofactors():
    rng = random.Random(99)
    for _ in range(200):
        nv = rng.randint(1, 3)
        g = random_poly(rng, nv)
        p = g * random_poly(rng, nv)
        q = g * random_poly(rng, nv)
        d = laurent.gcd(p, q)
        cp = laurent.exact_div(p.canonical(), d)
        cq = laurent.exact_div(q.canonical(), d)
        assert cp is not None and cq is not None
        assert laurent.gcd(cp, cq).is_unit()


def test_gcd_against_sympy():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(1234)
    xs = sympy.symbols("x0:3")

    def to_sympy(p):
        expr = sympy.Integer(0)
        for e, c in p.terms:
            term = sympy.Integer(c)
            for xi, ei in zip(xs, e):
                term *= xi**ei
            expr += term
        return sympy.expand(expr)

    def from_sympy(expr, nv):
        poly = sympy.Poly(expr, *xs[:nv])
        return laurent.poly_from_pairs(
            nv, [(tuple(m), int(c)) for m, c in zip(poly.monoms(), poly.coeffs())]
        )

    for _ in range(60):
        nv = rng.randint(1, 3)
        g = random_poly(rng, nv)
        p = g * random_poly(rng, nv)
        q = g * random_poly(rng, nv)
        ours = laurent.gcd(p, q)
        theirs = from_sympy(sympy.gcd(to_sympy(p), to_sympy(q)), nv)
        assert ours == theirs.canonical()


def test_gcd_variable_limit(monkeypatch):
    p = LaurentPoly.one(7) + LaurentPoly.variable(7, 0)
    with pytest.raises(LimitError):
        laurent.gcd(p, p)
    monkeypatch.setenv("ALEXLAB_MAX_VARS", "8")
    assert laurent.gcd(p, p) == p.canonical()


# -- Newton polytope --------------------------------------------------------------


def test_newton_dim_examples():
    assert laurent.newton_dim(C(1, 5)) == 0
    assert laurent.newton_dim(T**2 - C(1, 3) * T + ONE) == 1
    x, y = V(2, 0), V(2, 1)
    assert laurent.newton_dim(C(2, 1) + x + y) == 2
    with pytest.raises(DomainError):
        laurent.newton_dim(LaurentPoly.zero(2))


def test_newton_dim_of_products():
    # dim Newt(pq) = rank of the stacked difference sets (Minkowski sum),
    # hence <= dim p + dim q with equality iff the spans are independent.
    rng = random.Random(321)
    for _ in range(100):
        nv = rng.randint(1, 4)
        p = random_poly(rng, nv, max_terms=4)
        q = random_poly(rng, nv, max_terms=4)
        dp, dq = laurent.newton_dim(p), laurent.newton_dim(q)
        dpq = laurent.newton_dim(p * q)
        assert dpq <= dp + dq
        rows = []
        for poly in (p, q):
            base = poly.support()[0]
            rows.extend(
                tuple(a - b for a, b in zip(s, base)) for s in poly.support()[1:]
            )
        expected = (
            exactla.integer_rank(exactla.IntMatrix.from_rows(rows)) if rows else 0
        )
        assert dpq == expected


# -- line support -------------------------------------------------------------------


def test_line_support_examples():
    x, y = V(2, 0), V(2, 1)
    p = (x * y) ** 2 - C(2, 3) * x * y + C(2, 1)
    uf = laurent.line_support(p)
    assert uf.direction == (1, 1)
    assert uf.poly == T**2 - C(1, 3) * T + ONE
    assert uf.reassemble(2).unit_equal(p)
    assert laurent.line_support(C(2, 1) + x + y) is None
    uf = laurent.line_support(C(3, 7))
    assert uf.direction == (1, 0, 0)
    assert uf.poly == C(1, 7)


def test_line_support_reassembles_up_to_unit():
    rng = random.Random(77)
    for _ in range(50):
        k = rng.randint(1, 4)
        h = tuple(rng.randint(-2, 2) for _ in range(3))
        if not any(h):
            h = (1, 0, 0)
        coeffs = [rng.randint(-3, 3) for _ in range(k + 1)]
        if not any(coeffs):
            coeffs[0] = 1
        p = laurent.poly_from_pairs(
            3, [(tuple(j * hi for hi in h), c) for j, c in enumerate(coeffs) if c]
        )
        uf = laurent.line_support(p)
        assert uf is not None
        assert uf.reassemble(3).unit_equal(p)


# -- cyclotomic ---------------------------------------------------------------------


def test_cyclotomic_polynomials():
    assert laurent.cyclotomic_polynomial(1) == T - ONE
    assert laurent.cyclotomic_polynomial(2) == T + ONE
    assert laurent.cyclotomic_polynomial(6) == T**2 - T + ONE
    assert laurent.cyclotomic_polynomial(12) == T**4 - T**2 + ONE
    # product over divisors of n rebuilds t^n - 1
    for n in (1, 2, 6, 10, 12):
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * laurent.cyclotomic_polynomial(d)
        assert prod == T**n - ONE


def test_cyclotomic_decompose_examples():
    dec = laurent.cyclotomic_decompose(T**2 - T + ONE)
    assert (dec.content, dec.factors) == (1, ((6, 1),))
    assert dec.is_cyclotomic_product

    # roots (3 +- sqrt(5))/2 are off the unit circle: nothing divides
    p = T**2 - C(1, 3) * T + ONE
    dec = laurent.cyclotomic_decompose(p)
    assert dec.factors == ()
    assert dec.remainder == p

    dec = laurent.cyclotomic_decompose(C(1, 2) * T**3 - C(1, 2))
    assert (dec.content, dec.factors) == (2, ((1, 1), (3, 1)))
    assert dec.is_cyclotomic_product

    with pytest.raises(DomainError):
        laurent.cyclotomic_decompose(LaurentPoly.zero(1))


def test_cyclotomic_decompose_reassembles_and_remainder_is_clean():
    rng = random.Random(42)
    for _ in range(40):
        p = ONE
        for _ in range(rng.randint(0, 3)):
            p = p * laurent.cyclotomic_polynomial(rng.randint(1, 10))
        p = p.scale(rng.choice([1, 2, 3, -2]))
        if rng.random() < 0.5:
            p = p * (T**2 - C(1, 3) * T + ONE)
        dec = laurent.cyclotomic_decompose(p)
        assert dec.reassemble().unit_equal(p)
        # exhaustive check: no cyclotomic divides the remainder
        rem = dec.remainder
        if not rem.is_constant():
            deg = rem.degree_in(0)
            for d in range(1, 2 * deg * deg + 1):
                if laurent.euler_phi(d) <= deg:
                    assert laurent.exact_div(rem, laurent.cyclotomic_polynomial(d)) is None


# -- evaluation at characters ----------------------------------------------------------


def test_evaluate_examples():
    p = T**2 - T + ONE
    assert laurent.evaluate_at_character(p, [Fraction(1, 6)]).is_zero()
    assert laurent.evaluate_at_character(p, [Fraction(1, 2)]) == 3
    c = C(3, -11)
    assert laurent.evaluate_at_character(c, [Fraction(1, 3), 0, Fraction(1, 2)]) == -11


def test_evaluate_is_multiplicative():
    rng = random.Random(314)
    for _ in range(60):
        nv = rng.randint(1, 3)
        p = random_poly(rng, nv)
        q = random_poly(rng, nv)
        rho = [Fraction(rng.randint(0, 5), rng.randint(1, 6)) % 1 for _ in range(nv)]
        m = laurent.character_order(rho)
        ep = laurent.evaluate_at_character(p, rho)
        eq = laurent.evaluate_at_character(q, rho)
        # lift to a common cyclotomic field before comparing
        epq = laurent.evaluate_at_character(p * q, rho)
        assert epq == ep * eq
        assert ep.order == m


def test_cyclo_element_field_ops():
    from alexlab.laurent import CycloElement

    z = CycloElement.from_poly(5, [0, 1])  # zeta_5
    zi = z.inverse()
    assert z * zi == 1
    assert (z + 1) - 1 == z
    with pytest.raises(DomainError):
        CycloElement.from_int(5, 0).inverse()
