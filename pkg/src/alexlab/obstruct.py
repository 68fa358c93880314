"""Necessary-condition tests: can this group be a Kahler group, or a
quasi-projective group?

Both tests check what the order polynomials of the group must look like and
report OBSTRUCTED with witnesses when they fail.  CONSISTENT only means no
computed condition failed; it is never a sufficiency claim.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import alexinv, exactla, laurent
from .errors import DomainError
from .fpgroup import GroupPresentation, fox_matrix, free_product_many
from .laurent import LaurentPoly

DEFAULT_KMAX = 3

OBSTRUCTED = "OBSTRUCTED"
CONSISTENT = "CONSISTENT"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PerKFinding:
    k: int
    delta: LaurentPoly  # canonical
    newton_dim: int | None  # None for the zero polynomial
    cyclotomic: str  # "yes", "no", or "n/a"
    remainder: LaurentPoly | None  # non-cyclotomic part, when computed


@dataclass(frozen=True)
class ObstructionReport:
    test: str  # "kahler" or "qp"
    b1: int
    k0: int
    kmax: int
    per_k: tuple[PerKFinding, ...]
    thickness: int
    verdict: str
    witnesses: tuple[str, ...]


def _order_data(p: GroupPresentation, kmax: int):
    F = fox_matrix(p)
    seq = alexinv.order_sequence(F, kmax)
    k0, delta0 = alexinv.first_order(F)
    th = laurent.newton_dim(delta0)
    return F, seq, k0, th


def kahler_test(p: GroupPresentation, kmax: int = DEFAULT_KMAX) -> ObstructionReport:
    """A Kahler group has even b1 and constant order polynomials, hence
    thickness 0.  Any failure is an obstruction witness."""
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    F, seq, k0, th = _order_data(p, kmax)
    b1 = F.abelianization.b1
    witnesses = []
    if b1 % 2 == 1:
        witnesses.append("b1 = %d is odd" % b1)
    per_k = []
    for k in range(k0, kmax + 1):
        delta = seq.orders[k].canonical()
        nd = None if delta.is_zero() else laurent.newton_dim(delta)
        per_k.append(PerKFinding(k, delta, nd, "n/a", None))
        if nd is not None and nd > 0:
            witnesses.append("Delta^%d = %s is non-constant" % (k, delta.text()))
    if th > 0:
        witnesses.append("thickness %d > 0" % th)
    verdict = OBSTRUCTED if witnesses else CONSISTENT
    return ObstructionReport("kahler", b1, k0, kmax, tuple(per_k), th, verdict, tuple(witnesses))


def qp_test(p: GroupPresentation, kmax: int = DEFAULT_KMAX) -> ObstructionReport:
    """A quasi-projective group with b1 != 2 has order polynomials whose
    Newton polytope is a point or a segment, carried by a cyclotomic-product
    univariate polynomial.  b1 = 2 is outside the test's hypothesis and
    reports INCONCLUSIVE."""
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    F, seq, k0, th = _order_data(p, kmax)
    b1 = F.abelianization.b1
    witnesses = []
    per_k = []
    for k in range(k0, kmax + 1):
        delta = seq.orders[k].canonical()
        if delta.is_zero():
            per_k.append(PerKFinding(k, delta, None, "n/a", None))
            continue
        nd = laurent.newton_dim(delta)
        if nd >= 2:
            per_k.append(PerKFinding(k, delta, nd, "n/a", None))
            witnesses.append(
                "Newton polytope of Delta^%d has dimension %d > 1" % (k, nd)
            )
            continue
        uf = laurent.line_support(delta)
        dec = laurent.cyclotomic_decompose(uf.poly)
        if dec.is_cyclotomic_product:
            per_k.append(PerKFinding(k, delta, nd, "yes", None))
        else:
            rem = dec.remainder.canonical()
            per_k.append(PerKFinding(k, delta, nd, "no", rem))
            witnesses.append("non-cyclotomic factor %s" % rem.text())
    if b1 == 2:
        verdict = INCONCLUSIVE
        witnesses = ["b1 = 2 is outside the hypothesis of the test"] + witnesses
    else:
        verdict = OBSTRUCTED if witnesses else CONSISTENT
    return ObstructionReport("qp", b1, k0, kmax, tuple(per_k), th, verdict, tuple(witnesses))


# -- connected sums (free products) --------------------------------------------


@dataclass(frozen=True)
class FactorSummary:
    b1: int
    k0: int
    delta: LaurentPoly
    thickness: int


@dataclass(frozen=True)
class ConnectedSumReport:
    factors: tuple[FactorSummary, ...]
    product: GroupPresentation
    product_b1: int
    product_k0: int
    product_delta: LaurentPoly
    product_thickness: int
    thickness_additive: bool
    delta_divisible: bool
    qp: ObstructionReport


def _inclusion_rows(factor_images, product_images, b1_factor: int, b1_product: int):
    """Rows of the matrix of the induced inclusion H_factor -> H_product,
    solved from the generator images (which generate H_factor)."""
    if b1_factor == 0:
        return [()] * b1_product
    P = exactla.IntMatrix.from_rows(factor_images)
    Q = exactla.IntMatrix.from_rows(product_images)
    MT = exactla.solve_integer(P, Q)
    if MT is None:
        raise DomainError("no integral inclusion matrix; inconsistent abelianizations")
    return [tuple(MT[c, r] for c in range(b1_factor)) for r in range(b1_product)]


def connected_sum_report(ps, kmax: int = DEFAULT_KMAX) -> ConnectedSumReport:
    """Free product of the given presentations: factor and product first
    orders and thicknesses, the additivity and divisibility checks, and the
    quasi-projectivity test of the product."""
    ps = list(ps)
    if len(ps) < 2:
        raise DomainError("connected sum needs at least two presentations")
    product = free_product_many(ps)
    prod_F = fox_matrix(product)
    prod_ab = prod_F.abelianization
    prod_k0, prod_delta = alexinv.first_order(prod_F)
    prod_delta = prod_delta.canonical()
    prod_th = laurent.newton_dim(prod_delta)

    factors = []
    embedded = LaurentPoly.one(prod_ab.b1)
    offset = 0
    for p in ps:
        F = fox_matrix(p)
        ab = F.abelianization
        k0, delta = alexinv.first_order(F)
        delta = delta.canonical()
        th = laurent.newton_dim(delta)
        factors.append(FactorSummary(ab.b1, k0, delta, th))
        g = len(p.generators)
        rows = _inclusion_rows(
            ab.images,
            [prod_ab.images[offset + j] for j in range(g)],
            ab.b1,
            prod_ab.b1,
        )
        embedded = embedded * laurent.apply_exponent_map(delta, rows, prod_ab.b1)
        offset += g

    additive = prod_th == sum(f.thickness for f in factors)
    divisible = laurent.divides(embedded.canonical(), prod_delta)
    qp = qp_test(product, kmax)
    return ConnectedSumReport(
        tuple(factors),
        product,
        prod_ab.b1,
        prod_k0,
        prod_delta,
        prod_th,
        additive,
        divisible,
        qp,
    )
