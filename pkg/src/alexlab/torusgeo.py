"""Torsion-translated subtori of the character torus.

A subtorus is encoded by its saturated lattice of exponent equations:
T = {z : z^u = 1 for all u in the lattice}, translated by a torsion point
exp(2*pi*i*q) with q rational.  Products and intersections of subtori then
reduce to lattice intersections and sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import exactla
from .errors import DomainError
from .exactla import Lattice


@dataclass(frozen=True)
class TranslatedTorus:
    ambient: int
    equations: Lattice  # saturated
    translate: tuple[Fraction, ...]  # entries in [0, 1)

    @property
    def dim(self) -> int:
        return self.ambient - self.equations.rank


@dataclass(frozen=True)
class IntersectionReport:
    meets: bool
    dim: int | None  # meaningful only when meets
    parallel: bool


def make_torus(n: int, rows, translate) -> TranslatedTorus:
    """Build a translated torus from exponent equations (dependent rows are
    reduced away) and a rational translate, reduced mod 1.  Non-rational
    translate entries are rejected: components of jump loci are translated
    by torsion characters only."""
    rows = [tuple(int(x) for x in r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise DomainError("equation row length does not match ambient rank")
    translate = tuple(translate)
    if len(translate) != n:
        raise DomainError("translate length does not match ambient rank")
    for x in translate:
        if not isinstance(x, Rational):
            raise DomainError("translate entries must be rational (torsion characters)")
    q = tuple(Fraction(x) % 1 for x in translate)
    lat = exactla.saturate(exactla.lattice_from_generators(n, rows))
    return TranslatedTorus(n, lat, q)


def _pairing_integral(basis, q) -> bool:
    for u in basis:
        if sum(Fraction(c) * x for c, x in zip(u, q)) % 1 != 0:
            return False
    return True


def intersect(T1: TranslatedTorus, T2: TranslatedTorus) -> IntersectionReport:
    """Emptiness, dimension and parallelism of rho1*T1 and rho2*T2.

    The cosets meet iff rho1/rho2 lies in the product torus T1*T2, whose
    equation lattice is the (saturated) intersection of the two equation
    lattices; the dimension of a nonempty intersection is
    ambient - rank(L1 + L2)."""
    if T1.ambient != T2.ambient:
        raise DomainError("ambient mismatch")
    diff = tuple(a - b for a, b in zip(T1.translate, T2.translate))
    inter = exactla.lattice_intersection(T1.equations, T2.equations)
    meets = _pairing_integral(inter.basis, diff)
    parallel = T1.equations.basis == T2.equations.basis
    dim = None
    if meets:
        dim = T1.ambient - exactla.lattice_sum(T1.equations, T2.equations).rank
    return IntersectionReport(meets, dim, parallel)
