"""Alexander norm, support polytopes, and the McMullen-inequality harness.

Thurston norm values are user-supplied data (a file of classes with their
norms and fibered flags); nothing here computes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .errors import DomainError, LimitError, ParseError
from .laurent import LaurentPoly

SUPPORT_POLYTOPE_MAX_RANK = 4


@dataclass(frozen=True)
class CohomologyClass:
    phi: tuple[int, ...]

    @classmethod
    def of(cls, values) -> "CohomologyClass":
        return cls(tuple(int(x) for x in values))


@dataclass(frozen=True)
class NormBall:
    """Vertex set of a centrally symmetric polytope; `role` records whether
    it is the support-difference polytope or a dual norm ball."""

    vertices: tuple[tuple[Fraction, ...], ...]
    role: str = "support"


@dataclass(frozen=True)
class FiberedDatum:
    phi: CohomologyClass
    thurston: int
    fibered: bool


@dataclass(frozen=True)
class McMullenEntry:
    datum: FiberedDatum
    alexander: int
    status: str  # PASS or FAIL
    reason: str


@dataclass(frozen=True)
class McMullenReport:
    entries: tuple[McMullenEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.status == "PASS" for e in self.entries)


def alexander_norm(delta: LaurentPoly, phi: CohomologyClass) -> int:
    """Width of the Newton polytope of delta in the direction phi;
    0 for the zero polynomial by convention."""
    if len(phi.phi) != delta.nvars:
        raise DomainError("class length does not match variable count")
    if delta.is_zero():
        return 0
    vals = [sum(p * e for p, e in zip(phi.phi, exp)) for exp in delta.support()]
    return max(vals) - min(vals)


# -- exact convex hull (vertex enumeration) -----------------------------------


def _phase1_feasible(cols, rhs) -> bool:
    """Is {x >= 0 : A x = b} nonempty?  A given by columns, exact rationals,
    phase-1 simplex with Bland's rule."""
    m = len(rhs)
    n = len(cols)
    T = [[Fraction(cols[j][i]) for j in range(n)] for i in range(m)]
    b = [Fraction(x) for x in rhs]
    for i in range(m):
        if b[i] < 0:
            T[i] = [-x for x in T[i]]
            b[i] = -b[i]
    # artificial variables n..n+m-1 start as the basis
    for i in range(m):
        T[i] += [Fraction(1 if k == i else 0) for k in range(m)]
    basis = list(range(n, n + m))
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    while True:
        # reduced costs r_j = c_j - sum_i c_basis[i] * T[i][j]
        entering = None
        for j in range(n + m):
            r = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if r < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = b[i] / T[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            break  # unbounded; cannot happen for phase 1 but keeps us safe
        piv = T[leaving][entering]
        T[leaving] = [x / piv for x in T[leaving]]
        b[leaving] /= piv
        for i in range(m):
            if i != leaving and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [x - f * y for x, y in zip(T[i], T[leaving])]
                b[i] -= f * b[leaving]
        basis[leaving] = entering

    objective = sum(cost[basis[i]] * b[i] for i in range(m))
    return objective == 0


def in_convex_hull(point, points) -> bool:
    """Exact membership of `point` in the convex hull of `points`."""
    pts = list(points)
    if not pts:
        return False
    cols = [tuple(q) + (1,) for q in pts]
    rhs = tuple(point) + (1,)
    return _phase1_feasible(cols, rhs)


def hull_vertices(points) -> list[tuple]:
    """Vertex subset of a finite point set: p is a vertex iff it is not in
    the hull of the others."""
    pts = sorted(set(tuple(x) for x in points))
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if not in_convex_hull(p, others):
            out.append(p)
    return out


def support_polytope(delta: LaurentPoly) -> NormBall:
    """Vertices of the difference hull of the support, exact rationals."""
    if delta.is_zero():
        raise DomainError("support polytope of the zero polynomial")
    if delta.nvars > SUPPORT_POLYTOPE_MAX_RANK:
        raise LimitError(
            "support_polytope supports rank <= %d (have %d)"
            % (SUPPORT_POLYTOPE_MAX_RANK, delta.nvars)
        )
    supp = delta.support()
    diffs = {
        tuple(a - b for a, b in zip(h, g)) for h, g in iproduct(supp, supp)
    }
    verts = hull_vertices(diffs)
    return NormBall(tuple(tuple(Fraction(x) for x in v) for v in verts), "support")


# -- McMullen harness ----------------------------------------------------------


def mcmullen_check(delta: LaurentPoly, data) -> McMullenReport:
    """Check the user-supplied Thurston values against the Alexander norm:
    the norm may never exceed the Thurston norm, with equality on fibered
    classes.  Only meaningful with b1 >= 2, rejected otherwise."""
    if delta.nvars < 2:
        raise DomainError("McMullen comparison requires b1 >= 2")
    entries = []
    for d in data:
        a = alexander_norm(delta, d.phi)
        if a > d.thurston:
            entries.append(
                McMullenEntry(d, a, "FAIL", "alexander %d > thurston %d" % (a, d.thurston))
            )
        elif d.fibered and a != d.thurston:
            entries.append(
                McMullenEntry(
                    d, a, "FAIL", "fibered class: alexander %d != thurston %d" % (a, d.thurston)
                )
            )
        else:
            entries.append(McMullenEntry(d, a, "PASS", "ok"))
    return McMullenReport(tuple(entries))


def parse_thurston_data(text: str) -> list[FiberedDatum]:
    """Lines of `phi <int> ...  thurston <int>  fibered <0|1>`; `#` comments."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if toks[0] != "phi":
                raise ValueError("expected 'phi'")
            i = 1
            phi = []
            while i < len(toks) and toks[i] not in ("thurston",):
                phi.append(int(toks[i]))
                i += 1
            if not phi:
                raise ValueError("empty phi")
            if toks[i] != "thurston":
                raise ValueError("expected 'thurston'")
            thurston = int(toks[i + 1])
            if thurston < 0:
                raise ValueError("thurston value must be nonnegative")
            if toks[i + 2] != "fibered" or toks[i + 3] not in ("0", "1"):
                raise ValueError("expected 'fibered 0|1'")
            if i + 4 != len(toks):
                raise ValueError("trailing tokens")
            out.append(FiberedDatum(CohomologyClass.of(phi), thurston, toks[i + 3] == "1"))
        except (ValueError, IndexError) as exc:
            raise ParseError("thurston data line %d: %s" % (lineno, exc))
    return out
