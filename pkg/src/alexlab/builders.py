"""Constructors for the named corpus families: torus bundles over the
circle, torus knot groups, and free-by-cyclic groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .fpgroup import GroupPresentation, Word


@dataclass(frozen=True)
class MonodromyMatrix:
    """2x2 integer matrix with determinant +-1."""

    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        (a, b), (c, d) = self.entries
        if abs(a * d - b * c) != 1:
            raise DomainError("monodromy matrix must have determinant +-1")

    @classmethod
    def of(cls, a, b, c, d) -> "MonodromyMatrix":
        return cls(((int(a), int(b)), (int(c), int(d))))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    @property
    def trace(self) -> int:
        return self.entries[0][0] + self.entries[1][1]


def torus_bundle(A: MonodromyMatrix) -> GroupPresentation:
    """<x, y, t | [x,y], t x t^-1 (x^a11 y^a21)^-1, t y t^-1 (x^a12 y^a22)^-1>
    (column-action convention: conjugation by t reads off the columns)."""
    (a11, a12), (a21, a22) = A.entries
    x, y, t = 0, 1, 2
    comm = Word.from_pairs([(x, 1), (y, 1), (x, -1), (y, -1)])
    r1 = Word.from_pairs([(t, 1), (x, 1), (t, -1), (y, -a21), (x, -a11)])
    r2 = Word.from_pairs([(t, 1), (y, 1), (t, -1), (y, -a22), (x, -a12)])
    return GroupPresentation(("x", "y", "t"), (comm, r1, r2))


def torus_knot(p: int, q: int) -> GroupPresentation:
    """<a, b | a^p b^-q>, the (p, q) torus knot group for coprime p, q."""
    if p < 1 or q < 1:
        raise DomainError("torus knot parameters must be >= 1")
    rel = Word.from_pairs([(0, p), (1, -q)])
    return GroupPresentation(("a", "b"), (rel,))


def free_by_cyclic(images) -> GroupPresentation:
    """<x1..xm, t | t x_i t^-1 phi(x_i)^-1> for phi given by its images.

    The images are Words over generator indices 0..m-1.  Whether they define
    an automorphism of the free group is not verified (a word-problem
    instance); the caller answers for that.
    """
    images = tuple(images)
    m = len(images)
    for w in images:
        if w.max_index() >= m:
            raise DomainError("image uses an undeclared generator")
    t = m
    relators = []
    for i, w in enumerate(images):
        rel = Word.from_pairs([(t, 1), (i, 1), (t, -1)]) * w.inverse()
        relators.append(rel)
    names = tuple("x%d" % (i + 1) for i in range(m)) + ("t",)
    return GroupPresentation(names, tuple(relators))
