"""Finitely presented groups: the .fp text format, free abelianization via
Smith normal form, Fox derivatives over Z[H], and free products.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce

from . import exactla
from .errors import DomainError, ParseError
from .laurent import LaurentPoly

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Word:
    """Freely reduced word: (generator index, nonzero exponent) syllables,
    adjacent syllables on distinct generators."""

    syllables: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Word":
        out: list[list[int]] = []
        for g, e in pairs:
            g, e = int(g), int(e)
            if e == 0:
                continue
            if out and out[-1][0] == g:
                out[-1][1] += e
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([g, e])
        # A cancellation can expose a new adjacent pair; re-run until stable.
        flat = [(g, e) for g, e in out]
        if any(flat[i][0] == flat[i + 1][0] for i in range(len(flat) - 1)):
            return cls.from_pairs(flat)
        return cls(tuple(flat))

    def is_empty(self) -> bool:
        return not self.syllables

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: "Word") -> "Word":
        return Word.from_pairs(self.syllables + other.syllables)

    def letters(self):
        """Expand to single (generator, +1/-1) letters."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def abelian(self, num_gens: int) -> tuple[int, ...]:
        v = [0] * num_gens
        for g, e in self.syllables:
            v[g] += e
        return tuple(v)

    def shift_indices(self, offset: int) -> "Word":
        return Word(tuple((g + offset, e) for g, e in self.syllables))

    def max_index(self) -> int:
        return max((g for g, _ in self.syllables), default=-1)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise DomainError("duplicate generator names")
        for r in self.relators:
            if r.max_index() >= len(self.generators):
                raise DomainError("relator uses an out-of-range generator index")


@dataclass(frozen=True)
class AbelianizationData:
    """b1, invariant factors > 1, and each generator's image in the free
    part H = H_1/torsion, written in a fixed basis of Z^b1."""

    b1: int
    torsion: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FoxMatrix:
    """Abelianized Fox-derivative matrix: one row per relator, one column
    per generator, entries in Z[H] as Laurent polynomials in b1 variables."""

    entries: tuple[tuple[LaurentPoly, ...], ...]
    abelianization: AbelianizationData
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else len(self.abelianization.images)

    @property
    def nvars(self) -> int:
        return self.abelianization.b1


# -- parsing and serialization ------------------------------------------------


def _parse_token(tok: str, gen_index: dict) -> tuple[int, int]:
    if "^" in tok:
        name, _, exp = tok.partition("^")
        try:
            e = int(exp)
        except ValueError:
            raise ParseError("malformed exponent in token %r" % tok)
        if e == 0:
            raise ParseError("zero exponent in token %r" % tok)
        if exp != str(e):
            raise ParseError("malformed exponent in token %r" % tok)
    else:
        name, e = tok, 1
    if name not in gen_index:
        raise ParseError("unknown generator %r" % name)
    return gen_index[name], e


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the line-oriented .fp format.

    First non-comment line: `gens <name> ...`; each later line
    `rel <token> ...` with tokens `name`, `name^-1`, or `name^k`.
    `#` starts a comment.  Relators that reduce to the empty word are kept
    and flagged in the presentation's warning list.
    """
    gens: list[str] | None = None
    gen_index: dict = {}
    relators: list[Word] = []
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, rest = parts[0], parts[1:]
        if head == "gens":
            if gens is not None:
                raise ParseError("line %d: duplicate gens line" % lineno)
            for name in rest:
                if not _NAME_RE.match(name):
                    raise ParseError("line %d: bad generator name %r" % (lineno, name))
                if name in gen_index:
                    raise ParseError(
                        "line %d: duplicate generator declaration %r" % (lineno, name)
                    )
                gen_index[name] = len(gen_index)
            gens = list(gen_index)
        elif head == "rel":
            if gens is None:
                raise ParseError("line %d: rel before gens" % lineno)
            try:
                w = Word.from_pairs(_parse_token(t, gen_index) for t in rest)
            except ParseError as exc:
                raise ParseError("line %d: %s" % (lineno, exc))
            if w.is_empty():
                warnings.append("line %d: relator reduces to the empty word" % lineno)
            relators.append(w)
        else:
            raise ParseError("line %d: expected 'gens' or 'rel', got %r" % (lineno, head))
    if gens is None:
        raise ParseError("no gens line found")
    return GroupPresentation(tuple(gens), tuple(relators), tuple(warnings))


def serialize_presentation(p: GroupPresentation) -> str:
    """Canonical .fp text: single spaces, freely reduced, collapsed exponents."""
    lines = ["gens" + "".join(" " + g for g in p.generators)]
    for r in p.relators:
        toks = []
        for g, e in r.syllables:
            toks.append(p.generators[g] if e == 1 else "%s^%d" % (p.generators[g], e))
        lines.append("rel" + "".join(" " + t for t in toks))
    return "\n".join(lines) + "\n"


# -- abelianization ------------------------------------------------------------


def abelianize(p: GroupPresentation) -> AbelianizationData:
    """b1, torsion invariant factors, and generator images in Z^b1, read off
    the Smith normal form of the abelianized relator matrix."""
    g = len(p.generators)
    rows = [r.abelian(g) for r in p.relators]
    if g == 0:
        return AbelianizationData(0, (), ())
    if not rows:
        rows = [(0,) * g]  # a zero row keeps the SNF shapes uniform
    R = exactla.IntMatrix.from_rows(rows)
    snf = exactla.smith_normal_form(R)
    diag = list(snf.D.diagonal()) + [0] * (g - min(R.rows, g))
    free_cols = [j for j in range(g) if j >= len(diag) or diag[j] == 0]
    torsion = tuple(d for d in diag if d > 1)
    V = snf.V
    # Deterministic basis: flip any free column whose first nonzero entry is
    # negative (composes the quotient with a diagonal +-1 automorphism).
    signs = []
    for j in free_cols:
        s = 1
        for i in range(g):
            if V[i, j]:
                s = 1 if V[i, j] > 0 else -1
                break
        signs.append(s)
    images = tuple(
        tuple(s * V[i, j] for s, j in zip(signs, free_cols)) for i in range(g)
    )
    return AbelianizationData(len(free_cols), torsion, images)


# -- Fox calculus ---------------------------------------------------------------


def fox_matrix(p: GroupPresentation) -> FoxMatrix:
    """Abelianized Fox derivatives, with the left-action convention
    d(uv)/dx = du/dx + u dv/dx, dx/dx = 1, d(x^-1)/dx = -x^-1."""
    ab = abelianize(p)
    n = ab.b1
    g = len(p.generators)
    warnings = ()
    if n == 0:
        warnings = ("abelianization has rank 0; Fox entries are integers",)
    rows = []
    for r in p.relators:
        row = [LaurentPoly.zero(n) for _ in range(g)]
        prefix = [0] * n
        for gen, step in r.letters():
            img = ab.images[gen]
            if step == 1:
                row[gen] = row[gen] + LaurentPoly.monomial(n, tuple(prefix), 1)
                for i in range(n):
                    prefix[i] += img[i]
            else:
                for i in range(n):
                    prefix[i] -= img[i]
                row[gen] = row[gen] + LaurentPoly.monomial(n, tuple(prefix), -1)
        rows.append(tuple(row))
    return FoxMatrix(tuple(rows), ab, warnings)


# -- free products ---------------------------------------------------------------


def _fresh_name(name: str, taken: set) -> str:
    while name in taken:
        name = name + "_2"
    return name


def free_product(p1: GroupPresentation, p2: GroupPresentation) -> GroupPresentation:
    """Disjoint union of generators and relators; clashing names from the
    second factor get a `_2` suffix (repeated until unique)."""
    names = list(p1.generators)
    taken = set(names)
    for g in p2.generators:
        fresh = _fresh_name(g, taken)
        names.append(fresh)
        taken.add(fresh)
    offset = len(p1.generators)
    relators = list(p1.relators) + [r.shift_indices(offset) for r in p2.relators]
    return GroupPresentation(tuple(names), tuple(relators))


def free_product_many(ps) -> GroupPresentation:
    ps = list(ps)
    if not ps:
        raise DomainError("free product of an empty family")
    return reduce(free_product, ps)
