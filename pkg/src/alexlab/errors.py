"""Exception hierarchy shared by the whole package.

The CLI maps these onto its exit-code contract: ParseError -> 1,
LimitError -> 2, DomainError -> 3.
"""


class AlexlabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AlexlabError):
    """Malformed input text: presentation files, Thurston data, torus specs."""


class LimitError(AlexlabError):
    """A documented computation limit was exceeded (e.g. gcd variable count)."""


class DomainError(AlexlabError):
    """Mathematically invalid input: dimension mismatches, non-unimodular
    monodromies, out-of-hypothesis calls."""
