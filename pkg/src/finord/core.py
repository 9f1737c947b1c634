"""Skeletal finite total orders and monotone maps between them.

An object is just its size ``n``; its elements are ``0, 1, ..., n - 1`` in
natural order. Finite total orders are rigid, so working with sizes loses
nothing: every canonical isomorphism is an identity and all diagrams are
checked as strict equalities of value sequences.

A morphism is a :class:`MonMap`: a weakly increasing value sequence. The four
categories ``Ord``, ``OrdT``, ``OrdI`` and ``OrdIt`` share these morphisms and
differ only by which endpoints must be preserved (see :class:`Tag`).
"""
from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator

EMPTY = 0
PT = 1
UNIV = 1
DYAD = 2


class OrdError(ValueError):
    """Base class for every error raised by this package."""


class DomainError(OrdError):
    pass


class CompositionError(OrdError):
    pass


class MapLiteralError(OrdError):
    pass


_set = object.__setattr__


class Tag(enum.Enum):
    ORD = "Ord"
    ORD_T = "OrdT"
    ORD_I = "OrdI"
    ORD_IT = "OrdIt"

    def __str__(self):
        return self.value

    @property
    def pointed(self) -> bool:
        return self is not Tag.ORD

    @property
    def min_size(self) -> int:
        return 1 if self.pointed else 0

    @classmethod
    def parse(cls, text: str) -> "Tag":
        for tag in cls:
            if text.lower() in (tag.value.lower(), tag.name.lower()):
                return tag
        raise OrdError(f"unknown category tag {text!r}")


@dataclass(frozen=True, slots=True)
class MonMap:
    """A weakly increasing map ``src -> dst`` given by its value sequence."""

    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        if self.src < 0 or self.dst < 0:
            raise DomainError(f"negative size in {self.src}->{self.dst}")
        if len(self.values) != self.src:
            raise DomainError(
                f"expected {self.src} values, got {len(self.values)}")
        prev = 0
        for x, v in enumerate(self.values):
            if not 0 <= v < self.dst:
                raise DomainError(
                    f"value {v} at index {x} out of range for target {self.dst}")
            if v < prev:
                raise DomainError(f"not monotone at index {x}: {prev} > {v}")
            prev = v

    @classmethod
    def _unchecked(cls, src: int, dst: int, values: tuple[int, ...]) -> "MonMap":
        # hot path for enumeration and the law sweeps
        self = object.__new__(cls)
        _set(self, "src", src)
        _set(self, "dst", dst)
        _set(self, "values", values)
        return self

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __str__(self):
        return format_map(self)

    def __repr__(self):
        return f"MonMap({format_map(self)!r})"


def identity(n: int) -> MonMap:
    return MonMap._unchecked(n, n, tuple(range(n)))


def compose(f: MonMap, g: MonMap) -> MonMap:
    """``f`` then ``g``: ``compose(f, g)(x) == g(f(x))``."""
    if f.dst != g.src:
        raise CompositionError(
            f"cannot compose {f} then {g}: {f.dst} != {g.src}")
    gv = g.values
    return MonMap._unchecked(f.src, g.dst, tuple(gv[v] for v in f.values))


def op_map(f: MonMap) -> MonMap:
    """Reverse both orders: ``x -> (dst-1) - f(src-1-x)``."""
    top = f.dst - 1
    return MonMap._unchecked(
        f.src, f.dst, tuple(top - v for v in reversed(f.values)))


_KEEPS_MIN = frozenset({Tag.ORD_I, Tag.ORD_IT})
_KEEPS_MAX = frozenset({Tag.ORD_T, Tag.ORD_IT})


def membership_failure(f: MonMap, tag: Tag) -> str | None:
    """Describe why ``f`` is not a morphism of ``tag``, or None if it is."""
    if tag is Tag.ORD:
        return None
    v = f.values
    if not v or f.dst == 0:
        return f"{tag} objects are nonempty, got {f.src}->{f.dst}"
    if v[0] and tag in _KEEPS_MIN:
        return f"f(0)={v[0]} != 0 (minimum not preserved)"
    if v[-1] != f.dst - 1 and tag in _KEEPS_MAX:
        return (f"f({f.src - 1})={v[-1]} != {f.dst - 1} "
                "(maximum not preserved)")
    return None


def is_member(f: MonMap, tag: Tag) -> bool:
    return membership_failure(f, tag) is None


def require(f: MonMap, tag: Tag) -> MonMap:
    """Return ``f`` unchanged, or raise :class:`DomainError` if not in ``tag``."""
    reason = membership_failure(f, tag)
    if reason is not None:
        raise DomainError(f"{f} is not in {tag}: {reason}")
    return f


def _check_sizes(m: int, n: int, tag: Tag):
    if m < 0 or n < 0:
        raise DomainError(f"negative size in {m}->{n}")
    if tag.pointed and (m == 0 or n == 0):
        raise DomainError(f"{tag} has no empty object, got {m}->{n}")


@functools.lru_cache(maxsize=None)
def _hom_values(m: int, n: int, tag: Tag) -> tuple[tuple[int, ...], ...]:
    if tag is Tag.ORD:
        return tuple(combinations_with_replacement(range(n), m))
    if tag is Tag.ORD_T:
        return tuple(c + (n - 1,)
                     for c in combinations_with_replacement(range(n), m - 1))
    if tag is Tag.ORD_I:
        return tuple((0,) + c
                     for c in combinations_with_replacement(range(n), m - 1))
    if m == 1:
        return ((0,),) if n == 1 else ()
    return tuple((0,) + c + (n - 1,)
                 for c in combinations_with_replacement(range(n), m - 2))


def enumerate_hom(m: int, n: int, tag: Tag = Tag.ORD) -> list[MonMap]:
    """All morphisms ``m -> n`` of ``tag`` in lexicographic order."""
    _check_sizes(m, n, tag)
    return [MonMap._unchecked(m, n, v) for v in _hom_values(m, n, tag)]


def hom_count(m: int, n: int, tag: Tag = Tag.ORD) -> int:
    """Closed-form size of ``Hom_tag(m, n)`` (stars and bars)."""
    _check_sizes(m, n, tag)
    if tag is Tag.ORD:
        if m == 0:
            return 1
        return comb(m + n - 1, m)
    if tag in (Tag.ORD_T, Tag.ORD_I):
        return comb(m + n - 2, m - 1)
    if m == 1:
        return 1 if n == 1 else 0
    return comb(m + n - 3, m - 2)


def maps_upto(bound: int, tag: Tag = Tag.ORD) -> Iterator[MonMap]:
    """Every morphism of ``tag`` whose source and target sizes are <= bound."""
    for m in range(tag.min_size, bound + 1):
        for n in range(tag.min_size, bound + 1):
            yield from enumerate_hom(m, n, tag)


def composable_pairs(bound: int, tag: Tag = Tag.ORD
                     ) -> Iterator[tuple[MonMap, MonMap]]:
    sizes = range(tag.min_size, bound + 1)
    for b in sizes:
        into = [f for a in sizes for f in enumerate_hom(a, b, tag)]
        out = [g for c in sizes for g in enumerate_hom(b, c, tag)]
        for f in into:
            for g in out:
                yield f, g


def hom_leq(f: MonMap, g: MonMap) -> bool:
    """Pointwise order on a hom-set."""
    if (f.src, f.dst) != (g.src, g.dst):
        raise DomainError(f"{f} and {g} are not parallel")
    return all(a <= b for a, b in zip(f.values, g.values))


@dataclass(frozen=True)
class HomPoset:
    src: int
    dst: int
    tag: Tag
    elements: tuple[MonMap, ...]
    leq: tuple[tuple[bool, ...], ...]

    def __len__(self):
        return len(self.elements)

    def is_chain(self) -> bool:
        n = len(self.elements)
        return all(self.leq[a][b] or self.leq[b][a]
                   for a in range(n) for b in range(n))

    def sorted_chain(self) -> list[MonMap]:
        """Elements in increasing order; only valid when :meth:`is_chain`."""
        if not self.is_chain():
            raise DomainError(f"Hom_{self.tag}({self.src}, {self.dst}) "
                              "is not a chain")
        idx = range(len(self.elements))
        # in a chain, rank = number of elements below
        rank = {a: sum(self.leq[b][a] for b in idx) for a in idx}
        return [self.elements[a] for a in sorted(idx, key=rank.__getitem__)]


def hom_poset(m: int, n: int, tag: Tag = Tag.ORD) -> HomPoset:
    elements = tuple(enumerate_hom(m, n, tag))
    leq = tuple(tuple(hom_leq(f, g) for g in elements) for f in elements)
    return HomPoset(m, n, tag, elements, leq)


def automorphisms(n: int, tag: Tag = Tag.ORD) -> list[MonMap]:
    """Endomaps of ``n`` in ``tag`` that have a two-sided inverse there."""
    endos = enumerate_hom(n, n, tag)
    members = {f.values for f in endos}
    ids = identity(n)
    found = []
    for f in endos:
        # only a bijection can have an inverse, and then it is unique
        if len(set(f.values)) != n:
            continue
        inverse = tuple(sorted(range(n), key=f.values.__getitem__))
        if inverse not in members:
            continue
        g = MonMap._unchecked(n, n, inverse)
        if compose(f, g) == ids and compose(g, f) == ids:
            found.append(f)
    return found


def threshold(f: MonMap) -> int:
    """Number of points sent to 0 by a map into the two-element order."""
    if f.dst != DYAD:
        raise DomainError(f"threshold needs a map into {DYAD}, got {f}")
    return f.values.count(0)


def from_threshold(n: int, k: int) -> MonMap:
    """The map ``n -> 2`` sending exactly the first ``k`` points to 0."""
    if not 0 <= k <= n:
        raise DomainError(f"threshold {k} out of range for size {n}")
    return MonMap._unchecked(n, DYAD, (0,) * k + (1,) * (n - k))


_LITERAL = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*:\s*\[([^\]]*)\]\s*$")


def parse_map(text: str) -> MonMap:
    """Parse ``m->n:[v0 v1 ...]`` into a validated :class:`MonMap`."""
    match = _LITERAL.match(text)
    if match is None:
        raise MapLiteralError(
            f"syntax error in map literal {text!r}: expected 'm->n:[v0 v1 ...]'")
    m, n = int(match.group(1)), int(match.group(2))
    tokens = match.group(3).split()
    values = []
    for x, tok in enumerate(tokens):
        if not tok.isdigit():
            raise MapLiteralError(
                f"syntax error at index {x}: {tok!r} is not a natural number")
        values.append(int(tok))
    if len(values) != m:
        raise MapLiteralError(f"expected {m} values, got {len(values)}")
    for x, v in enumerate(values):
        if v >= n:
            raise MapLiteralError(
                f"range error at index {x}: {v} is not below {n}")
        if x and v < values[x - 1]:
            raise MapLiteralError(
                f"monotonicity error at index {x}: {values[x - 1]} > {v}")
    return MonMap(m, n, tuple(values))


def format_map(f: MonMap) -> str:
    return f"{f.src}->{f.dst}:[{' '.join(map(str, f.values))}]"

