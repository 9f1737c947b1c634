"""Dualities and free functors between Ord, OrdT, OrdI and OrdIt.

Each functor has its own closed form. Where one functor is known to be
a composite of others (``dual_t == op . lad``, ``birkhoff_ord == op . bracket``,
and so on) the law suites compare the two routes; nothing here is defined in
terms of the identity it is supposed to satisfy.

Cut convention: the element ``k`` of ``bracket``'s source ``n + 1`` is the cut
of ``n`` with ``k`` points below it, and ``bracket(f)(k)`` counts the inputs
falling strictly below that cut.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable

from .core import DomainError, MonMap, Tag, op_map, require

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"


def lad(f: MonMap) -> MonMap:
    """Left adjoint ``j -> min{x : f(x) >= j}`` of a max-preserving map."""
    require(f, Tag.ORD_T)
    v = f.values
    return MonMap._unchecked(
        f.dst, f.src, tuple(bisect_left(v, j) for j in range(f.dst)))


def rad(f: MonMap) -> MonMap:
    """Right adjoint ``j -> max{x : f(x) <= j}`` of a min-preserving map."""
    require(f, Tag.ORD_I)
    v = f.values
    return MonMap._unchecked(
        f.dst, f.src, tuple(bisect_right(v, j) - 1 for j in range(f.dst)))


def dual_t(f: MonMap) -> MonMap:
    """Self-duality of OrdT, computed as precomposition on ``Hom_OrdT(-, 2)``.

    The point ``k`` of ``D(n)`` is the map ``n -> 2`` with ``n - 1 - k`` zeros.
    """
    require(f, Tag.ORD_T)
    m, n, v = f.src, f.dst, f.values
    return MonMap._unchecked(
        n, m, tuple(m - 1 - bisect_left(v, n - 1 - k) for k in range(n)))


def dual_i(f: MonMap) -> MonMap:
    """Self-duality of OrdI; the point ``k`` has ``n - k`` zeros."""
    require(f, Tag.ORD_I)
    m, n, v = f.src, f.dst, f.values
    return MonMap._unchecked(
        n, m, tuple(m - bisect_left(v, n - k) for k in range(n)))


def bracket(f: MonMap) -> MonMap:
    """Cut functor: ``f: m -> n`` gives ``(n+1) -> (m+1)``, ``k -> #{x : f(x) < k}``."""
    v = f.values
    return MonMap._unchecked(
        f.dst + 1, f.src + 1, tuple(bisect_left(v, k) for k in range(f.dst + 1)))


def birkhoff_ord(f: MonMap) -> MonMap:
    """Birkhoff dual ``B(f)(k) = #{x : f(x) >= n - k}`` for ``f: m -> n``."""
    m, n, v = f.src, f.dst, f.values
    return MonMap._unchecked(
        n + 1, m + 1, tuple(m - bisect_left(v, n - k) for k in range(n + 1)))


def birkhoff_it(g: MonMap) -> MonMap:
    """Inverse Birkhoff dual, from OrdIt back to Ord.

    For ``g: (n+1) -> (m+1)`` the result ``f: m -> n`` satisfies
    ``f(x) >= n - k  iff  g(k) >= m - x``.
    """
    require(g, Tag.ORD_IT)
    n, m, v = g.src - 1, g.dst - 1, g.values
    return MonMap._unchecked(
        m, n, tuple(n - bisect_left(v, m - x) for x in range(m)))


def adjoin_top(f: MonMap) -> MonMap:
    """Free OrdT map on an Ord map: a new top goes to the new top."""
    return MonMap._unchecked(f.src + 1, f.dst + 1, f.values + (f.dst,))


def adjoin_bottom(f: MonMap) -> MonMap:
    """Free OrdI map on an Ord map: a new bottom goes to the new bottom."""
    return MonMap._unchecked(
        f.src + 1, f.dst + 1, (0,) + tuple(v + 1 for v in f.values))


def adjoin_bottom_t(f: MonMap) -> MonMap:
    return adjoin_bottom(require(f, Tag.ORD_T))


def adjoin_top_i(f: MonMap) -> MonMap:
    return adjoin_top(require(f, Tag.ORD_I))


def top_unit(n: int) -> MonMap:
    """Unit ``n -> t(n)`` of the free OrdT adjunction: the inclusion."""
    return MonMap._unchecked(n, n + 1, tuple(range(n)))


def bottom_unit(n: int) -> MonMap:
    """Unit ``n -> i(n)`` of the free OrdI adjunction: the shift."""
    return MonMap._unchecked(n, n + 1, tuple(range(1, n + 1)))


def top_transpose(u: MonMap) -> MonMap:
    """Adjunct ``t(I) -> X`` in OrdT of an Ord map ``u: I -> X``."""
    if u.dst == 0:
        raise DomainError(f"{u} has empty target")
    return MonMap._unchecked(u.src + 1, u.dst, u.values + (u.dst - 1,))


def bottom_transpose(u: MonMap) -> MonMap:
    """Adjunct ``i(I) -> X`` in OrdI of an Ord map ``u: I -> X``."""
    if u.dst == 0:
        raise DomainError(f"{u} has empty target")
    return MonMap._unchecked(u.src + 1, u.dst, (0,) + u.values)


@dataclass(frozen=True)
class FunctorSpec:
    name: str
    src_tag: Tag
    dst_tag: Tag
    variance: str
    object_map: Callable[[int], int]
    morphism_map: Callable[[MonMap], MonMap]

    def __call__(self, f: MonMap) -> MonMap:
        return self.morphism_map(f)


# lambdas resolve the module globals at call time, so tests can patch them
FUNCTORS: dict[str, FunctorSpec] = {
    spec.name: spec for spec in [
        FunctorSpec("lad", Tag.ORD_T, Tag.ORD_I, CONTRAVARIANT,
                    lambda n: n, lambda f: lad(f)),
        FunctorSpec("rad", Tag.ORD_I, Tag.ORD_T, CONTRAVARIANT,
                    lambda n: n, lambda f: rad(f)),
        FunctorSpec("dualT", Tag.ORD_T, Tag.ORD_T, CONTRAVARIANT,
                    lambda n: n, lambda f: dual_t(f)),
        FunctorSpec("dualI", Tag.ORD_I, Tag.ORD_I, CONTRAVARIANT,
                    lambda n: n, lambda f: dual_i(f)),
        FunctorSpec("B", Tag.ORD, Tag.ORD_IT, CONTRAVARIANT,
                    lambda n: n + 1, lambda f: birkhoff_ord(f)),
        FunctorSpec("B-inv", Tag.ORD_IT, Tag.ORD, CONTRAVARIANT,
                    lambda n: n - 1, lambda f: birkhoff_it(f)),
        FunctorSpec("bracket", Tag.ORD, Tag.ORD_IT, CONTRAVARIANT,
                    lambda n: n + 1, lambda f: bracket(f)),
        FunctorSpec("t", Tag.ORD, Tag.ORD_T, COVARIANT,
                    lambda n: n + 1, lambda f: adjoin_top(f)),
        FunctorSpec("i", Tag.ORD, Tag.ORD_I, COVARIANT,
                    lambda n: n + 1, lambda f: adjoin_bottom(f)),
        FunctorSpec("iT", Tag.ORD_T, Tag.ORD_IT, COVARIANT,
                    lambda n: n + 1, lambda f: adjoin_bottom_t(f)),
        FunctorSpec("tI", Tag.ORD_I, Tag.ORD_IT, COVARIANT,
                    lambda n: n + 1, lambda f: adjoin_top_i(f)),
        FunctorSpec("op", Tag.ORD, Tag.ORD, COVARIANT,
                    lambda n: n, lambda f: op_map(f)),
    ]
}


def get_functor(name: str) -> FunctorSpec:
    try:
        return FUNCTORS[name]
    except KeyError:
        known = ", ".join(FUNCTORS)
        raise DomainError(f"unknown functor {name!r} (known: {known})") from None


def apply_functor(name: str, f: MonMap) -> MonMap:
    spec = get_functor(name)
    require(f, spec.src_tag)
    return spec(f)
