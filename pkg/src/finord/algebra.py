"""Ordinal sum, interval join, module actions and pairings.

Ordinal sum ``osum`` stacks orders with the left argument in the lower block.
The interval join on OrdIt is *defined* by carrying ordinal sum across the
Birkhoff duality, and the actions of OrdIt on OrdT and OrdI by carrying it
across the self-dualities. Because the Birkhoff functor is contravariant it
reverses block order, so ``join_it_map(g, h)`` places ``h`` in the lower block;
:func:`glue` is the direct formula and the law suites check it against the
transported definitions.

Every result that is claimed to lie in a pointed category is re-validated with
:func:`~finord.core.require`, so an orientation mistake raises instead of
silently producing a map in the wrong category.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import duality
from .core import DomainError, MonMap, Tag, identity, op_map, require


@dataclass(frozen=True)
class Fibration:
    """An ordinal sum together with its projection onto the index order."""

    total: int
    base: int
    projection: MonMap


def osum(sizes: Sequence[int]) -> Fibration:
    """Indexed ordinal sum: block ``i`` has ``sizes[i]`` points, all over ``i``."""
    values = tuple(i for i, size in enumerate(sizes) for _ in range(size))
    base = len(sizes)
    return Fibration(len(values), base, MonMap._unchecked(len(values), base, values))


def fiber(fib: Fibration, i: int) -> int:
    """Size of the preimage of ``i``: the pullback of the projection along ``i``."""
    if not 0 <= i < fib.base:
        raise DomainError(f"index {i} out of range for base {fib.base}")
    return fib.projection.values.count(i)


def osum_map(fs: Sequence[MonMap]) -> MonMap:
    values: list[int] = []
    src = dst = 0
    for f in fs:
        values.extend(v + dst for v in f.values)
        src += f.src
        dst += f.dst
    return MonMap._unchecked(src, dst, tuple(values))


def osum2_map(f: MonMap, g: MonMap) -> MonMap:
    off = f.dst
    return MonMap._unchecked(
        f.src + g.src, f.dst + g.dst, f.values + tuple(v + off for v in g.values))


def glue(lower: MonMap, upper: MonMap) -> MonMap:
    """Stack two maps identifying the top of ``lower`` with the bottom of ``upper``.

    ``lower`` must preserve the maximum and ``upper`` the minimum, otherwise the
    shared point would have two images.
    """
    require(lower, Tag.ORD_T)
    require(upper, Tag.ORD_I)
    off = lower.dst - 1
    return MonMap._unchecked(
        lower.src + upper.src - 1, lower.dst + upper.dst - 1,
        lower.values + tuple(v + off for v in upper.values[1:]))


def join_it(sizes: Sequence[int]) -> int:
    """Size of the interval join of a family of OrdIt objects; the unit is 1."""
    for s in sizes:
        if s < 1:
            raise DomainError(f"OrdIt objects are nonempty, got size {s}")
    return sum(s - 1 for s in sizes) + 1


def join_it_embedding(sizes: Sequence[int]) -> MonMap:
    """The map ``B(I) -> join`` picking out the block boundaries, bottom first.

    Blocks are laid out in reverse index order: member 0 is the top block.
    """
    join_it(sizes)
    points = [0]
    for s in reversed(sizes):
        points.append(points[-1] + s - 1)
    return MonMap._unchecked(len(points), points[-1] + 1, tuple(points))


def pushout_size(e: MonMap, q: MonMap) -> int:
    """Size of the OrdIt pushout of ``e: A -> C`` along ``q: A -> 2``.

    Everything up to the image of the last point ``q`` sends to 0 collapses to
    the bottom, everything from the image of the first point sent to 1
    collapses to the top; what survives is the interval between them.
    """
    require(e, Tag.ORD_IT)
    require(q, Tag.ORD_IT)
    if q.dst != 2 or q.src != e.src:
        raise DomainError(f"{q} is not a map {e.src} -> 2")
    cut = q.values.count(0)
    return e.values[cut] - e.values[cut - 1] + 1


def join_it_map(*fs: MonMap) -> MonMap:
    """Interval join of OrdIt maps, obtained from ordinal sum through Birkhoff."""
    for f in fs:
        require(f, Tag.ORD_IT)
    return duality.birkhoff_ord(osum_map([duality.birkhoff_it(f) for f in fs]))


def act_cov_t(a: MonMap, x: MonMap) -> MonMap:
    """Ord acting on OrdT from the left: ``a`` below ``x``."""
    require(x, Tag.ORD_T)
    return require(osum2_map(a, x), Tag.ORD_T)


def act_contra_i(x: MonMap, a: MonMap) -> MonMap:
    """Ord acting on OrdI from the right: ``a`` above ``x``."""
    require(x, Tag.ORD_I)
    return require(osum2_map(x, a), Tag.ORD_I)


def pair_it(x: MonMap, y: MonMap) -> MonMap:
    """OrdIt-valued pairing of an OrdI map (lower) with an OrdT map (upper)."""
    require(x, Tag.ORD_I)
    require(y, Tag.ORD_T)
    return require(osum2_map(x, y), Tag.ORD_IT)


def sigma_act_t(j: MonMap, x: MonMap) -> MonMap:
    """OrdIt acting on OrdT, carried over from ``act_cov_t`` by the dualities.

    Equal to ``glue(x, j)``; sizes satisfy ``|result| = |j| + |x| - 1``.
    """
    require(j, Tag.ORD_IT)
    require(x, Tag.ORD_T)
    moved = osum2_map(duality.birkhoff_it(j), duality.dual_t(x))
    return require(duality.dual_t(moved), Tag.ORD_T)


def sigma_act_i(x: MonMap, j: MonMap) -> MonMap:
    """Mirror image of :func:`sigma_act_t` under ``op``; equal to ``glue(j, x)``."""
    require(x, Tag.ORD_I)
    require(j, Tag.ORD_IT)
    return require(op_map(sigma_act_t(op_map(j), op_map(x))), Tag.ORD_I)


def sigma_pair(x: MonMap, y: MonMap) -> MonMap:
    """Ord-valued pairing corresponding to :func:`pair_it` across the dualities."""
    return duality.birkhoff_it(pair_it(duality.dual_i(x), duality.dual_t(y)))


def linearity_witness_i(x: int, a: int) -> MonMap:
    """Comparison ``i(x + a) -> i(x) + a``: the adjunct of ``unit_x + id_a``."""
    u = osum2_map(duality.bottom_unit(x), identity(a))
    return require(duality.bottom_transpose(u), Tag.ORD_I)


def linearity_witness_t(a: int, x: int) -> MonMap:
    """Comparison ``t(a + x) -> a + t(x)``: the adjunct of ``id_a + unit_x``."""
    u = osum2_map(identity(a), duality.top_unit(x))
    return require(duality.top_transpose(u), Tag.ORD_T)
