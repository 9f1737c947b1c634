"""Exhaustive desk-scale checks of the identities between the functors.

Every suite enumerates *all* instances up to a size bound in a fixed order
and evaluates a pure predicate on each. Suites call the library through module
attributes (``duality.bracket`` rather than a captured reference), so a test can
monkeypatch one function with a corrupted version and watch the suites that
depend on it fail.
"""
from __future__ import annotations

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import algebra, core, duality
from .core import (DYAD, PT, DomainError, MonMap, OrdError, Tag, compose,
                   enumerate_hom, identity, is_member, maps_upto, op_map)
from .duality import CONTRAVARIANT, COVARIANT, FunctorSpec

MAX_REPORTED_FAILURES = 10

Mismatch = Optional[tuple[str, str]]


@dataclass(frozen=True)
class Failure:
    inputs: tuple[str, ...]
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {"inputs": list(self.inputs), "expected": self.expected,
                "actual": self.actual}


@dataclass
class LawReport:
    suite: str
    bound: int
    instances: int = 0
    failed: int = 0
    failures: list[Failure] = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, instance: tuple, mismatch: tuple[str, str]):
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(
                Failure(tuple(map(render, instance)), *mismatch))

    def to_dict(self) -> dict:
        return {"suite": self.suite, "bound": self.bound,
                "instances": self.instances, "failed": self.failed,
                "failures": [f.to_dict() for f in self.failures],
                "millis": self.millis}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.suite} bound={self.bound} "
                f"instances={self.instances}")
        if not self.passed:
            line += f" failures={self.failed}"
        return line


@dataclass(frozen=True)
class LawSuite:
    name: str
    arity: int
    description: str
    instances: Callable[[int], Iterable[tuple]]
    predicate: Callable[..., Mismatch]
    default_bound: int


def render(x) -> str:
    if isinstance(x, MonMap):
        return core.format_map(x)
    return str(x)


def expect(*checks) -> Mismatch:
    """First ``(label, expected, actual)`` triple that disagrees, rendered."""
    for label, expected, actual in checks:
        if expected != actual:
            return f"{label}: {render(expected)}", render(actual)
    return None


def evaluate(name: str, bound: int, instances: Iterable[tuple],
             predicate: Callable[..., Mismatch]) -> LawReport:
    report = LawReport(name, bound)
    start = time.perf_counter()
    for inst in instances:
        report.instances += 1
        try:
            mismatch = predicate(*inst)
        except OrdError as exc:
            mismatch = ("no error", f"{type(exc).__name__}: {exc}")
        if mismatch is not None:
            report.record(inst, mismatch)
    report.millis = round((time.perf_counter() - start) * 1000)
    return report


# ---------------------------------------------------------------- functors

def composite(first: FunctorSpec, second: FunctorSpec,
              dst_tag: Tag | None = None) -> FunctorSpec:
    """``first`` then ``second``; ``dst_tag`` narrows the landing category."""
    variance = COVARIANT if first.variance == second.variance else CONTRAVARIANT
    return FunctorSpec(
        f"{second.name}.{first.name}", first.src_tag,
        dst_tag or second.dst_tag, variance,
        lambda n: second.object_map(first.object_map(n)),
        lambda f: second.morphism_map(first.morphism_map(f)))


def _image_problem(F: FunctorSpec, f: MonMap, image: MonMap) -> Mismatch:
    a, b = F.object_map(f.src), F.object_map(f.dst)
    want = (a, b) if F.variance == COVARIANT else (b, a)
    got = (image.src, image.dst)
    if got != want:
        return f"{F.name} sizes: {want[0]}->{want[1]}", f"{got[0]}->{got[1]}"
    reason = core.membership_failure(image, F.dst_tag)
    if reason is not None:
        return f"{F.name} lands in {F.dst_tag}", f"{render(image)}: {reason}"
    return None


def functor_law_instances(F: FunctorSpec, bound: int) -> Iterator[tuple]:
    for n in range(F.src_tag.min_size, bound + 1):
        yield (identity(n),)
    yield from core.composable_pairs(bound, F.src_tag)


def functor_law(F: FunctorSpec, f: MonMap, g: MonMap | None = None) -> Mismatch:
    if g is None:
        image = F(f)
        return (_image_problem(F, f, image)
                or expect((f"{F.name} preserves identity",
                           identity(F.object_map(f.src)), image)))
    Ff, Fg = F(f), F(g)
    problem = _image_problem(F, f, Ff) or _image_problem(F, g, Fg)
    if problem:
        return problem
    want = compose(Ff, Fg) if F.variance == COVARIANT else compose(Fg, Ff)
    return expect((f"{F.name} preserves composition", want, F(compose(f, g))))


def check_functor(F: FunctorSpec, bound: int = 4) -> LawReport:
    """Identity and composition preservation over everything within ``bound``."""
    return evaluate(f"functor:{F.name}", bound,
                    functor_law_instances(F, bound),
                    functools.partial(functor_law, F))


def check_equal_functors(F: FunctorSpec, G: FunctorSpec,
                         bound: int = 5) -> LawReport:
    """Check that ``F`` and ``G`` agree on every object and morphism."""
    if (F.src_tag, F.dst_tag, F.variance) != (G.src_tag, G.dst_tag, G.variance):
        raise DomainError(
            f"signature mismatch: {F.name} is {F.src_tag}->{F.dst_tag} "
            f"{F.variance}, {G.name} is {G.src_tag}->{G.dst_tag} {G.variance}")

    def same(f: MonMap) -> Mismatch:
        Ff, Gf = F(f), G(f)
        return (_image_problem(F, f, Ff) or _image_problem(G, f, Gf)
                or expect((f"{F.name} == {G.name}", Ff, Gf)))

    insts = ((f,) for f in maps_upto(bound, F.src_tag))
    return evaluate(f"equal:{F.name}:{G.name}", bound, insts, same)


# ------------------------------------------------------------------ oracles

def brute_force_hom(m: int, n: int, tag: Tag) -> list[tuple[int, ...]]:
    """All functions ``m -> n`` filtered down to ``tag`` morphisms."""
    if tag.pointed and (m == 0 or n == 0):
        raise DomainError(f"{tag} has no empty object")
    out = []
    for values in product(range(n), repeat=m):
        if any(a > b for a, b in zip(values, values[1:])):
            continue
        if tag in (Tag.ORD_I, Tag.ORD_IT) and values[0] != 0:
            continue
        if tag in (Tag.ORD_T, Tag.ORD_IT) and values[-1] != n - 1:
            continue
        out.append(values)
    return out


@functools.lru_cache(maxsize=None)
def _dyad_chain(n: int, tag: Tag) -> tuple[MonMap, ...]:
    return tuple(core.hom_poset(n, DYAD, tag).sorted_chain())


def precomposition_dual(f: MonMap, tag: Tag) -> MonMap:
    """Action of ``Hom_tag(-, 2)`` on ``f``, with each hom-chain read bottom up."""
    source = _dyad_chain(f.dst, tag)
    target = _dyad_chain(f.src, tag)
    index = {h.values: k for k, h in enumerate(target)}
    return MonMap(len(source), len(target),
                  tuple(index[compose(f, h).values] for h in source))


# ---------------------------------------------------------- instance spaces

@functools.lru_cache(maxsize=None)
def _maps(bound: int, tag: Tag) -> tuple[MonMap, ...]:
    return tuple(maps_upto(bound, tag))


def _singles(tag: Tag) -> Callable[[int], Iterator[tuple]]:
    return lambda bound: ((f,) for f in _maps(bound, tag))


def _pairs(t1: Tag, t2: Tag) -> Callable[[int], Iterator[tuple]]:
    return lambda bound: product(_maps(bound, t1), _maps(bound, t2))


def _triples(t1: Tag, t2: Tag, t3: Tag) -> Callable[[int], Iterator[tuple]]:
    return lambda bound: product(_maps(bound, t1), _maps(bound, t2),
                                 _maps(bound, t3))


def _size_pairs(lo: int) -> Callable[[int], Iterator[tuple]]:
    return lambda bound: product(range(lo, bound + 1), repeat=2)


def _labelled(*parts: tuple[str, Callable[[int], Iterable[tuple]]]):
    def gen(bound: int) -> Iterator[tuple]:
        for label, inner in parts:
            for inst in inner(bound):
                yield (label, *inst)
    return gen


# -------------------------------------------------------------- predicates

def _counts(m: int, n: int) -> Mismatch:
    for tag in Tag:
        if tag.pointed and (m == 0 or n == 0):
            continue
        listed = [f.values for f in enumerate_hom(m, n, tag)]
        brute = brute_force_hom(m, n, tag)
        bad = expect(
            (f"Hom_{tag} enumeration", brute, listed),
            (f"|Hom_{tag}({m},{n})| formula", len(brute),
             core.hom_count(m, n, tag)))
        if bad:
            return bad
    return expect((f"|Hom_Ord({m},{n})| == |Hom_OrdIt({n + 1},{m + 1})|",
                   len(enumerate_hom(m, n)),
                   len(enumerate_hom(n + 1, m + 1, Tag.ORD_IT))))


def _rigidity(n: int) -> Mismatch:
    return expect(*[(f"Aut_{tag}({n})", [identity(n)], core.automorphisms(n, tag))
                    for tag in Tag])


def _monicity(m: int, n: int) -> Mismatch:
    tags = [tag for tag in Tag if m >= tag.min_size and n >= tag.min_size]
    hom = {tag: [f.values for f in enumerate_hom(m, n, tag)] for tag in tags}
    for small, big in [(Tag.ORD_IT, Tag.ORD_T), (Tag.ORD_T, Tag.ORD),
                       (Tag.ORD_IT, Tag.ORD_I), (Tag.ORD_I, Tag.ORD)]:
        if small not in hom:
            continue
        bad = expect(
            (f"Hom_{small} injects into Hom_{big}",
             len(hom[small]), len(set(hom[small]) & set(hom[big]))))
        if bad:
            return bad
    if m == n:
        for tag in tags:
            for f in enumerate_hom(m, n, tag):
                if len(set(f.values)) == n:
                    inverse = MonMap(n, n, tuple(sorted(
                        range(n), key=f.values.__getitem__)))
                    bad = expect((f"inverse of {render(f)} lies in {tag}",
                                  True, is_member(inverse, tag)))
                    if bad:
                        return bad
    return None


def _tag_pullback(f: MonMap) -> Mismatch:
    return expect(("OrdIt == OrdI and OrdT", is_member(f, Tag.ORD_IT),
                   is_member(f, Tag.ORD_I) and is_member(f, Tag.ORD_T)))


def _functor_laws(name: str, f: MonMap, g: MonMap | None = None) -> Mismatch:
    return functor_law(duality.FUNCTORS[name], f, g)


def _functor_law_instances(bound: int) -> Iterator[tuple]:
    for name, F in duality.FUNCTORS.items():
        for inst in functor_law_instances(F, bound):
            yield (name, *inst)


def _op_involution(f: MonMap) -> Mismatch:
    g = op_map(f)
    return expect(
        ("op(op f)", f, op_map(g)),
        ("op swaps OrdT and OrdI", is_member(f, Tag.ORD_T), is_member(g, Tag.ORD_I)),
        ("op swaps OrdI and OrdT", is_member(f, Tag.ORD_I), is_member(g, Tag.ORD_T)))


def _galois(f: MonMap) -> Mismatch:
    # f runs over OrdT; op(f) runs over OrdI exactly once each
    g = op_map(f)
    left, right = duality.lad(f), duality.rad(g)
    for j in range(f.dst):
        for x in range(f.src):
            if (left(j) <= x) != (j <= f(x)):
                return (f"lad(j) <= x iff j <= f(x) at j={j}, x={x}",
                        f"lad={render(left)}")
    for j in range(g.dst):
        for x in range(g.src):
            if (x <= right(j)) != (g(x) <= j):
                return (f"x <= rad(j) iff g(x) <= j at j={j}, x={x}",
                        f"rad={render(right)}")
    return expect(("lad in OrdI", True, is_member(left, Tag.ORD_I)),
                  ("rad in OrdT", True, is_member(right, Tag.ORD_T)),
                  ("rad(lad f)", f, duality.rad(left)),
                  ("lad(rad g)", g, duality.lad(right)))


def _thm_2_9(f: MonMap) -> Mismatch:
    g = op_map(f)
    return expect(("dualT(dualT f)", f, duality.dual_t(duality.dual_t(f))),
                  ("dualI(dualI g)", g, duality.dual_i(duality.dual_i(g))))


def _birkhoff_inverse(side: str, f: MonMap) -> Mismatch:
    if side == "Ord":
        return expect(("B-inv(B f)", f, duality.birkhoff_it(duality.birkhoff_ord(f))))
    return expect(("B(B-inv g)", f, duality.birkhoff_ord(duality.birkhoff_it(f))))


def _birkhoff_instances(bound: int) -> Iterator[tuple]:
    for f in _maps(bound, Tag.ORD):
        yield ("Ord", f)
    for g in _maps(bound + 1, Tag.ORD_IT):
        yield ("OrdIt", g)


def _thm_2_23(f: MonMap) -> Mismatch:
    g = op_map(f)
    preimage_zero = [x for x in range(g.src) if g(x) <= 0]
    return expect(("dualT == op.lad", op_map(duality.lad(f)), duality.dual_t(f)),
                  ("dualI == op.rad", op_map(duality.rad(g)), duality.dual_i(g)),
                  ("rad(g)(0) == max g^-1(0)", max(preimage_zero),
                   duality.rad(g)(0)))


_HOM_DUALS = {"dualT": Tag.ORD_T, "dualI": Tag.ORD_I, "B": Tag.ORD,
              "B-inv": Tag.ORD_IT}


def _hom_dual(name: str, f: MonMap) -> Mismatch:
    return expect((f"{name} == Hom(-, 2) precomposition",
                   precomposition_dual(f, _HOM_DUALS[name]),
                   duality.FUNCTORS[name](f)))


def _hom_dual_instances(bound: int) -> Iterator[tuple]:
    for name, tag in _HOM_DUALS.items():
        for f in _maps(bound, tag):
            yield (name, f)


def _prop_2_12(kind: str, f: MonMap) -> Mismatch:
    d = duality
    if kind == "Ord":
        return expect(("B f == dualT(t f)", d.birkhoff_ord(f), d.dual_t(d.adjoin_top(f))),
                      ("B f == dualI(i f)", d.birkhoff_ord(f), d.dual_i(d.adjoin_bottom(f))))
    if kind == "OrdT":
        return expect(("iT(dualT g) == B g", d.birkhoff_ord(f), d.adjoin_bottom_t(d.dual_t(f))),
                      ("B-inv(iT g) == dualT g", d.dual_t(f),
                       d.birkhoff_it(d.adjoin_bottom_t(f))))
    if kind == "OrdI":
        return expect(("tI(dualI g) == B g", d.birkhoff_ord(f), d.adjoin_top_i(d.dual_i(f))),
                      ("B-inv(tI g) == dualI g", d.dual_i(f),
                       d.birkhoff_it(d.adjoin_top_i(f))))
    return expect(("dualT h == t(B-inv h)", d.adjoin_top(d.birkhoff_it(f)), d.dual_t(f)),
                  ("dualI h == i(B-inv h)", d.adjoin_bottom(d.birkhoff_it(f)), d.dual_i(f)))


_by_tag = _labelled(("Ord", _singles(Tag.ORD)), ("OrdT", _singles(Tag.ORD_T)),
                    ("OrdI", _singles(Tag.ORD_I)), ("OrdIt", _singles(Tag.ORD_IT)))


def _lemma_2_17(f: MonMap) -> Mismatch:
    d = duality
    return expect(("dualT(t f) == dualI(i f)", d.dual_t(d.adjoin_top(f)),
                   d.dual_i(d.adjoin_bottom(f))),
                  ("dualT(t f) == B f", d.birkhoff_ord(f), d.dual_t(d.adjoin_top(f))))


def _cor_2_24(f: MonMap) -> Mismatch:
    d = duality
    return expect(("lad(t f) == rad(i f)", d.lad(d.adjoin_top(f)),
                   d.rad(d.adjoin_bottom(f))))


def _notation_2_25(f: MonMap) -> Mismatch:
    d = duality
    b = d.bracket(f)
    return expect(("[f] in OrdIt", True, is_member(b, Tag.ORD_IT)),
                  ("[f] == lad(t f)", d.lad(d.adjoin_top(f)), b),
                  ("[f] == rad(i f)", d.rad(d.adjoin_bottom(f)), b))


def _lemma_2_26(f: MonMap) -> Mismatch:
    d = duality
    return expect(("B f == op[f]", op_map(d.bracket(f)), d.birkhoff_ord(f)),
                  ("B f == [op f]", d.bracket(op_map(f)), d.birkhoff_ord(f)))


def _prop_2_28(kind: str, f: MonMap) -> Mismatch:
    d = duality
    if kind == "Ord":
        return expect(("B(op f) == op(B f)", op_map(d.birkhoff_ord(f)),
                       d.birkhoff_ord(op_map(f))),
                      ("[f] == op(B f)", op_map(d.birkhoff_ord(f)), d.bracket(f)))
    if kind == "OrdT":
        return expect(("B g == iT(dualT g)", d.adjoin_bottom_t(d.dual_t(f)),
                       d.birkhoff_ord(f)),
                      ("op(dualT g) == dualI(op g)", op_map(d.dual_t(f)),
                       d.dual_i(op_map(f))))
    if kind == "OrdI":
        return expect(("B g == tI(dualI g)", d.adjoin_top_i(d.dual_i(f)),
                       d.birkhoff_ord(f)),
                      ("op(dualI g) == dualT(op g)", op_map(d.dual_i(f)),
                       d.dual_t(op_map(f))))
    return expect(("dualT h == t(B-inv h)", d.adjoin_top(d.birkhoff_it(f)), d.dual_t(f)),
                  ("dualI h == i(B-inv h)", d.adjoin_bottom(d.birkhoff_it(f)), d.dual_i(f)),
                  ("op(B-inv h) == B-inv(op h)", op_map(d.birkhoff_it(f)),
                   d.birkhoff_it(op_map(f))))


def _adjunctions(f: MonMap) -> Mismatch:
    # f: I -> X in Ord; its transposes and back again through the units
    if f.dst == 0:
        return None
    d = duality
    up, down = d.top_transpose(f), d.bottom_transpose(f)
    return expect(("top transpose in OrdT", True, is_member(up, Tag.ORD_T)),
                  ("bottom transpose in OrdI", True, is_member(down, Tag.ORD_I)),
                  ("unit then top transpose", f, compose(d.top_unit(f.src), up)),
                  ("unit then bottom transpose", f,
                   compose(d.bottom_unit(f.src), down)),
                  ("t f transposes f then unit", d.adjoin_top(f),
                   d.top_transpose(compose(f, d.top_unit(f.dst)))),
                  ("i f transposes f then unit", d.adjoin_bottom(f),
                   d.bottom_transpose(compose(f, d.bottom_unit(f.dst)))))


def _adjunction_counts(m: int, n: int) -> Mismatch:
    if n == 0:
        return None
    return expect(("|Hom_OrdT(t m, n)| == |Hom_Ord(m, n)|",
                   len(enumerate_hom(m, n)), len(enumerate_hom(m + 1, n, Tag.ORD_T))),
                  ("|Hom_OrdI(i m, n)| == |Hom_Ord(m, n)|",
                   len(enumerate_hom(m, n)), len(enumerate_hom(m + 1, n, Tag.ORD_I))))


# ---------------------------------------------------------------- algebra

def _monoid_osum(kind: str, *maps: MonMap) -> Mismatch:
    a = algebra
    if kind == "unit":
        (f,) = maps
        e = identity(0)
        return expect(("empty+f == f", f, a.osum2_map(e, f)),
                      ("f+empty == f", f, a.osum2_map(f, e)),
                      ("unary sum == f", f, a.osum_map([f])))
    if kind == "op":
        f, g = maps
        return expect(("op(f+g) == op g + op f", a.osum2_map(op_map(g), op_map(f)),
                       op_map(a.osum2_map(f, g))))
    f, g, h = maps
    fg = a.osum2_map(f, g)
    return expect(
        ("(f+g)+h == f+(g+h)", a.osum2_map(fg, h), a.osum2_map(f, a.osum2_map(g, h))),
        ("ternary == iterated binary", a.osum2_map(fg, h), a.osum_map([f, g, h])))


def _osum_fibers(*sizes: int) -> Mismatch:
    a = algebra
    fib = a.osum(sizes)
    flattened = a.osum([sizes[0] + sizes[1], sizes[2]]).total
    return expect(
        ("fibers recover the family", list(sizes),
         [a.fiber(fib, i) for i in range(fib.base)]),
        ("total == sum", sum(sizes), fib.total),
        ("block flattening", fib.total, flattened),
        ("projection lands in Ord", True, is_member(fib.projection, Tag.ORD)),
        ("empty family", 0, a.osum([]).total))


def _monoid_sigma(kind: str, *maps: MonMap) -> Mismatch:
    a = algebra
    if kind == "unit":
        (j,) = maps
        pt = identity(PT)
        return expect(("pt j == j", j, a.join_it_map(pt, j)),
                      ("j pt == j", j, a.join_it_map(j, pt)),
                      ("unary join == j", j, a.join_it_map(j)))
    if kind == "glue":
        j, k = maps
        jk = a.join_it_map(j, k)
        return expect(("join(j, k) == glue(k, j)", a.glue(k, j), jk),
                      ("|join| on objects",
                       (a.join_it([j.src, k.src]), a.join_it([j.dst, k.dst])),
                       (jk.src, jk.dst)))
    j, k, l = maps
    jk = a.join_it_map(j, k)
    return expect(
        ("(jk)l == j(kl)", a.join_it_map(jk, l), a.join_it_map(j, a.join_it_map(k, l))),
        ("ternary == iterated binary", a.join_it_map(jk, l), a.join_it_map(j, k, l)))


def _sigma_pushouts(*sizes: int) -> Mismatch:
    a = algebra
    e = a.join_it_embedding(sizes)
    index = len(sizes)
    legs = [duality.birkhoff_ord(MonMap(1, index, (i,))) for i in range(index)]
    return expect(
        ("embedding source is B(I)", index + 1, e.src),
        ("pushouts recover the family", list(sizes),
         [a.pushout_size(e, q) for q in legs]),
        ("join of B-transport", duality.birkhoff_ord(
            identity(sum(s - 1 for s in sizes))).src, a.join_it(sizes)))


def _osum_actions(kind: str, *maps: MonMap) -> Mismatch:
    a = algebra
    if kind == "unit":
        (x,) = maps
        e, y = identity(0), op_map(x)
        return expect(("empty . x == x", x, a.act_cov_t(e, x)),
                      ("y . empty == y", y, a.act_contra_i(y, e)))
    if kind == "op":
        a_, x = maps
        return expect(("op swaps the actions", op_map(a.act_cov_t(a_, x)),
                       a.act_contra_i(op_map(x), op_map(a_))))
    a_, b, x = maps
    y = op_map(x)
    return expect(
        ("(a+b) . x == a . (b . x)", a.act_cov_t(a.osum2_map(a_, b), x),
         a.act_cov_t(a_, a.act_cov_t(b, x))),
        ("y . (a+b) == (y . a) . b", a.act_contra_i(y, a.osum2_map(a_, b)),
         a.act_contra_i(a.act_contra_i(y, a_), b)))


def _sigma_actions(kind: str, *maps: MonMap) -> Mismatch:
    a = algebra
    if kind == "unit":
        (x,) = maps
        pt, y = identity(PT), op_map(x)
        return expect(("pt . x == x", x, a.sigma_act_t(pt, x)),
                      ("y . pt == y", y, a.sigma_act_i(y, pt)))
    if kind == "glue":
        j, x = maps
        y = op_map(x)
        return expect(("sigma_act_t == glue", a.glue(x, j), a.sigma_act_t(j, x)),
                      ("sigma_act_i == glue", a.glue(j, y), a.sigma_act_i(y, j)))
    j, k, x = maps
    y = op_map(x)
    return expect(
        ("(jk) . x == j . (k . x)", a.sigma_act_t(j, a.sigma_act_t(k, x)),
         a.sigma_act_t(a.join_it_map(j, k), x)),
        ("y . (jk) == (y . j) . k", a.sigma_act_i(a.sigma_act_i(y, j), k),
         a.sigma_act_i(y, a.join_it_map(j, k))))


def _thm_3_12(f: MonMap, g: MonMap) -> Mismatch:
    a, d = algebra, duality
    return expect(("i(f+g) == i(f)+g", a.osum2_map(d.adjoin_bottom(f), g),
                   d.adjoin_bottom(a.osum2_map(f, g))))


def _thm_3_12_witness(x: int, n: int) -> Mismatch:
    a, d = algebra, duality
    w = a.linearity_witness_i(x, n)
    return expect(("witness is the identity", identity(x + n + 1), w),
                  ("unit triangle", a.osum2_map(d.bottom_unit(x), identity(n)),
                   compose(d.bottom_unit(x + n), w)))


def _cor_3_13(f: MonMap, g: MonMap) -> Mismatch:
    a, d = algebra, duality
    return expect(("t(f+g) == f+t(g)", a.osum2_map(f, d.adjoin_top(g)),
                   d.adjoin_top(a.osum2_map(f, g))),
                  ("op carries the bottom version", op_map(d.adjoin_top(a.osum2_map(f, g))),
                   d.adjoin_bottom(a.osum2_map(op_map(g), op_map(f)))))


def _cor_3_13_witness(n: int, x: int) -> Mismatch:
    a, d = algebra, duality
    w = a.linearity_witness_t(n, x)
    return expect(("witness is the identity", identity(n + x + 1), w),
                  ("unit triangle", a.osum2_map(identity(n), d.top_unit(x)),
                   compose(d.top_unit(n + x), w)),
                  ("op of the bottom witness", op_map(a.linearity_witness_i(x, n)), w))


def _thm_3_12_both(kind: str, p, q) -> Mismatch:
    return _thm_3_12(p, q) if kind == "maps" else _thm_3_12_witness(p, q)


def _cor_3_13_both(kind: str, p, q) -> Mismatch:
    return _cor_3_13(p, q) if kind == "maps" else _cor_3_13_witness(p, q)


def _prop_3_17(x: MonMap, y: MonMap) -> Mismatch:
    a = algebra
    p = a.pair_it(x, y)
    return expect(("forget to OrdI", a.act_contra_i(x, y), p),
                  ("forget to OrdT", a.act_cov_t(x, y), p))


def _thm_3_19(x: MonMap, a_: MonMap, y: MonMap) -> Mismatch:
    a = algebra
    return expect(("(x . a) | y == x | (a . y)",
                   a.pair_it(a.act_contra_i(x, a_), y),
                   a.pair_it(x, a.act_cov_t(a_, y))))


def _thm_3_24(a_: MonMap, j: MonMap, x: MonMap) -> Mismatch:
    a = algebra
    y = op_map(x)
    return expect(
        ("a . (j . x) == j . (a . x)", a.act_cov_t(a_, a.sigma_act_t(j, x)),
         a.sigma_act_t(j, a.act_cov_t(a_, x))),
        ("(y . j) . a == (y . a) . j", a.act_contra_i(a.sigma_act_i(y, j), a_),
         a.sigma_act_i(a.act_contra_i(y, a_), j)))


def _thm_3_27(x: MonMap, j: MonMap, y: MonMap) -> Mismatch:
    a = algebra
    p = a.pair_it(x, y)
    return expect(("x | (j . y) == j * (x | y)", a.join_it_map(j, p),
                   a.pair_it(x, a.sigma_act_t(j, y))),
                  ("(x . j) | y == (x | y) * j", a.join_it_map(p, j),
                   a.pair_it(a.sigma_act_i(x, j), y)))


def _cor_3_23(j: MonMap, x: MonMap) -> Mismatch:
    a, d = algebra, duality
    y = op_map(x)
    return expect(("iT(j . x) == j * iT(x)", a.join_it_map(j, d.adjoin_bottom_t(x)),
                   d.adjoin_bottom_t(a.sigma_act_t(j, x))),
                  ("tI(y . j) == tI(y) * j", a.join_it_map(d.adjoin_top_i(y), j),
                   d.adjoin_top_i(a.sigma_act_i(y, j))))


def _cor_3_38(x: MonMap, j: MonMap, y: MonMap) -> Mismatch:
    a = algebra
    s = a.sigma_pair(x, y)
    return expect(("(x . j) <> y == x <> (j . y)",
                   a.sigma_pair(a.sigma_act_i(x, j), y),
                   a.sigma_pair(x, a.sigma_act_t(j, y))),
                  ("|x <> y|", (x.src + y.src - 1, x.dst + y.dst - 1),
                   (s.src, s.dst)))


def separation_witness(f: MonMap, g: MonMap, bound: int = 5) -> int | None:
    """Smallest OrdI object ``z`` with ``pair_it(id_z, f) != pair_it(id_z, g)``."""
    core.require(f, Tag.ORD_T)
    core.require(g, Tag.ORD_T)
    if (f.src, f.dst) != (g.src, g.dst):
        raise DomainError(f"{f} and {g} are not parallel")
    if f == g:
        raise DomainError(f"{f} and {g} are equal; nothing to separate")
    for z in range(1, bound + 1):
        if algebra.pair_it(identity(z), f) != algebra.pair_it(identity(z), g):
            return z
    return None


def _perfectness(kind: str, *args) -> Mismatch:
    a, d = algebra, duality
    pt = identity(PT)
    if kind == "zero-T":
        (y,) = args
        return expect(("pt | y == iT(y)", d.adjoin_bottom_t(y), a.pair_it(pt, y)),
                      ("pt <> y == y", y, a.sigma_pair(pt, y)))
    if kind == "zero-I":
        (x,) = args
        return expect(("x | pt == tI(x)", d.adjoin_top_i(x), a.pair_it(x, pt)),
                      ("x <> pt == x", x, a.sigma_pair(x, pt)))
    if kind == "separate":
        f, g = args
        return expect(("separating object exists", True,
                       separation_witness(f, g) is not None))
    # curried pairing with id_z is injective on each hom-set
    z, m, n = args
    images = {a.pair_it(identity(z), f) for f in enumerate_hom(m, n, Tag.ORD_T)}
    return expect((f"pair_it(id_{z}, -) injective on Hom_OrdT({m},{n})",
                   core.hom_count(m, n, Tag.ORD_T), len(images)))


def _perfectness_instances(bound: int) -> Iterator[tuple]:
    for y in _maps(bound, Tag.ORD_T):
        yield ("zero-T", y)
    for x in _maps(bound, Tag.ORD_I):
        yield ("zero-I", x)
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            hom = enumerate_hom(m, n, Tag.ORD_T)
            for f in hom:
                for g in hom:
                    if f != g:
                        yield ("separate", f, g)
    for z, m, n in product(range(1, bound + 1), repeat=3):
        yield ("faithful", z, m, n)


# ------------------------------------------------------------- coalgebras

@dataclass(frozen=True)
class CoalgebraStructure:
    carrier: int
    structure_map: MonMap


def comonad_counit(p: int) -> MonMap:
    """Collapse the fresh bottom: ``iT(p) -> p``."""
    return duality.bottom_transpose(identity(p))


def comonad_comultiplication(p: int) -> MonMap:
    """``iT(p) -> iT(iT(p))``, the image of the unit under ``iT``."""
    return duality.adjoin_bottom(duality.bottom_unit(p))


def is_coalgebra(s: MonMap) -> bool:
    p = s.src
    return (compose(s, comonad_counit(p)) == identity(p)
            and compose(s, comonad_comultiplication(p))
            == compose(s, duality.adjoin_bottom_t(s)))


def enumerate_coalgebras(carrier: int) -> list[CoalgebraStructure]:
    """Coalgebras of the comonad ``iT . forget`` on the OrdIt object ``carrier``."""
    if carrier < 1:
        raise DomainError("coalgebra carriers are OrdIt objects, size >= 1")
    return [CoalgebraStructure(carrier, s)
            for s in enumerate_hom(carrier, carrier + 1, Tag.ORD_IT)
            if is_coalgebra(s)]


def coalgebra_morphisms(c: CoalgebraStructure, d: CoalgebraStructure) -> list[MonMap]:
    return [h for h in enumerate_hom(c.carrier, d.carrier, Tag.ORD_IT)
            if compose(h, d.structure_map)
            == compose(c.structure_map, duality.adjoin_bottom_t(h))]


def strip_bottom(h: MonMap) -> MonMap:
    """Inverse of ``iT`` on maps that send only the bottom to the bottom."""
    return MonMap(h.src - 1, h.dst - 1, tuple(v - 1 for v in h.values[1:]))


def _barr_beck(kind: str, p: int, q: int | None = None) -> Mismatch:
    if kind == "census":
        found = enumerate_coalgebras(p)
        return expect((f"coalgebras on {p}", 1 if p >= 2 else 0, len(found)))
    cs, ds = enumerate_coalgebras(p), enumerate_coalgebras(q)
    if not cs or not ds:
        return None
    homs = coalgebra_morphisms(cs[0], ds[0])
    stripped = [strip_bottom(h) for h in homs]
    return expect(
        (f"|coalgebra maps {p}->{q}|", core.hom_count(p - 1, q - 1, Tag.ORD_T), len(homs)),
        ("stripping the bottom is a bijection onto OrdT",
         enumerate_hom(p - 1, q - 1, Tag.ORD_T), stripped),
        ("iT undoes stripping", homs, [duality.adjoin_bottom_t(h) for h in stripped]))


def _barr_beck_instances(bound: int) -> Iterator[tuple]:
    for p in range(1, bound + 1):
        yield ("census", p)
    for p, q in product(range(1, bound + 1), repeat=2):
        yield ("morphisms", p, q)


def _identity_instances(bound: int) -> Iterator[tuple]:
    return ((n,) for n in range(1, bound + 1))


# --------------------------------------------------------------- registry

def _suite(name, arity, bound, description, instances, predicate):
    return LawSuite(name, arity, description, instances, predicate, bound)


SUITES: dict[str, LawSuite] = {s.name: s for s in [
    _suite("counts", 2, 7, "hom-set sizes against brute force and binomials",
           _size_pairs(0), _counts),
    _suite("rigidity", 1, 8, "every automorphism is an identity",
           _identity_instances, _rigidity),
    _suite("monicity", 2, 6, "subcategory inclusions are injective and reflect inverses",
           _size_pairs(0), _monicity),
    _suite("lemma-2.18", 1, 5, "OrdIt membership is OrdI and OrdT membership",
           _singles(Tag.ORD), _tag_pullback),
    _suite("op", 1, 5, "op is an involution exchanging OrdT and OrdI",
           _singles(Tag.ORD), _op_involution),
    _suite("functor-laws", 2, 4, "every registered functor preserves ids and composites",
           _functor_law_instances, _functor_laws),
    _suite("adjunctions", 1, 5, "t and i are left adjoint to the forgetful functors",
           _singles(Tag.ORD), _adjunctions),
    _suite("adjunction-counts", 2, 5, "hom-set bijections of the free adjunctions",
           _size_pairs(0), _adjunction_counts),
    _suite("galois-2.22", 1, 5, "lad and rad are Galois adjoints and mutually inverse",
           _singles(Tag.ORD_T), _galois),
    _suite("thm-2.9", 1, 5, "dualT and dualI are involutions",
           _singles(Tag.ORD_T), _thm_2_9),
    _suite("birkhoff-2.10", 1, 5, "B and B-inv are mutually inverse",
           _birkhoff_instances, _birkhoff_inverse),
    _suite("hom-dual", 1, 5, "dualities agree with precomposition on Hom(-, 2)",
           _hom_dual_instances, _hom_dual),
    _suite("prop-2.12", 1, 5, "dualities intertwine t, i and the inclusions",
           _by_tag, _prop_2_12),
    _suite("lemma-2.17", 1, 5, "dualT.t == dualI.i == B",
           _singles(Tag.ORD), _lemma_2_17),
    _suite("thm-2.23", 1, 5, "dualT == op.lad, dualI == op.rad",
           _singles(Tag.ORD_T), _thm_2_23),
    _suite("cor-2.24", 1, 5, "lad.t == rad.i",
           _singles(Tag.ORD), _cor_2_24),
    _suite("notation-2.25", 1, 5, "bracket == lad.t == rad.i",
           _singles(Tag.ORD), _notation_2_25),
    _suite("lemma-2.26", 1, 5, "B == op.bracket == bracket.op",
           _singles(Tag.ORD), _lemma_2_26),
    _suite("prop-2.28", 1, 5, "dualities give an isomorphism of pullback squares",
           _by_tag, _prop_2_28),
    _suite("monoid-osum", 3, 4, "ordinal sum is a self-opposite monoid",
           _labelled(("unit", _singles(Tag.ORD)), ("op", _pairs(Tag.ORD, Tag.ORD)),
                     ("assoc", _triples(Tag.ORD, Tag.ORD, Tag.ORD))),
           _monoid_osum),
    _suite("osum-fibers", 3, 5, "indexed ordinal sum is recovered from its fibers",
           lambda b: product(range(b + 1), repeat=3), _osum_fibers),
    _suite("monoid-sigma", 3, 4, "interval join is a monoid with unit PT",
           _labelled(("unit", _singles(Tag.ORD_IT)),
                     ("glue", _pairs(Tag.ORD_IT, Tag.ORD_IT)),
                     ("assoc", _triples(Tag.ORD_IT, Tag.ORD_IT, Tag.ORD_IT))),
           _monoid_sigma),
    _suite("sigma-pushouts", 3, 5, "interval join is recovered from its pushouts",
           lambda b: product(range(1, b + 1), repeat=3), _sigma_pushouts),
    _suite("osum-actions", 3, 4, "unit and associativity of the Ord actions",
           _labelled(("unit", _singles(Tag.ORD_T)), ("op", _pairs(Tag.ORD, Tag.ORD_T)),
                     ("assoc", _triples(Tag.ORD, Tag.ORD, Tag.ORD_T))),
           _osum_actions),
    _suite("sigma-actions", 3, 4, "unit and associativity of the OrdIt actions",
           _labelled(("unit", _singles(Tag.ORD_T)),
                     ("glue", _pairs(Tag.ORD_IT, Tag.ORD_T)),
                     ("assoc", _triples(Tag.ORD_IT, Tag.ORD_IT, Tag.ORD_T))),
           _sigma_actions),
    _suite("thm-3.12", 2, 5, "i(x + a) == i(x) + a, with its unit triangle",
           _labelled(("maps", _pairs(Tag.ORD, Tag.ORD)), ("witness", _size_pairs(0))),
           _thm_3_12_both),
    _suite("cor-3.13", 2, 5, "t(a + x) == a + t(x), with its unit triangle",
           _labelled(("maps", _pairs(Tag.ORD, Tag.ORD)), ("witness", _size_pairs(0))),
           _cor_3_13_both),
    _suite("prop-3.17", 2, 5, "pairing forgets to each action",
           _pairs(Tag.ORD_I, Tag.ORD_T), _prop_3_17),
    _suite("thm-3.19", 3, 4, "pairing is balanced over Ord",
           _triples(Tag.ORD_I, Tag.ORD, Tag.ORD_T), _thm_3_19),
    _suite("cor-3.23", 2, 5, "iT and tI are linear over OrdIt",
           _pairs(Tag.ORD_IT, Tag.ORD_T), _cor_3_23),
    _suite("thm-3.24", 3, 4, "Ord and OrdIt actions commute",
           _triples(Tag.ORD, Tag.ORD_IT, Tag.ORD_T), _thm_3_24),
    _suite("thm-3.27", 3, 4, "pairing is a map of OrdIt bimodules",
           _triples(Tag.ORD_I, Tag.ORD_IT, Tag.ORD_T), _thm_3_27),
    _suite("perfectness-3.32", 2, 5, "zero-object pairings and separation",
           _perfectness_instances, _perfectness),
    _suite("barr-beck-3.33", 1, 5, "coalgebra census and coalgebra maps",
           _barr_beck_instances, _barr_beck),
    _suite("cor-3.38", 3, 4, "Ord-valued pairing is balanced over OrdIt",
           _triples(Tag.ORD_I, Tag.ORD_IT, Tag.ORD_T), _cor_3_38),
]}


def run_suite(name: str, bound: int | None = None) -> LawReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise DomainError(f"unknown suite {name!r}") from None
    if bound is None:
        bound = suite.default_bound
    return evaluate(name, bound, suite.instances(bound), suite.predicate)


def run_suites(names: Sequence[str] | None = None, bound: int | None = None,
               jobs: int = 1) -> list[LawReport]:
    """Run suites, optionally across ``jobs`` processes; order follows ``names``."""
    names = list(SUITES) if names is None else list(names)
    for name in names:
        if name not in SUITES:
            raise DomainError(f"unknown suite {name!r}")
    if jobs <= 1:
        return [run_suite(name, bound) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_suite, names, [bound] * len(names)))
