import pytest

from finord import algebra, core, duality, laws
from finord.core import DomainError, MonMap, Tag, identity, parse_map
from finord.duality import CONTRAVARIANT, COVARIANT, FunctorSpec, get_functor


def _flipped_cut(f: MonMap) -> MonMap:
    # count the inputs above the cut instead of below it
    m, n, v = f.src, f.dst, f.values
    return MonMap._unchecked(
        n + 1, m + 1, tuple(sum(1 for x in v if x >= n - k) for k in range(n + 1)))


def _off_by_one_bracket(f: MonMap) -> MonMap:
    good = duality.bracket(f)
    values = list(good.values)
    if f.src >= 2 and f.dst >= 2:
        values[1] = min(values[1] + 1, f.src)
        values = sorted(values)
    return MonMap._unchecked(good.src, good.dst, tuple(values))


def test_every_registered_suite_passes_at_a_small_bound():
    for report in laws.run_suites(bound=3):
        assert report.passed, report.summary()
        assert report.instances > 0


def test_unknown_suite():
    with pytest.raises(DomainError, match="unknown suite"):
        laws.run_suite("thm-9.99")


@pytest.mark.parametrize("name", ["lad", "rad", "bracket", "B", "B-inv", "t", "iT"])
def test_functor_laws(name):
    assert laws.check_functor(get_functor(name), bound=4).passed


def test_corrupted_functor_is_caught_with_a_witness():
    bad = FunctorSpec("bad", Tag.ORD, Tag.ORD_IT, CONTRAVARIANT,
                      lambda n: n + 1, _off_by_one_bracket)
    report = laws.check_functor(bad, bound=3)
    assert not report.passed
    assert report.failures and report.failures[0].inputs


def test_equal_functors():
    op = get_functor("op")
    via_lad = laws.composite(get_functor("lad"), op, dst_tag=Tag.ORD_T)
    assert laws.check_equal_functors(get_functor("dualT"), via_lad).passed
    via_rad = laws.composite(get_functor("rad"), op, dst_tag=Tag.ORD_I)
    assert laws.check_equal_functors(get_functor("dualI"), via_rad).passed
    identity_ish = FunctorSpec("fake", Tag.ORD_T, Tag.ORD_T, CONTRAVARIANT,
                               lambda n: n, lambda f: f)
    assert not laws.check_equal_functors(get_functor("dualT"), identity_ish).passed


def test_equal_functors_needs_matching_signatures():
    with pytest.raises(DomainError, match="signature mismatch"):
        laws.check_equal_functors(get_functor("lad"), get_functor("rad"))


def test_flipped_cut_orientation_is_detected(monkeypatch):
    monkeypatch.setattr(duality, "bracket", _flipped_cut)
    report = laws.run_suite("lemma-2.26", 5)
    assert not report.passed
    assert report.failed > 0 and len(report.failures) <= laws.MAX_REPORTED_FAILURES


def test_wrong_composition_order_is_detected():
    # lad reverses composition order; claiming it preserves order must fail
    lad = get_functor("lad")
    mislabelled = FunctorSpec("lad", lad.src_tag, lad.dst_tag, COVARIANT,
                              lad.object_map, lad.morphism_map)
    report = laws.check_functor(mislabelled, bound=3)
    assert not report.passed
    assert report.failures[0].expected == "lad sizes: 1->2"


def test_swapped_block_order_is_detected(monkeypatch):
    monkeypatch.setattr(algebra, "join_it_map",
                        lambda *fs: algebra.glue(*fs) if len(fs) == 2
                        else identity(1))
    assert not laws.run_suite("monoid-sigma", 3).passed


def test_report_shape():
    report = laws.run_suite("counts", 3)
    doc = report.to_dict()
    assert set(doc) == {"suite", "bound", "instances", "failed", "failures", "millis"}
    assert report.summary().startswith("PASS counts bound=3 instances=")


def test_predicate_errors_become_failures():
    report = laws.evaluate("raises", 1, [(1,)],
                           lambda x: core.require(MonMap(1, 2, (0,)), Tag.ORD_T))
    assert report.failed == 1
    assert "DomainError" in report.failures[0].actual


def test_parallel_run_matches_serial():
    names = ["counts", "op", "thm-2.9", "monoid-sigma"]
    serial = [r.to_dict() for r in laws.run_suites(names, bound=3)]
    parallel = [r.to_dict() for r in laws.run_suites(names, bound=3, jobs=2)]
    for d in serial + parallel:
        d.pop("millis")
    assert serial == parallel


def test_separation_witness():
    f, g = parse_map("2->2:[0 1]"), parse_map("2->2:[1 1]")
    assert laws.separation_witness(f, g) == 1
    with pytest.raises(DomainError):
        laws.separation_witness(f, f)
    with pytest.raises(DomainError):
        laws.separation_witness(f, identity(3))


def test_coalgebras():
    assert [len(laws.enumerate_coalgebras(p)) for p in range(1, 6)] == [0, 1, 1, 1, 1]
    (c,) = laws.enumerate_coalgebras(3)
    assert laws.is_coalgebra(c.structure_map)
    (d,) = laws.enumerate_coalgebras(4)
    homs = laws.coalgebra_morphisms(c, d)
    assert len(homs) == core.hom_count(2, 3, Tag.ORD_T)
    assert all(h.values.count(0) == 1 for h in homs)


def test_brute_force_hom_refuses_empty_pointed_objects():
    with pytest.raises(DomainError):
        laws.brute_force_hom(0, 2, Tag.ORD_I)
    assert laws.brute_force_hom(0, 0, Tag.ORD) == [()]
