import sys

from hypothesis import assume, strategies as st

from finord.core import MonMap, Tag


@st.composite
def maps(draw, tag: Tag = Tag.ORD, max_size: int = 6, src=None, dst=None):
    """A random morphism of ``tag``, built from sorted draws."""
    lo = tag.min_size
    m = draw(st.integers(lo, max_size)) if src is None else src
    n = draw(st.integers(max(lo, 1 if m else 0), max_size)) if dst is None else dst
    values = sorted(draw(st.lists(st.integers(0, n - 1), min_size=m, max_size=m))
                    if n else [])
    if tag in (Tag.ORD_I, Tag.ORD_IT):
        values[0] = 0
    if tag in (Tag.ORD_T, Tag.ORD_IT):
        values[-1] = n - 1
    if tag is Tag.ORD_IT and m == 1:
        # the only interval map out of a point is the identity
        assume(dst in (None, 1))
        n, values = 1, [0]
    return MonMap(m, n, tuple(sorted(values)))


def parallel(tag: Tag = Tag.ORD, max_size: int = 5):
    return st.integers(tag.min_size, max_size).flatmap(
        lambda m: st.integers(max(tag.min_size, 1 if m else 0), max_size).flatmap(
            lambda n: st.tuples(maps(tag, src=m, dst=n), maps(tag, src=m, dst=n))))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
