from hypothesis import settings
from hypothesis import strategies as st

from clutterkit.core import Clutter, SimplicialComplex, maximal_sets, minimal_sets
from clutterkit.notation import parse_clutter, parse_complex

# n = 7 and 8 canonical forms take a few hundred ms on a cold table
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def cl(text, n=None):
    return parse_clutter(text, n)[0]


def cx(text, n=None):
    return parse_complex(text, n)[0]


@st.composite
def clutters(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=8))
    return Clutter(n, minimal_sets(raw))


@st.composite
def complexes(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=8))
    return SimplicialComplex(n, maximal_sets(raw))
