import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from twistedburau.laurent import LaurentPoly, registry
from twistedburau.matrices import RingMatrix
from twistedburau.representation import load_representation
from twistedburau.suite import random_rep
from twistedburau.words import ColoredBraidWord, Word

REPS = Path(__file__).resolve().parent.parent / "reps"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def trefoil():
    return load_representation(REPS / "trefoil.json")


@pytest.fixture
def st_reg():
    return registry(("s", "t"))


def poly(reg, text):
    from twistedburau.laurent import parse_poly
    return parse_poly(text, reg)


def mat(reg, rows):
    return RingMatrix([[poly(reg, x) if isinstance(x, str) else x for x in r] for r in rows], reg)


# hypothesis strategies ---------------------------------------------------------

def words(n_max=5, len_max=20):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(1, n).flatmap(lambda i: st.sampled_from((i, -i))),
                           max_size=len_max).map(lambda ls: Word(tuple(ls), n)))


def words_of_rank(n, len_max=12):
    return st.lists(st.integers(1, n).flatmap(lambda i: st.sampled_from((i, -i))),
                    max_size=len_max).map(lambda ls: Word(tuple(ls), n))


def braid_letters(n, len_max=6):
    if n < 2:
        return st.just(())
    return st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
                    max_size=len_max).map(tuple)


def colorings(n):
    return st.integers(1, n).flatmap(
        lambda mu: st.permutations(list(range(1, mu + 1)) + [1] * (n - mu)).map(tuple))


@st.composite
def colored_braids(draw, n_min=2, n_max=4, len_max=6):
    n = draw(st.integers(n_min, n_max))
    return ColoredBraidWord(n, draw(braid_letters(n, len_max)), draw(colorings(n)))


def polys(reg, terms=4, exp=2, coeff=3):
    mono = st.tuples(*[st.integers(-exp, exp) for _ in range(len(reg))])
    return st.dictionaries(mono, st.integers(-coeff, coeff), max_size=terms).map(
        lambda d: LaurentPoly(reg, {e: c for e, c in d.items() if c}))


def reps(n, k=None):
    """Random unimodular representations drawn through a seeded generator."""
    ks = st.just(k) if k else st.sampled_from((1, 2))
    return st.tuples(st.integers(0, 10**6), ks).map(
        lambda sk: random_rep(random.Random(sk[0]), n, sk[1]))
