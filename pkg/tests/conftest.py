import math

from hypothesis import strategies as st

from pytri.pythagoras import PSequence, triple_from_pseq


@st.composite
def pseqs(draw, max_value=400):
    qp = draw(st.integers(1, max_value).map(lambda n: 2 * n - 1))
    q = draw(st.integers(1, max_value).filter(lambda v: math.gcd(v, qp) == 1))
    return PSequence.complete(qp, q)


@st.composite
def triples(draw, max_value=400):
    return triple_from_pseq(draw(pseqs(max_value)))[1]


positive_rationals = st.fractions(min_value=0, max_value=1000, max_denominator=500).filter(lambda f: f > 0)
