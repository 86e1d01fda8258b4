import hypothesis.strategies as st
from hypothesis import settings

from zerosum.core import ResidueSequence

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@st.composite
def sequences(draw, primes=SMALL_PRIMES, min_size=1, max_size=10):
    p = draw(st.sampled_from(primes))
    elems = draw(st.lists(st.integers(0, p - 1), min_size=min_size, max_size=max_size))
    A = ResidueSequence.of(p, elems, capped=False)
    if A.max_multiplicity() > p:
        elems = sorted(set(elems)) or [0]
        A = ResidueSequence.of(p, elems, capped=False)
    return ResidueSequence(p, A.items)
