from hypothesis import settings, strategies as st

from superhopf.compositions import Composition, Part

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def parts(draw):
    dotted = draw(st.booleans())
    value = draw(st.integers(min_value=0 if dotted else 1, max_value=3))
    return Part(value, dotted)


def compositions(max_len: int = 4):
    return st.lists(parts(), max_size=max_len).map(Composition)


def small_compositions(max_degree: int):
    return compositions(max_degree).filter(lambda a: a.degree <= max_degree)
