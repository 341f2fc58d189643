"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from auslander.repcore import ThinModule


@st.composite
def thin_modules(draw, t_min: int = 1, t_max: int = 5, exceptional: bool | None = None):
    t = draw(st.integers(t_min, t_max))
    if exceptional is True:
        end = t
    elif exceptional is False:
        if t < 2:
            t = 2
        end = draw(st.integers(1, t - 1))
    else:
        end = draw(st.integers(1, t))
    start = draw(st.integers(1, end))
    word = draw(st.text(alphabet="AB", min_size=end - start, max_size=end - start))
    return ThinModule(t, start, end, word)


@st.composite
def permutations(draw, t_min: int = 1, t_max: int = 6):
    t = draw(st.integers(t_min, t_max))
    return tuple(draw(st.permutations(range(1, t + 1))))
