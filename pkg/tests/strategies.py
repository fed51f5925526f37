"""Hypothesis strategies for truncated series and 2x2 matrices."""
from hypothesis import strategies as st

from idem2.matrix.mat2 import Mat2
from idem2.series.tseries import Series, TruncationContext

# small rings: (n, v, D)
WINDOWS = [(2, 1, 3), (4, 1, 2), (6, 2, 2), (9, 1, 3), (12, 2, 1), (30, 0, 0), (7, 3, 2)]


def contexts():
    return st.sampled_from(WINDOWS).map(lambda w: TruncationContext.of(*w))


def series(context: TruncationContext):
    return st.lists(
        st.integers(min_value=0, max_value=context.n - 1),
        min_size=context.size,
        max_size=context.size,
    ).map(lambda coefficients: Series.from_coefficients(context, coefficients))


def series_tuples(k: int):
    """A context together with k series over it"""
    return contexts().flatmap(lambda ctx: st.tuples(*([st.just(ctx)] + [series(ctx)] * k)))


def matrices(context: TruncationContext):
    return st.tuples(*[series(context)] * 4).map(lambda entries: Mat2(*entries))


def matrix_tuples(k: int):
    return contexts().flatmap(lambda ctx: st.tuples(*([st.just(ctx)] + [matrices(ctx)] * k)))
