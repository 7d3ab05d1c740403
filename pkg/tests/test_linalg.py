"""Tests for exact dense linear algebra."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hcfam.linalg import ExactMatrix, in_span, kernel, rank, solve, span_rank

fr = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def matrices(rows, cols):
    return st.lists(
        st.lists(fr, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(ExactMatrix)


class TestRankKernel:
    def test_rank_examples(self):
        m = ExactMatrix([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
        assert rank(m) == 1
        assert rank(ExactMatrix([[Fraction(0)] * 3] * 2)) == 0

    @given(matrices(3, 4))
    def test_rank_nullity(self, m):
        assert rank(m) + len(kernel(m, Fraction(1), Fraction(0))) == m.cols

    @given(matrices(3, 4))
    def test_kernel_vectors_annihilate(self, m):
        for v in kernel(m, Fraction(1), Fraction(0)):
            assert all(x == 0 for x in m.matvec(v))

    @given(matrices(4, 3), st.lists(fr, min_size=3, max_size=3))
    def test_solve_recovers_image_vectors(self, m, x):
        b = m.matvec(x)
        sol = solve(m, b)
        assert sol is not None
        assert m.matvec(sol) == b

    def test_solve_inconsistent(self):
        m = ExactMatrix([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])
        assert solve(m, [Fraction(0), Fraction(1)]) is None


class TestSpan:
    def test_in_span(self):
        vs = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
        assert in_span(vs, [Fraction(3), Fraction(2)])
        assert not in_span([vs[0]], [Fraction(0), Fraction(1)])
        assert in_span([], [Fraction(0), Fraction(0)])

    @given(st.lists(st.lists(fr, min_size=3, max_size=3), min_size=1, max_size=4))
    def test_span_rank_bounded(self, vs):
        r = span_rank(vs)
        assert 0 <= r <= min(len(vs), 3)
        # Adding a combination of existing vectors never raises the rank.
        combo = [sum(v[i] for v in vs) for i in range(3)]
        assert span_rank(vs + [combo]) == r


class TestMatrixOps:
    def test_matmul_transpose(self):
        a = ExactMatrix([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
        b = ExactMatrix([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
        assert a.matmul(b).entries == [[2, 1], [4, 3]]
        assert a.transpose().transpose() == a
