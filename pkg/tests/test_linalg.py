import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dense_rank

from seqsr.errors import InputError
from seqsr.linalg import GF, QQ, Field, rank


def sparse(matrix):
    return [{c: v for c, v in enumerate(row) if v} for row in matrix]


matrices = st.integers(1, 7).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=7)
)


class TestField:
    @pytest.mark.parametrize("text, expected", [("q", QQ), ("Q", QQ), ("0", QQ), ("2", GF(2)), ("101", GF(101))])
    def test_parse(self, text, expected):
        assert Field.parse(text) == expected

    @pytest.mark.parametrize("text", ["4", "1", "x", "-3"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            Field.parse(text)

    def test_str(self):
        assert str(QQ) == "QQ" and str(GF(3)) == "GF(3)"


class TestRank:
    def test_empty(self):
        assert rank([], QQ) == 0
        assert rank([{}, {}], GF(2)) == 0

    def test_characteristic_matters(self):
        m = [{0: 1, 1: 1}, {0: 1, 1: -1}]
        assert rank(m, QQ) == 2
        assert rank(m, GF(2)) == 1

    def test_large_entries_stay_exact(self):
        m = [{0: 10**12, 1: 1}, {0: 10**12 + 1, 1: 1}, {0: 1, 1: 0}]
        assert rank(m, QQ) == 2

    @given(matrices)
    def test_rational_matches_dense(self, m):
        assert rank(sparse(m), QQ) == dense_rank(m)

    @given(matrices, st.sampled_from([2, 3, 5]))
    def test_modular_matches_dense(self, m, p):
        assert rank(sparse([[x % p for x in row] for row in m]), GF(p)) == dense_rank(m, p)

    @given(matrices)
    def test_transpose_invariant(self, m):
        t = [list(col) for col in zip(*m)]
        assert rank(sparse(m), QQ) == rank(sparse(t), QQ)
