import pytest

from clustertube import TubeObject, build_rep, hom_dim_oracle, hom_dim_tube
from clustertube.errors import RankMismatchError
from clustertube.linalg import integer_rank


def obj(a, b, n):
    return TubeObject(a, b, n)


class TestIntegerRank:
    def test_empty(self):
        assert integer_rank([]) == 0

    def test_identity(self):
        assert integer_rank([[1, 0], [0, 1]]) == 2

    def test_dependent_rows(self):
        assert integer_rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2

    def test_needs_exact_arithmetic(self):
        # ill-conditioned for floats, exact for us
        m = [[10**9, 1], [10**9 - 1, 1]]
        assert integer_rank(m) == 2


class TestBuildRep:
    def test_simple(self):
        r = build_rep(obj(1, 1, 3))
        assert r.dims == (1, 0, 0)
        assert all(not any(any(row) for row in m) for m in r.arrow_maps)

    def test_full_layer(self):
        r = build_rep(obj(1, 3, 3))
        assert r.dims == (1, 1, 1)
        units = sum(v for m in r.arrow_maps for row in m for v in row)
        assert units == 2
        # the socle vertex receives no arrow image onto v_1's preimage:
        # the arrow out of vertex 1 is the zero map
        assert not any(any(row) for row in r.arrow_maps[0])

    def test_wrapped(self):
        r = build_rep(obj(2, 4, 3))
        assert r.total_dim == 4
        assert r.dims == (1, 2, 1)

    def test_cycle_nilpotent(self):
        for x in [obj(1, 1, 2), obj(2, 5, 3), obj(3, 8, 4)]:
            assert build_rep(x).cycle_is_nilpotent()


class TestOracle:
    def test_simple(self):
        assert hom_dim_oracle(obj(1, 1, 3), obj(1, 1, 3)) == 1

    def test_agrees_with_formula(self):
        assert hom_dim_oracle(obj(1, 2, 3), obj(3, 2, 3)) == hom_dim_tube(
            obj(1, 2, 3), obj(3, 2, 3)
        )

    def test_long_self(self):
        assert hom_dim_oracle(obj(1, 6, 3), obj(1, 6, 3)) == 2

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            hom_dim_oracle(obj(1, 1, 3), obj(1, 1, 4))

    @pytest.mark.parametrize("n", [2, 3])
    def test_exhaustive_small(self, n):
        objs = [
            obj(a, b, n) for a in range(1, n + 1) for b in range(1, 2 * n + 1)
        ]
        for x in objs:
            for y in objs:
                assert hom_dim_oracle(x, y) == hom_dim_tube(x, y), (x, y)
