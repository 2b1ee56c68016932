import pytest

from gkz import GKZFan, LocationKind, RayGroup, build_fan, group_rays, locate, parse_and_validate
from gkz.corpus import cy_corpus
from lattice import LatticeVector as V
from utils.config import Config
from utils.exceptions import (
    DegenerateFan,
    IndexOutOfRange,
    MalformedInput,
    NotCalabiYau,
    RankDeficient,
    ZeroColumn,
)

from conftest import CHAMBER_I, CHAMBER_II, CHAMBER_IV, K3_WEIGHTS, WALL_1, WALL_2, WALL_3


class TestParseAndValidate:
    def test_k3_matrix(self, k3_w):
        assert k3_w.m == 8
        assert k3_w.rows() == K3_WEIGHTS
        assert k3_w.families() == {"x": (0, 1, 2), "y": (3, 4, 5), "p": (6,), "q": (7,)}

    def test_default_labels(self):
        w = parse_and_validate([[1, -1, 0], [0, 1, -1]])
        assert w.labels == ("x0", "x1", "x2")

    @pytest.mark.parametrize(
        "raw, error",
        [
            ([[1, 1], [1, 1]], NotCalabiYau),
            ([[0, 1, -1], [0, 1, -1]], ZeroColumn),
            ([[1, -1], [2, -2]], RankDeficient),
            ([[1, -1]], MalformedInput),
            ([[1, -1], [0]], MalformedInput),
            ([[1.0, -1.0], [0, 0]], MalformedInput),
        ],
    )
    def test_rejects(self, raw, error):
        with pytest.raises(error):
            parse_and_validate(raw)

    def test_label_count(self):
        with pytest.raises(MalformedInput):
            parse_and_validate(K3_WEIGHTS, ["x", "y"])


class TestFan:
    def test_ray_groups(self, k3_w):
        groups = group_rays(k3_w)
        assert [g.chi for g in groups] == [V(1, 0), V(0, 1), V(-1, 0), V(-1, -3)]
        assert [g.multipliers for g in groups] == [(1, 1, 1), (1, 1, 1), (2,), (1,)]
        assert [g.total for g in groups] == [3, 3, 2, 1]
        assert groups[2].member_columns == (6,)

    def test_walls_and_chambers(self, k3_fan):
        assert [w.ray for w in k3_fan.walls] == [V(1, 0), V(1, 3), V(-1, 0), V(0, -1)]
        assert [w.source_group for w in k3_fan.walls] == [2, 3, 0, 1]
        assert [w.opposite_group for w in k3_fan.walls] == [0, None, 2, None]
        assert [(c.a, c.b) for c in k3_fan.chambers] == [
            (V(1, 0), V(1, 3)),
            (V(1, 3), V(-1, 0)),
            (V(-1, 0), V(0, -1)),
            (V(0, -1), V(1, 0)),
        ]

    def test_adjacent_chambers(self, k3_fan):
        assert k3_fan.adjacent_chambers(WALL_1) == (CHAMBER_IV, CHAMBER_I)
        assert k3_fan.adjacent_chambers(WALL_2) == (CHAMBER_I, CHAMBER_II)
        assert k3_fan.adjacent_chambers(0) == (0, 3)

    def test_index_checks(self, k3_fan):
        with pytest.raises(IndexOutOfRange):
            k3_fan.wall(4)
        with pytest.raises(IndexOutOfRange):
            k3_fan.chamber(-1)

    def test_locate(self, k3_fan):
        assert locate(k3_fan, V(-1, -5)).index == CHAMBER_I
        assert locate(k3_fan, V(2, 7)).kind is LocationKind.CHAMBER
        wall = locate(k3_fan, V(2, 6))
        assert (wall.kind, wall.index) == (LocationKind.WALL, WALL_3)
        assert locate(k3_fan, V(0, 0)).kind is LocationKind.ORIGIN

    def test_two_directions_are_degenerate(self):
        groups = [RayGroup(V(1, 0), (1,), (0,)), RayGroup(V(-1, 0), (1,), (1,))]
        with pytest.raises(DegenerateFan):
            build_fan(groups)

    def test_square_fan(self, square_fan):
        assert isinstance(square_fan, GKZFan)
        assert [w.ray for w in square_fan.walls] == [V(1, 1), V(-1, 1), V(-1, -1), V(1, -1)]
        assert all(w.opposite_group is not None for w in square_fan.walls)


class TestCorpus:
    def test_reproducible(self):
        first = [w.rows() for w in cy_corpus(size=25, seed=11)]
        second = [w.rows() for w in cy_corpus(size=25, seed=11)]
        assert first == second

    def test_every_matrix_is_valid(self):
        for w in cy_corpus(size=Config.CORPUS_SIZE):
            top, bottom = w.rows()
            assert sum(top) == 0 and sum(bottom) == 0
            assert 3 <= w.m <= Config.CORPUS_MAX_COLUMNS
            assert max(abs(v) for v in top + bottom) <= Config.CORPUS_MAX_ENTRY
            fan = build_fan(group_rays(w))
            assert len(fan.walls) == len(fan.chambers) >= 3


class TestFanInvariants:
    @pytest.fixture(scope="class")
    def corpus(self):
        return [(w, build_fan(group_rays(w))) for w in cy_corpus(size=60, seed=3)]

    def test_columns_are_reconstructible(self, corpus):
        for w, fan in corpus:
            seen = []
            for group in fan.ray_groups:
                for column, multiplier in zip(group.member_columns, group.multipliers):
                    assert multiplier >= 1
                    assert w.columns[column] == group.chi.scale(multiplier)
                    seen.append(column)
            assert sorted(seen) == list(range(w.m))

    def test_weighted_rays_sum_to_zero(self, corpus):
        for _, fan in corpus:
            total = V(0, 0)
            for group in fan.ray_groups:
                total = total + group.chi.scale(group.total)
            assert total == V(0, 0)

    def test_chambers_tile_the_plane(self, corpus):
        directions = [V(x, y) for x in range(-6, 7) for y in range(-6, 7) if (x, y) != (0, 0)]
        for _, fan in corpus:
            for d in directions:
                where = locate(fan, d)
                on_walls = [k for k, wall in enumerate(fan.walls) if wall.ray.is_parallel(d)]
                interiors = [k for k, cone in enumerate(fan.chambers) if cone.contains_interior(d)]
                if on_walls:
                    assert len(on_walls) == 1 and interiors == []
                    assert (where.kind, where.index) == (LocationKind.WALL, on_walls[0])
                    closed = {k for k, cone in enumerate(fan.chambers) if cone.contains(d)}
                    assert closed == set(fan.adjacent_chambers(on_walls[0]))
                else:
                    assert len(interiors) == 1
                    assert (where.kind, where.index) == (LocationKind.CHAMBER, interiors[0])

    def test_locate_agrees_with_indices(self, corpus):
        for _, fan in corpus:
            for k, cone in enumerate(fan.chambers):
                where = locate(fan, cone.a + cone.b)
                assert (where.kind, where.index) == (LocationKind.CHAMBER, k)
            for k, wall in enumerate(fan.walls):
                where = locate(fan, wall.ray.scale(2))
                assert (where.kind, where.index) == (LocationKind.WALL, k)
                ccw, cw = fan.adjacent_chambers(k)
                assert fan.chambers[ccw].a == wall.ray
                assert fan.chambers[cw].b == wall.ray
