from itertools import combinations

import pytest

from muvis.core import InvalidParameterError, is_connected
from muvis.families import (
    CactusRecipe,
    CographRecipe,
    FamilySpec,
    build_cactus,
    build_cograph,
    complete_multipartite_graph,
    complete_split_graph,
    cycle_graph,
    generate,
    is_block_graph,
    is_cactus,
    path_graph,
    random_block_graph,
    random_cactus_recipe,
    random_cograph_recipe,
    random_tree,
    subdivided_star,
)


class TestGenerate:
    def test_path(self):
        g = generate(FamilySpec("path", {"n": 5}))
        assert g.n == 5 and g.m == 4

    def test_complete_split(self):
        g = generate(FamilySpec("complete-split", {"independent": 3, "clique": 2}))
        # Every independent vertex adjacent to every clique vertex.
        for i in range(3):
            for c in range(3, 5):
                assert g.has_edge(i, c)
        assert not g.has_edge(0, 1)
        assert g.has_edge(3, 4)

    def test_subdivided_star_spider(self):
        g = generate(FamilySpec("subdivided-star", {"legs": 3, "subdivisions": 3}))
        assert g.n == 13 and g.m == 12
        assert sorted(g.degree_sequence()).count(1) == 3

    def test_cycle_too_short(self):
        with pytest.raises(InvalidParameterError):
            generate(FamilySpec("cycle", {"n": 2}))

    def test_multipartite_needs_two_parts(self):
        with pytest.raises(InvalidParameterError):
            generate(FamilySpec("complete-multipartite", {"parts": [4]}))

    def test_unknown_kind(self):
        with pytest.raises(InvalidParameterError):
            generate(FamilySpec("hypercube", {}))

    def test_multipartite_edge_count(self):
        for parts in [(1, 1), (2, 3), (2, 2, 2), (1, 2, 3, 4)]:
            g = complete_multipartite_graph(parts)
            total = sum(parts)
            assert g.m == (total * total - sum(p * p for p in parts)) // 2


class TestCographs:
    def test_true_twin_k2(self):
        g = build_cograph(CographRecipe.from_ops([("start", -1), ("true", 0)]))
        assert g.n == 2 and g.m == 1

    def test_p3_recipe(self):
        g = build_cograph(
            CographRecipe.from_ops([("start", -1), ("true", 0), ("false", 0)])
        )
        assert g == path_graph(3) or sorted(g.degree_sequence()) == [1, 1, 2]

    def test_k3_recipe(self):
        g = build_cograph(
            CographRecipe.from_ops([("start", -1), ("true", 0), ("true", 1)])
        )
        assert g.n == 3 and g.m == 3

    def test_bad_target(self):
        with pytest.raises(InvalidParameterError):
            CographRecipe.from_ops([("start", -1), ("true", 3)])

    def test_connected_cograph_has_join_partition(self):
        # Connected cographs split into V1, V2 with all edges across.
        for seed in range(30):
            n = 2 + seed % 9
            g = build_cograph(random_cograph_recipe(n, seed))
            assert is_connected(g)
            found = False
            vertices = list(range(g.n))
            for size in range(1, g.n):
                for v1 in combinations(vertices, size):
                    v1set = set(v1)
                    if all(
                        g.has_edge(a, b)
                        for a in v1
                        for b in vertices
                        if b not in v1set
                    ):
                        found = True
                        break
                if found:
                    break
            assert found, f"seed {seed}: no complete-join partition"


class TestCacti:
    def test_root_cycle(self):
        g = build_cactus(CactusRecipe((("root-cycle", -1, 5),)))
        assert g == cycle_graph(5)

    def test_triangle_with_pendant(self):
        g = build_cactus(
            CactusRecipe((("root-cycle", -1, 3), ("attach-path", 0, 1)))
        )
        assert g.n == 4 and g.m == 4
        assert sorted(g.degree_sequence()) == [1, 2, 2, 3]

    def test_c4_with_four_c4s(self):
        steps = [("root-cycle", -1, 4)] + [("attach-cycle", i, 4) for i in range(4)]
        g = build_cactus(CactusRecipe(tuple(steps)))
        for v in range(4):
            assert g.degree(v) >= 3

    def test_bad_attachment(self):
        with pytest.raises(InvalidParameterError):
            CactusRecipe((("root-cycle", -1, 3), ("attach-path", 9, 1)))

    def test_outputs_are_cacti(self):
        for seed in range(30):
            g = build_cactus(random_cactus_recipe(1 + seed % 3, seed))
            assert is_cactus(g)


class TestBlockGraphs:
    def test_k1(self):
        assert random_block_graph(1, 0).n == 1

    def test_blocks_are_cliques(self):
        for seed in range(40):
            assert is_block_graph(random_block_graph(1 + seed % 12, seed))

    def test_determinism(self):
        a = random_block_graph(7, seed=42)
        b = random_block_graph(7, seed=42)
        assert a == b
        assert a.edges() == b.edges()

    def test_trees_are_block_graphs(self):
        for seed in range(10):
            assert is_block_graph(random_tree(8, seed))


def test_family_spec_seed_determinism():
    a = generate(FamilySpec("random-block-graph", {"n": 9}, seed=7))
    b = generate(FamilySpec("random-block-graph", {"n": 9}, seed=7))
    c = generate(FamilySpec("random-block-graph", {"n": 9}, seed=8))
    assert a == b
    assert a != c or a.edges() == c.edges()
