import pytest

from muvis.core import all_pairs_distances
from muvis.constructions import (
    HypothesisError,
    block_graph_mu_set,
    block_prism_set,
    classify_cactus,
    classify_cograph,
    cycle_prism_mu,
    grid_cover_parts,
    grid_extremal_set,
    hull_cover_upper_bound,
    multiway_tmv_set,
    prism_layer_set,
    product_mv_set,
    product_tmv_set,
    universal_product_tmv,
)
from muvis.families import (
    CographRecipe,
    build_cactus,
    build_cograph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_block_graph,
    random_cactus_recipe,
    random_cograph_recipe,
    random_tree,
    star_graph,
)
from muvis.products import strong_product
from muvis.visibility import (
    is_mv_set,
    is_tmv_set,
    max_feasible_tmv,
    mu_exact,
    mu_total_exact,
)


def path_ends(n):
    g = path_graph(n)
    return g, g.vertex_set([0, n - 1])


class TestProductTmvSet:
    def test_p3_p3(self):
        g, sg = path_ends(3)
        h, sh = path_ends(3)
        res = product_tmv_set(g, sg, h, sh)
        assert res.formula_value == 8
        assert res.certificate.size == 8
        assert res.certificate.verified
        # The built set attains the total mutual-visibility number here.
        assert mu_total_exact(res.graph).value == 8

    def test_size_formula(self):
        g, sg = path_ends(4)
        h, sh = path_ends(5)
        res = product_tmv_set(g, sg, h, sh)
        assert res.formula_value == 2 * 5 + 2 * 4 - 4 == res.certificate.size

    def test_rejects_bad_factor_set(self):
        g = path_graph(4)
        with pytest.raises(HypothesisError):
            product_tmv_set(g, g.vertex_set([0, 1]), *path_ends(3))

    def test_rejects_trivial_factor(self):
        g = path_graph(1)
        with pytest.raises(HypothesisError):
            product_tmv_set(g, g.full_set(), *path_ends(3))

    def test_random_factor_sets(self, rng):
        # Any maximum feasible sets of small paths/cycles-with-pendants work.
        for na, nb in [(3, 4), (4, 4), (3, 5)]:
            g, h = path_graph(na), path_graph(nb)
            sg = max_feasible_tmv(g).certificate.vertices
            sh = max_feasible_tmv(h).certificate.vertices
            res = product_tmv_set(g, sg, h, sh)
            assert res.certificate.verified


class TestMultiwayTmvSet:
    def test_three_p3_factors(self):
        factors = [path_graph(3)] * 3
        sets = [f.vertex_set([0, 2]) for f in factors]
        res = multiway_tmv_set(factors, sets)
        assert res.formula_value == 27 - 1 == res.certificate.size

    def test_mixed_lengths(self):
        factors = [path_graph(3), path_graph(4)]
        sets = [factors[0].vertex_set([0, 2]), factors[1].vertex_set([0, 3])]
        res = multiway_tmv_set(factors, sets)
        assert res.formula_value == 12 - 2 == 10

    def test_rejects_complete_factor(self):
        k = complete_graph(3)
        p, sp = path_ends(3)
        with pytest.raises(HypothesisError):
            multiway_tmv_set([k, p], [k.full_set(), sp])

    def test_rejects_arity_mismatch(self):
        p, sp = path_ends(3)
        with pytest.raises(HypothesisError):
            multiway_tmv_set([p], [sp])


class TestGridExtremalSet:
    @pytest.mark.parametrize(
        "dims,size",
        [((3, 3), 8), ((4, 5), 14), ((4, 6), 16), ((5, 6), 18), ((3, 3, 3), 26)],
    )
    def test_sizes(self, dims, size):
        res, _ = grid_extremal_set(dims)
        assert res.formula_value == size == res.certificate.size
        assert res.certificate.verified

    def test_attains_mut_on_small_grid(self):
        res, _ = grid_extremal_set((3, 3))
        assert mu_total_exact(res.graph).value == res.certificate.size

    def test_cover_partitions_boundary(self):
        res, cover = grid_extremal_set((4, 5))
        boundary = res.certificate.vertices
        union = cover.initial_set | cover.terminal_set | cover.degenerate_set
        assert union == boundary
        assert not (cover.initial_set & cover.terminal_set)
        assert not (cover.initial_set & cover.degenerate_set)

    def test_diagonals_start_low_end_high(self):
        res, cover = grid_extremal_set((3, 4))
        index = res.index
        dims = index.factor_orders
        for diag in cover.diagonals:
            first = index.decode(diag[0])
            last = index.decode(diag[-1])
            assert any(c == 0 for c in first)
            assert any(c == dims[j] - 1 for j, c in enumerate(last))
            # Consecutive diagonal entries shift every coordinate by one.
            for a, b in zip(diag, diag[1:]):
                ca, cb = index.decode(a), index.decode(b)
                assert all(y - x == 1 for x, y in zip(ca, cb))

    def test_cover_parts_cover_everything(self):
        res, cover = grid_extremal_set((3, 3))
        parts = grid_cover_parts(res.graph, cover)
        union = res.graph.empty_set()
        for p in parts:
            union |= p
        assert union == res.graph.full_set()

    def test_rejects_short_path(self):
        with pytest.raises(HypothesisError):
            grid_extremal_set((2, 3))


class TestHullCoverBound:
    def test_grid_bound_is_tight(self):
        res, cover = grid_extremal_set((3, 3))
        parts = grid_cover_parts(res.graph, cover)
        bound = hull_cover_upper_bound(res.graph, parts)
        mu = mu_exact(res.graph).value
        assert mu <= bound
        assert mu == 8 and bound == 8

    def test_rejects_partial_cover(self):
        g = path_graph(4)
        with pytest.raises(HypothesisError):
            hull_cover_upper_bound(g, [g.vertex_set([0, 1])])

    def test_trivial_cover(self):
        g = cycle_graph(5)
        assert hull_cover_upper_bound(g, [g.full_set()]) == mu_exact(g).value


class TestUniversalProductTmv:
    def test_two_p3_factors(self):
        res = universal_product_tmv([path_graph(3), path_graph(3)])
        assert res.formula_value == 8

    def test_star_factors(self):
        res = universal_product_tmv([star_graph(2), star_graph(3)])
        assert res.formula_value == 3 * 4 - 1
        assert res.certificate.verified

    def test_rejects_complete(self):
        with pytest.raises(HypothesisError):
            universal_product_tmv([complete_graph(3), path_graph(3)])

    def test_rejects_no_universal(self):
        with pytest.raises(HypothesisError):
            universal_product_tmv([cycle_graph(5), path_graph(3)])


class TestProductMvSet:
    def test_c5_p2(self):
        g = cycle_graph(5)
        h = path_graph(2)
        sg = mu_exact(g).certificate.vertices
        sh = h.full_set()
        res = product_mv_set(g, sg, h, sh)
        assert res.certificate.size == 6
        assert mu_exact(res.graph).value == 6

    def test_lower_bound_product_of_mus(self, rng):
        for ga, gb in [(path_graph(4), cycle_graph(4)), (cycle_graph(5), path_graph(3))]:
            ra, rb = mu_exact(ga), mu_exact(gb)
            res = product_mv_set(ga, ra.certificate.vertices, gb, rb.certificate.vertices)
            assert res.certificate.size == ra.value * rb.value
            assert mu_exact(res.graph).value >= ra.value * rb.value

    def test_rejects_non_mv_factor_set(self):
        g = path_graph(4)
        with pytest.raises(HypothesisError):
            product_mv_set(g, g.vertex_set([0, 1, 3]), *[path_graph(2), path_graph(2).full_set()])


class TestPrisms:
    def test_layer_set_is_mv(self):
        res = prism_layer_set(cycle_graph(6))
        assert res.certificate.size == 6
        assert res.certificate.verified

    def test_layer_lower_bound(self):
        for g in (path_graph(5), cycle_graph(5), star_graph(3)):
            res = prism_layer_set(g)
            assert mu_exact(res.graph).value >= max(g.n, 2 * mu_exact(g).value)

    def test_block_prism_value(self):
        for seed in range(8):
            g = random_block_graph(5 + seed % 3, seed)
            res = block_prism_set(g)
            assert res.certificate.verified
            # The built set is optimal: prism mu equals n plus mu of the base.
            assert mu_exact(res.graph).value == res.certificate.size
            assert res.certificate.size == g.n + mu_exact(g).value

    def test_block_prism_rejects_cycle(self):
        with pytest.raises(HypothesisError):
            block_prism_set(cycle_graph(5))

    def test_cycle_prism_closed_form(self):
        assert [cycle_prism_mu(n) for n in range(3, 9)] == [6, 6, 6, 7, 7, 8]
        for n in range(3, 9):
            product, _ = strong_product(cycle_graph(n), path_graph(2))
            assert mu_exact(product).value == cycle_prism_mu(n)

    def test_cycle_prism_rejects_short(self):
        with pytest.raises(HypothesisError):
            cycle_prism_mu(2)


class TestBlockGraphSets:
    def test_tree_example(self):
        # Star with an extra edge of pendants: leaves form the optimum.
        g = random_tree(7, 3)
        cert = block_graph_mu_set(g)
        assert cert.verified and cert.kind == "tmv"
        assert cert.size == mu_exact(g).value == mu_total_exact(g).value

    def test_block_graphs_are_mu_mut(self):
        for seed in range(10):
            g = random_block_graph(4 + seed % 5, seed)
            cert = block_graph_mu_set(g)
            dist = all_pairs_distances(g)
            assert is_tmv_set(g, dist, cert.vertices)
            assert is_mv_set(g, dist, cert.vertices)
            assert cert.size == mu_exact(g).value == mu_total_exact(g).value

    def test_rejects_non_block_graph(self):
        with pytest.raises(HypothesisError):
            block_graph_mu_set(cycle_graph(4))


class TestClassifiers:
    def test_complete_cograph(self):
        recipe = CographRecipe.from_ops([("start", -1), ("true", 0), ("true", 0)])
        cls = classify_cograph(recipe)
        assert cls.verdicts["is_mu_mut_graph"] is True
        assert cls.verdicts["mu"] == 3 == cls.verdicts["mut"]

    def test_cograph_verdicts_match_solvers(self):
        for seed in range(25):
            n = 2 + seed % 7
            recipe = random_cograph_recipe(n, seed)
            g = build_cograph(recipe)
            cls = classify_cograph(recipe)
            mu = mu_exact(g).value
            mut = mu_total_exact(g).value
            assert cls.verdicts["mu"] == mu, f"seed {seed}"
            assert cls.verdicts["is_mu_mut_graph"] == (mu == mut), f"seed {seed}"
            if cls.verdicts["is_mu_mut_graph"]:
                assert cls.verdicts["mut"] == mut

    def test_cactus_verdicts_match_solvers(self):
        for seed in range(12):
            g = build_cactus(random_cactus_recipe(1 + seed % 2, seed))
            if g.n > 14:
                continue
            cls = classify_cactus(g)
            assert cls.verdicts["mut_zero"] == (mu_total_exact(g).value == 0), (
                f"seed {seed}: {g.edges()}"
            )

    def test_cactus_rejects_non_cactus(self):
        with pytest.raises(HypothesisError):
            classify_cactus(complete_graph(4))
