#include <doctest.h>

#include <lds/constructions.hh>
#include <lds/double_star.hh>
#include <lds/errors.hh>
#include <lds/oracle.hh>

#include "support/colorings.hh"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using namespace lds;

namespace
{
    using Edges = std::vector<std::pair<Vertex, Vertex>>;

    auto is_tree(const Edges & edges, int k) -> bool
    {
        if (static_cast<int>(edges.size()) != k - 1)
            return false;
        std::vector<int> root(static_cast<std::size_t>(k));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[static_cast<std::size_t>(x)] != x)
                x = root[static_cast<std::size_t>(x)];
            return x;
        };
        for (auto [a, b] : edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb)
                return false;
            root[static_cast<std::size_t>(ra)] = rb;
        }
        return true;
    }

    auto set_of(int cap, std::uint32_t bits) -> VertexSet
    {
        VertexSet s(cap);
        for (int v = 0; v < cap; ++v)
            if ((bits >> v) & 1u)
                s.set(v);
        return s;
    }

    // Placement enumeration on a partial coloring, requiring {u,v} among the image edges.
    auto brute_through_edge(const TwoColoring & g, const LdsParams & params, Color color, Vertex u, Vertex v) -> bool
    {
        int r = g.vertex_count(), k = params.vertex_count();
        auto edges = lds_edges(params);
        std::vector<Vertex> image(static_cast<std::size_t>(k));
        std::vector<bool> used(static_cast<std::size_t>(r), false);
        auto place = [&](auto & self, int t) -> bool {
            if (t == k) {
                bool uses = false;
                for (auto [x, y] : edges) {
                    auto a = image[static_cast<std::size_t>(x)], b = image[static_cast<std::size_t>(y)];
                    if (g.get_edge(a, b) != to_slot(color))
                        return false;
                    if ((a == u && b == v) || (a == v && b == u))
                        uses = true;
                }
                return uses;
            }
            for (Vertex w = 0; w < r; ++w) {
                if (used[static_cast<std::size_t>(w)])
                    continue;
                used[static_cast<std::size_t>(w)] = true;
                image[static_cast<std::size_t>(t)] = w;
                bool ok = self(self, t + 1);
                used[static_cast<std::size_t>(w)] = false;
                if (ok)
                    return true;
            }
            return false;
        };
        return k <= r && place(place, 0);
    }
}

TEST_CASE("LdsParams normalises and validates")
{
    LdsParams p(3, 1, 4);
    CHECK(p.n() == 4);
    CHECK(p.m() == 1);
    CHECK(p.vertex_count() == 8);
    CHECK(p.edge_count() == 7);
    CHECK(p.p() == 1);
    CHECK_THROWS_AS(LdsParams(0, 1, 1), InvalidParams);
    CHECK_THROWS_AS(LdsParams(3, -1, 1), InvalidParams);
}

TEST_CASE("lds_edges canonical labelling")
{
    CHECK(lds_edges(LdsParams(1, 2, 0)) == Edges{{0, 1}, {0, 2}});
    CHECK(lds_edges(LdsParams(3, 1, 1)) == Edges{{0, 1}, {1, 2}, {0, 3}, {2, 4}});

    auto big = lds_edges(LdsParams(5, 7, 4));
    CHECK(is_tree(big, 16));
    auto degree = [&](Vertex v) {
        return std::count_if(big.begin(), big.end(), [v](auto e) { return e.first == v || e.second == v; });
    };
    CHECK(degree(0) == 8);
    CHECK(degree(4) == 5);

    for (int c = 1; c <= 6; ++c)
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= n; ++m) {
                LdsParams params(c, n, m);
                CHECK(is_tree(lds_edges(params), params.vertex_count()));
            }
}

TEST_CASE("disjoint_leaf_selection examples")
{
    auto sel = disjoint_leaf_selection(VertexSet(10, {1, 2, 3}), VertexSet(10, {4, 5}), 3, 2);
    REQUIRE(sel);
    CHECK(sel->n_side == std::vector<Vertex>{1, 2, 3});
    CHECK(sel->m_side == std::vector<Vertex>{4, 5});

    CHECK(! disjoint_leaf_selection(VertexSet(10, {1, 2}), VertexSet(10, {1, 2}), 2, 1));

    VertexSet a(10, {1, 2, 3}), b(10, {3, 4});
    // Oracle: every 3-subset of A (only one) against every 1-subset of B.
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> disjoint;
    for (auto y : b.members())
        if (! a.test(y))
            disjoint.push_back({a.members(), {y}});
    CHECK(disjoint.size() == 1);

    sel = disjoint_leaf_selection(a, b, 3, 1);
    REQUIRE(sel);
    CHECK(sel->n_side == disjoint[0].first);
    CHECK(sel->m_side == disjoint[0].second);
    CHECK(sel->n_side == std::vector<Vertex>{1, 2, 3});
    CHECK(sel->m_side == std::vector<Vertex>{4});
}

TEST_CASE("leaf feasibility law over all A, B in {0..9}, n, m <= 5")
{
    constexpr int universe = 10;
    std::size_t mismatches = 0, invalid = 0;
    for (std::uint32_t abits = 0; abits < (1u << universe); ++abits) {
        auto a = set_of(universe, abits);
        int size_a = a.count();
        for (std::uint32_t bbits = 0; bbits < (1u << universe); ++bbits) {
            auto b = set_of(universe, bbits);
            int size_b = b.count(), size_union = std::popcount(abits | bbits);
            for (int n = 0; n <= 5; ++n)
                for (int m = 0; m <= 5; ++m) {
                    bool expected = size_a >= n && size_b >= m && size_union >= n + m;
                    auto sel = disjoint_leaf_selection(a, b, n, m);
                    if (sel.has_value() != expected)
                        ++mismatches;
                    else if (sel) {
                        std::set<Vertex> seen;
                        bool ok = static_cast<int>(sel->n_side.size()) == n && static_cast<int>(sel->m_side.size()) == m;
                        for (auto v : sel->n_side)
                            ok = ok && a.test(v) && seen.insert(v).second;
                        for (auto v : sel->m_side)
                            ok = ok && b.test(v) && seen.insert(v).second;
                        if (! ok)
                            ++invalid;
                    }
                }
        }
    }
    CHECK(mismatches == 0);
    CHECK(invalid == 0);
}

TEST_CASE("find_mono_lds on reference colorings")
{
    LdsParams params(3, 2, 1);

    auto red = TwoColoring::monochromatic(6, Color::Red);
    auto w = find_mono_lds(red, params);
    REQUIRE(w);
    CHECK(w->color == Color::Red);
    CHECK(verify_witness(red, params, *w));
    // Canonical scan order: a_1 = 0, smallest a_c = 1 reached via 0-2-1.
    CHECK(w->path == std::vector<Vertex>{0, 2, 1});
    CHECK(w->n_leaves == std::vector<Vertex>{3, 4});
    CHECK(w->m_leaves == std::vector<Vertex>{5});

    CHECK(! find_mono_lds(construct_two_cliques(params), params));

    auto blue_only = find_mono_lds(red, params, Color::Blue);
    CHECK(! blue_only);

    CHECK_THROWS_AS(find_mono_lds(TwoColoring(4), params), IncompleteInput);
}

TEST_CASE("single-vertex link is a star")
{
    LdsParams star(1, 1, 1);
    auto tri = TwoColoring::monochromatic(3, Color::Blue);
    auto w = find_mono_lds(tri, star);
    REQUIRE(w);
    CHECK(w->color == Color::Blue);
    CHECK(w->path == std::vector<Vertex>{0});
    CHECK(w->n_leaves == std::vector<Vertex>{1});
    CHECK(w->m_leaves == std::vector<Vertex>{2});
    CHECK(verify_witness(tri, star, *w));

    auto mixed = parse_coloring("r=3\nRRB\n");
    auto wm = find_mono_lds(mixed, star);
    REQUIRE(wm);
    CHECK(wm->color == Color::Red);
    CHECK(wm->path == std::vector<Vertex>{0});
}

TEST_CASE("verify_witness rejects broken certificates")
{
    LdsParams params(3, 2, 1);
    auto red = TwoColoring::monochromatic(6, Color::Red);
    auto w = *find_mono_lds(red, params);
    CHECK(verify_witness(red, params, w));

    auto moved = w;
    moved.n_leaves[0] = moved.path[1];
    CHECK(! verify_witness(red, params, moved));

    auto flipped = red;
    flipped.set_edge(w.path[0], w.path[1], EdgeSlot::Blue);
    CHECK(! verify_witness(flipped, params, w));

    auto short_path = w;
    short_path.path.pop_back();
    CHECK(! verify_witness(red, params, short_path));

    auto wrong_color = w;
    wrong_color.color = Color::Blue;
    CHECK(! verify_witness(red, params, wrong_color));

    auto out_of_range = w;
    out_of_range.m_leaves[0] = 6;
    CHECK_THROWS_AS(verify_witness(red, params, out_of_range), InvalidWitness);
}

TEST_CASE("brute_force_oracle examples and guard")
{
    auto blue = TwoColoring::monochromatic(5, Color::Blue);
    auto w = brute_force_oracle(blue, LdsParams(3, 1, 1));
    REQUIRE(w);
    CHECK(w->color == Color::Blue);

    // Red pentagon 0-1-2-3-4-0.
    TwoColoring pentagon(5, EdgeSlot::Blue);
    for (Vertex v = 0; v < 5; ++v)
        pentagon.set_edge(v, (v + 1) % 5, EdgeSlot::Red);
    auto wp = brute_force_oracle(pentagon, LdsParams(3, 1, 1), Color::Red);
    REQUIRE(wp);
    CHECK(verify_witness(pentagon, LdsParams(3, 1, 1), *wp));
    CHECK(find_mono_lds(pentagon, LdsParams(3, 1, 1), Color::Red).has_value());

    CHECK_THROWS_AS(brute_force_oracle(TwoColoring::monochromatic(11, Color::Red), LdsParams(3, 1, 1)), InstanceTooLarge);
    CHECK_THROWS_AS(brute_force_oracle(TwoColoring::monochromatic(10, Color::Red), LdsParams(5, 2, 2)), InstanceTooLarge);
}

TEST_CASE("detector agrees with the oracle per colour (completeness)")
{
    std::vector<LdsParams> grid{{1, 1, 1}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1}};
    std::size_t disagreements = 0, checked = 0;

    auto compare = [&](const TwoColoring & g, const LdsParams & params) {
        for (auto color : {Color::Red, Color::Blue}) {
            auto fast = find_mono_lds(g, params, color);
            auto slow = brute_force_oracle(g, params, color);
            if (fast.has_value() != slow.has_value())
                ++disagreements;
            if (fast && ! verify_witness(g, params, *fast))
                ++disagreements;
            ++checked;
        }
    };

    for (const auto & params : grid) {
        for (std::uint64_t mask = 0; mask < (1u << 10); ++mask)
            compare(test::coloring_from_mask(5, mask), params);
        for (std::uint64_t mask = 0; mask < (1u << 15); mask += 10)
            compare(test::coloring_from_mask(6, mask), params);
    }
    CHECK(disagreements == 0);
    CHECK(checked > 0);
}

TEST_CASE("random K_8 colorings match the oracle for S_3(2,1)")
{
    std::mt19937_64 rng(200);
    LdsParams params(3, 2, 1);
    for (int k = 0; k < 200; ++k) {
        auto g = test::random_coloring(8, rng);
        for (auto color : {Color::Red, Color::Blue})
            REQUIRE(find_mono_lds(g, params, color).has_value() == brute_force_oracle(g, params, color).has_value());
    }
}

TEST_CASE("colour swap and vertex relabelling invariance")
{
    std::mt19937_64 rng(31337);
    std::vector<LdsParams> grid{{1, 2, 1}, {2, 2, 1}, {3, 2, 1}, {4, 1, 1}, {5, 1, 0}};
    for (int k = 0; k < 300; ++k) {
        int r = 5 + static_cast<int>(rng() % 5);
        auto g = test::random_coloring(r, rng);
        const auto & params = grid[static_cast<std::size_t>(k) % grid.size()];
        auto swapped = g.swapped();
        auto moved = g.relabelled(test::random_permutation(r, rng));

        bool red = find_mono_lds(g, params, Color::Red).has_value();
        bool blue = find_mono_lds(g, params, Color::Blue).has_value();
        CHECK(find_mono_lds(swapped, params, Color::Blue).has_value() == red);
        CHECK(find_mono_lds(swapped, params, Color::Red).has_value() == blue);
        CHECK(find_mono_lds(moved, params, Color::Red).has_value() == red);
        CHECK(find_mono_lds(moved, params, Color::Blue).has_value() == blue);
    }
}

TEST_CASE("edge-anchored detection on partial colorings")
{
    TwoColoring g(7);
    for (Vertex v = 0; v < 4; ++v)
        g.set_edge(v, v + 1, EdgeSlot::Red);
    g.set_edge(5, 6, EdgeSlot::Red);

    LdsParams p5(3, 1, 1);
    CHECK(find_lds_through_edge(g, p5, Color::Red, 3, 4).has_value());
    CHECK(find_lds_through_edge(g, p5, Color::Red, 1, 2).has_value());
    CHECK(! find_lds_through_edge(g, p5, Color::Red, 5, 6));
    CHECK(! find_lds_through_edge(g, p5, Color::Blue, 3, 4));
    CHECK(find_lds_in_color(g, p5, Color::Red).has_value());

    std::mt19937_64 rng(99);
    std::vector<LdsParams> grid{{1, 2, 0}, {2, 1, 1}, {3, 1, 1}, {3, 2, 0}, {4, 1, 0}};
    std::uniform_int_distribution<int> state(0, 2);
    for (int k = 0; k < 400; ++k) {
        int r = 5 + static_cast<int>(rng() % 3);
        TwoColoring partial(r);
        auto pairs = canonical_pairs(r);
        for (std::size_t s = 0; s < pairs.size(); ++s)
            partial.set_slot(s, pairs[s].first, pairs[s].second, static_cast<EdgeSlot>(state(rng)));
        const auto & params = grid[static_cast<std::size_t>(k) % grid.size()];
        for (std::size_t s = 0; s < pairs.size(); ++s) {
            auto slot = partial.slot_at(s);
            if (slot == EdgeSlot::Unset)
                continue;
            auto color = slot == EdgeSlot::Red ? Color::Red : Color::Blue;
            auto [u, v] = pairs[s];
            auto w = find_lds_through_edge(partial, params, color, u, v);
            REQUIRE(w.has_value() == brute_through_edge(partial, params, color, u, v));
            if (w)
                REQUIRE(verify_witness(partial, params, *w));
        }
    }
}
