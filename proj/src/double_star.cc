#include <lds/double_star.hh>
#include <lds/errors.hh>

#include <algorithm>
#include <string>

namespace lds
{
    LdsParams::LdsParams(int c, int n, int m) :
        _c(c), _n(n), _m(m)
    {
        if (c < 1)
            throw InvalidParams("link vertex count c must be at least 1, got " + std::to_string(c));
        if (n < 0 || m < 0)
            throw InvalidParams("leaf counts must be non-negative");
        if (_n < _m)
            std::swap(_n, _m);
    }

    auto lds_edges(const LdsParams & params) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(static_cast<std::size_t>(params.edge_count()));
        int c = params.c(), n = params.n(), m = params.m();
        for (Vertex a = 0; a + 1 < c; ++a)
            edges.emplace_back(a, a + 1);
        for (Vertex v = c; v < c + n; ++v)
            edges.emplace_back(0, v);
        for (Vertex w = c + n; w < c + n + m; ++w)
            edges.emplace_back(c - 1, w);
        return edges;
    }

    auto disjoint_leaf_selection(const VertexSet & a, const VertexSet & b, int n, int m) -> std::optional<LeafSelection>
    {
        LeafSelection result;
        result.n_side.reserve(static_cast<std::size_t>(n));
        result.m_side.reserve(static_cast<std::size_t>(m));

        auto take = [](const VertexSet & from, int want, std::vector<Vertex> & into) {
            if (want <= 0)
                return;
            from.for_each([&](Vertex v) {
                into.push_back(v);
                return static_cast<int>(into.size()) < want;
            });
        };

        take(a - b, n, result.n_side);
        take(b - a, m, result.m_side);

        auto shared = a & b;
        int n_missing = n - static_cast<int>(result.n_side.size());
        int m_missing = m - static_cast<int>(result.m_side.size());
        if (n_missing + m_missing > shared.count())
            return std::nullopt;

        int handed = 0;
        shared.for_each([&](Vertex v) {
            if (handed < n_missing)
                result.n_side.push_back(v);
            else if (handed < n_missing + m_missing)
                result.m_side.push_back(v);
            else
                return false;
            ++handed;
            return true;
        });

        std::ranges::sort(result.n_side);
        std::ranges::sort(result.m_side);
        return result;
    }

    namespace
    {
        auto component_of(const TwoColoring & coloring, Color color, Vertex start) -> VertexSet
        {
            VertexSet seen(coloring.vertex_count());
            std::vector<Vertex> stack{start};
            seen.set(start);
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                (coloring.neighbors(v, color) - seen).for_each([&](Vertex w) {
                    seen.set(w);
                    stack.push_back(w);
                    return true;
                });
            }
            return seen;
        }

        // Depth-first enumeration of colored paths a_1 ... a_c from a fixed a_1,
        // keeping the completion with the smallest a_c (first in DFS order among
        // those) so that results follow the canonical (a_1, a_c, DFS) order.
        class PathScan
        {
        public:
            PathScan(const TwoColoring & coloring, const LdsParams & params, Color color,
                std::optional<std::pair<Vertex, Vertex>> anchor) :
                _coloring(coloring),
                _c(params.c()), _n(params.n()), _m(params.m()),
                _color(color),
                _anchor(anchor),
                _on_path(coloring.vertex_count())
            {
                _path.reserve(static_cast<std::size_t>(_c));
            }

            auto run() -> std::optional<Witness>
            {
                int r = _coloring.vertex_count();
                int needed = _n + _m + _c;
                if (needed > r)
                    return std::nullopt;

                std::optional<VertexSet> allowed_starts;
                if (_anchor)
                    allowed_starts = component_of(_coloring, _color, _anchor->first);

                std::vector<int> component_size(static_cast<std::size_t>(r), -1);

                for (Vertex a1 = 0; a1 < r; ++a1) {
                    if (allowed_starts && ! allowed_starts->test(a1))
                        continue;

                    auto & size = component_size[static_cast<std::size_t>(a1)];
                    if (size < 0) {
                        auto comp = component_of(_coloring, _color, a1);
                        int count = comp.count();
                        comp.for_each([&](Vertex v) { component_size[static_cast<std::size_t>(v)] = count; return true; });
                    }
                    if (size < needed)
                        continue;

                    if (auto w = scan_from(a1))
                        return w;
                }
                return std::nullopt;
            }

        private:
            auto nbrs(Vertex v) const -> const VertexSet & { return _coloring.neighbors(v, _color); }

            auto scan_from(Vertex a1) -> std::optional<Witness>
            {
                _best.reset();
                _best_end = _coloring.vertex_count();
                _path.assign(1, a1);
                _on_path.set(a1);

                if (_c == 1) {
                    if (nbrs(a1).count() >= _n + _m)
                        complete();
                }
                else if (nbrs(a1).count() >= _n + 1)
                    extend();

                _on_path.reset(a1);
                _path.clear();
                return std::move(_best);
            }

            auto extend() -> void
            {
                auto last = _path.back();
                auto a1 = _path.front();
                bool closing = static_cast<int>(_path.size()) + 1 == _c;

                (nbrs(last) - _on_path).for_each([&](Vertex v) {
                    if (closing) {
                        if (v >= _best_end)
                            return false;
                        if (nbrs(v).count() < _m + 1)
                            return true;
                    }

                    _path.push_back(v);
                    _on_path.set(v);

                    if (closing)
                        complete();
                    else if (nbrs(a1).count_without(_on_path) >= _n)
                        extend();

                    _on_path.reset(v);
                    _path.pop_back();
                    return true;
                });
            }

            auto complete() -> void
            {
                auto a1 = _path.front(), ac = _path.back();
                auto pool_a = nbrs(a1) - _on_path;
                auto pool_b = nbrs(ac) - _on_path;

                std::optional<LeafSelection> selection;
                if (! _anchor)
                    selection = disjoint_leaf_selection(pool_a, pool_b, _n, _m);
                else
                    selection = anchored_selection(pool_a, pool_b);

                if (selection) {
                    _best = Witness{_color, _path, std::move(selection->n_side), std::move(selection->m_side)};
                    _best_end = ac;
                }
            }

            auto anchored_selection(const VertexSet & pool_a, const VertexSet & pool_b) -> std::optional<LeafSelection>
            {
                auto [u, v] = *_anchor;
                for (std::size_t k = 0; k + 1 < _path.size(); ++k)
                    if ((_path[k] == u && _path[k + 1] == v) || (_path[k] == v && _path[k + 1] == u))
                        return disjoint_leaf_selection(pool_a, pool_b, _n, _m);

                auto a1 = _path.front(), ac = _path.back();
                auto forced = [&](Vertex leaf, bool n_side) -> std::optional<LeafSelection> {
                    int want_n = _n - (n_side ? 1 : 0), want_m = _m - (n_side ? 0 : 1);
                    if (want_n < 0 || want_m < 0)
                        return std::nullopt;
                    if (! (n_side ? pool_a : pool_b).test(leaf))
                        return std::nullopt;
                    auto a = pool_a, b = pool_b;
                    a.reset(leaf);
                    b.reset(leaf);
                    auto sel = disjoint_leaf_selection(a, b, want_n, want_m);
                    if (sel) {
                        auto & side = n_side ? sel->n_side : sel->m_side;
                        side.insert(std::ranges::upper_bound(side, leaf), leaf);
                    }
                    return sel;
                };

                for (auto [centre, leaf] : {std::pair{u, v}, std::pair{v, u}}) {
                    if (centre == a1)
                        if (auto sel = forced(leaf, true))
                            return sel;
                    if (centre == ac)
                        if (auto sel = forced(leaf, false))
                            return sel;
                }
                return std::nullopt;
            }

            const TwoColoring & _coloring;
            int _c, _n, _m;
            Color _color;
            std::optional<std::pair<Vertex, Vertex>> _anchor;

            std::vector<Vertex> _path;
            VertexSet _on_path;
            Vertex _best_end = 0;
            std::optional<Witness> _best;
        };
    }

    auto find_lds_in_color(const TwoColoring & coloring, const LdsParams & params, Color color) -> std::optional<Witness>
    {
        return PathScan(coloring, params, color, std::nullopt).run();
    }

    auto find_lds_through_edge(const TwoColoring & coloring, const LdsParams & params, Color color,
        Vertex u, Vertex v) -> std::optional<Witness>
    {
        if (coloring.get_edge(u, v) != to_slot(color))
            return std::nullopt;
        return PathScan(coloring, params, color, std::pair{u, v}).run();
    }

    auto find_mono_lds(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Color> restrict_to) -> std::optional<Witness>
    {
        if (! coloring.is_complete())
            throw IncompleteInput("coloring has " + std::to_string(coloring.unset_count()) + " unset edges");

        for (auto color : {Color::Red, Color::Blue}) {
            if (restrict_to && *restrict_to != color)
                continue;
            if (auto w = find_lds_in_color(coloring, params, color))
                return w;
        }
        return std::nullopt;
    }

    auto verify_witness(const TwoColoring & coloring, const LdsParams & params, const Witness & witness) -> bool
    {
        int r = coloring.vertex_count();
        VertexSet used(r);
        bool distinct = true;
        for (const auto * part : {&witness.path, &witness.n_leaves, &witness.m_leaves})
            for (auto v : *part) {
                if (v < 0 || v >= r)
                    throw InvalidWitness("witness vertex " + std::to_string(v) + " out of range for r=" + std::to_string(r));
                if (used.test(v))
                    distinct = false;
                used.set(v);
            }

        if (! distinct)
            return false;
        if (static_cast<int>(witness.path.size()) != params.c()
            || static_cast<int>(witness.n_leaves.size()) != params.n()
            || static_cast<int>(witness.m_leaves.size()) != params.m())
            return false;

        auto want = to_slot(witness.color);
        auto joined = [&](Vertex x, Vertex y) { return coloring.get_edge(x, y) == want; };

        for (std::size_t k = 0; k + 1 < witness.path.size(); ++k)
            if (! joined(witness.path[k], witness.path[k + 1]))
                return false;
        for (auto v : witness.n_leaves)
            if (! joined(witness.path.front(), v))
                return false;
        for (auto w : witness.m_leaves)
            if (! joined(witness.path.back(), w))
                return false;
        return true;
    }
}
