#include <lds/constructions.hh>
#include <lds/errors.hh>

#include <stdexcept>
#include <string>

namespace lds
{
    namespace
    {
        auto require_odd_link(const LdsParams & params, std::string_view who) -> void
        {
            if (! params.odd_link() || params.p() < 1)
                throw InvalidParams(std::string(who) + " needs an odd link c = 2p+1 with p >= 1, got c=" + std::to_string(params.c()));
        }

        // Red on both blocks [0, split) and [split, r), blue across.
        auto split_coloring(int r, int split) -> TwoColoring
        {
            TwoColoring coloring(r);
            auto pairs = canonical_pairs(r);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                auto [i, j] = pairs[k];
                bool same_side = (i < split) == (j < split);
                coloring.set_slot(k, i, j, same_side ? EdgeSlot::Red : EdgeSlot::Blue);
            }
            return coloring;
        }

        // Sizes of the two colour classes of the (connected, bipartite) target.
        auto bipartition_sizes(const LdsParams & params) -> std::pair<int, int>
        {
            int k = params.vertex_count();
            std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(k));
            for (auto [x, y] : lds_edges(params)) {
                adj[static_cast<std::size_t>(x)].push_back(y);
                adj[static_cast<std::size_t>(y)].push_back(x);
            }
            std::vector<int> side(static_cast<std::size_t>(k), -1);
            std::vector<Vertex> stack{0};
            side[0] = 0;
            int zeros = 0;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                if (side[static_cast<std::size_t>(v)] == 0)
                    ++zeros;
                for (auto w : adj[static_cast<std::size_t>(v)])
                    if (side[static_cast<std::size_t>(w)] < 0) {
                        side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    }
            }
            return {zeros, k - zeros};
        }
    }

    auto construction_name(Construction k) -> std::string_view
    {
        return k == Construction::TwoCliques ? "two-cliques" : "clique-plus";
    }

    auto parse_construction(std::string_view name) -> std::optional<Construction>
    {
        if (name == "two-cliques")
            return Construction::TwoCliques;
        if (name == "clique-plus")
            return Construction::CliquePlus;
        return std::nullopt;
    }

    auto construct_two_cliques(const LdsParams & params) -> TwoColoring
    {
        require_odd_link(params, "two-cliques");
        int half = params.n() + params.m() + params.p() - 1;
        if (half < 1)
            throw InvalidParams("two-cliques needs n + m + p >= 2");
        return split_coloring(2 * half, half);
    }

    auto construct_clique_plus(const LdsParams & params) -> TwoColoring
    {
        require_odd_link(params, "clique-plus");
        if (params.n() < 1)
            throw InvalidParams("clique-plus needs n + m >= 1; for n = m = 0 the path embeds in the blue part");
        int p = params.p();
        return split_coloring(params.n() + params.m() + 3 * p, p);
    }

    auto construct(Construction kind, const LdsParams & params) -> TwoColoring
    {
        return kind == Construction::TwoCliques ? construct_two_cliques(params) : construct_clique_plus(params);
    }

    auto analytic_precheck(const TwoColoring & coloring, const LdsParams & params) -> std::optional<bool>
    {
        if (! coloring.is_complete())
            return std::nullopt;

        int r = coloring.vertex_count();
        VertexSet seen(r);
        std::vector<int> blocks;
        for (Vertex v = 0; v < r; ++v) {
            if (seen.test(v))
                continue;
            auto block = coloring.neighbors(v, Color::Red);
            block.set(v);
            int size = block.count();
            bool clique = block.for_each([&](Vertex w) {
                return coloring.neighbors(w, Color::Red).count() == size - 1 && (coloring.neighbors(w, Color::Red) - block).empty();
            });
            if (! clique)
                return std::nullopt;
            seen |= block;
            blocks.push_back(size);
        }

        int needed = params.vertex_count();
        for (auto size : blocks)
            if (size >= needed)
                return true;

        // Blue is complete multipartite on the red blocks.
        if (blocks.size() == 1)
            return false;
        if (blocks.size() != 2)
            return std::nullopt;

        auto [x, y] = bipartition_sizes(params);
        int s1 = blocks[0], s2 = blocks[1];
        return (s1 >= x && s2 >= y) || (s1 >= y && s2 >= x);
    }

    auto certify(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Construction> built_by) -> CertReport
    {
        if (! coloring.is_complete())
            throw IncompleteInput("certification needs a complete coloring");

        CertReport report{params, built_by, coloring.vertex_count(), std::nullopt, CertMethod::Detector};

        std::optional<bool> predicted;
        if (built_by) {
            predicted = analytic_precheck(coloring, params);
            if (predicted)
                report.method = CertMethod::DetectorPlusAnalytic;
        }

        report.refutation = find_mono_lds(coloring, params);

        if (report.refutation && ! verify_witness(coloring, params, *report.refutation))
            throw std::logic_error("detector produced a witness that does not verify");
        if (predicted && *predicted != report.refutation.has_value())
            throw std::logic_error("analytic precheck disagrees with the detector");
        return report;
    }
}
