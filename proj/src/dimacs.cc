#include <lds/dimacs.hh>
#include <lds/errors.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace lds
{
    namespace
    {
        // r! / (r - k)!, or nullopt once it passes `cap`.
        auto placement_count(int r, int k, std::uint64_t cap) -> std::optional<std::uint64_t>
        {
            if (k > r)
                return 0;
            std::uint64_t total = 1;
            for (int f = r; f > r - k; --f) {
                if (total > cap / static_cast<std::uint64_t>(f))
                    return std::nullopt;
                total *= static_cast<std::uint64_t>(f);
            }
            return total <= cap ? std::optional(total) : std::nullopt;
        }
    }

    auto export_dimacs(const LdsParams & params, int r, std::uint64_t max_embeddings) -> CnfExport
    {
        if (r < 1)
            throw InvalidParams("vertex count must be at least 1");

        int k = params.vertex_count();
        auto expected = placement_count(r, k, max_embeddings);
        if (! expected)
            throw InstanceTooLarge("placing " + std::to_string(k) + " target vertices into K_" + std::to_string(r)
                + " exceeds the cap of " + std::to_string(max_embeddings) + " embeddings");

        auto edges = lds_edges(params);
        std::set<std::vector<std::uint32_t>> copies;
        std::vector<Vertex> image(static_cast<std::size_t>(k));
        std::vector<bool> used(static_cast<std::size_t>(r), false);
        std::uint64_t embeddings = 0;

        auto place = [&](auto & self, int target) -> void {
            if (target == k) {
                ++embeddings;
                std::vector<std::uint32_t> key;
                key.reserve(edges.size());
                for (auto [x, y] : edges)
                    key.push_back(static_cast<std::uint32_t>(
                        pair_index(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)], r)));
                std::ranges::sort(key);
                copies.insert(std::move(key));
                return;
            }
            for (Vertex v = 0; v < r; ++v) {
                if (used[static_cast<std::size_t>(v)])
                    continue;
                used[static_cast<std::size_t>(v)] = true;
                image[static_cast<std::size_t>(target)] = v;
                self(self, target + 1);
                used[static_cast<std::size_t>(v)] = false;
            }
        };
        if (k <= r)
            place(place, 0);

        CnfExport result;
        result.embeddings = embeddings;
        result.copies = copies.size();
        result.clauses = 2 * copies.size();

        std::ostringstream out;
        out << "c good colorings of K_" << r << " avoiding a monochromatic linked double star\n";
        out << "c params c=" << params.c() << " n=" << params.n() << " m=" << params.m() << "\n";
        out << "c r=" << r << "\n";
        out << "c embeddings=" << embeddings << "\n";
        out << "c copies=" << copies.size() << "\n";
        out << "c clauses=" << result.clauses << "\n";
        out << "c variable k is the edge at canonical pair index k-1; true = red\n";
        if (k > r)
            out << "c no copy fits: r < n + m + c\n";
        out << "p cnf " << edge_count(r) << " " << result.clauses << "\n";

        for (const auto & key : copies) {
            for (auto e : key)
                out << "-" << (e + 1) << " ";
            out << "0\n";
            for (auto e : key)
                out << (e + 1) << " ";
            out << "0\n";
        }

        result.text = out.str();
        return result;
    }
}
