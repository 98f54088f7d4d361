#include <lds/errors.hh>
#include <lds/oracle.hh>

#include <algorithm>

namespace lds
{
    namespace
    {
        constexpr int max_host_vertices = 10;
        constexpr int max_target_vertices = 8;

        auto try_all_placements(const TwoColoring & coloring, const LdsParams & params, Color color) -> std::optional<Witness>
        {
            int r = coloring.vertex_count();
            int k = params.vertex_count();
            auto edges = lds_edges(params);
            auto want = to_slot(color);

            std::vector<Vertex> image(static_cast<std::size_t>(k));
            std::vector<bool> used(static_cast<std::size_t>(r), false);
            std::optional<Witness> found;

            auto place = [&](auto & self, int target) -> bool {
                if (target == k) {
                    for (auto [x, y] : edges)
                        if (coloring.get_edge(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)]) != want)
                            return false;

                    Witness w{color, {}, {}, {}};
                    int c = params.c(), n = params.n();
                    for (int t = 0; t < k; ++t) {
                        auto v = image[static_cast<std::size_t>(t)];
                        if (t < c)
                            w.path.push_back(v);
                        else if (t < c + n)
                            w.n_leaves.push_back(v);
                        else
                            w.m_leaves.push_back(v);
                    }
                    std::ranges::sort(w.n_leaves);
                    std::ranges::sort(w.m_leaves);
                    found = std::move(w);
                    return true;
                }
                for (Vertex v = 0; v < r; ++v) {
                    if (used[static_cast<std::size_t>(v)])
                        continue;
                    used[static_cast<std::size_t>(v)] = true;
                    image[static_cast<std::size_t>(target)] = v;
                    bool done = self(self, target + 1);
                    used[static_cast<std::size_t>(v)] = false;
                    if (done)
                        return true;
                }
                return false;
            };

            if (k <= r)
                place(place, 0);
            return found;
        }
    }

    auto brute_force_oracle(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Color> restrict_to) -> std::optional<Witness>
    {
        if (coloring.vertex_count() > max_host_vertices || params.vertex_count() > max_target_vertices)
            throw InstanceTooLarge("oracle limited to r <= 10 and n + m + c <= 8");
        if (! coloring.is_complete())
            throw IncompleteInput("oracle requires a complete coloring");

        for (auto color : {Color::Red, Color::Blue}) {
            if (restrict_to && *restrict_to != color)
                continue;
            if (auto w = try_all_placements(coloring, params, color))
                return w;
        }
        return std::nullopt;
    }
}
