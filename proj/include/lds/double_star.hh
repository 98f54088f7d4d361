#pragma once

#include <lds/coloring.hh>

#include <optional>
#include <utility>
#include <vector>

namespace lds
{
    /// Parameters of the linked double star S_c(n,m): stars with n and m leaves
    /// whose centres are the ends of a path on c vertices. Constructed values
    /// always satisfy c >= 1 and n >= m >= 0 (the two leaf counts are swapped
    /// if given the other way round).
    class LdsParams
    {
    public:
        LdsParams(int c, int n, int m);

        auto c() const -> int { return _c; }
        auto n() const -> int { return _n; }
        auto m() const -> int { return _m; }

        auto odd_link() const -> bool { return _c % 2 == 1; }

        /// Half-link parameter, (c-1)/2; only meaningful for odd c.
        auto p() const -> int { return (_c - 1) / 2; }

        auto vertex_count() const -> int { return _n + _m + _c; }
        auto edge_count() const -> int { return vertex_count() - 1; }

        friend auto operator==(const LdsParams &, const LdsParams &) -> bool = default;

    private:
        int _c, _n, _m;
    };

    /// Canonical labelled copy: path 0..c-1, n-leaves c..c+n-1 on vertex 0,
    /// m-leaves c+n..c+n+m-1 on vertex c-1. Edges are (smaller, larger), path
    /// edges first, then n-leaf edges, then m-leaf edges.
    auto lds_edges(const LdsParams & params) -> std::vector<std::pair<Vertex, Vertex>>;

    struct Witness
    {
        Color color;
        std::vector<Vertex> path;
        std::vector<Vertex> n_leaves;
        std::vector<Vertex> m_leaves;

        friend auto operator==(const Witness &, const Witness &) -> bool = default;
    };

    struct LeafSelection
    {
        std::vector<Vertex> n_side;
        std::vector<Vertex> m_side;
    };

    /// Picks n leaves from A and m from B, disjointly. Exclusive vertices are
    /// used first (ascending); the shared part is then handed to the n side,
    /// then the m side, in ascending order. Returns nullopt exactly when
    /// |A| < n, |B| < m or |A u B| < n + m.
    auto disjoint_leaf_selection(const VertexSet & a, const VertexSet & b, int n, int m) -> std::optional<LeafSelection>;

    /// Exhaustive search for a monochromatic S_c(n,m). Colors are tried Red
    /// then Blue (or only `restrict_to`); the first witness in canonical scan
    /// order is returned. Throws IncompleteInput on a partial coloring.
    auto find_mono_lds(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Color> restrict_to = std::nullopt) -> std::optional<Witness>;

    /// Same scan restricted to colored edges of one color; Unset edges are
    /// simply absent. Works on partial colorings.
    auto find_lds_in_color(const TwoColoring & coloring, const LdsParams & params, Color color) -> std::optional<Witness>;

    /// Looks only for copies in `color` that use the edge {u,v}. Used by the
    /// search engine right after that edge has been colored.
    auto find_lds_through_edge(const TwoColoring & coloring, const LdsParams & params, Color color,
        Vertex u, Vertex v) -> std::optional<Witness>;

    /// Certificate check. Throws InvalidWitness if any vertex index is out of range.
    auto verify_witness(const TwoColoring & coloring, const LdsParams & params, const Witness & witness) -> bool;
}
