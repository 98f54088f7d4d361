#pragma once

#include <lds/vertex_set.hh>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lds
{
    enum class Color : std::uint8_t
    {
        Red,
        Blue
    };

    /// Edge state in a possibly partial coloring. The numeric order Red < Blue
    /// is the order used for lexicographic comparison of colorings.
    enum class EdgeSlot : std::uint8_t
    {
        Red = 0,
        Blue = 1,
        Unset = 2
    };

    constexpr auto opposite(Color c) -> Color
    {
        return c == Color::Red ? Color::Blue : Color::Red;
    }

    constexpr auto to_slot(Color c) -> EdgeSlot
    {
        return c == Color::Red ? EdgeSlot::Red : EdgeSlot::Blue;
    }

    auto color_name(Color c) -> std::string_view;

    constexpr auto edge_count(int r) -> std::size_t
    {
        return r < 2 ? 0 : static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1) / 2;
    }

    /// Row-major index of the pair {i,j}, i < j < r. Throws InvalidPair otherwise.
    auto pair_index(Vertex i, Vertex j, int r) -> std::size_t;

    /// All pairs i < j < r in canonical (lexicographic) order, so that
    /// canonical_pairs(r)[pair_index(i, j, r)] == {i, j}.
    auto canonical_pairs(int r) -> std::vector<std::pair<Vertex, Vertex>>;

    /// A complete graph on r labelled vertices with red/blue/unset edges. The
    /// per-color neighbourhood sets are kept in step with the slot vector.
    class TwoColoring
    {
    public:
        /// r >= 1; every edge starts as `fill`.
        explicit TwoColoring(int r, EdgeSlot fill = EdgeSlot::Unset);

        static auto monochromatic(int r, Color c) -> TwoColoring;

        auto vertex_count() const -> int { return _r; }
        auto slots() const -> const std::vector<EdgeSlot> & { return _slots; }

        auto get_edge(Vertex i, Vertex j) const -> EdgeSlot;
        auto set_edge(Vertex i, Vertex j, EdgeSlot slot) -> void;

        auto slot_at(std::size_t index) const -> EdgeSlot { return _slots[index]; }

        /// Same as set_edge, addressed by canonical index; (i, j) must be the pair at that index.
        auto set_slot(std::size_t index, Vertex i, Vertex j, EdgeSlot slot) -> void;

        auto neighbors(Vertex v, Color c) const -> const VertexSet &
        {
            return _adjacent[static_cast<std::size_t>(v) * 2 + static_cast<std::size_t>(c)];
        }

        auto is_complete() const -> bool { return _unset == 0; }
        auto unset_count() const -> std::size_t { return _unset; }

        /// Every edge color swapped; Unset stays Unset.
        auto swapped() const -> TwoColoring;

        /// The coloring with vertex v relabelled as perm[v].
        auto relabelled(const std::vector<Vertex> & perm) const -> TwoColoring;

        friend auto operator==(const TwoColoring & a, const TwoColoring & b) -> bool
        {
            return a._r == b._r && a._slots == b._slots;
        }

    private:
        auto check_vertex(Vertex v) const -> void;
        auto write(Vertex i, Vertex j, std::size_t index, EdgeSlot slot) -> void;

        int _r;
        std::vector<EdgeSlot> _slots;
        std::vector<VertexSet> _adjacent;
        std::size_t _unset;
    };

    /// Text format: "r=<count>\n<slot string>\n", slot characters R/B/U in
    /// canonical pair order, '#' lines ignored. Throws ParseError.
    auto parse_coloring(std::string_view text) -> TwoColoring;
    auto serialize_coloring(const TwoColoring & coloring) -> std::string;

    /// Just the slot characters, used in JSON reports.
    auto slot_string(const TwoColoring & coloring) -> std::string;
}
