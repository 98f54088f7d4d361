#include <lds/coloring.hh>
#include <lds/errors.hh>

#include <charconv>
#include <limits>
#include <optional>

namespace lds
{
    namespace
    {
        // Keeps r(r-1)/2 comfortably inside memory and int arithmetic.
        constexpr int max_vertices = 1 << 15;

        auto slot_char(EdgeSlot s) -> char
        {
            switch (s) {
                case EdgeSlot::Red: return 'R';
                case EdgeSlot::Blue: return 'B';
                case EdgeSlot::Unset: return 'U';
            }
            return '?';
        }
    }

    auto color_name(Color c) -> std::string_view
    {
        return c == Color::Red ? "red" : "blue";
    }

    auto pair_index(Vertex i, Vertex j, int r) -> std::size_t
    {
        if (i == j)
            throw InvalidPair("pair {" + std::to_string(i) + "," + std::to_string(j) + "} is a loop");
        if (i > j)
            std::swap(i, j);
        if (i < 0 || j >= r)
            throw InvalidPair("pair {" + std::to_string(i) + "," + std::to_string(j) + "} out of range for r=" + std::to_string(r));

        auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j), rr = static_cast<std::size_t>(r);
        return ii * rr - ii * (ii + 1) / 2 + (jj - ii - 1);
    }

    auto canonical_pairs(int r) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        result.reserve(edge_count(r));
        for (Vertex i = 0; i < r; ++i)
            for (Vertex j = i + 1; j < r; ++j)
                result.emplace_back(i, j);
        return result;
    }

    TwoColoring::TwoColoring(int r, EdgeSlot fill) :
        _r(r)
    {
        if (r < 1 || r > max_vertices)
            throw InvalidParams("vertex count must be in [1, " + std::to_string(max_vertices) + "], got " + std::to_string(r));

        _slots.assign(edge_count(r), fill);
        _adjacent.assign(static_cast<std::size_t>(r) * 2, VertexSet(r));
        _unset = fill == EdgeSlot::Unset ? _slots.size() : 0;

        if (fill != EdgeSlot::Unset) {
            auto c = fill == EdgeSlot::Red ? Color::Red : Color::Blue;
            for (Vertex v = 0; v < r; ++v) {
                auto & row = _adjacent[static_cast<std::size_t>(v) * 2 + static_cast<std::size_t>(c)];
                for (Vertex w = 0; w < r; ++w)
                    if (w != v)
                        row.set(w);
            }
        }
    }

    auto TwoColoring::monochromatic(int r, Color c) -> TwoColoring
    {
        return TwoColoring(r, to_slot(c));
    }

    auto TwoColoring::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= _r)
            throw InvalidPair("vertex " + std::to_string(v) + " out of range for r=" + std::to_string(_r));
    }

    auto TwoColoring::get_edge(Vertex i, Vertex j) const -> EdgeSlot
    {
        return _slots[pair_index(i, j, _r)];
    }

    auto TwoColoring::set_edge(Vertex i, Vertex j, EdgeSlot slot) -> void
    {
        auto index = pair_index(i, j, _r);
        write(i, j, index, slot);
    }

    auto TwoColoring::set_slot(std::size_t index, Vertex i, Vertex j, EdgeSlot slot) -> void
    {
        write(i, j, index, slot);
    }

    auto TwoColoring::write(Vertex i, Vertex j, std::size_t index, EdgeSlot slot) -> void
    {
        auto old = _slots[index];
        if (old == slot)
            return;

        auto row = [&](Vertex v, EdgeSlot s) -> VertexSet & {
            return _adjacent[static_cast<std::size_t>(v) * 2 + static_cast<std::size_t>(s)];
        };

        if (old == EdgeSlot::Unset)
            --_unset;
        else {
            row(i, old).reset(j);
            row(j, old).reset(i);
        }

        if (slot == EdgeSlot::Unset)
            ++_unset;
        else {
            row(i, slot).set(j);
            row(j, slot).set(i);
        }

        _slots[index] = slot;
    }

    auto TwoColoring::swapped() const -> TwoColoring
    {
        TwoColoring result(_r);
        auto pairs = canonical_pairs(_r);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto s = _slots[k];
            if (s != EdgeSlot::Unset)
                result.set_slot(k, pairs[k].first, pairs[k].second, s == EdgeSlot::Red ? EdgeSlot::Blue : EdgeSlot::Red);
        }
        return result;
    }

    auto TwoColoring::relabelled(const std::vector<Vertex> & perm) const -> TwoColoring
    {
        if (perm.size() != static_cast<std::size_t>(_r))
            throw InvalidParams("permutation size does not match vertex count");
        for (auto v : perm)
            check_vertex(v);

        TwoColoring result(_r);
        auto pairs = canonical_pairs(_r);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            result.set_edge(perm[pairs[k].first], perm[pairs[k].second], _slots[k]);
        return result;
    }

    auto slot_string(const TwoColoring & coloring) -> std::string
    {
        std::string result;
        result.reserve(coloring.slots().size());
        for (auto s : coloring.slots())
            result.push_back(slot_char(s));
        return result;
    }

    auto serialize_coloring(const TwoColoring & coloring) -> std::string
    {
        return "r=" + std::to_string(coloring.vertex_count()) + "\n" + slot_string(coloring) + "\n";
    }

    auto parse_coloring(std::string_view text) -> TwoColoring
    {
        int line_number = 0;
        std::size_t pos = 0;
        std::optional<int> r;
        std::optional<TwoColoring> result;

        while (pos < text.size()) {
            ++line_number;
            auto newline = text.find('\n', pos);
            if (newline == std::string_view::npos)
                throw ParseError(line_number, static_cast<int>(text.size() - pos) + 1, "missing trailing newline");

            auto line = text.substr(pos, newline - pos);
            pos = newline + 1;

            if (! line.empty() && line.front() == '#')
                continue;

            if (! r) {
                if (line.substr(0, 2) != "r=")
                    throw ParseError(line_number, 1, "expected header 'r=<vertex count>'");
                auto digits = line.substr(2);
                if (digits.empty())
                    throw ParseError(line_number, 3, "missing vertex count");
                for (std::size_t k = 0; k < digits.size(); ++k)
                    if (digits[k] < '0' || digits[k] > '9')
                        throw ParseError(line_number, static_cast<int>(k) + 3, "vertex count must be a decimal integer");

                int value = 0;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
                if (ec != std::errc{} || value < 1 || value > max_vertices)
                    throw ParseError(line_number, 3, "vertex count out of range");
                r = value;
            }
            else if (! result) {
                auto expected = edge_count(*r);
                TwoColoring coloring(*r);
                Vertex i = 0, j = 1;
                for (std::size_t k = 0; k < line.size(); ++k) {
                    if (k >= expected)
                        throw ParseError(line_number, static_cast<int>(k) + 1,
                            "slot string longer than " + std::to_string(expected) + " characters");
                    EdgeSlot s;
                    switch (line[k]) {
                        case 'R': s = EdgeSlot::Red; break;
                        case 'B': s = EdgeSlot::Blue; break;
                        case 'U': s = EdgeSlot::Unset; break;
                        default:
                            throw ParseError(line_number, static_cast<int>(k) + 1,
                                std::string("illegal slot character '") + line[k] + "'");
                    }
                    coloring.set_slot(k, i, j, s);
                    if (++j == *r) {
                        ++i;
                        j = i + 1;
                    }
                }
                if (line.size() != expected)
                    throw ParseError(line_number, static_cast<int>(line.size()) + 1,
                        "slot string has " + std::to_string(line.size()) + " characters, expected " + std::to_string(expected));
                result = std::move(coloring);
            }
            else
                throw ParseError(line_number, 1, "unexpected content after slot string");
        }

        if (! r)
            throw ParseError(line_number + 1, 1, "missing header 'r=<vertex count>'");
        if (! result)
            throw ParseError(line_number + 1, 1, "missing slot string");
        return std::move(*result);
    }
}
