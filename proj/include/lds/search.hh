#pragma once

#include <lds/double_star.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lds
{
    struct SearchOptions
    {
        std::uint64_t node_limit = 1'000'000'000;
        bool use_lex_leader = true;
        /// Number of worker threads; 1 means a plain sequential DFS.
        int parallel_width = 1;
        /// Keep the good coloring that certifies the lower end.
        bool record_extremal = true;
    };

    enum class GoodColoringStatus
    {
        Found,
        None,
        Indeterminate
    };

    struct GoodColoringResult
    {
        GoodColoringStatus status;
        std::optional<TwoColoring> coloring;
        std::uint64_t nodes = 0;
    };

    /// Looks for a complete coloring of K_r without a monochromatic S_c(n,m).
    /// Edges are branched in canonical order, Red first, with edge (0,1) fixed
    /// Red; the result is the lexicographically least good coloring. Hitting
    /// the node limit yields Indeterminate, never None.
    auto find_good_coloring(const LdsParams & params, int r, const SearchOptions & opts = {}) -> GoodColoringResult;

    enum class ResultKind
    {
        Exact,
        Interval,
        Indeterminate
    };

    auto result_kind_name(ResultKind k) -> std::string_view;

    struct SearchOutcome
    {
        LdsParams params;
        ResultKind kind;
        /// Certified bounds: lo = 1 + largest r with a good coloring found;
        /// hi = smallest r shown to have none (r_hi + 1 when hi_known is false).
        int lo;
        int hi;
        bool hi_known;
        std::string reason;
        /// A good coloring on lo - 1 vertices (absent when lo - 1 < 1 or not recorded).
        std::optional<TwoColoring> good_coloring;
        std::uint64_t nodes_explored = 0;
        std::chrono::duration<double> wall_time{};

        auto exact() const -> std::optional<int>
        {
            return kind == ResultKind::Exact ? std::optional<int>(lo) : std::nullopt;
        }
    };

    /// Determines r(S_c(n,m)) by probing K_r starting at r_lo - 1 and moving up
    /// (or down, if r_lo - 1 already admits no good coloring).
    auto compute_ramsey(const LdsParams & params, int r_lo, int r_hi, const SearchOptions & opts = {}) -> SearchOutcome;
}
