#pragma once

#include <lds/double_star.hh>

#include <optional>
#include <string_view>

namespace lds
{
    /// Which closed form produced a value.
    enum class Provenance
    {
        LowerTwoCliques,   ///< 2(n+m+p) - 1, from the two-cliques coloring
        LowerCliquePlus,   ///< n+m+3p+1, from the clique-plus coloring
        OddLinkLargeStar,  ///< odd c, n >= c: 2(n+m) + c - 2
        OddLinkTwoLeaves,  ///< odd c, m = 2, n <= p-2: n + 3p + 3
        Broom,             ///< m = 0, broom formula
        FourVertexLink,    ///< c = 4: max(2n+3, n+2m+5)
        TwoVertexLink,     ///< c = 2 (double stars), outside the open gap
        None
    };

    auto provenance_name(Provenance p) -> std::string_view;

    enum class LowerBranch
    {
        TwoCliques,
        CliquePlus,
        Tie
    };

    auto lower_branch_name(LowerBranch b) -> std::string_view;

    struct LowerBound
    {
        int value;
        LowerBranch branch;
        /// Set for n = m = 0, where only the two-cliques value is reported.
        bool degenerate;
    };

    /// max(2(n+m+p) - 1, n+m+3p+1) for odd c = 2p+1, p >= 1. Throws
    /// UnsupportedParams for even c or c = 1.
    auto lower_bound(const LdsParams & params) -> LowerBound;

    struct ExactValue
    {
        int value;
        Provenance provenance;
    };

    /// Known exact Ramsey number, if one of the covered regimes applies. Gates
    /// are tried in a fixed order: odd c with n >= c and m >= 1; odd c with
    /// m = 2 and 2 <= n <= p-2; m = 0 (brooms); c = 4; c = 2.
    auto exact_value(const LdsParams & params) -> std::optional<ExactValue>;

    /// Ramsey number of the broom with n leaves on a path of c vertices.
    /// c = 3 is answered as the double star with n and 1 leaves.
    auto broom_ramsey(int n, int c) -> std::optional<int>;

    /// Two-color Ramsey number R(C_m, C_n) for 3 <= m <= n, excluding (3,3) and (4,4).
    auto cycle_ramsey(int m, int n) -> std::optional<int>;

    /// Upper bound n + l - 1 on r(P_l, K_{1,n}). Only an upper bound.
    auto path_star_upper(int l, int n) -> int;

    auto s4_ramsey(int n, int m) -> int;

    /// Double stars (c = 2): max(2n+1, n+2m+2) for odd n with m <= 2, else
    /// max(2n+2, n+2m+2). nullopt inside the open range sqrt(2) m < n < 3m,
    /// decided with integer arithmetic.
    auto s2_ramsey(int n, int m) -> std::optional<int>;

    struct BoundReport
    {
        LdsParams params;
        int lower;
        /// Empty when the lower bound is just the target's vertex count.
        std::optional<LowerBranch> lower_branch;
        bool lower_degenerate;
        std::optional<int> exact;
        Provenance provenance;
    };

    auto bound_report(const LdsParams & params) -> BoundReport;
}
