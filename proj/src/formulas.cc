#include <lds/errors.hh>
#include <lds/formulas.hh>

#include <algorithm>
#include <cstdint>
#include <string>

namespace lds
{
    auto provenance_name(Provenance p) -> std::string_view
    {
        switch (p) {
            case Provenance::LowerTwoCliques: return "lower-two-cliques";
            case Provenance::LowerCliquePlus: return "lower-clique-plus";
            case Provenance::OddLinkLargeStar: return "odd-link-large-n";
            case Provenance::OddLinkTwoLeaves: return "odd-link-m2-small-n";
            case Provenance::Broom: return "broom";
            case Provenance::FourVertexLink: return "link-4";
            case Provenance::TwoVertexLink: return "link-2";
            case Provenance::None: return "none";
        }
        return "none";
    }

    auto lower_branch_name(LowerBranch b) -> std::string_view
    {
        switch (b) {
            case LowerBranch::TwoCliques: return "A";
            case LowerBranch::CliquePlus: return "B";
            case LowerBranch::Tie: return "tie";
        }
        return "tie";
    }

    auto lower_bound(const LdsParams & params) -> LowerBound
    {
        if (! params.odd_link() || params.p() < 1)
            throw UnsupportedParams("lower bound needs odd c >= 3, got c=" + std::to_string(params.c()));

        int n = params.n(), m = params.m(), p = params.p();
        int two_cliques = 2 * (n + m + p) - 1;

        if (n + m == 0)
            return {two_cliques, LowerBranch::TwoCliques, true};

        int clique_plus = n + m + 3 * p + 1;
        if (two_cliques > clique_plus)
            return {two_cliques, LowerBranch::TwoCliques, false};
        if (two_cliques < clique_plus)
            return {clique_plus, LowerBranch::CliquePlus, false};
        return {two_cliques, LowerBranch::Tie, false};
    }

    auto s4_ramsey(int n, int m) -> int
    {
        if (m < 0 || n < m)
            throw InvalidParams("s4_ramsey needs n >= m >= 0");
        return std::max(2 * n + 3, n + 2 * m + 5);
    }

    auto s2_ramsey(int n, int m) -> std::optional<int>
    {
        if (m < 0 || n < m)
            throw InvalidParams("s2_ramsey needs n >= m >= 0");

        auto nn = static_cast<std::int64_t>(n), mm = static_cast<std::int64_t>(m);
        bool covered = nn * nn <= 2 * mm * mm || nn >= 3 * mm;
        if (! covered)
            return std::nullopt;

        if (n % 2 == 1 && m <= 2)
            return std::max(2 * n + 1, n + 2 * m + 2);
        return std::max(2 * n + 2, n + 2 * m + 2);
    }

    auto broom_ramsey(int n, int c) -> std::optional<int>
    {
        if (n < 2 || c < 3)
            return std::nullopt;
        if (c == 3)
            return s2_ramsey(n, 1);

        int half_up = (c + 1) / 2;
        if (c >= 2 * n - 1)
            return n + c + half_up - 1;
        if (c <= 2 * n - 2)
            return 2 * (n + c) - 2 * half_up - 1;
        return std::nullopt;
    }

    auto cycle_ramsey(int m, int n) -> std::optional<int>
    {
        if (m < 3 || n < m)
            return std::nullopt;
        if ((m == 3 && n == 3) || (m == 4 && n == 4))
            return std::nullopt;

        if (m % 2 == 1)
            return 2 * n - 1;
        if (n % 2 == 0)
            return n - 1 + m / 2;
        if (m < n)
            return std::max(2 * m - 1, n - 1 + m / 2);
        return std::nullopt;
    }

    auto path_star_upper(int l, int n) -> int
    {
        if (l < 1 || n < 1)
            throw InvalidParams("path_star_upper needs l >= 1 and n >= 1");
        return n + l - 1;
    }

    auto exact_value(const LdsParams & params) -> std::optional<ExactValue>
    {
        int c = params.c(), n = params.n(), m = params.m(), p = params.p();

        if (params.odd_link() && p >= 1) {
            if (n >= c && m >= 1)
                return ExactValue{2 * (n + m) + c - 2, Provenance::OddLinkLargeStar};
            if (m == 2 && n >= 2 && n <= p - 2)
                return ExactValue{n + 3 * p + 3, Provenance::OddLinkTwoLeaves};
        }

        if (m == 0)
            if (auto v = broom_ramsey(n, c))
                return ExactValue{*v, Provenance::Broom};

        if (c == 4)
            return ExactValue{s4_ramsey(n, m), Provenance::FourVertexLink};

        if (c == 2)
            if (auto v = s2_ramsey(n, m))
                return ExactValue{*v, Provenance::TwoVertexLink};

        return std::nullopt;
    }

    auto bound_report(const LdsParams & params) -> BoundReport
    {
        BoundReport report{params, params.vertex_count(), std::nullopt, false, std::nullopt, Provenance::None};

        if (params.odd_link() && params.p() >= 1) {
            auto lb = lower_bound(params);
            report.lower = lb.value;
            report.lower_branch = lb.branch;
            report.lower_degenerate = lb.degenerate;
            report.provenance = lb.branch == LowerBranch::CliquePlus ? Provenance::LowerCliquePlus : Provenance::LowerTwoCliques;
        }

        if (auto exact = exact_value(params)) {
            report.exact = exact->value;
            report.provenance = exact->provenance;
        }
        return report;
    }
}
