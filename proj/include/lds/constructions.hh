#pragma once

#include <lds/double_star.hh>

#include <optional>
#include <string_view>

namespace lds
{
    enum class Construction
    {
        TwoCliques,
        CliquePlus
    };

    auto construction_name(Construction k) -> std::string_view;
    auto parse_construction(std::string_view name) -> std::optional<Construction>;

    /// Red = two disjoint cliques of n+m+p-1 vertices each (vertices
    /// 0..n+m+p-2 and the rest); blue = the complete bipartite graph between
    /// them. Needs odd c with p >= 1 and n+m+p >= 2.
    auto construct_two_cliques(const LdsParams & params) -> TwoColoring;

    /// Red = K_p on 0..p-1 plus K_{n+m+2p} on the rest; blue = K(p, n+m+2p).
    /// Needs odd c with p >= 1 and n >= 1. With n = m = 0 the target is a bare
    /// odd path, which does fit into the blue part, so that case is rejected.
    auto construct_clique_plus(const LdsParams & params) -> TwoColoring;

    auto construct(Construction kind, const LdsParams & params) -> TwoColoring;

    enum class CertMethod
    {
        Detector,
        DetectorPlusAnalytic
    };

    struct CertReport
    {
        LdsParams params;
        std::optional<Construction> construction;
        int r;
        std::optional<Witness> refutation; ///< empty means certified
        CertMethod method;

        auto certified() const -> bool { return ! refutation; }
    };

    /// Structural prediction for colorings whose red graph is a disjoint union
    /// of cliques: true if a monochromatic copy must exist, false if none can,
    /// nullopt when the structure is not one the argument covers.
    auto analytic_precheck(const TwoColoring & coloring, const LdsParams & params) -> std::optional<bool>;

    /// Runs the detector. When `built_by` is given the analytic precheck also
    /// runs, and a disagreement between the two throws std::logic_error.
    auto certify(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Construction> built_by = std::nullopt) -> CertReport;
}
