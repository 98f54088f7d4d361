#pragma once

#include <lds/double_star.hh>

#include <optional>

namespace lds
{
    /// Reference detector: tries every injective placement of lds_edges(params)
    /// into the coloring and reads edge colors directly. It shares no code with
    /// find_mono_lds. Refuses (InstanceTooLarge) when r > 10 or the target has
    /// more than 8 vertices.
    auto brute_force_oracle(const TwoColoring & coloring, const LdsParams & params,
        std::optional<Color> restrict_to = std::nullopt) -> std::optional<Witness>;
}
