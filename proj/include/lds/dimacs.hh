#pragma once

#include <lds/double_star.hh>

#include <cstdint>
#include <string>

namespace lds
{
    struct CnfExport
    {
        std::string text;
        std::uint64_t embeddings = 0;
        std::size_t copies = 0;
        std::size_t clauses = 0;
    };

    /// DIMACS encoding of "K_r has a good coloring": variable k is the edge at
    /// canonical index k-1, true meaning red. Each distinct copy of the target
    /// (deduplicated by its sorted edge-index set) contributes one clause
    /// forbidding all-red and one forbidding all-blue. Throws InstanceTooLarge
    /// when the number of labelled placements exceeds `max_embeddings`.
    auto export_dimacs(const LdsParams & params, int r, std::uint64_t max_embeddings = 10'000'000) -> CnfExport;
}
