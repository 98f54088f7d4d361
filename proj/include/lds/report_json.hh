#pragma once

#include <lds/constructions.hh>
#include <lds/formulas.hh>
#include <lds/search.hh>

#include <json.hpp>

namespace lds
{
    auto to_json(const LdsParams & params) -> nlohmann::ordered_json;
    auto to_json(const Witness & witness) -> nlohmann::ordered_json;
    auto to_json(const CertReport & report) -> nlohmann::ordered_json;
    auto to_json(const BoundReport & report) -> nlohmann::ordered_json;
    /// Deterministic at parallel width 1: wall time is left out.
    auto to_json(const SearchOutcome & outcome) -> nlohmann::ordered_json;

    /// Throws ParseError (line 1, column 1) on a malformed witness document.
    auto witness_from_json(const nlohmann::json & doc) -> Witness;
}
