#include <lds/errors.hh>
#include <lds/report_json.hh>

namespace lds
{
    using nlohmann::ordered_json;

    auto to_json(const LdsParams & params) -> ordered_json
    {
        return ordered_json{{"c", params.c()}, {"n", params.n()}, {"m", params.m()}};
    }

    auto to_json(const Witness & witness) -> ordered_json
    {
        return ordered_json{
            {"color", color_name(witness.color)},
            {"path", witness.path},
            {"n_leaves", witness.n_leaves},
            {"m_leaves", witness.m_leaves}};
    }

    auto to_json(const CertReport & report) -> ordered_json
    {
        ordered_json doc;
        doc["construction"] = report.construction ? ordered_json(construction_name(*report.construction)) : ordered_json(nullptr);
        doc["params"] = to_json(report.params);
        doc["r"] = report.r;
        doc["verdict"] = report.certified() ? "certified" : "refuted";
        doc["witness"] = report.refutation ? to_json(*report.refutation) : ordered_json(nullptr);
        doc["method"] = report.method == CertMethod::Detector ? "detector" : "detector+analytic";
        return doc;
    }

    auto to_json(const BoundReport & report) -> ordered_json
    {
        ordered_json doc;
        doc["params"] = to_json(report.params);
        doc["lower"] = report.lower;
        doc["lower_branch"] = report.lower_branch ? ordered_json(lower_branch_name(*report.lower_branch)) : ordered_json("trivial");
        if (report.lower_degenerate)
            doc["warning"] = "n = m = 0: only the two-cliques bound is reported";
        doc["exact"] = report.exact ? ordered_json(*report.exact) : ordered_json(nullptr);
        doc["provenance"] = provenance_name(report.provenance);
        return doc;
    }

    auto to_json(const SearchOutcome & outcome) -> ordered_json
    {
        ordered_json doc;
        doc["params"] = to_json(outcome.params);
        doc["result"] = result_kind_name(outcome.kind);
        doc["value"] = outcome.exact() ? ordered_json(*outcome.exact()) : ordered_json(nullptr);
        doc["lo"] = outcome.lo;
        doc["hi"] = outcome.hi;
        doc["hi_known"] = outcome.hi_known;
        if (! outcome.reason.empty())
            doc["reason"] = outcome.reason;
        if (outcome.good_coloring)
            doc["good_coloring"] = ordered_json{
                {"r", outcome.good_coloring->vertex_count()},
                {"slots", slot_string(*outcome.good_coloring)}};
        else
            doc["good_coloring"] = nullptr;
        doc["nodes_explored"] = outcome.nodes_explored;
        return doc;
    }

    auto witness_from_json(const nlohmann::json & doc) -> Witness
    {
        auto fail = [](const std::string & what) -> Witness { throw ParseError(1, 1, "witness: " + what); };

        if (! doc.is_object())
            return fail("expected a JSON object");
        for (auto key : {"color", "path", "n_leaves", "m_leaves"})
            if (! doc.contains(key))
                return fail(std::string("missing field '") + key + "'");

        Witness w{Color::Red, {}, {}, {}};
        const auto & color = doc["color"];
        if (color == "red")
            w.color = Color::Red;
        else if (color == "blue")
            w.color = Color::Blue;
        else
            return fail("color must be \"red\" or \"blue\"");

        auto read = [&](const char * key, std::vector<Vertex> & into) {
            const auto & arr = doc[key];
            if (! arr.is_array())
                fail(std::string("field '") + key + "' must be an array");
            for (const auto & x : arr) {
                if (! x.is_number_integer())
                    fail(std::string("field '") + key + "' must hold integers");
                into.push_back(x.get<Vertex>());
            }
        };
        read("path", w.path);
        read("n_leaves", w.n_leaves);
        read("m_leaves", w.m_leaves);
        return w;
    }
}
