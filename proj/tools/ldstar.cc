// Command-line front end: bound, construct, detect, verify, search, sat-export.
//
// Exit codes: 0 normal result (including "none"), 1 usage or invalid
// parameters, 2 indeterminate search or refuted certification, 3 I/O or parse
// error.

#include <lds/constructions.hh>
#include <lds/dimacs.hh>
#include <lds/errors.hh>
#include <lds/formulas.hh>
#include <lds/report_json.hh>
#include <lds/search.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lds;

namespace
{
    enum ExitCode
    {
        ok = 0,
        usage = 1,
        indeterminate = 2,
        io = 3
    };

    struct IoError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw IoError("cannot open '" + path + "' for reading");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const std::string & path, const std::string & contents) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << contents) || ! out.flush())
            throw IoError("cannot write '" + path + "'");
    }

    auto describe(const LdsParams & p) -> std::string
    {
        return "S_" + std::to_string(p.c()) + "(" + std::to_string(p.n()) + "," + std::to_string(p.m()) + ")";
    }

    auto print_witness(std::ostream & out, const Witness & w) -> void
    {
        auto list = [&](const std::vector<Vertex> & vs) {
            for (std::size_t k = 0; k < vs.size(); ++k)
                out << (k ? " " : "") << vs[k];
        };
        out << color_name(w.color) << " witness: path ";
        list(w.path);
        out << "; n-leaves ";
        list(w.n_leaves);
        out << "; m-leaves ";
        list(w.m_leaves);
        out << "\n";
    }

    struct ParamArgs
    {
        int c = 0, n = 0, m = 0;

        auto add_to(CLI::App * cmd) -> void
        {
            cmd->add_option("--c", c, "link vertex count")->required();
            cmd->add_option("--n", n, "leaves of the first star")->required();
            cmd->add_option("--m", m, "leaves of the second star")->required();
        }

        auto params() const -> LdsParams { return LdsParams(c, n, m); }
    };

    auto cmd_bound(const ParamArgs & args, bool json) -> int
    {
        auto report = bound_report(args.params());
        if (json) {
            std::cout << to_json(report).dump() << "\n";
            return ok;
        }
        std::cout << describe(report.params) << "\n";
        std::cout << "lower bound: " << report.lower;
        if (report.lower_branch)
            std::cout << " (branch " << lower_branch_name(*report.lower_branch) << ")";
        else
            std::cout << " (vertex count)";
        std::cout << "\n";
        if (report.lower_degenerate)
            std::cout << "warning: n = m = 0, only the two-cliques bound is reported\n";
        if (report.exact)
            std::cout << "exact: " << *report.exact << " (" << provenance_name(report.provenance) << ")\n";
        else
            std::cout << "exact: unknown\n";
        return ok;
    }

    auto print_cert(const CertReport & report, bool json) -> void
    {
        if (json) {
            std::cout << to_json(report).dump() << "\n";
            return;
        }
        std::cout << (report.certified() ? "certified" : "refuted") << ": r=" << report.r << " " << describe(report.params)
                  << " (" << (report.method == CertMethod::Detector ? "detector" : "detector+analytic") << ")\n";
        if (report.refutation)
            print_witness(std::cout, *report.refutation);
    }

    auto cmd_construct(const std::string & family, const ParamArgs & args, const std::string & out, bool certify_it, bool json) -> int
    {
        auto kind = parse_construction(family);
        if (! kind)
            throw InvalidParams("unknown family '" + family + "' (expected two-cliques or clique-plus)");

        auto params = args.params();
        auto coloring = construct(*kind, params);
        write_file(out, serialize_coloring(coloring));

        if (! certify_it) {
            if (json)
                std::cout << nlohmann::ordered_json{
                    {"construction", construction_name(*kind)},
                    {"params", to_json(params)},
                    {"r", coloring.vertex_count()},
                    {"out", out}}.dump() << "\n";
            else
                std::cout << "wrote " << construction_name(*kind) << " coloring on " << coloring.vertex_count()
                          << " vertices to " << out << "\n";
            return ok;
        }

        auto report = certify(coloring, params, kind);
        print_cert(report, json);
        return report.certified() ? ok : indeterminate;
    }

    auto load_coloring(const std::string & path) -> TwoColoring
    {
        return parse_coloring(read_file(path));
    }

    auto cmd_detect(const std::string & file, const ParamArgs & args, const std::string & color, bool json) -> int
    {
        std::optional<Color> restrict_to;
        if (color == "red")
            restrict_to = Color::Red;
        else if (color == "blue")
            restrict_to = Color::Blue;
        else if (! color.empty())
            throw InvalidParams("--color must be red or blue");

        auto params = args.params();
        auto coloring = load_coloring(file);
        auto witness = find_mono_lds(coloring, params, restrict_to);

        if (json)
            std::cout << (witness ? to_json(*witness) : nlohmann::ordered_json(nullptr)).dump() << "\n";
        else if (witness)
            print_witness(std::cout, *witness);
        else
            std::cout << "none\n";
        return ok;
    }

    auto cmd_verify(const std::string & file, const ParamArgs & args, const std::string & witness_file, bool json) -> int
    {
        auto params = args.params();
        auto coloring = load_coloring(file);

        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(witness_file));
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(1, 1, std::string("witness is not valid JSON: ") + e.what());
        }
        auto witness = witness_from_json(doc);
        bool valid = verify_witness(coloring, params, witness);

        if (json)
            std::cout << nlohmann::ordered_json{{"valid", valid}}.dump() << "\n";
        else
            std::cout << (valid ? "valid" : "invalid") << "\n";
        return ok;
    }

    auto cmd_search(const ParamArgs & args, std::optional<int> r_lo, std::optional<int> r_hi,
        const SearchOptions & opts, bool json) -> int
    {
        auto params = args.params();
        int lo = 2;
        if (r_lo)
            lo = *r_lo;
        else if (params.odd_link() && params.p() >= 1 && params.n() + params.m() >= 1)
            lo = lower_bound(params).value;
        int hi = r_hi ? *r_hi : lo + 8;

        auto outcome = compute_ramsey(params, lo, hi, opts);

        if (json)
            std::cout << to_json(outcome).dump() << "\n";
        else {
            std::cout << describe(params) << "\n";
            switch (outcome.kind) {
                case ResultKind::Exact:
                    std::cout << "exact: " << outcome.lo << "\n";
                    break;
                case ResultKind::Interval:
                    std::cout << "interval: [" << outcome.lo << ", " << (outcome.hi_known ? std::to_string(outcome.hi) : "?") << "]\n";
                    break;
                case ResultKind::Indeterminate:
                    std::cout << "indeterminate: " << outcome.reason << "\n";
                    break;
            }
            if (outcome.good_coloring)
                std::cout << "good coloring on " << outcome.good_coloring->vertex_count() << " vertices: "
                          << slot_string(*outcome.good_coloring) << "\n";
            std::cout << "nodes: " << outcome.nodes_explored << "\n";
        }
        std::cerr << "search time: " << outcome.wall_time.count() << " s\n";
        return outcome.kind == ResultKind::Indeterminate ? indeterminate : ok;
    }

    auto cmd_sat_export(const ParamArgs & args, int r, const std::string & out, std::uint64_t cap, bool json) -> int
    {
        auto params = args.params();
        auto cnf = export_dimacs(params, r, cap);
        write_file(out, cnf.text);
        if (json)
            std::cout << nlohmann::ordered_json{
                {"params", to_json(params)},
                {"r", r},
                {"variables", edge_count(r)},
                {"clauses", cnf.clauses},
                {"embeddings", cnf.embeddings},
                {"copies", cnf.copies},
                {"out", out}}.dump() << "\n";
        else
            std::cout << "wrote " << cnf.clauses << " clauses over " << edge_count(r) << " variables to " << out << "\n";
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Ramsey numbers of linked double stars S_c(n,m)"};
    app.require_subcommand(1);

    bool json = false;
    ParamArgs params;

    auto * bound = app.add_subcommand("bound", "closed-form lower bound and known exact value");
    params.add_to(bound);
    bound->add_flag("--json", json);

    std::string family, out;
    bool certify_flag = false;
    ParamArgs construct_params;
    auto * construct_cmd = app.add_subcommand("construct", "write an extremal coloring");
    construct_cmd->add_option("--family", family, "two-cliques or clique-plus")->required();
    construct_params.add_to(construct_cmd);
    construct_cmd->add_option("--out", out, "coloring file to write")->required();
    construct_cmd->add_flag("--certify", certify_flag, "check the coloring has no monochromatic copy");
    construct_cmd->add_flag("--json", json);

    std::string coloring_file, color, witness_file;
    ParamArgs detect_params;
    auto * detect = app.add_subcommand("detect", "find a monochromatic copy");
    detect->add_option("--coloring", coloring_file)->required();
    detect_params.add_to(detect);
    detect->add_option("--color", color, "restrict to red or blue");
    detect->add_flag("--json", json);

    ParamArgs verify_params;
    auto * verify = app.add_subcommand("verify", "check a witness against a coloring");
    verify->add_option("--coloring", coloring_file)->required();
    verify_params.add_to(verify);
    verify->add_option("--witness", witness_file)->required();
    verify->add_flag("--json", json);

    ParamArgs search_params;
    std::optional<int> r_lo, r_hi;
    SearchOptions opts;
    int threads = 1;
    bool no_lex = false;
    auto * search = app.add_subcommand("search", "determine the Ramsey number by exhaustive search");
    search_params.add_to(search);
    search->add_option("--r-lo", r_lo, "first candidate value (default: closed-form lower bound, else 2)");
    search->add_option("--r-hi", r_hi, "last vertex count to probe (default: r-lo + 8)");
    search->add_option("--node-limit", opts.node_limit, "DFS node budget per probe");
    search->add_option("--threads", threads, "worker threads");
    search->add_flag("--no-lex-leader", no_lex, "disable lex-leader symmetry pruning");
    search->add_flag("--json", json);

    ParamArgs sat_params;
    int sat_r = 0;
    std::uint64_t cap = 10'000'000;
    auto * sat = app.add_subcommand("sat-export", "write a DIMACS CNF for a good coloring of K_r");
    sat_params.add_to(sat);
    sat->add_option("--r", sat_r, "vertex count")->required();
    sat->add_option("--out", out, "CNF file to write")->required();
    sat->add_option("--max-embeddings", cap, "refuse instances with more placements than this");
    sat->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*bound)
            return cmd_bound(params, json);
        if (*construct_cmd)
            return cmd_construct(family, construct_params, out, certify_flag, json);
        if (*detect)
            return cmd_detect(coloring_file, detect_params, color, json);
        if (*verify)
            return cmd_verify(coloring_file, verify_params, witness_file, json);
        if (*search) {
            opts.parallel_width = threads;
            opts.use_lex_leader = ! no_lex;
            return cmd_search(search_params, r_lo, r_hi, opts, json);
        }
        if (*sat)
            return cmd_sat_export(sat_params, sat_r, out, cap, json);
    }
    catch (const IoError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return io;
    }
    catch (const InvalidWitness & e) {
        std::cerr << "invalid witness: " << e.what() << "\n";
        return io;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
