#include <doctest.h>

#include <lds/dimacs.hh>
#include <lds/errors.hh>
#include <lds/search.hh>

#include "support/colorings.hh"
#include "support/sat_sweep.hh"

using namespace lds;

TEST_CASE("no clauses when the target does not fit")
{
    for (auto params : {LdsParams(3, 1, 1), LdsParams(3, 2, 1), LdsParams(1, 2, 0)}) {
        int r = params.vertex_count() - 1;
        auto cnf = export_dimacs(params, r);
        CHECK(cnf.clauses == 0);
        CHECK(cnf.copies == 0);
        auto parsed = test::parse_dimacs(cnf.text);
        CHECK(parsed.variables == edge_count(r));
        CHECK(parsed.clauses.empty());
        CHECK(test::sweep_satisfiable(parsed).has_value());
    }
}

TEST_CASE("five-vertex path encodings")
{
    LdsParams p5(3, 1, 1);
    auto five = export_dimacs(p5, 5);
    CHECK(five.embeddings == 120);
    CHECK(five.copies == 60);
    CHECK(five.clauses == 120);
    auto model = test::sweep_satisfiable(test::parse_dimacs(five.text));
    REQUIRE(model);
    // The model is a good coloring (true = red = mask bit clear in our helper).
    auto g = test::coloring_from_mask(5, ~*model & 0x3ff);
    CHECK_FALSE(find_mono_lds(g, p5));

    auto six = export_dimacs(p5, 6);
    CHECK_FALSE(test::sweep_satisfiable(test::parse_dimacs(six.text)));
}

TEST_CASE("clauses forbid exactly the monochromatic copies")
{
    // A coloring satisfies the CNF iff the detector finds nothing.
    std::mt19937_64 rng(5);
    for (auto params : {LdsParams(3, 1, 1), LdsParams(2, 2, 1), LdsParams(1, 3, 0), LdsParams(4, 1, 0)}) {
        for (int r = params.vertex_count(); r <= 7; ++r) {
            auto cnf = test::parse_dimacs(export_dimacs(params, r).text);
            for (int trial = 0; trial < 50; ++trial) {
                auto g = test::random_coloring(r, rng);
                bool all = true;
                for (const auto & clause : cnf.clauses) {
                    bool sat = false;
                    for (int lit : clause) {
                        bool red = g.slot_at(static_cast<std::size_t>(std::abs(lit) - 1)) == EdgeSlot::Red;
                        sat = sat || (lit > 0) == red;
                    }
                    all = all && sat;
                }
                CHECK(all == ! find_mono_lds(g, params).has_value());
            }
        }
    }
}

TEST_CASE("satisfiability matches the search for small r")
{
    std::vector<LdsParams> grid{{1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {2, 1, 1}, {3, 1, 1}, {3, 2, 0}, {4, 1, 0}};
    for (const auto & params : grid)
        for (int r = 2; r <= 6; ++r) {
            CAPTURE(r);
            auto sat = test::sweep_satisfiable(test::parse_dimacs(export_dimacs(params, r).text)).has_value();
            auto found = find_good_coloring(params, r).status == GoodColoringStatus::Found;
            CHECK(sat == found);
        }
}

TEST_CASE("header comments and size cap")
{
    auto cnf = export_dimacs(LdsParams(3, 1, 1), 5);
    CHECK(cnf.text.find("p cnf 10 120\n") != std::string::npos);
    CHECK(cnf.text.rfind("c ", 0) == 0);

    CHECK_THROWS_AS(export_dimacs(LdsParams(3, 1, 1), 6, 100), InstanceTooLarge);
    CHECK_NOTHROW(export_dimacs(LdsParams(3, 1, 1), 6, 720));
}
