#include <lds/errors.hh>
#include <lds/search.hh>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace lds
{
    namespace
    {
        struct SharedBudget
        {
            std::atomic<std::uint64_t> nodes{0};
            std::uint64_t limit;
        };

        // One DFS worker. Owns its coloring; shares only the node budget.
        class EdgeSearch
        {
        public:
            EdgeSearch(const LdsParams & params, int r, bool lex_leader, SharedBudget & budget) :
                _params(params),
                _pairs(canonical_pairs(r)),
                _coloring(r),
                _budget(budget)
            {
                if (lex_leader)
                    for (Vertex k = 1; k + 1 < r; ++k) {
                        std::vector<std::size_t> image(_pairs.size());
                        auto swap_k = [k](Vertex v) { return v == k ? k + 1 : v == k + 1 ? k : v; };
                        for (std::size_t s = 0; s < _pairs.size(); ++s)
                            image[s] = pair_index(swap_k(_pairs[s].first), swap_k(_pairs[s].second), r);
                        _images.push_back(std::move(image));
                    }
            }

            auto slot_count() const -> std::size_t { return _pairs.size(); }
            auto coloring() const -> const TwoColoring & { return _coloring; }

            /// Colors one slot and reports whether the partial coloring survives pruning.
            auto assign(std::size_t slot, EdgeSlot value) -> bool
            {
                auto [i, j] = _pairs[slot];
                _coloring.set_slot(slot, i, j, value);
                if (! lex_leader_ok())
                    return false;
                auto color = value == EdgeSlot::Red ? Color::Red : Color::Blue;
                return ! find_lds_through_edge(_coloring, _params, color, i, j);
            }

            auto unassign(std::size_t slot) -> void
            {
                auto [i, j] = _pairs[slot];
                _coloring.set_slot(slot, i, j, EdgeSlot::Unset);
            }

            /// DFS over slots [slot, end). Leaves the coloring complete on Found.
            /// With `first_found`, gives up (reporting None) once an earlier task has succeeded.
            auto run(std::size_t slot, const std::atomic<std::size_t> * first_found = nullptr, std::size_t task = 0) -> GoodColoringStatus
            {
                if (slot == _pairs.size())
                    return GoodColoringStatus::Found;
                if (first_found && first_found->load(std::memory_order_relaxed) < task)
                    return GoodColoringStatus::None;

                for (auto value : {EdgeSlot::Red, EdgeSlot::Blue}) {
                    if (slot == 0 && value == EdgeSlot::Blue)
                        break;
                    if (_budget.nodes.fetch_add(1, std::memory_order_relaxed) >= _budget.limit) {
                        unassign(slot);
                        return GoodColoringStatus::Indeterminate;
                    }
                    if (assign(slot, value)) {
                        auto status = run(slot + 1, first_found, task);
                        if (status != GoodColoringStatus::None)
                            return status;
                    }
                }
                unassign(slot);
                return GoodColoringStatus::None;
            }

        private:
            // x <= tau(x) must remain possible for every generator tau.
            auto lex_leader_ok() const -> bool
            {
                const auto & x = _coloring.slots();
                for (const auto & image : _images)
                    for (std::size_t s = 0; s < x.size(); ++s) {
                        auto a = x[s], b = x[image[s]];
                        if (a == EdgeSlot::Unset || b == EdgeSlot::Unset || a < b)
                            break;
                        if (a > b)
                            return false;
                    }
                return true;
            }

            const LdsParams & _params;
            std::vector<std::pair<Vertex, Vertex>> _pairs;
            TwoColoring _coloring;
            std::vector<std::vector<std::size_t>> _images;
            SharedBudget & _budget;
        };

        // Surviving assignments of the first `depth` slots, in DFS order.
        auto collect_prefixes(EdgeSearch & search, std::size_t depth) -> std::vector<std::vector<EdgeSlot>>
        {
            std::vector<std::vector<EdgeSlot>> prefixes;
            std::vector<EdgeSlot> current;
            auto walk = [&](auto & self, std::size_t slot) -> void {
                if (slot == depth) {
                    prefixes.push_back(current);
                    return;
                }
                for (auto value : {EdgeSlot::Red, EdgeSlot::Blue}) {
                    if (slot == 0 && value == EdgeSlot::Blue)
                        break;
                    if (search.assign(slot, value)) {
                        current.push_back(value);
                        self(self, slot + 1);
                        current.pop_back();
                    }
                    search.unassign(slot);
                }
            };
            walk(walk, 0);
            return prefixes;
        }

        auto parallel_search(const LdsParams & params, int r, const SearchOptions & opts, SharedBudget & budget)
            -> std::pair<GoodColoringStatus, std::optional<TwoColoring>>
        {
            auto width = static_cast<std::size_t>(opts.parallel_width);
            EdgeSearch splitter(params, r, opts.use_lex_leader, budget);

            std::size_t depth = 0;
            while ((std::size_t{1} << depth) < 4 * width && depth + 1 < splitter.slot_count())
                ++depth;
            auto prefixes = collect_prefixes(splitter, depth);

            std::vector<GoodColoringStatus> status(prefixes.size(), GoodColoringStatus::None);
            std::vector<std::optional<TwoColoring>> found(prefixes.size());
            std::atomic<std::size_t> next{0};
            std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

            auto worker = [&]() {
                EdgeSearch search(params, r, opts.use_lex_leader, budget);
                while (true) {
                    auto task = next.fetch_add(1);
                    if (task >= prefixes.size() || task > first_found.load())
                        return;
                    for (std::size_t s = 0; s < depth; ++s)
                        search.assign(s, prefixes[task][s]);

                    // Tasks after the earliest success cannot change the answer.
                    auto result = search.run(depth, &first_found, task);
                    status[task] = result;
                    if (result == GoodColoringStatus::Found) {
                        found[task] = search.coloring();
                        auto expected = first_found.load();
                        while (task < expected && ! first_found.compare_exchange_weak(expected, task)) { }
                    }
                    for (std::size_t s = 0; s < search.slot_count(); ++s)
                        search.unassign(s);
                }
            };

            std::vector<std::thread> threads;
            for (std::size_t t = 0; t < width; ++t)
                threads.emplace_back(worker);
            for (auto & t : threads)
                t.join();

            bool indeterminate = false;
            for (std::size_t task = 0; task < prefixes.size(); ++task) {
                if (status[task] == GoodColoringStatus::Found)
                    return {GoodColoringStatus::Found, std::move(found[task])};
                if (status[task] == GoodColoringStatus::Indeterminate)
                    indeterminate = true;
            }
            return {indeterminate ? GoodColoringStatus::Indeterminate : GoodColoringStatus::None, std::nullopt};
        }
    }

    auto result_kind_name(ResultKind k) -> std::string_view
    {
        switch (k) {
            case ResultKind::Exact: return "exact";
            case ResultKind::Interval: return "interval";
            case ResultKind::Indeterminate: return "indeterminate";
        }
        return "indeterminate";
    }

    auto find_good_coloring(const LdsParams & params, int r, const SearchOptions & opts) -> GoodColoringResult
    {
        if (r < 1)
            throw InvalidParams("vertex count must be at least 1");
        if (opts.node_limit < 1)
            throw InvalidParams("node limit must be at least 1");
        if (opts.parallel_width < 1)
            throw InvalidParams("parallel width must be at least 1");

        GoodColoringResult result{GoodColoringStatus::None, std::nullopt, 0};

        if (r == 1) {
            TwoColoring single(1);
            if (! find_mono_lds(single, params)) {
                result.status = GoodColoringStatus::Found;
                result.coloring = single;
            }
            return result;
        }

        SharedBudget budget;
        budget.limit = opts.node_limit;

        if (opts.parallel_width == 1) {
            EdgeSearch search(params, r, opts.use_lex_leader, budget);
            result.status = search.run(0);
            if (result.status == GoodColoringStatus::Found)
                result.coloring = search.coloring();
        }
        else {
            auto [status, coloring] = parallel_search(params, r, opts, budget);
            result.status = status;
            result.coloring = std::move(coloring);
        }

        result.nodes = std::min(budget.nodes.load(), budget.limit);

        if (result.coloring && find_mono_lds(*result.coloring, params))
            throw std::logic_error("search returned a coloring that contains a monochromatic copy");
        return result;
    }

    auto compute_ramsey(const LdsParams & params, int r_lo, int r_hi, const SearchOptions & opts) -> SearchOutcome
    {
        if (r_lo < 1 || r_hi < r_lo)
            throw InvalidParams("search range must satisfy 1 <= r_lo <= r_hi");

        auto started = std::chrono::steady_clock::now();
        SearchOutcome outcome{params, ResultKind::Interval, 1, r_hi + 1, false, {}, std::nullopt, 0, {}};

        int good_max = 0;
        std::optional<int> exhausted;
        std::optional<int> stalled;

        auto probe = [&](int r) -> GoodColoringStatus {
            auto res = find_good_coloring(params, r, opts);
            outcome.nodes_explored += res.nodes;
            if (res.status == GoodColoringStatus::Found) {
                if (r > good_max) {
                    good_max = r;
                    if (opts.record_extremal)
                        outcome.good_coloring = std::move(res.coloring);
                }
            }
            else if (res.status == GoodColoringStatus::None)
                exhausted = exhausted ? std::min(*exhausted, r) : r;
            else
                stalled = r;
            return res.status;
        };

        int start = std::max(1, r_lo - 1);
        auto first = probe(start);
        if (first == GoodColoringStatus::Found) {
            for (int r = start + 1; r <= r_hi; ++r)
                if (probe(r) != GoodColoringStatus::Found)
                    break;
        }
        else if (first == GoodColoringStatus::None) {
            for (int r = start - 1; r >= 1; --r)
                if (probe(r) != GoodColoringStatus::None)
                    break;
        }

        outcome.lo = good_max + 1;
        if (exhausted) {
            outcome.hi = *exhausted;
            outcome.hi_known = true;
        }

        if (outcome.hi_known && outcome.hi == outcome.lo)
            outcome.kind = ResultKind::Exact;
        else if (stalled) {
            outcome.kind = ResultKind::Indeterminate;
            outcome.reason = "node limit " + std::to_string(opts.node_limit) + " reached at r=" + std::to_string(*stalled);
        }
        else {
            outcome.kind = ResultKind::Interval;
            outcome.reason = outcome.hi_known ? "range not closed" : "no exhausted r up to r_hi=" + std::to_string(r_hi);
        }

        outcome.wall_time = std::chrono::steady_clock::now() - started;
        return outcome;
    }
}
