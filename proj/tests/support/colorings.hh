#pragma once

#include <lds/coloring.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace lds::test
{
    inline auto coloring_from_mask(int r, std::uint64_t mask) -> TwoColoring
    {
        TwoColoring g(r);
        auto pairs = canonical_pairs(r);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            g.set_slot(k, pairs[k].first, pairs[k].second, ((mask >> k) & 1u) ? EdgeSlot::Blue : EdgeSlot::Red);
        return g;
    }

    inline auto random_coloring(int r, std::mt19937_64 & rng) -> TwoColoring
    {
        TwoColoring g(r);
        auto pairs = canonical_pairs(r);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            g.set_slot(k, pairs[k].first, pairs[k].second, coin(rng) ? EdgeSlot::Blue : EdgeSlot::Red);
        return g;
    }

    inline auto random_permutation(int r, std::mt19937_64 & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> perm(static_cast<std::size_t>(r));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }
}
