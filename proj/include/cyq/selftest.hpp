#pragma once

#include "cyq/dg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cyq {

// Ungraded quiver on 1..max_v vertices v0.. with 0..max_a arrows x0..;
// each vertex is frozen with probability frozen_rate, and each arrow between
// frozen vertices is frozen with the same probability.
QuiverPtr random_quiver(std::mt19937_64& rng, int max_v = 6, int max_a = 10, double frozen_rate = 0.0);

// Random integer combination of closed length-3 paths, in cyclic normal form.
Potential random_cubic_potential(std::mt19937_64& rng, const QuiverPtr& q, int max_terms = 4);

struct SelfTestReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures; // "trial 3: ginzburg3: ..."
    bool ok() const noexcept { return failures.empty(); }
};

// d^2 = 0 for every constructor output on random quivers.
SelfTestReport constructor_self_test(std::uint64_t seed, std::size_t trials);

} // namespace cyq
