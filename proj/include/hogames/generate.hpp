#pragma once

#include <cstdint>
#include <random>

#include "hogames/strategy.hpp"

namespace hogames {

/// Seeded generation parameters. The PRNG is std::mt19937_64 throughout:
/// fixed algorithm, stable across platforms, replayable by seed.
struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t depth_min = 2, depth_max = 5;    // arena layers including *
    std::size_t branch_min = 1, branch_max = 3;  // moves per layer
    std::size_t length_target = 24;              // play length to aim for
    double propensity = 0.5;  // chance of a non-immediate pointer
};

using Rng = std::mt19937_64;

/// Layered arena: layer 0 is {*}, polarities alternate by layer, every move
/// of a layer enables every move of the next. Depth is finite by shape.
Arena random_arena(Rng& rng, const GenConfig& cfg);

/// Visible play by construction: each mover samples a pointer target from
/// its own view (propensity biases away from the immediate predecessor) and
/// then an enabled answer. Stops at the length target or when stuck.
Play random_play(Rng& rng, const GenConfig& cfg, const Arena& a);

/// Innocent strategy as a randomly grown view tree: answers point into the
/// current view, adversary extensions point to their immediate predecessor.
InnocentStrategy random_strategy(Rng& rng, const GenConfig& cfg, const Arena& a,
                                 Polarity owner);

}  // namespace hogames
