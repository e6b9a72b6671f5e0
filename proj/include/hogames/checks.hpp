#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hogames/generate.hpp"

namespace hogames {

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;          // human explanation
    std::string failure_arena;          // replayable artifacts, serialized
    std::string failure_play;
};

/// One randomized case drawn from the seeded generator stream.
using SuiteFn = SuiteResult (*)(Rng&, const GenConfig&, std::size_t cases);

/// p-views of visible plays are visible; generated plays pass is_visible.
SuiteResult suite_view_visibility(Rng& rng, const GenConfig& cfg, std::size_t cases);

/// Levels survive the passage to views; inactivating edges share polarity;
/// maximal-level edges are uncrossed.
SuiteResult suite_chains(Rng& rng, const GenConfig& cfg, std::size_t cases);

/// Interaction transcripts respect both strategy levels.
SuiteResult suite_maxmin(Rng& rng, const GenConfig& cfg, std::size_t cases);

/// Trimmed plays stay visible, drop the principal level, satisfy the
/// answer-cost inequality and the strictly increasing complexity chain.
SuiteResult suite_trim(Rng& rng, const GenConfig& cfg, std::size_t cases);

/// Gadget plays stay visible, satisfy the view equations, normalize the
/// O-level to depth - 2 and strip back to the original play.
SuiteResult suite_gadget(Rng& rng, const GenConfig& cfg, std::size_t cases);

/// Interaction lengths stay under the hyperexponential tower.
SuiteResult suite_bounds(Rng& rng, const GenConfig& cfg, std::size_t cases);

struct SuiteSpec {
    std::string name;
    SuiteFn fn;
};

/// All suites, in stable order. `which` is "all" or one suite name.
std::vector<SuiteSpec> select_suites(const std::string& which);

/// Exact-agreement check between the library's activity/level computation
/// and an independent brute-force recomputation; returns the number of
/// disagreeing plays out of `cases` random plays.
std::size_t oracle_disagreements(Rng& rng, const GenConfig& cfg, std::size_t cases);

}  // namespace hogames
