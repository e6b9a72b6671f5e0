#pragma once

#include <map>
#include <vector>

#include "hogames/play.hpp"

namespace hogames {

enum class Verdict { ACTIVE, INACTIVE };

/// Active/inactive verdicts for every edge of the prefix s_0..s_prefix_end,
/// produced by the backward induction anchored at the last edge.
struct ActivityTable {
    const Play* play = nullptr;
    std::size_t prefix_end = 0;
    std::map<std::size_t, Verdict> verdicts;  // keyed by later endpoint

    Verdict verdict(EdgeRef e) const { return verdicts.at(e.index); }
    bool active(EdgeRef e) const { return verdict(e) == Verdict::ACTIVE; }
};

struct LevelReport {
    std::vector<std::size_t> move_levels;
    std::size_t play_level = 0;
    std::size_t p_level = 0;
    std::size_t o_level = 0;
    std::size_t real_level = 0;
    Polarity principal = Polarity::P;
};

/// Does e2 cross e1 (e1 is crossed by e2)? With e1 = (f(j), j) and
/// e2 = (f(i), i): true iff f(j) < f(i) < j < i.
bool crosses(const Play& s, EdgeRef e1, EdgeRef e2);

/// Backward induction over s_0..s_prefix_end: the last edge is ACTIVE, an
/// edge is INACTIVE iff some ACTIVE later edge crosses it.
ActivityTable activity(const Play& s, std::size_t prefix_end);

/// e_j inactivates e_i: they cross and e_j is still active just before the
/// later endpoint of e_i is played.
bool inactivates(const Play& s, EdgeRef ej, EdgeRef ei);

/// 0 for the first move or an answer to the immediate predecessor; otherwise
/// one more than the longest inactivation chain ending at the move's edge.
std::size_t move_level(const Play& s, std::size_t i);

/// All per-move levels at once (shares the chain DP across moves).
std::vector<std::size_t> move_levels(const Play& s);

LevelReport level_report(const Play& s);

}  // namespace hogames
