#pragma once

#include <cstddef>
#include <vector>

#include "hogames/arena.hpp"

namespace hogames {

/// One occurrence in a play. `justifier` is the 0-based index of the move
/// this occurrence points back to; it is meaningless for index 0.
struct Occurrence {
    MoveId move;
    std::size_t justifier = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// A justified sequence / play candidate over an arena. Validity is checked
/// by validate_justified_sequence and validate_play, not by construction.
struct Play {
    const Arena* arena = nullptr;
    std::vector<Occurrence> occurrences;

    std::size_t size() const { return occurrences.size(); }
    bool empty() const { return occurrences.empty(); }
    const MoveId& move(std::size_t i) const { return occurrences[i].move; }
    std::size_t justifier(std::size_t i) const { return occurrences[i].justifier; }
    Polarity polarity(std::size_t i) const { return arena->label(occurrences[i].move); }

    /// Play restricted to occurrences 0..end inclusive.
    Play prefix(std::size_t end) const {
        Play r{arena, {occurrences.begin(), occurrences.begin() + (end + 1)}};
        return r;
    }
};

/// The edge from the occurrence at `index`: the pair
/// (occurrences[f(index)], occurrences[index]). Index 0 has no edge.
struct EdgeRef {
    std::size_t index;
    friend bool operator==(EdgeRef a, EdgeRef b) { return a.index == b.index; }
};

/// First-move initiality, pointer bounds and enabling of every pointer.
ValidationReport validate_justified_sequence(const Arena& a, const Play& s);

/// validate_justified_sequence plus consecutive-polarity alternation.
ValidationReport validate_play(const Arena& a, const Play& s);

}  // namespace hogames
