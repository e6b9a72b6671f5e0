#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hogames {

enum class Polarity : std::uint8_t { P, O };

constexpr Polarity opposite(Polarity p) {
    return p == Polarity::P ? Polarity::O : Polarity::P;
}

inline char polarity_char(Polarity p) { return p == Polarity::P ? 'P' : 'O'; }

using MoveId = std::string;

/// The distinguished initial move every arena must contain.
inline const MoveId kStarMove = "*";

/// Game board: moves, enabling relation, polarity labels and initial moves.
/// Immutable after construction by convention; all operations are pure.
struct Arena {
    std::string name = "arena";
    std::set<MoveId> moves;
    std::set<std::pair<MoveId, MoveId>> enabling;  // (justifier, answer)
    std::map<MoveId, Polarity> labels;
    std::set<MoveId> initials;

    bool has_move(const MoveId& m) const { return moves.count(m) != 0; }
    bool enables(const MoveId& m, const MoveId& n) const {
        return enabling.count({m, n}) != 0;
    }
    Polarity label(const MoveId& m) const { return labels.at(m); }
    bool is_initial(const MoveId& m) const { return initials.count(m) != 0; }

    friend bool operator==(const Arena&, const Arena&) = default;
};

/// A single validation finding. `index` is the position the finding refers
/// to (play index or line number) when meaningful, -1 otherwise.
struct Violation {
    std::string code;
    std::string message;
    long index = -1;
};

using ValidationReport = std::vector<Violation>;

/// Checks the alternation condition, O-labeling of initials, presence of
/// the "*" move and referential integrity. Never throws; reports instead.
ValidationReport validate_arena(const Arena& a);

/// Length of the longest simple play (enabling chain from an initial move).
/// Empty optional means INFINITE: a cycle is reachable from the initials.
std::optional<std::size_t> arena_depth(const Arena& a);

}  // namespace hogames
