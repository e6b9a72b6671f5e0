#pragma once

#include <optional>
#include <vector>

#include "hogames/backtrack.hpp"
#include "hogames/views.hpp"

namespace hogames {

/// mu = (level, player): which backtracking moves get their edge interiors
/// removed.
struct TrimSpec {
    std::size_t level = 1;  // must be >= 1
    Polarity player = Polarity::P;
};

/// Chi values of the trim survivors, measured in the original play.
struct ComplexitySeq {
    std::vector<std::size_t> values;
};

struct TrimResult {
    Play trimmed;
    std::vector<std::size_t> kept;  // original indices of the survivors
};

/// Removes every move strictly inside an edge from a level-mu.level move of
/// mu.player; survivors keep their pointers. Levels are evaluated in s.
TrimResult trim(const Play& s, TrimSpec mu);

/// chi(s, i): length of the mover's view of s_0..s_i.
std::size_t move_complexity(const Play& s, std::size_t i);

/// chi of each trim survivor, measured in s.
ComplexitySeq trimmed_complexity(const Play& s, TrimSpec mu);

/// Lexicographic order: proper prefix, or smaller at the first difference.
bool lex_less(const ComplexitySeq& x, const ComplexitySeq& y);

struct SpringResult {
    bool holds = true;
    std::optional<std::size_t> first_violation;  // prefix end index i where
                                                 // chi of 0..i is not below
                                                 // chi of 0..i+1
};

/// Checks that trimmed complexities of consecutive prefixes strictly
/// increase. Requires mu.player to reach level exactly mu.level in s.
SpringResult verify_spring(const Play& s, TrimSpec mu);

}  // namespace hogames
