#pragma once

#include <memory>
#include <vector>

#include "hogames/backtrack.hpp"
#include "hogames/views.hpp"

namespace hogames {

/// Base arena extended with a P-move `on` and an O-move `off`, each enabled
/// by every move of the opposite polarity (including each other).
struct EnlargedArena {
    Arena arena;
    MoveId on_move;
    MoveId off_move;
    bool renamed = false;  // base had moves named on/off; reserved prefix used
};

enum class OriginKind { BASE, OFF, ON };

/// Where a gadget-play occurrence came from: a base-play index, or the
/// ordinal of an inserted off/on (the pair after the j-th P-move has
/// ordinal j).
struct Origin {
    OriginKind kind;
    std::size_t index;
};

struct GadgetPlay {
    std::shared_ptr<const EnlargedArena> enlarged;
    Play play;  // over enlarged->arena
    std::vector<Origin> origin;
    std::vector<std::size_t> base_to_gadget;  // base index -> gadget index
};

EnlargedArena enlarge_arena(const Arena& a);

/// Inserts off;on after every P-move except a final one. Base moves keep
/// their pointers re-indexed; each on points to the off before it; the off
/// after a P-move points to the on before the P-move's justifier, or to the
/// P-move itself when that justifier is the first move.
GadgetPlay apply_gadget(const Play& s);

/// Drops every off/on occurrence and restores base indices; inverse of
/// apply_gadget.
Play strip_gadget(const GadgetPlay& g, const Arena& base);

/// Checks the four view equations relating views of gadget-play prefixes to
/// base views: O-views interleave off;on between the base O-view pairs,
/// P-views at base O-moves coincide with base P-views, and P-views at off
/// unwind the off/on chain over the base O-view pairs.
bool verify_gadget_views(const Play& s);

/// O-level of apply_gadget(s) is at most d - 2. Throws when d < 2.
bool verify_normalization(const Play& s, std::size_t d);

/// Same, with d computed from the base arena. Throws when the depth is
/// infinite.
bool verify_normalization(const Play& s);

}  // namespace hogames
