#pragma once

#include <optional>
#include <vector>

#include "hogames/play.hpp"

namespace hogames {

/// A view as a set of indices into the source play, selected by the
/// three-clause recursion. Pointers into the view stay resolvable in the
/// source play because original indices are kept.
struct View {
    const Play* source = nullptr;
    std::vector<std::size_t> indices;  // strictly increasing

    std::size_t length() const { return indices.size(); }

    /// Position of a play index inside the view, if selected.
    std::optional<std::size_t> position_of(std::size_t play_index) const;

    /// The view as a standalone play: pointers are remapped to view
    /// positions. Only meaningful for views of visible plays, where every
    /// justifier of a view move is itself in the view.
    Play as_play() const;
};

/// The p-view of s. The play must be non-empty for the P-view; the O-view
/// of the empty play is the empty view.
View view(const Play& s, Polarity p);

struct VisibilityResult {
    bool visible = true;
    std::optional<std::size_t> first_violation;
};

/// Every P-move must point into the P-view of its strict prefix, every
/// O-move into the O-view of its strict prefix.
VisibilityResult is_visible(const Play& s);

/// One (justifier, answer) block of the canonical view-shape decomposition
/// of a visible play ending with a back-pointing move.
struct ViewShapeLink {
    std::size_t opening;  // index of the justifier move of the block
    std::size_t closing;  // index of the move answering it
};

/// Decomposes s = r B (o_k .. b_k)(o_{k-1} .. b_{k-1}) .. (o_1 .. b_1) C,
/// where C is the last move, B its justifier, each b_{i+1} immediately
/// precedes o_i, and (o_i, b_i) is an edge of s. Returned outermost first.
/// Throws std::invalid_argument if s is not visible or too short.
std::vector<ViewShapeLink> view_shape(const Play& s);

}  // namespace hogames
