#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hogames/backtrack.hpp"
#include "hogames/hyperexp.hpp"
#include "hogames/views.hpp"

namespace hogames {

/// A view key entry or answer: a move plus a view-relative pointer (the
/// position inside the view the move points to; 0 and unused for the first
/// move of a view).
using ViewMove = std::pair<MoveId, std::size_t>;
using ViewKey = std::vector<ViewMove>;

/// Deterministic innocent strategy: one answer per owner view. The set of
/// plays it denotes is every play whose owner views all lie in the tree.
struct InnocentStrategy {
    const Arena* arena = nullptr;
    Polarity owner = Polarity::P;
    std::map<ViewKey, ViewMove> view_tree;
    std::size_t bound = 0;  // max view length ever produced by an answer

    /// Recomputes bound from the stored entries.
    void refresh_bound();
};

/// A view entry materialized as a play (pointers are view positions).
Play entry_as_play(const InnocentStrategy& s, const ViewKey& key, const ViewMove& answer);

/// Max play level over the stored views.
std::size_t strategy_level(const InnocentStrategy& s);

/// First-order term: a variable or a function symbol applied to arguments.
struct Term {
    std::string head;
    std::vector<Term> args;

    std::string str() const;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// One edge of an expansion tree: the owner's term choice for a quantifier,
/// or an adversary slot binding an eigenvariable. `variable` names the
/// quantified variable the edge instantiates (the move prefix).
struct ExpansionEdge {
    std::string label;
    std::string variable;
    bool is_term = true;
    Term term;                  // when is_term
    std::string eigenvariable;  // when !is_term
    std::size_t parent = kNoParent;
};

struct ExpansionTree {
    std::vector<ExpansionEdge> edges;
    std::vector<std::size_t> ordering;  // permutation of edge indices
};

struct OrderingCheck {
    bool ok = true;
    int violated_condition = 0;  // 1 = branch order, 2 = eigenvariable order
    std::string message;
};

/// Condition 1: the ordering respects ancestor order on every branch.
/// Condition 2: every eigenvariable precedes every term containing it.
OrderingCheck check_expansion_ordering(const ExpansionTree& t);

/// Compiles a linearized expansion tree into a strategy over the given
/// arena. The linearization must alternate so that term edges land on the
/// owner's positions of the view shape * l1 l2 ... and adversary slots on
/// the other positions, each slot immediately following its parent edge.
/// Every adversary answer combination from the term universe is enumerated;
/// terms are substituted with the answers bound so far.
InnocentStrategy expansion_to_strategy(const ExpansionTree& t, Polarity owner,
                                       const std::vector<Term>& term_universe,
                                       const Arena& arena);

enum class InteractionStatus { COMPLETE, STEP_LIMIT, STUCK_P, STUCK_O };

struct Interaction {
    Play transcript;
    InteractionStatus status = InteractionStatus::COMPLETE;
};

/// Plays the two strategies against each other: each mover looks up its own
/// view and the answer's view-relative pointer is resolved to an absolute
/// index. COMPLETE means the mover's view outgrew its bound; STUCK_* means a
/// missing entry within bound. Corrupt answers throw.
Interaction interact(const InnocentStrategy& sigma, const InnocentStrategy& tau,
                     std::size_t step_limit);

/// interaction_bound of the two strategies when exact, else 10^6.
std::size_t default_step_limit(const InnocentStrategy& sigma, const InnocentStrategy& tau);

}  // namespace hogames
