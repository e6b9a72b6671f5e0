#pragma once

#include <vector>

#include "hogames/play.hpp"
#include "hogames/strategy.hpp"

namespace fixtures {

using namespace hogames;

// Chain arena * > p > o > q > r used by the nine-move crossing example.
inline Arena chain_arena() {
    Arena a;
    a.name = "chain";
    a.moves = {"*", "p", "o", "q", "r"};
    a.labels = {{"*", Polarity::O},
                {"p", Polarity::P},
                {"o", Polarity::O},
                {"q", Polarity::P},
                {"r", Polarity::O}};
    a.enabling = {{"*", "p"}, {"p", "o"}, {"o", "q"}, {"q", "r"}};
    a.initials = {"*"};
    return a;
}

// The nine-move play with the crossing pattern driving the level examples:
// indices 0..8, P-moves at 1,3,5,7 climbing to levels 0,1,2,3.
inline Play crossing_play(const Arena& a) {
    Play s;
    s.arena = &a;
    s.occurrences = {{"*", 0}, {"p", 0}, {"o", 1}, {"p", 0}, {"o", 3},
                     {"q", 2}, {"r", 5}, {"q", 4}, {"o", 3}};
    return s;
}

// Same play with the last P-move repointed to index 2, dropping its level
// from 3 to 1. The trailing o is cut: its pointer to index 3 would no longer
// be visible once index 7 points elsewhere.
inline Play crossing_play_repointed(const Arena& a) {
    Play s = crossing_play(a);
    s.occurrences[7].justifier = 2;
    s.occurrences.pop_back();
    return s;
}

// Depth-5 arena over which a play reaches level 6: the gadget keeps the
// O-level of the enlarged play under depth - 2 = 3.
inline Arena deep_arena() {
    Arena a;
    a.name = "deep";
    a.moves = {"*", "A", "B", "C", "D"};
    a.labels = {{"*", Polarity::O},
                {"A", Polarity::P},
                {"B", Polarity::O},
                {"C", Polarity::P},
                {"D", Polarity::O}};
    a.enabling = {{"*", "A"}, {"A", "B"}, {"B", "C"}, {"C", "D"}};
    a.initials = {"*"};
    return a;
}

// 20-move play: ten backtracking moves at odd positions, each but the last
// followed by an immediate answer. The first five point to the opening *,
// the next five to the answers at positions 2, 4, 6, 8, 10, building an
// inactivation chain that lifts the final move to level 6 in depth 5.
inline Play high_level_play(const Arena& a) {
    Play s;
    s.arena = &a;
    s.occurrences.push_back({"*", 0});
    for (std::size_t i = 1; i <= 10; ++i) {
        if (i <= 5)
            s.occurrences.push_back({"A", 0});
        else
            s.occurrences.push_back({"C", 2 * (i - 5)});
        if (i < 10) s.occurrences.push_back({i <= 5 ? "B" : "D", 2 * i - 1});
    }
    return s;
}

// Prenex arena over seven constant terms: * > x-moves > y-moves > z-moves.
inline Arena prenex_arena() {
    Arena a;
    a.name = "prenex";
    a.moves = {"*"};
    a.labels = {{"*", Polarity::O}};
    a.initials = {"*"};
    const std::vector<std::string> terms = {"t1", "t2", "t3", "t4", "u1", "u2", "u3"};
    for (const auto& t : terms) {
        a.moves.insert("x:=" + t);
        a.moves.insert("y:=" + t);
        a.moves.insert("z:=" + t);
        a.labels["x:=" + t] = Polarity::P;
        a.labels["y:=" + t] = Polarity::O;
        a.labels["z:=" + t] = Polarity::P;
        a.enabling.insert({"*", "x:=" + t});
        for (const auto& u : terms) {
            a.enabling.insert({"x:=" + t, "y:=" + u});
            a.enabling.insert({"y:=" + t, "z:=" + u});
        }
    }
    return a;
}

inline std::vector<Term> prenex_universe() {
    return {Term{"t1", {}}, Term{"t2", {}}, Term{"t3", {}}, Term{"t4", {}},
            Term{"u1", {}}, Term{"u2", {}}, Term{"u3", {}}};
}

// The P expansion tree: witnesses t1, t2, t3 for the root, the final
// witness t4 under the first adversary slot, linearized t1 a1 t2 a2 t3 a3 t4.
inline ExpansionTree sigma_tree() {
    ExpansionTree t;
    t.edges = {
        {"t1", "x", true, Term{"t1", {}}, "", kNoParent},
        {"a1", "y", false, Term{}, "a1", 0},
        {"t2", "x", true, Term{"t2", {}}, "", kNoParent},
        {"a2", "y", false, Term{}, "a2", 2},
        {"t3", "x", true, Term{"t3", {}}, "", kNoParent},
        {"a3", "y", false, Term{}, "a3", 4},
        {"t4", "z", true, Term{"t4", {}}, "", 1},
    };
    t.ordering = {0, 1, 2, 3, 4, 5, 6};
    return t;
}

// The O expansion tree for the negated formula: slot b for the opening
// witness, answers u1, u2, u3, slots b1..b3, linearized b u1 b1 u2 b2 u3 b3.
inline ExpansionTree tau_tree() {
    ExpansionTree t;
    t.edges = {
        {"b", "x", false, Term{}, "b", kNoParent},
        {"u1", "y", true, Term{"u1", {}}, "", 0},
        {"b1", "z", false, Term{}, "b1", 1},
        {"u2", "y", true, Term{"u2", {}}, "", 0},
        {"b2", "z", false, Term{}, "b2", 3},
        {"u3", "y", true, Term{"u3", {}}, "", 0},
        {"b3", "z", false, Term{}, "b3", 5},
    };
    t.ordering = {0, 1, 2, 3, 4, 5, 6};
    return t;
}

// The frozen 20-move duel transcript of the two trees above.
inline Play duel_transcript(const Arena& a) {
    Play s;
    s.arena = &a;
    s.occurrences = {
        {"*", 0},      {"x:=t1", 0},  {"y:=u1", 1},  {"x:=t2", 0},  {"y:=u1", 3},
        {"x:=t3", 0},  {"y:=u1", 5},  {"z:=t4", 2},  {"y:=u2", 1},  {"x:=t2", 0},
        {"y:=u1", 9},  {"x:=t3", 0},  {"y:=u1", 11}, {"z:=t4", 8},  {"y:=u3", 1},
        {"x:=t2", 0},  {"y:=u1", 15}, {"x:=t3", 0},  {"y:=u1", 17}, {"z:=t4", 14},
    };
    return s;
}

}  // namespace fixtures
