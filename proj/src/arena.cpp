#include "hogames/arena.hpp"

#include <functional>

namespace hogames {

ValidationReport validate_arena(const Arena& a) {
    ValidationReport report;
    auto known = [&](const MoveId& m) { return a.has_move(m) && a.labels.count(m); };

    for (const auto& m : a.moves) {
        if (m.empty())
            report.push_back({"empty-move", "arena contains an empty move name"});
        if (!a.labels.count(m))
            report.push_back({"unlabeled", "move '" + m + "' has no polarity label"});
    }
    for (const auto& [m, lab] : a.labels) {
        if (!a.has_move(m))
            report.push_back({"unknown-move", "label refers to unknown move '" + m + "'"});
        (void)lab;
    }
    for (const auto& [m, n] : a.enabling) {
        if (!a.has_move(m) || !a.has_move(n)) {
            report.push_back({"unknown-move",
                              "enabling pair (" + m + ", " + n + ") refers to an unknown move"});
            continue;
        }
        if (known(m) && known(n) && a.label(m) == a.label(n))
            report.push_back({"alternation",
                              "enabling pair (" + m + ", " + n + ") joins two " +
                                  std::string(1, polarity_char(a.label(m))) + "-moves"});
    }
    for (const auto& m : a.initials) {
        if (!a.has_move(m)) {
            report.push_back({"unknown-move", "initial '" + m + "' is not a move"});
            continue;
        }
        if (known(m) && a.label(m) != Polarity::O)
            report.push_back({"initial-polarity", "initial move '" + m + "' is labeled P"});
    }
    if (!a.initials.count(kStarMove))
        report.push_back({"missing-star", "the distinguished initial move \"*\" is missing"});
    return report;
}

std::optional<std::size_t> arena_depth(const Arena& a) {
    // Longest path over the enabling graph restricted to moves reachable
    // from the initials; depth counts moves, so a lone initial gives 1.
    std::map<MoveId, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::map<MoveId, std::size_t> longest;
    bool cyclic = false;

    std::function<std::size_t(const MoveId&)> visit = [&](const MoveId& m) -> std::size_t {
        auto it = state.find(m);
        if (it != state.end()) {
            if (it->second == 1) {
                cyclic = true;
                return 0;
            }
            return longest[m];
        }
        state[m] = 1;
        std::size_t best = 1;
        for (const auto& [x, y] : a.enabling) {
            if (x != m || !a.has_move(y)) continue;
            std::size_t sub = visit(y) + 1;
            if (sub > best) best = sub;
            if (cyclic) break;
        }
        state[m] = 2;
        longest[m] = best;
        return best;
    };

    std::size_t depth = 0;
    for (const auto& i : a.initials) {
        if (!a.has_move(i)) continue;
        depth = std::max(depth, visit(i));
        if (cyclic) return std::nullopt;
    }
    return depth;
}

}  // namespace hogames
