#include "hogames/backtrack.hpp"

#include <algorithm>

namespace hogames {

bool crosses(const Play& s, EdgeRef e1, EdgeRef e2) {
    std::size_t j = e1.index, i = e2.index;
    return s.justifier(j) < s.justifier(i) && s.justifier(i) < j && j < i;
}

ActivityTable activity(const Play& s, std::size_t prefix_end) {
    ActivityTable t;
    t.play = &s;
    t.prefix_end = prefix_end;
    // Backward induction: walking down from the last edge, an edge becomes
    // INACTIVE as soon as an already decided ACTIVE edge crosses it.
    for (std::size_t e = prefix_end; e >= 1; --e) {
        Verdict v = Verdict::ACTIVE;
        for (std::size_t later = e + 1; later <= prefix_end; ++later) {
            if (t.verdicts.at(later) == Verdict::ACTIVE &&
                crosses(s, EdgeRef{e}, EdgeRef{later})) {
                v = Verdict::INACTIVE;
                break;
            }
        }
        t.verdicts[e] = v;
    }
    return t;
}

bool inactivates(const Play& s, EdgeRef ej, EdgeRef ei) {
    if (!crosses(s, ej, ei)) return false;
    return activity(s, ei.index - 1).active(ej);
}

std::vector<std::size_t> move_levels(const Play& s) {
    std::size_t n = s.size();
    std::vector<std::size_t> levels(n, 0);
    if (n < 2) return levels;

    // Activity of every proper prefix, computed once and shared.
    std::vector<ActivityTable> tables;
    tables.reserve(n - 1);
    for (std::size_t l = 0; l + 1 < n; ++l)
        tables.push_back(l >= 1 ? activity(s, l) : ActivityTable{&s, 0, {}});
    auto inactivated_by = [&](std::size_t j, std::size_t i) {
        return crosses(s, EdgeRef{j}, EdgeRef{i}) && tables[i - 1].active(EdgeRef{j});
    };

    // Longest inactivation chain ending at each edge, counting the edge
    // itself. Ordering by later endpoint makes the relation a DAG, so a
    // single forward pass suffices.
    std::vector<std::size_t> chain(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        chain[i] = 1;
        for (std::size_t j = 1; j < i; ++j)
            if (inactivated_by(j, i)) chain[i] = std::max(chain[i], chain[j] + 1);
    }

    for (std::size_t i = 1; i < n; ++i) {
        if (s.justifier(i) == i - 1) continue;
        std::size_t k = 0;
        for (std::size_t j = 1; j < i; ++j)
            if (inactivated_by(j, i)) k = std::max(k, chain[j]);
        levels[i] = k + 1;
    }
    return levels;
}

std::size_t move_level(const Play& s, std::size_t i) { return move_levels(s)[i]; }

LevelReport level_report(const Play& s) {
    LevelReport r;
    r.move_levels = move_levels(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t lvl = r.move_levels[i];
        r.play_level = std::max(r.play_level, lvl);
        if (s.polarity(i) == Polarity::P)
            r.p_level = std::max(r.p_level, lvl);
        else
            r.o_level = std::max(r.o_level, lvl);
    }
    if (r.p_level <= r.o_level) {
        r.real_level = r.p_level;
        r.principal = Polarity::P;
    } else {
        r.real_level = r.o_level;
        r.principal = Polarity::O;
    }
    return r;
}

}  // namespace hogames
