#include "hogames/trim.hpp"

#include <algorithm>
#include <stdexcept>

namespace hogames {

TrimResult trim(const Play& s, TrimSpec mu) {
    if (mu.level < 1) throw std::invalid_argument("trim: level must be at least 1");
    if (!is_visible(s).visible)
        throw std::invalid_argument("trim: the play is not visible");

    std::vector<std::size_t> levels = move_levels(s);
    std::vector<bool> removed(s.size(), false);
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (levels[i] != mu.level || s.polarity(i) != mu.player) continue;
        for (std::size_t l = s.justifier(i) + 1; l < i; ++l) removed[l] = true;
    }

    TrimResult r;
    r.trimmed.arena = s.arena;
    std::vector<std::optional<std::size_t>> new_pos(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (removed[i]) continue;
        new_pos[i] = r.kept.size();
        Occurrence occ{s.move(i), 0};
        if (!r.kept.empty()) {
            auto target = new_pos[s.justifier(i)];
            if (!target)
                throw std::logic_error("trim: a survivor's justifier was removed");
            occ.justifier = *target;
        }
        r.kept.push_back(i);
        r.trimmed.occurrences.push_back(occ);
    }
    return r;
}

std::size_t move_complexity(const Play& s, std::size_t i) {
    return view(s.prefix(i), s.polarity(i)).length();
}

ComplexitySeq trimmed_complexity(const Play& s, TrimSpec mu) {
    ComplexitySeq seq;
    for (std::size_t i : trim(s, mu).kept) seq.values.push_back(move_complexity(s, i));
    return seq;
}

bool lex_less(const ComplexitySeq& x, const ComplexitySeq& y) {
    std::size_t n = std::min(x.values.size(), y.values.size());
    for (std::size_t t = 0; t < n; ++t) {
        if (x.values[t] < y.values[t]) return true;
        if (x.values[t] > y.values[t]) return false;
    }
    return x.values.size() < y.values.size();
}

SpringResult verify_spring(const Play& s, TrimSpec mu) {
    if (mu.level < 1) throw std::invalid_argument("verify_spring: level must be at least 1");
    LevelReport report = level_report(s);
    std::size_t player_level =
        mu.player == Polarity::P ? report.p_level : report.o_level;
    if (player_level != mu.level)
        throw std::invalid_argument(
            "verify_spring: the chosen player does not reach the chosen level");

    SpringResult r;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        ComplexitySeq a = trimmed_complexity(s.prefix(i), mu);
        ComplexitySeq b = trimmed_complexity(s.prefix(i + 1), mu);
        if (!lex_less(a, b)) {
            r.holds = false;
            r.first_violation = i;
            return r;
        }
    }
    return r;
}

}  // namespace hogames
