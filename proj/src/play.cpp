#include "hogames/play.hpp"

#include <string>

namespace hogames {

ValidationReport validate_justified_sequence(const Arena& a, const Play& s) {
    ValidationReport report;
    if (s.empty()) {
        report.push_back({"empty", "a justified sequence must start with an initial move"});
        return report;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!a.has_move(s.move(i))) {
            report.push_back({"unknown-move",
                              "occurrence of '" + s.move(i) + "' is not an arena move",
                              static_cast<long>(i)});
        }
    }
    if (a.has_move(s.move(0)) && !a.is_initial(s.move(0)))
        report.push_back({"not-initial", "first move '" + s.move(0) + "' is not initial", 0});
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t j = s.justifier(i);
        if (j >= i) {
            report.push_back({"forward-pointer",
                              "move " + std::to_string(i) + " points to index " +
                                  std::to_string(j) + " which is not earlier",
                              static_cast<long>(i)});
            continue;
        }
        if (a.has_move(s.move(i)) && a.has_move(s.move(j)) && !a.enables(s.move(j), s.move(i)))
            report.push_back({"enabling",
                              "'" + s.move(j) + "' does not justify '" + s.move(i) + "'",
                              static_cast<long>(i)});
    }
    return report;
}

ValidationReport validate_play(const Arena& a, const Play& s) {
    ValidationReport report = validate_justified_sequence(a, s);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!a.has_move(s.move(i)) || !a.has_move(s.move(i + 1))) continue;
        if (a.label(s.move(i)) == a.label(s.move(i + 1)))
            report.push_back({"alternation",
                              "consecutive moves " + std::to_string(i) + " and " +
                                  std::to_string(i + 1) + " have the same polarity",
                              static_cast<long>(i + 1)});
    }
    return report;
}

}  // namespace hogames
