#include "hogames/views.hpp"

#include <algorithm>
#include <stdexcept>

namespace hogames {

std::optional<std::size_t> View::position_of(std::size_t play_index) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), play_index);
    if (it == indices.end() || *it != play_index) return std::nullopt;
    return static_cast<std::size_t>(it - indices.begin());
}

Play View::as_play() const {
    Play r;
    r.arena = source->arena;
    r.occurrences.reserve(indices.size());
    for (std::size_t t = 0; t < indices.size(); ++t) {
        std::size_t i = indices[t];
        Occurrence occ{source->move(i), 0};
        if (t > 0) {
            auto pos = position_of(source->justifier(i));
            if (!pos)
                throw std::invalid_argument(
                    "view justifier escapes the view; source play is not visible");
            occ.justifier = *pos;
        }
        r.occurrences.push_back(occ);
    }
    return r;
}

View view(const Play& s, Polarity p) {
    if (s.empty()) {
        if (p == Polarity::O) return View{&s, {}};
        throw std::invalid_argument("P-view of the empty sequence is undefined");
    }
    if (auto report = validate_play(*s.arena, s); !report.empty())
        throw std::invalid_argument("view: not a play: " + report.front().message);

    std::vector<std::size_t> idx;
    std::size_t i = s.size() - 1;
    for (;;) {
        if (s.polarity(i) == p) {
            idx.push_back(i);
            if (i == 0) break;
            --i;
        } else if (i == 0) {
            // Initial move of the other polarity: base clause.
            idx.push_back(0);
            break;
        } else {
            // An adversary move keeps itself and its justifier, then the
            // recursion restarts strictly before the justifier.
            std::size_t j = s.justifier(i);
            idx.push_back(i);
            idx.push_back(j);
            if (j == 0) break;
            i = j - 1;
        }
    }
    std::reverse(idx.begin(), idx.end());
    return View{&s, std::move(idx)};
}

VisibilityResult is_visible(const Play& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        View w = view(s.prefix(i - 1), s.polarity(i));
        // w.source points at a temporary; only indices are used here.
        View check{nullptr, std::move(w.indices)};
        if (!std::binary_search(check.indices.begin(), check.indices.end(), s.justifier(i)))
            return {false, i};
    }
    return {true, std::nullopt};
}

std::vector<ViewShapeLink> view_shape(const Play& s) {
    if (s.size() < 2) throw std::invalid_argument("view_shape: play too short");
    if (!is_visible(s).visible) throw std::invalid_argument("view_shape: play is not visible");

    const std::size_t last = s.size() - 1;
    const std::size_t target = s.justifier(last);
    std::vector<ViewShapeLink> links;
    std::size_t cur = last - 1;
    while (cur > target) {
        std::size_t closing = cur;
        std::size_t opening = s.justifier(closing);
        if (opening <= target)
            throw std::logic_error("view_shape: block escapes the decomposition range");
        links.push_back({opening, closing});
        cur = opening - 1;
    }
    std::reverse(links.begin(), links.end());
    return links;
}

}  // namespace hogames
