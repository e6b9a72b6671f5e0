#include "hogames/gadget.hpp"

#include <stdexcept>

namespace hogames {

EnlargedArena enlarge_arena(const Arena& a) {
    EnlargedArena e;
    e.arena = a;
    e.on_move = "on";
    e.off_move = "off";
    while (a.has_move(e.on_move)) {
        e.on_move = "g:" + e.on_move;
        e.renamed = true;
    }
    while (a.has_move(e.off_move)) {
        e.off_move = "g:" + e.off_move;
        e.renamed = true;
    }
    e.arena.moves.insert(e.on_move);
    e.arena.moves.insert(e.off_move);
    e.arena.labels[e.on_move] = Polarity::P;
    e.arena.labels[e.off_move] = Polarity::O;
    for (const auto& m : a.moves) {
        if (a.label(m) == Polarity::O)
            e.arena.enabling.insert({m, e.on_move});
        else
            e.arena.enabling.insert({m, e.off_move});
    }
    e.arena.enabling.insert({e.on_move, e.off_move});
    e.arena.enabling.insert({e.off_move, e.on_move});
    return e;
}

GadgetPlay apply_gadget(const Play& s) {
    if (auto report = validate_play(*s.arena, s); !report.empty())
        throw std::invalid_argument("apply_gadget: not a play: " + report.front().message);
    if (!is_visible(s).visible)
        throw std::invalid_argument("apply_gadget: the play is not visible");

    GadgetPlay g;
    g.enlarged = std::make_shared<EnlargedArena>(enlarge_arena(*s.arena));
    g.play.arena = &g.enlarged->arena;
    g.base_to_gadget.resize(s.size());

    for (std::size_t b = 0; b < s.size(); ++b) {
        Occurrence occ{s.move(b), 0};
        if (b > 0) occ.justifier = g.base_to_gadget[s.justifier(b)];
        g.base_to_gadget[b] = g.play.size();
        g.play.occurrences.push_back(occ);
        g.origin.push_back({OriginKind::BASE, b});

        if (s.polarity(b) != Polarity::P || b + 1 == s.size()) continue;
        std::size_t ordinal = (b - 1) / 2;
        std::size_t bj = s.justifier(b);
        // off points behind the P-move's justifier: to the on before it, or
        // to the P-move itself when the justifier is the opening move.
        std::size_t off_target =
            bj == 0 ? g.base_to_gadget[b] : g.base_to_gadget[bj] - 1;
        g.play.occurrences.push_back({g.enlarged->off_move, off_target});
        g.origin.push_back({OriginKind::OFF, ordinal});
        g.play.occurrences.push_back({g.enlarged->on_move, g.play.size() - 1});
        g.origin.push_back({OriginKind::ON, ordinal});
    }
    return g;
}

Play strip_gadget(const GadgetPlay& g, const Arena& base) {
    Play s;
    s.arena = &base;
    std::vector<std::size_t> gadget_to_base(g.play.size(), 0);
    for (std::size_t i = 0; i < g.play.size(); ++i) {
        if (g.origin[i].kind != OriginKind::BASE) continue;
        gadget_to_base[i] = s.size();
        Occurrence occ{g.play.move(i), 0};
        if (!s.empty()) occ.justifier = gadget_to_base[g.play.justifier(i)];
        s.occurrences.push_back(occ);
    }
    return s;
}

namespace {

using Indices = std::vector<std::size_t>;

// Base O-view of the prefix ending at the P-move with base index pb, with
// the off;on pair after each non-final P-view member spliced in. All values
// are gadget indices.
Indices interleaved_o_view(const Play& s, const GadgetPlay& g, std::size_t pb) {
    Indices base = view(s.prefix(pb), Polarity::O).indices;
    Indices out;
    for (std::size_t t = 0; t < base.size(); ++t) {
        out.push_back(g.base_to_gadget[base[t]]);
        bool inner_p = t + 1 < base.size() && s.polarity(base[t]) == Polarity::P;
        if (inner_p) {
            out.push_back(g.base_to_gadget[base[t]] + 1);  // off
            out.push_back(g.base_to_gadget[base[t]] + 2);  // on
        }
    }
    return out;
}

}  // namespace

bool verify_gadget_views(const Play& s) {
    GadgetPlay g = apply_gadget(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        std::size_t gi = g.base_to_gadget[b];
        if (s.polarity(b) == Polarity::P) {
            // O-view at a P-move: the base O-view with off;on interleaved.
            Indices lhs = view(g.play.prefix(gi), Polarity::O).indices;
            if (lhs != interleaved_o_view(s, g, b)) return false;

            // P-view at the off after this P-move: unwind the off/on chain
            // over the base O-view pairs, under the base P-view at the
            // O-move before the innermost pair's P-move.
            if (gi + 1 < g.play.size()) {
                Indices pairs = view(s.prefix(b), Polarity::O).indices;
                std::size_t inner_p = pairs[1];  // P-move whose justifier is 0
                Indices rhs;
                for (std::size_t x : view(s.prefix(inner_p - 1), Polarity::P).indices)
                    rhs.push_back(g.base_to_gadget[x]);
                rhs.push_back(g.base_to_gadget[inner_p]);
                rhs.push_back(g.base_to_gadget[inner_p] + 1);  // its off
                for (std::size_t t = 3; t < pairs.size(); t += 2) {
                    rhs.push_back(g.base_to_gadget[pairs[t - 2]] + 2);  // prev on
                    rhs.push_back(g.base_to_gadget[pairs[t]] + 1);     // next off
                }
                Indices lhs_off = view(g.play.prefix(gi + 1), Polarity::P).indices;
                if (lhs_off != rhs) return false;
            }
        } else {
            // P-view at a base O-move: the base P-view re-indexed.
            Indices lhs = view(g.play.prefix(gi), Polarity::P).indices;
            Indices rhs;
            for (std::size_t x : view(s.prefix(b), Polarity::P).indices)
                rhs.push_back(g.base_to_gadget[x]);
            if (lhs != rhs) return false;

            // O-view at a later base O-move: the interleaving for the
            // preceding P-move, then its off;on and the move itself.
            if (b > 0) {
                Indices lhs_o = view(g.play.prefix(gi), Polarity::O).indices;
                Indices rhs_o = interleaved_o_view(s, g, b - 1);
                rhs_o.push_back(g.base_to_gadget[b - 1] + 1);
                rhs_o.push_back(g.base_to_gadget[b - 1] + 2);
                rhs_o.push_back(gi);
                if (lhs_o != rhs_o) return false;
            }
        }
    }
    return true;
}

bool verify_normalization(const Play& s, std::size_t d) {
    if (d < 2) throw std::invalid_argument("verify_normalization: depth must be at least 2");
    GadgetPlay g = apply_gadget(s);
    return level_report(g.play).o_level <= d - 2;
}

bool verify_normalization(const Play& s) {
    auto d = arena_depth(*s.arena);
    if (!d) throw std::invalid_argument("verify_normalization: arena depth is infinite");
    return verify_normalization(s, *d);
}

}  // namespace hogames
