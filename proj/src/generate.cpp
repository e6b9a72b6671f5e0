#include "hogames/generate.hpp"

#include <string>

#include "hogames/views.hpp"

namespace hogames {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<MoveId> enabled_answers(const Arena& a, const MoveId& m) {
    std::vector<MoveId> out;
    for (const auto& [x, y] : a.enabling)
        if (x == m) out.push_back(y);
    return out;
}

}  // namespace

Arena random_arena(Rng& rng, const GenConfig& cfg) {
    Arena a;
    a.name = "random";
    a.moves.insert(kStarMove);
    a.labels[kStarMove] = Polarity::O;
    a.initials.insert(kStarMove);

    std::size_t depth = uniform(rng, cfg.depth_min, cfg.depth_max);
    std::vector<MoveId> prev{kStarMove};
    for (std::size_t layer = 1; layer < depth; ++layer) {
        std::size_t count = uniform(rng, cfg.branch_min, cfg.branch_max);
        std::vector<MoveId> cur;
        for (std::size_t i = 0; i < count; ++i) {
            MoveId m = "m" + std::to_string(layer) + "_" + std::to_string(i);
            a.moves.insert(m);
            a.labels[m] = layer % 2 == 1 ? Polarity::P : Polarity::O;
            cur.push_back(m);
        }
        for (const auto& p : prev)
            for (const auto& c : cur) a.enabling.insert({p, c});
        prev = cur;
    }
    return a;
}

namespace {

// Samples a pointer target among the adversary members of the mover's view
// that still enable an answer; propensity biases away from the newest one.
std::optional<std::size_t> sample_target(Rng& rng, double propensity, const Play& as_play,
                                         const std::vector<std::size_t>& positions,
                                         Polarity mover, const Arena& a) {
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < positions.size(); ++t) {
        std::size_t idx = positions[t];
        if (a.label(as_play.move(idx)) == mover) continue;
        if (enabled_answers(a, as_play.move(idx)).empty()) continue;
        candidates.push_back(idx);
    }
    if (candidates.empty()) return std::nullopt;
    std::size_t newest = candidates.back();
    std::vector<std::size_t> older(candidates.begin(), candidates.end() - 1);
    if (!older.empty() && chance(rng, propensity))
        return older[uniform(rng, 0, older.size() - 1)];
    return newest;
}

}  // namespace

Play random_play(Rng& rng, const GenConfig& cfg, const Arena& a) {
    Play s{&a, {{kStarMove, 0}}};
    while (s.size() < cfg.length_target) {
        Polarity mover = opposite(s.polarity(s.size() - 1));
        View v = view(s, mover);
        auto target = sample_target(rng, cfg.propensity, s, v.indices, mover, a);
        if (!target) break;
        std::vector<MoveId> answers = enabled_answers(a, s.move(*target));
        s.occurrences.push_back({answers[uniform(rng, 0, answers.size() - 1)], *target});
    }
    return s;
}

namespace {

struct TreeGrower {
    Rng& rng;
    const GenConfig& cfg;
    const Arena& arena;
    Polarity owner;
    std::size_t bound_target;
    std::size_t budget;
    InnocentStrategy out;

    static ViewKey key_of(const Play& vp) {
        ViewKey k;
        for (std::size_t t = 0; t < vp.size(); ++t)
            k.push_back({vp.move(t), t == 0 ? 0 : vp.justifier(t)});
        return k;
    }

    // vp is the owner's view ending with an adversary move (a lookup key).
    void grow(const Play& vp) {
        if (budget == 0 || vp.size() + 1 > bound_target) return;
        ViewKey key = key_of(vp);
        if (out.view_tree.count(key)) return;

        std::vector<std::size_t> positions(vp.size());
        for (std::size_t t = 0; t < vp.size(); ++t) positions[t] = t;
        auto target = sample_target(rng, cfg.propensity, vp, positions, owner, arena);
        if (!target) return;
        std::vector<MoveId> answers = enabled_answers(arena, vp.move(*target));
        ViewMove answer{answers[uniform(rng, 0, answers.size() - 1)], *target};
        out.view_tree[key] = answer;
        --budget;

        Play w = vp;
        w.occurrences.push_back({answer.first, answer.second});

        // The adversary may come back to any owner move of the view; the
        // resulting view truncates everything after the revisited answer.
        std::size_t extensions = uniform(rng, 1, 2);
        for (std::size_t e = 0; e < extensions; ++e) {
            std::vector<std::size_t> owner_positions;
            for (std::size_t t = 0; t < w.size(); ++t)
                if (arena.label(w.move(t)) == owner &&
                    !enabled_answers(arena, w.move(t)).empty())
                    owner_positions.push_back(t);
            if (owner_positions.empty()) return;
            std::size_t q = owner_positions[uniform(rng, 0, owner_positions.size() - 1)];
            std::vector<MoveId> adv = enabled_answers(arena, w.move(q));
            Play child = w.prefix(q);
            child.occurrences.push_back({adv[uniform(rng, 0, adv.size() - 1)], q});
            grow(child);
        }
    }
};

}  // namespace

InnocentStrategy random_strategy(Rng& rng, const GenConfig& cfg, const Arena& a,
                                 Polarity owner) {
    TreeGrower g{rng, cfg, a, owner, uniform(rng, 4, 12), 200, {}};
    g.out.arena = &a;
    g.out.owner = owner;
    if (owner == Polarity::P) {
        Play root{&a, {{kStarMove, 0}}};
        g.grow(root);
    } else {
        g.out.view_tree[{}] = {kStarMove, 0};
        Play w{&a, {{kStarMove, 0}}};
        for (const MoveId& m : enabled_answers(a, kStarMove)) {
            Play child = w;
            child.occurrences.push_back({m, 0});
            g.grow(child);
        }
    }
    g.out.refresh_bound();
    return g.out;
}

}  // namespace hogames
