#include "hogames/checks.hpp"

#include <map>
#include <optional>

#include "hogames/formats.hpp"
#include "hogames/gadget.hpp"
#include "hogames/trim.hpp"

namespace hogames {

namespace {

struct CaseFailure {
    std::string message;
    Arena arena;
    Play play;  // bound to `arena` only for serialization purposes
};

template <typename F>
SuiteResult run_cases(const char* name, Rng& rng, std::size_t cases, F&& one) {
    SuiteResult r;
    r.suite = name;
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        std::optional<CaseFailure> fail = one(rng);
        if (!fail) continue;
        ++r.failures;
        if (r.first_failure.empty()) {
            r.first_failure = "case " + std::to_string(i) + ": " + fail->message;
            r.failure_arena = serialize_arena(fail->arena);
            fail->play.arena = &fail->arena;
            r.failure_play = serialize_play(fail->play, fail->arena.name);
        }
    }
    return r;
}

CaseFailure make_failure(std::string msg, const Arena& a, const Play& s) {
    return CaseFailure{std::move(msg), a, s};
}

}  // namespace

SuiteResult suite_view_visibility(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    return run_cases("view-visibility", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Arena a = random_arena(r, cfg);
        Play s = random_play(r, cfg, a);
        if (!validate_play(a, s).empty())
            return make_failure("generated play fails validation", a, s);
        if (!is_visible(s).visible)
            return make_failure("generated play is not visible", a, s);
        for (Polarity p : {Polarity::P, Polarity::O}) {
            Play vp = view(s, p).as_play();
            if (!validate_play(a, vp).empty() || !is_visible(vp).visible)
                return make_failure("view is not a visible play", a, s);
        }
        return std::nullopt;
    });
}

SuiteResult suite_chains(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    GenConfig short_cfg = cfg;
    short_cfg.length_target = std::min<std::size_t>(cfg.length_target, 24);
    return run_cases("chains", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Arena a = random_arena(r, short_cfg);
        Play s = random_play(r, short_cfg, a);
        std::vector<std::size_t> levels = move_levels(s);

        // Levels survive the passage to the mover's view of the prefix.
        for (std::size_t i = 1; i < s.size(); ++i) {
            Play vp = view(s.prefix(i), s.polarity(i)).as_play();
            if (move_levels(vp).back() != levels[i])
                return make_failure(
                    "level of move " + std::to_string(i) + " changes inside its view", a, s);
        }

        // An inactivated edge's inactivator has the same polarity.
        for (std::size_t i = 1; i < s.size(); ++i)
            for (std::size_t j = 1; j < i; ++j)
                if (inactivates(s, EdgeRef{j}, EdgeRef{i}) &&
                    s.polarity(j) != s.polarity(i))
                    return make_failure("inactivating edges of mixed polarity", a, s);

        // Edges from a player's maximal-level moves are never crossed.
        LevelReport rep = level_report(s);
        for (std::size_t i = 1; i < s.size(); ++i) {
            std::size_t player_level =
                s.polarity(i) == Polarity::P ? rep.p_level : rep.o_level;
            if (levels[i] != player_level || player_level == 0) continue;
            for (std::size_t j = 1; j < s.size(); ++j)
                if (crosses(s, EdgeRef{i}, EdgeRef{j}))
                    return make_failure(
                        "maximal-level edge at " + std::to_string(i) + " is crossed", a, s);
        }
        return std::nullopt;
    });
}

namespace {

struct Duel {
    Arena arena;
    InnocentStrategy sigma, tau;
    Interaction inter;
};

Duel random_duel(Rng& r, const GenConfig& cfg, std::size_t step_cap) {
    Duel d;
    d.arena = random_arena(r, cfg);
    d.sigma = random_strategy(r, cfg, d.arena, Polarity::P);
    d.tau = random_strategy(r, cfg, d.arena, Polarity::O);
    std::size_t limit = std::min(step_cap, default_step_limit(d.sigma, d.tau));
    d.inter = interact(d.sigma, d.tau, std::max<std::size_t>(limit, 1));
    return d;
}

}  // namespace

SuiteResult suite_maxmin(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    return run_cases("maxmin", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Duel d = random_duel(r, cfg, 4000);
        const Play& s = d.inter.transcript;
        if (!s.empty() && !is_visible(s).visible)
            return make_failure("transcript is not visible", d.arena, s);
        LevelReport rep = level_report(s);
        if (rep.p_level > strategy_level(d.sigma))
            return make_failure("P-level exceeds the P strategy level", d.arena, s);
        if (rep.o_level > strategy_level(d.tau))
            return make_failure("O-level exceeds the O strategy level", d.arena, s);
        return std::nullopt;
    });
}

SuiteResult suite_trim(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    return run_cases("trim", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Arena a = random_arena(r, cfg);
        Play s = random_play(r, cfg, a);
        LevelReport rep = level_report(s);

        // Answer cost: a non-immediate answer beats the first reaction.
        for (std::size_t i = 1; i < s.size(); ++i) {
            std::size_t j = s.justifier(i);
            if (j + 1 == i) continue;
            if (move_complexity(s, j + 1) >= move_complexity(s, i))
                return make_failure(
                    "answer-cost inequality fails at move " + std::to_string(i), a, s);
        }

        for (Polarity p : {Polarity::P, Polarity::O}) {
            std::size_t n = p == Polarity::P ? rep.p_level : rep.o_level;
            if (n == 0) continue;
            TrimSpec mu{n, p};
            TrimResult t = trim(s, mu);
            if (!is_visible(t.trimmed).visible)
                return make_failure("trimmed play is not visible", a, s);
            LevelReport trep = level_report(t.trimmed);
            std::size_t after = p == Polarity::P ? trep.p_level : trep.o_level;
            if (after > n - 1)
                return make_failure("trim does not lower the player level", a, s);
            SpringResult spring = verify_spring(s, mu);
            if (!spring.holds)
                return make_failure("complexity chain not increasing at prefix " +
                                        std::to_string(*spring.first_violation),
                                    a, s);
        }
        return std::nullopt;
    });
}

SuiteResult suite_gadget(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    return run_cases("gadget", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Arena a = random_arena(r, cfg);
        Play s = random_play(r, cfg, a);
        GadgetPlay g = apply_gadget(s);
        if (!is_visible(g.play).visible)
            return make_failure("gadget play is not visible", a, s);
        if (!verify_gadget_views(s))
            return make_failure("gadget view equations fail", a, s);
        auto d = arena_depth(a);
        if (d && *d >= 2 && !verify_normalization(s, *d))
            return make_failure("gadget does not normalize the O-level", a, s);
        Play back = strip_gadget(g, a);
        if (back.occurrences.size() != s.occurrences.size())
            return make_failure("strip round-trip changes the length", a, s);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (back.move(i) != s.move(i) ||
                (i > 0 && back.justifier(i) != s.justifier(i)))
                return make_failure("strip round-trip changes the play", a, s);
        return std::nullopt;
    });
}

SuiteResult suite_bounds(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    return run_cases("bounds", rng, cases, [&](Rng& r) -> std::optional<CaseFailure> {
        Duel d = random_duel(r, cfg, 4000);
        if (d.inter.status == InteractionStatus::STEP_LIMIT)
            return std::nullopt;  // capped for speed; the theorem bound is huge
        std::size_t k = std::max<std::size_t>({1, d.sigma.bound, d.tau.bound});
        std::size_t b = std::min(strategy_level(d.sigma), strategy_level(d.tau));
        HyperValue bound = hyperexp(k, b, k);
        if (bound.exact && BigInt(d.inter.transcript.size()) > bound.value)
            return make_failure("transcript longer than the tower bound", d.arena,
                                d.inter.transcript);
        return std::nullopt;
    });
}

std::vector<SuiteSpec> select_suites(const std::string& which) {
    std::vector<SuiteSpec> all = {
        {"view-visibility", suite_view_visibility}, {"chains", suite_chains},
        {"maxmin", suite_maxmin},                   {"trim", suite_trim},
        {"gadget", suite_gadget},                   {"bounds", suite_bounds},
    };
    if (which == "all") return all;
    for (const auto& s : all)
        if (s.name == which) return {s};
    return {};
}

namespace {

// Independent top-down recomputation of activity: an edge is active in a
// prefix iff no active later edge of that prefix crosses it. Written as
// memoized recursion to stay structurally different from the library's
// backward sweep.
struct ActivityOracle {
    const Play& s;
    std::size_t prefix_end;
    std::map<std::size_t, bool> memo;

    bool crossed_by(std::size_t e, std::size_t later) {
        std::size_t fe = s.justifier(e), fl = s.justifier(later);
        return fe < fl && fl < e && e < later;
    }

    bool active(std::size_t e) {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        bool result = true;
        for (std::size_t later = e + 1; later <= prefix_end; ++later) {
            if (crossed_by(e, later) && active(later)) {
                result = false;
                break;
            }
        }
        memo[e] = result;
        return result;
    }
};

std::size_t oracle_level(const Play& s, std::size_t i,
                         std::vector<ActivityOracle>& oracles,
                         std::map<std::size_t, std::size_t>& chain_memo) {
    if (i == 0 || s.justifier(i) == i - 1) return 0;
    // Longest chain of inactivations feeding this move's edge, by explicit
    // search over predecessors.
    std::function<std::size_t(std::size_t)> longest = [&](std::size_t e) -> std::size_t {
        auto it = chain_memo.find(e);
        if (it != chain_memo.end()) return it->second;
        std::size_t best = 1;
        for (std::size_t j = 1; j < e; ++j) {
            ActivityOracle& o = oracles[e - 1];
            if (o.crossed_by(j, e) && o.active(j))
                best = std::max(best, longest(j) + 1);
        }
        chain_memo[e] = best;
        return best;
    };
    std::size_t k = 0;
    for (std::size_t j = 1; j < i; ++j) {
        ActivityOracle& o = oracles[i - 1];
        if (o.crossed_by(j, i) && o.active(j)) k = std::max(k, longest(j));
    }
    return k + 1;
}

}  // namespace

std::size_t oracle_disagreements(Rng& rng, const GenConfig& cfg, std::size_t cases) {
    std::size_t bad = 0;
    for (std::size_t c = 0; c < cases; ++c) {
        Arena a = random_arena(rng, cfg);
        Play s = random_play(rng, cfg, a);
        bool ok = true;

        std::vector<ActivityOracle> oracles;
        for (std::size_t l = 0; l + 1 < s.size(); ++l)
            oracles.push_back(ActivityOracle{s, l, {}});

        for (std::size_t l = 1; l < s.size() && ok; ++l) {
            ActivityTable t = activity(s, l);
            ActivityOracle o{s, l, {}};
            for (std::size_t e = 1; e <= l; ++e)
                if (t.active(EdgeRef{e}) != o.active(e)) ok = false;
        }
        std::vector<std::size_t> levels = move_levels(s);
        std::map<std::size_t, std::size_t> chain_memo;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            if (levels[i] != oracle_level(s, i, oracles, chain_memo)) ok = false;
        if (!ok) ++bad;
    }
    return bad;
}

}  // namespace hogames
