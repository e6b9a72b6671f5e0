#include "hogames/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "hogames/formats.hpp"
#include "hogames/gadget.hpp"
#include "hogames/trim.hpp"

namespace hogames {

namespace {

Arena load_arena(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_arena(in);
}

ParsedPlay load_play(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_play(in);
}

ParsedStrategy load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_strategy(in);
}

void print_report(std::ostream& out, const std::string& subject,
                  const ValidationReport& report) {
    for (const auto& v : report) {
        out << subject << " violation [" << v.code << "]";
        if (v.index >= 0) out << " at index " << v.index;
        out << ": " << v.message << "\n";
    }
}

std::string depth_str(const std::optional<std::size_t>& d) {
    return d ? std::to_string(*d) : "INFINITE";
}

// Loads an arena/play pair, runs the full validations, and reports. Returns
// the bound play, or nothing with `code` set.
std::optional<Play> load_valid_pair(const std::string& arena_path,
                                    const std::string& play_path, Arena& arena,
                                    std::ostream& out, int& code) {
    arena = load_arena(arena_path);
    ParsedPlay pp = load_play(play_path);
    if (pp.arena_name != arena.name) {
        out << "play file names arena '" << pp.arena_name << "' but the arena is '"
            << arena.name << "'\n";
        code = 2;
        return std::nullopt;
    }
    ValidationReport ar = validate_arena(arena);
    print_report(out, "arena", ar);
    if (!ar.empty()) {
        code = 1;
        return std::nullopt;
    }
    Play s = pp.bind(arena);
    ValidationReport pr = validate_play(arena, s);
    print_report(out, "play", pr);
    if (!pr.empty()) {
        code = 1;
        return std::nullopt;
    }
    return s;
}

template <typename F>
int guarded(std::ostream& out, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        out << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int cmd_validate(const std::string& arena_path, const std::optional<std::string>& play_path,
                 std::ostream& out) {
    return guarded(out, [&]() -> int {
        Arena arena = load_arena(arena_path);
        ValidationReport ar = validate_arena(arena);
        print_report(out, "arena", ar);
        bool ok = ar.empty();
        bool play_ok = true, visible = true;
        if (play_path && ok) {
            ParsedPlay pp = load_play(*play_path);
            if (pp.arena_name != arena.name) {
                out << "play file names arena '" << pp.arena_name << "'\n";
                return 2;
            }
            Play s = pp.bind(arena);
            ValidationReport pr = validate_play(arena, s);
            print_report(out, "play", pr);
            play_ok = pr.empty();
            if (play_ok) {
                VisibilityResult vis = is_visible(s);
                visible = vis.visible;
                if (!visible)
                    out << "play violation [visibility] at index " << *vis.first_violation
                        << ": pointer escapes the mover's view\n";
            }
        }
        out << "ARENA_VALID=" << (ok ? "yes" : "no") << "\n";
        if (play_path && ok) {
            out << "PLAY_VALID=" << (play_ok ? "yes" : "no") << "\n";
            if (play_ok) out << "VISIBLE=" << (visible ? "yes" : "no") << "\n";
        }
        return ok && play_ok && visible ? 0 : 1;
    });
}

int cmd_analyze(const std::string& arena_path, const std::string& play_path,
                bool show_activity, std::ostream& out) {
    return guarded(out, [&]() -> int {
        Arena arena;
        int code = 0;
        auto maybe = load_valid_pair(arena_path, play_path, arena, out, code);
        if (!maybe) return code;
        const Play& s = *maybe;

        LevelReport rep = level_report(s);
        out << "levels:";
        for (std::size_t lvl : rep.move_levels) out << " " << lvl;
        out << "\n";
        if (show_activity) {
            for (std::size_t l = 1; l < s.size(); ++l) {
                ActivityTable t = activity(s, l);
                out << "prefix " << l << ":";
                for (const auto& [e, v] : t.verdicts)
                    out << " " << e << "=" << (v == Verdict::ACTIVE ? "A" : "I");
                out << "\n";
            }
        }
        auto d = arena_depth(arena);
        VisibilityResult vis = is_visible(s);
        out << "play level " << rep.play_level << "; P level " << rep.p_level
            << "; O level " << rep.o_level << "; real level " << rep.real_level
            << "; principal " << polarity_char(rep.principal) << "; arena depth "
            << depth_str(d) << "\n";
        if (d && *d >= 2 && rep.play_level > *d - 2)
            out << "NOTE level exceeds depth-2\n";

        out << "PLAY_LEVEL=" << rep.play_level << "\n";
        out << "P_LEVEL=" << rep.p_level << "\n";
        out << "O_LEVEL=" << rep.o_level << "\n";
        out << "REAL_LEVEL=" << rep.real_level << "\n";
        out << "PRINCIPAL=" << polarity_char(rep.principal) << "\n";
        out << "DEPTH=" << depth_str(d) << "\n";
        out << "VISIBLE=" << (vis.visible ? "yes" : "no") << "\n";
        return 0;
    });
}

int cmd_trim(const std::string& arena_path, const std::string& play_path, std::size_t level,
             Polarity player, std::ostream& out) {
    return guarded(out, [&]() -> int {
        Arena arena;
        int code = 0;
        auto maybe = load_valid_pair(arena_path, play_path, arena, out, code);
        if (!maybe) return code;
        const Play& s = *maybe;

        LevelReport before = level_report(s);
        TrimResult t = trim(s, TrimSpec{level, player});
        LevelReport after = level_report(t.trimmed);
        out << serialize_play(t.trimmed, arena.name);
        out << "removed " << s.size() - t.trimmed.size() << " of " << s.size()
            << " moves\n";
        out << "BEFORE_P_LEVEL=" << before.p_level << "\n";
        out << "BEFORE_O_LEVEL=" << before.o_level << "\n";
        out << "AFTER_P_LEVEL=" << after.p_level << "\n";
        out << "AFTER_O_LEVEL=" << after.o_level << "\n";
        out << "REMOVED=" << s.size() - t.trimmed.size() << "\n";
        return 0;
    });
}

int cmd_gadget(const std::string& arena_path, const std::string& play_path,
               std::ostream& out) {
    return guarded(out, [&]() -> int {
        Arena arena;
        int code = 0;
        auto maybe = load_valid_pair(arena_path, play_path, arena, out, code);
        if (!maybe) return code;
        const Play& s = *maybe;

        GadgetPlay g = apply_gadget(s);
        LevelReport before = level_report(s);
        LevelReport after = level_report(g.play);
        auto d = arena_depth(arena);
        out << serialize_play(g.play, arena.name + "+");
        out << "O level " << before.o_level << " -> " << after.o_level
            << "; base arena depth " << depth_str(d) << "\n";
        bool normalized = d && *d >= 2 && after.o_level <= *d - 2;
        out << "O_LEVEL_BEFORE=" << before.o_level << "\n";
        out << "O_LEVEL_AFTER=" << after.o_level << "\n";
        out << "DEPTH=" << depth_str(d) << "\n";
        if (d && *d >= 2) out << "TARGET=" << *d - 2 << "\n";
        out << "NORMALIZED=" << (normalized ? "yes" : "no") << "\n";
        return normalized ? 0 : 1;
    });
}

int cmd_interact(const std::string& arena_path, const std::string& sigma_path,
                 const std::string& tau_path, std::optional<std::size_t> max_steps,
                 std::ostream& out) {
    return guarded(out, [&]() -> int {
        Arena arena = load_arena(arena_path);
        ValidationReport ar = validate_arena(arena);
        print_report(out, "arena", ar);
        if (!ar.empty()) return 1;
        ParsedStrategy ps = load_strategy(sigma_path);
        ParsedStrategy pt = load_strategy(tau_path);
        for (const ParsedStrategy* p : {&ps, &pt})
            if (p->arena_name != arena.name) {
                out << "strategy file names arena '" << p->arena_name << "'\n";
                return 2;
            }
        InnocentStrategy sigma = ps.bind(arena);
        InnocentStrategy tau = pt.bind(arena);
        std::size_t limit = max_steps ? *max_steps : default_step_limit(sigma, tau);

        Interaction inter = interact(sigma, tau, limit);
        out << serialize_play(inter.transcript, arena.name);

        std::size_t k = std::max<std::size_t>({1, sigma.bound, tau.bound});
        std::size_t b = std::min(strategy_level(sigma), strategy_level(tau));
        HyperValue bound = hyperexp(k, b, k);
        const char* status = inter.status == InteractionStatus::COMPLETE ? "COMPLETE"
                             : inter.status == InteractionStatus::STEP_LIMIT
                                 ? "STEP_LIMIT"
                             : inter.status == InteractionStatus::STUCK_P ? "STUCK_P"
                                                                          : "STUCK_O";
        out << "length " << inter.transcript.size() << " vs bound " << bound.str()
            << " (k=" << k << ", b=" << b << ")\n";
        out << "LENGTH=" << inter.transcript.size() << "\n";
        out << "BOUND=" << bound.str() << "\n";
        out << "STATUS=" << status << "\n";
        return 0;
    });
}

int cmd_random(const GenConfig& cfg, std::size_t count, const std::string& check,
               const std::optional<std::string>& dump_dir, std::ostream& out) {
    std::vector<SuiteSpec> suites = select_suites(check);
    if (suites.empty()) {
        out << "unknown check '" << check
            << "' (use all, view-visibility, chains, maxmin, trim, gadget, bounds)\n";
        return 2;
    }
    std::size_t cases = 0, failures = 0;
    for (const auto& spec : suites) {
        Rng rng(cfg.seed);
        SuiteResult r = spec.fn(rng, cfg, count);
        cases += r.cases;
        failures += r.failures;
        out << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures
            << " failures\n";
        if (r.failures > 0) {
            out << "  first failure: " << r.first_failure << "\n";
            std::string dir = dump_dir.value_or(".");
            std::string astem = dir + "/fail_" + r.suite + "_arena.txt";
            std::string pstem = dir + "/fail_" + r.suite + "_play.txt";
            std::ofstream(astem) << r.failure_arena;
            std::ofstream(pstem) << r.failure_play;
            out << "  counterexample written to " << astem << " and " << pstem << "\n";
        }
    }
    out << "SEED=" << cfg.seed << "\n";
    out << "SUITES=" << suites.size() << "\n";
    out << "CASES=" << cases << "\n";
    out << "FAILURES=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_render(const std::string& arena_path, const std::string& play_path,
               const std::string& format, std::ostream& out) {
    return guarded(out, [&]() -> int {
        if (format != "dot" && format != "ascii") {
            out << "unknown format '" << format << "' (use dot or ascii)\n";
            return 2;
        }
        Arena arena;
        int code = 0;
        auto maybe = load_valid_pair(arena_path, play_path, arena, out, code);
        if (!maybe) return code;
        const Play& s = *maybe;

        if (format == "ascii") {
            for (std::size_t i = 0; i < s.size(); ++i) {
                out << i << " [" << polarity_char(s.polarity(i)) << "] " << s.move(i);
                if (i > 0) out << " -> " << s.justifier(i);
                out << "\n";
            }
        } else {
            out << "digraph play {\n  rankdir=LR;\n";
            for (std::size_t i = 0; i < s.size(); ++i)
                out << "  n" << i << " [label=\"" << s.move(i) << "\", shape="
                    << (s.polarity(i) == Polarity::P ? "box" : "ellipse") << "];\n";
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                out << "  n" << i << " -> n" << i + 1 << " [style=invis];\n";
            for (std::size_t i = 1; i < s.size(); ++i)
                out << "  n" << i << " -> n" << s.justifier(i)
                    << " [constraint=false, color=gray];\n";
            out << "}\n";
        }
        out << "NODES=" << s.size() << "\n";
        out << "ARCS=" << (s.size() ? s.size() - 1 : 0) << "\n";
        return 0;
    });
}

}  // namespace hogames
