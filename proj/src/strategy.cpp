#include "hogames/strategy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hogames {

void InnocentStrategy::refresh_bound() {
    bound = 0;
    for (const auto& [key, answer] : view_tree)
        bound = std::max(bound, key.size() + 1);
}

Play entry_as_play(const InnocentStrategy& s, const ViewKey& key, const ViewMove& answer) {
    Play p;
    p.arena = s.arena;
    for (const auto& [m, ptr] : key) p.occurrences.push_back({m, ptr});
    p.occurrences.push_back({answer.first, answer.second});
    return p;
}

std::size_t strategy_level(const InnocentStrategy& s) {
    std::size_t level = 0;
    for (const auto& [key, answer] : s.view_tree)
        level = std::max(level, level_report(entry_as_play(s, key, answer)).play_level);
    return level;
}

std::string Term::str() const {
    if (args.empty()) return head;
    std::string out = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i].str();
    }
    return out + ")";
}

namespace {

bool term_contains(const Term& t, const std::string& name) {
    if (t.args.empty() && t.head == name) return true;
    for (const Term& a : t.args)
        if (term_contains(a, name)) return true;
    return false;
}

Term substitute(const Term& t, const std::map<std::string, Term>& env) {
    if (t.args.empty()) {
        auto it = env.find(t.head);
        if (it != env.end()) return it->second;
        return t;
    }
    Term out{t.head, {}};
    for (const Term& a : t.args) out.args.push_back(substitute(a, env));
    return out;
}

bool is_ancestor(const ExpansionTree& t, std::size_t anc, std::size_t e) {
    for (std::size_t cur = t.edges[e].parent; cur != kNoParent; cur = t.edges[cur].parent)
        if (cur == anc) return true;
    return false;
}

}  // namespace

OrderingCheck check_expansion_ordering(const ExpansionTree& t) {
    OrderingCheck c;
    std::vector<std::size_t> pos(t.edges.size(), kNoParent);
    if (t.ordering.size() != t.edges.size()) {
        c.ok = false;
        c.message = "ordering is not a permutation of the edges";
        return c;
    }
    for (std::size_t i = 0; i < t.ordering.size(); ++i) {
        std::size_t e = t.ordering[i];
        if (e >= t.edges.size() || pos[e] != kNoParent) {
            c.ok = false;
            c.message = "ordering is not a permutation of the edges";
            return c;
        }
        pos[e] = i;
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        for (std::size_t f = 0; f < t.edges.size(); ++f) {
            if (is_ancestor(t, e, f) && pos[e] > pos[f]) {
                c.ok = false;
                c.violated_condition = 1;
                c.message = "'" + t.edges[f].label + "' is ordered before its ancestor '" +
                            t.edges[e].label + "'";
                return c;
            }
        }
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        if (t.edges[e].is_term) continue;
        for (std::size_t f = 0; f < t.edges.size(); ++f) {
            if (!t.edges[f].is_term) continue;
            if (term_contains(t.edges[f].term, t.edges[e].eigenvariable) && pos[f] < pos[e]) {
                c.ok = false;
                c.violated_condition = 2;
                c.message = "term '" + t.edges[f].label + "' uses eigenvariable '" +
                            t.edges[e].eigenvariable + "' before it is introduced";
                return c;
            }
        }
    }
    return c;
}

namespace {

struct Compiler {
    const ExpansionTree& tree;
    Polarity owner;
    const std::vector<Term>& universe;
    const Arena& arena;
    std::vector<std::size_t> position;  // edge index -> view position (1-based)
    InnocentStrategy out;

    MoveId move_of(const std::string& variable, const Term& t) const {
        return variable + ":=" + t.str();
    }

    std::size_t parent_position(const ExpansionEdge& e) const {
        return e.parent == kNoParent ? 0 : position[e.parent];
    }

    void walk(ViewKey key, std::map<std::string, Term> env, std::size_t li) {
        if (li == tree.ordering.size()) return;
        const ExpansionEdge& e = tree.edges[tree.ordering[li]];
        std::size_t viewpos = li + 1;
        if (e.is_term) {
            ViewMove answer{move_of(e.variable, substitute(e.term, env)), parent_position(e)};
            out.view_tree[key] = answer;
            key.push_back(answer);
            walk(std::move(key), std::move(env), li + 1);
        } else {
            for (const Term& u : universe) {
                ViewKey k2 = key;
                k2.push_back({move_of(e.variable, u), viewpos - 1});
                std::map<std::string, Term> env2 = env;
                env2[e.eigenvariable] = u;
                walk(std::move(k2), std::move(env2), li + 1);
            }
        }
    }
};

}  // namespace

InnocentStrategy expansion_to_strategy(const ExpansionTree& t, Polarity owner,
                                       const std::vector<Term>& term_universe,
                                       const Arena& arena) {
    OrderingCheck c = check_expansion_ordering(t);
    if (!c.ok)
        throw std::invalid_argument("expansion_to_strategy: incorrect ordering: " + c.message);

    Compiler comp{t, owner, term_universe, arena, {}, {}};
    comp.position.resize(t.edges.size());
    for (std::size_t i = 0; i < t.ordering.size(); ++i) comp.position[t.ordering[i]] = i + 1;

    for (std::size_t li = 0; li < t.ordering.size(); ++li) {
        const ExpansionEdge& e = t.edges[t.ordering[li]];
        std::size_t viewpos = li + 1;
        bool owner_slot = owner == Polarity::P ? viewpos % 2 == 1 : viewpos % 2 == 0;
        if (e.is_term != owner_slot)
            throw std::invalid_argument(
                "expansion_to_strategy: linearization does not alternate with the owner "
                "phase at label '" + e.label + "'");
        if (!e.is_term && comp.parent_position(e) != viewpos - 1)
            throw std::invalid_argument(
                "expansion_to_strategy: adversary slot '" + e.label +
                "' does not immediately follow its parent");
    }

    comp.out.arena = &arena;
    comp.out.owner = owner;
    if (owner == Polarity::O) {
        comp.out.view_tree[{}] = {kStarMove, 0};
        comp.walk({{kStarMove, 0}}, {}, 0);
    } else {
        comp.walk({{kStarMove, 0}}, {}, 0);
    }

    for (const auto& [key, answer] : comp.out.view_tree) {
        Play p = entry_as_play(comp.out, key, answer);
        if (auto report = validate_play(arena, p); !report.empty())
            throw std::invalid_argument("expansion_to_strategy: entry is not a play: " +
                                        report.front().message);
        if (!is_visible(p).visible)
            throw std::invalid_argument("expansion_to_strategy: entry is not visible");
    }
    comp.out.refresh_bound();
    return comp.out;
}

namespace {

ViewKey encode_view(const View& v) {
    Play p = v.as_play();
    ViewKey key;
    for (std::size_t t = 0; t < p.size(); ++t)
        key.push_back({p.move(t), t == 0 ? 0 : p.justifier(t)});
    return key;
}

std::string describe_view(const ViewKey& key) {
    std::string out;
    for (const auto& [m, ptr] : key) {
        if (!out.empty()) out += " ";
        out += m + "@" + std::to_string(ptr);
    }
    return out.empty() ? "(empty view)" : out;
}

}  // namespace

Interaction interact(const InnocentStrategy& sigma, const InnocentStrategy& tau,
                     std::size_t step_limit) {
    if (sigma.owner == tau.owner)
        throw std::invalid_argument("interact: the strategies have the same owner");
    if (!(*sigma.arena == *tau.arena))
        throw std::invalid_argument("interact: the strategies play on different arenas");

    Interaction inter;
    inter.transcript.arena = sigma.arena;
    Play& s = inter.transcript;

    for (;;) {
        if (s.size() >= step_limit) {
            inter.status = InteractionStatus::STEP_LIMIT;
            return inter;
        }
        Polarity mover = s.empty() ? Polarity::O : opposite(s.polarity(s.size() - 1));
        const InnocentStrategy& str = mover == sigma.owner ? sigma : tau;

        View v{&s, {}};
        ViewKey key;
        if (!s.empty()) {
            v = view(s, mover);
            key = encode_view(v);
        }
        auto it = str.view_tree.find(key);
        if (it == str.view_tree.end()) {
            if (key.size() + 1 > str.bound)
                inter.status = InteractionStatus::COMPLETE;
            else
                inter.status = mover == Polarity::P ? InteractionStatus::STUCK_P
                                                    : InteractionStatus::STUCK_O;
            return inter;
        }

        const auto& [m, vpos] = it->second;
        std::string where = "answer to view [" + describe_view(key) + "]";
        if (!str.arena->has_move(m) || str.arena->label(m) != mover)
            throw std::runtime_error("interact: corrupt " + where + ": bad move '" + m + "'");
        if (s.empty()) {
            if (!str.arena->is_initial(m))
                throw std::runtime_error("interact: corrupt " + where +
                                         ": opening move is not initial");
            s.occurrences.push_back({m, 0});
        } else {
            if (vpos >= v.indices.size())
                throw std::runtime_error("interact: corrupt " + where +
                                         ": pointer outside the view");
            std::size_t target = v.indices[vpos];
            if (!str.arena->enables(s.move(target), m))
                throw std::runtime_error("interact: corrupt " + where +
                                         ": enabling violated by '" + m + "'");
            s.occurrences.push_back({m, target});
        }
    }
}

std::size_t default_step_limit(const InnocentStrategy& sigma, const InnocentStrategy& tau) {
    std::size_t k = std::max<std::size_t>({1, sigma.bound, tau.bound});
    std::size_t b = std::min(strategy_level(sigma), strategy_level(tau));
    HyperValue v = hyperexp(k, b, k);
    if (v.exact && v.value <= BigInt(std::numeric_limits<std::size_t>::max()))
        return v.value.convert_to<std::size_t>();
    return 1000000;
}

}  // namespace hogames
