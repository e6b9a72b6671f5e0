#include "hogames/formats.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace hogames {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

Polarity parse_polarity(const std::string& t, std::size_t line) {
    if (t == "P") return Polarity::P;
    if (t == "O") return Polarity::O;
    throw ParseError(line, "expected polarity P or O, got '" + t + "'");
}

// Reads logical lines: comments stripped, blanks skipped.
struct LineReader {
    std::istream& in;
    std::size_t line = 0;

    bool next(std::vector<std::string>& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            out = tokens(strip_comment(raw));
            if (!out.empty()) return true;
        }
        return false;
    }
};

}  // namespace

Arena parse_arena(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "arena" || t.size() != 2)
        throw ParseError(r.line ? r.line : 1, "expected header \"arena <name>\"");
    Arena a;
    a.name = t[1];
    while (r.next(t)) {
        if (t[0] == "move") {
            if (t.size() < 3 || t.size() > 4 || (t.size() == 4 && t[3] != "initial"))
                throw ParseError(r.line, "expected \"move <id> P|O [initial]\"");
            if (a.has_move(t[1])) throw ParseError(r.line, "duplicate move '" + t[1] + "'");
            a.moves.insert(t[1]);
            a.labels[t[1]] = parse_polarity(t[2], r.line);
            if (t.size() == 4) a.initials.insert(t[1]);
        } else if (t[0] == "enable") {
            if (t.size() != 3) throw ParseError(r.line, "expected \"enable <id> <id>\"");
            a.enabling.insert({t[1], t[2]});
        } else {
            throw ParseError(r.line, "unknown directive '" + t[0] + "'");
        }
    }
    return a;
}

std::string serialize_arena(const Arena& a) {
    std::ostringstream out;
    out << "arena " << a.name << "\n";
    for (const auto& m : a.moves) {
        out << "move " << m << " " << polarity_char(a.label(m));
        if (a.is_initial(m)) out << " initial";
        out << "\n";
    }
    for (const auto& [m, n] : a.enabling) out << "enable " << m << " " << n << "\n";
    return out.str();
}

ParsedPlay parse_play(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "play" || t.size() != 2)
        throw ParseError(r.line ? r.line : 1, "expected header \"play <arena-name>\"");
    ParsedPlay p;
    p.arena_name = t[1];
    while (r.next(t)) {
        std::size_t index = p.occurrences.size();
        if (t[0] != std::to_string(index))
            throw ParseError(r.line, "expected consecutive index " + std::to_string(index));
        if (index == 0) {
            if (t.size() != 2) throw ParseError(r.line, "the first move takes no pointer");
            p.occurrences.push_back({t[1], 0});
            continue;
        }
        if (t.size() != 4 || t[2] != "->")
            throw ParseError(r.line, "expected \"<index> <move-id> -> <target-index>\"");
        std::size_t target = 0;
        try {
            target = std::stoul(t[3]);
        } catch (const std::exception&) {
            throw ParseError(r.line, "bad pointer target '" + t[3] + "'");
        }
        p.occurrences.push_back({t[1], target});
    }
    return p;
}

std::string serialize_play(const Play& s, const std::string& arena_name) {
    std::ostringstream out;
    out << "play " << arena_name << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << i << " " << s.move(i);
        if (i > 0) out << " -> " << s.justifier(i);
        out << "\n";
    }
    return out.str();
}

namespace {

ViewMove parse_view_token(const std::string& t, std::size_t line) {
    auto at = t.rfind('@');
    if (at == std::string::npos || at == 0 || at + 1 == t.size())
        throw ParseError(line, "expected \"<move-id>@<view-pos>\", got '" + t + "'");
    std::size_t ptr = 0;
    try {
        ptr = std::stoul(t.substr(at + 1));
    } catch (const std::exception&) {
        throw ParseError(line, "bad view pointer in '" + t + "'");
    }
    return {t.substr(0, at), ptr};
}

}  // namespace

ParsedStrategy parse_strategy(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> t;
    if (!r.next(t) || t[0] != "strategy" || t.size() != 4 ||
        t[3].rfind("bound=", 0) != 0)
        throw ParseError(r.line ? r.line : 1,
                         "expected header \"strategy <arena-name> P|O bound=<k>\"");
    ParsedStrategy s;
    s.arena_name = t[1];
    s.owner = parse_polarity(t[2], r.line);
    try {
        s.bound = std::stoul(t[3].substr(6));
    } catch (const std::exception&) {
        throw ParseError(r.line, "bad bound in '" + t[3] + "'");
    }
    std::map<ViewKey, std::size_t> entry_lines;
    while (r.next(t)) {
        auto arrow = std::find(t.begin(), t.end(), "=>");
        if (arrow == t.end() || arrow + 2 != t.end())
            throw ParseError(r.line, "expected \"<view tokens> => <answer token>\"");
        ViewKey key;
        for (auto it = t.begin(); it != arrow; ++it)
            key.push_back(parse_view_token(*it, r.line));
        if (key.size() + 1 > s.bound)
            throw ParseError(r.line, "entry exceeds the declared bound");
        if (s.entries.count(key)) throw ParseError(r.line, "duplicate view entry");
        s.entries[key] = parse_view_token(*(arrow + 1), r.line);
        entry_lines[key] = r.line;
    }
    for (const auto& [key, answer] : s.entries) {
        if (key.size() < 2) continue;
        ViewKey parent(key.begin(), key.end() - 2);
        auto it = s.entries.find(parent);
        if (it == s.entries.end() || !(it->second == key[key.size() - 2]))
            throw ParseError(entry_lines[key],
                             "entries are not prefix-closed: missing parent view");
    }
    return s;
}

std::string serialize_strategy(const InnocentStrategy& s, const std::string& arena_name) {
    std::ostringstream out;
    out << "strategy " << arena_name << " " << polarity_char(s.owner) << " bound=" << s.bound
        << "\n";
    for (const auto& [key, answer] : s.view_tree) {
        for (const auto& [m, ptr] : key) out << m << "@" << ptr << " ";
        out << "=> " << answer.first << "@" << answer.second << "\n";
    }
    return out.str();
}

}  // namespace hogames
