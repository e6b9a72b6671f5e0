#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hogames/play.hpp"
#include "hogames/strategy.hpp"

namespace hogames {

/// Parse failure in one of the text formats; `line` is 1-based.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// "arena <name>" header, then "move <id> P|O [initial]" and
/// "enable <id> <id>" lines. "#" starts a comment.
Arena parse_arena(std::istream& in);
std::string serialize_arena(const Arena& a);

/// "play <arena-name>" header, then "<index> <move-id> [-> <target>]" lines
/// with consecutive 0-based indices; the first line has no pointer.
struct ParsedPlay {
    std::string arena_name;
    std::vector<Occurrence> occurrences;

    Play bind(const Arena& a) const { return Play{&a, occurrences}; }
};
ParsedPlay parse_play(std::istream& in);
std::string serialize_play(const Play& s, const std::string& arena_name);

/// "strategy <arena-name> P|O bound=<k>" header, then one line per entry:
/// the view as "<move>@<ptr>" tokens, "=>", and the answer token.
struct ParsedStrategy {
    std::string arena_name;
    Polarity owner = Polarity::P;
    std::size_t bound = 0;
    std::map<ViewKey, ViewMove> entries;

    InnocentStrategy bind(const Arena& a) const {
        return InnocentStrategy{&a, owner, entries, bound};
    }
};
ParsedStrategy parse_strategy(std::istream& in);
std::string serialize_strategy(const InnocentStrategy& s, const std::string& arena_name);

}  // namespace hogames
