#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hogames/commands.hpp"
#include "hogames/formats.hpp"

using namespace hogames;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "hogames-tests";
    fs::create_directories(d);
    return d;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string footer(const std::string& output, const std::string& key) {
    std::istringstream in(output);
    std::string line;
    std::string found;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) found = line.substr(key.size() + 1);
    return found;
}

}  // namespace

TEST_CASE("arena round-trip") {
    Arena a = fixtures::prenex_arena();
    std::istringstream in(serialize_arena(a));
    Arena b = parse_arena(in);
    CHECK(a == b);
}

TEST_CASE("play round-trip") {
    Arena a = fixtures::chain_arena();
    Play s = fixtures::crossing_play(a);
    std::istringstream in(serialize_play(s, a.name));
    ParsedPlay p = parse_play(in);
    CHECK(p.arena_name == a.name);
    CHECK(p.occurrences == s.occurrences);
}

TEST_CASE("strategy round-trip") {
    Arena a = fixtures::prenex_arena();
    InnocentStrategy sigma = expansion_to_strategy(
        fixtures::sigma_tree(), Polarity::P, fixtures::prenex_universe(), a);
    std::istringstream in(serialize_strategy(sigma, a.name));
    ParsedStrategy p = parse_strategy(in);
    CHECK(p.arena_name == a.name);
    CHECK(p.owner == Polarity::P);
    CHECK(p.bound == sigma.bound);
    CHECK(p.entries == sigma.view_tree);
}

TEST_CASE("parse errors carry the offending line") {
    std::istringstream in("arena x\nmove a P\nmove b Q\n");
    try {
        parse_arena(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream bad_play("play x\n0 *\n2 p -> 0\n");
    CHECK_THROWS_AS(parse_play(bad_play), ParseError);
}

TEST_CASE("validate accepts the crossing play") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp =
        write_file("crossing.play", serialize_play(fixtures::crossing_play(a), a.name));
    std::ostringstream out;
    CHECK(cmd_validate(ap, pp, out) == 0);
    CHECK(footer(out.str(), "ARENA_VALID") == "yes");
    CHECK(footer(out.str(), "PLAY_VALID") == "yes");
    CHECK(footer(out.str(), "VISIBLE") == "yes");
}

TEST_CASE("validate flags a forward pointer as a play violation") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp = write_file("forward.play", "play chain\n0 *\n1 p -> 2\n2 o -> 1\n");
    std::ostringstream out;
    CHECK(cmd_validate(ap, pp, out) == 1);
    CHECK(footer(out.str(), "PLAY_VALID") == "no");
    CHECK(out.str().find("forward-pointer") != std::string::npos);
}

TEST_CASE("validate flags an arena without the opening move") {
    std::string ap = write_file("nostar.arena", "arena bad\nmove p P\nmove o O\nenable p o\n");
    std::ostringstream out;
    CHECK(cmd_validate(ap, std::nullopt, out) == 1);
    CHECK(footer(out.str(), "ARENA_VALID") == "no");
}

TEST_CASE("validate reports parse failures as usage errors") {
    std::string ap = write_file("garbled.arena", "arena x\nbogus line here\n");
    std::ostringstream out;
    CHECK(cmd_validate(ap, std::nullopt, out) == 2);
}

TEST_CASE("analyze reports the level profile of the crossing play") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp = write_file(
        "crossing7.play", serialize_play(fixtures::crossing_play(a).prefix(7), a.name));
    std::ostringstream out;
    CHECK(cmd_analyze(ap, pp, true, out) == 0);
    CHECK(footer(out.str(), "PLAY_LEVEL") == "3");
    CHECK(footer(out.str(), "P_LEVEL") == "3");
    CHECK(footer(out.str(), "O_LEVEL") == "0");
    CHECK(footer(out.str(), "REAL_LEVEL") == "0");
    CHECK(footer(out.str(), "PRINCIPAL") == "O");
    CHECK(footer(out.str(), "DEPTH") == "5");
    CHECK(out.str().find("levels: 0 0 0 1 0 2 0 3") != std::string::npos);
    CHECK(out.str().find("prefix 7:") != std::string::npos);
}

TEST_CASE("analyze notes when the play level exceeds depth minus two") {
    Arena a = fixtures::deep_arena();
    std::string ap = write_file("deep.arena", serialize_arena(a));
    std::string pp =
        write_file("deep.play", serialize_play(fixtures::high_level_play(a), a.name));
    std::ostringstream out;
    CHECK(cmd_analyze(ap, pp, false, out) == 0);
    CHECK(footer(out.str(), "PLAY_LEVEL") == "6");
    CHECK(footer(out.str(), "P_LEVEL") == "6");
    CHECK(footer(out.str(), "DEPTH") == "5");
    CHECK(out.str().find("NOTE level exceeds depth-2") != std::string::npos);
}

TEST_CASE("trim removes the interior of the level-3 edge") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp = write_file(
        "crossing7.play", serialize_play(fixtures::crossing_play(a).prefix(7), a.name));
    std::ostringstream out;
    CHECK(cmd_trim(ap, pp, 3, Polarity::P, out) == 0);
    CHECK(footer(out.str(), "REMOVED") == "2");
    CHECK(footer(out.str(), "BEFORE_P_LEVEL") == "3");
    CHECK(footer(out.str(), "AFTER_P_LEVEL") == "1");
}

TEST_CASE("gadget normalizes the deep play") {
    Arena a = fixtures::deep_arena();
    std::string ap = write_file("deep.arena", serialize_arena(a));
    std::string pp =
        write_file("deep.play", serialize_play(fixtures::high_level_play(a), a.name));
    std::ostringstream out;
    CHECK(cmd_gadget(ap, pp, out) == 0);
    CHECK(footer(out.str(), "TARGET") == "3");
    CHECK(footer(out.str(), "NORMALIZED") == "yes");
}

TEST_CASE("interact replays the duel from serialized strategies") {
    Arena a = fixtures::prenex_arena();
    InnocentStrategy sigma = expansion_to_strategy(
        fixtures::sigma_tree(), Polarity::P, fixtures::prenex_universe(), a);
    InnocentStrategy tau = expansion_to_strategy(
        fixtures::tau_tree(), Polarity::O, fixtures::prenex_universe(), a);
    std::string ap = write_file("prenex.arena", serialize_arena(a));
    std::string sp = write_file("sigma.strategy", serialize_strategy(sigma, a.name));
    std::string tp = write_file("tau.strategy", serialize_strategy(tau, a.name));
    std::ostringstream out;
    CHECK(cmd_interact(ap, sp, tp, std::nullopt, out) == 0);
    CHECK(footer(out.str(), "LENGTH") == "20");
    CHECK(footer(out.str(), "STATUS") == "COMPLETE");
}

TEST_CASE("random suites pass and are deterministic per seed") {
    GenConfig cfg;
    cfg.seed = 7;
    std::string dump = scratch_dir().string();
    std::ostringstream first, second;
    CHECK(cmd_random(cfg, 5, "all", dump, first) == 0);
    CHECK(cmd_random(cfg, 5, "all", dump, second) == 0);
    CHECK(first.str() == second.str());
    CHECK(footer(first.str(), "FAILURES") == "0");
    CHECK(footer(first.str(), "SUITES") == "6");

    std::ostringstream bad;
    CHECK(cmd_random(cfg, 5, "nonsense", dump, bad) == 2);
}

TEST_CASE("render emits both formats") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp =
        write_file("crossing.play", serialize_play(fixtures::crossing_play(a), a.name));
    std::ostringstream ascii, dot, bad;
    CHECK(cmd_render(ap, pp, "ascii", ascii) == 0);
    CHECK(footer(ascii.str(), "NODES") == "9");
    CHECK(cmd_render(ap, pp, "dot", dot) == 0);
    CHECK(dot.str().find("digraph play {") != std::string::npos);
    CHECK(cmd_render(ap, pp, "svg", bad) == 2);
}

TEST_CASE("mismatched arena names are usage errors") {
    Arena a = fixtures::chain_arena();
    std::string ap = write_file("chain.arena", serialize_arena(a));
    std::string pp = write_file("other.play", "play other\n0 *\n");
    std::ostringstream out;
    CHECK(cmd_analyze(ap, pp, false, out) == 2);
}
