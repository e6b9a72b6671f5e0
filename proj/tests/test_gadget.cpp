#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "hogames/gadget.hpp"

using namespace hogames;

TEST_CASE("enlarging adds two moves and stays valid") {
    Arena a = fixtures::prenex_arena();
    EnlargedArena e = enlarge_arena(a);
    CHECK(e.arena.moves.size() == a.moves.size() + 2);
    CHECK_FALSE(e.renamed);
    CHECK(validate_arena(e.arena).empty());
    CHECK(e.arena.label(e.on_move) == Polarity::P);
    CHECK(e.arena.label(e.off_move) == Polarity::O);
    CHECK(e.arena.enables(e.on_move, e.off_move));
    CHECK(e.arena.enables(e.off_move, e.on_move));
    CHECK(e.arena.enables("*", e.on_move));
    CHECK(e.arena.enables("x:=t1", e.off_move));
}

TEST_CASE("name collisions get a reserved prefix") {
    Arena a = fixtures::chain_arena();
    a.moves.insert("on");
    a.labels["on"] = Polarity::O;
    a.enabling.insert({"p", "on"});
    EnlargedArena e = enlarge_arena(a);
    CHECK(e.renamed);
    CHECK(e.on_move == "g:on");
    CHECK(validate_arena(e.arena).empty());
}

TEST_CASE("smallest gadget instance") {
    Arena a = fixtures::chain_arena();
    Play s{&a, {{"*", 0}, {"p", 0}, {"o", 1}}};
    GadgetPlay g = apply_gadget(s);
    REQUIRE(g.play.size() == 5);
    CHECK(g.play.move(2) == "off");
    CHECK(g.play.justifier(2) == 1);  // off answers the P-move before it
    CHECK(g.play.move(3) == "on");
    CHECK(g.play.justifier(3) == 2);
    CHECK(g.play.move(4) == "o");
    CHECK(g.play.justifier(4) == 1);
    CHECK(g.base_to_gadget == std::vector<std::size_t>{0, 1, 4});
}

TEST_CASE("a play ending with a P-move gets no trailing pair") {
    Arena a = fixtures::chain_arena();
    Play s{&a, {{"*", 0}, {"p", 0}}};
    GadgetPlay g = apply_gadget(s);
    CHECK(g.play.size() == 2);
}

TEST_CASE("off after a backtracking P-move answers the on before the justifier") {
    Arena a = fixtures::chain_arena();
    Play s = fixtures::crossing_play(a);
    GadgetPlay g = apply_gadget(s);
    CHECK(validate_play(*g.play.arena, g.play).empty());
    CHECK(is_visible(g.play).visible);

    // Base move 5 (the first q) answers base move 2; the off inserted after
    // it points at the on immediately before that justifier.
    std::size_t off_after_5 = g.base_to_gadget[5] + 1;
    CHECK(g.play.move(off_after_5) == "off");
    CHECK(g.play.justifier(off_after_5) == g.base_to_gadget[2] - 1);
    CHECK(g.play.move(g.base_to_gadget[2] - 1) == "on");

    // Base move 1 answers the opening move, so its off points at the P-move
    // itself.
    std::size_t off_after_1 = g.base_to_gadget[1] + 1;
    CHECK(g.play.justifier(off_after_1) == g.base_to_gadget[1]);
}

TEST_CASE("gadget view equations hold on the fixtures") {
    Arena chain = fixtures::chain_arena();
    CHECK(verify_gadget_views(fixtures::crossing_play(chain)));
    CHECK(verify_gadget_views(fixtures::crossing_play_repointed(chain)));
    Play lone{&chain, {{"*", 0}}};
    CHECK(verify_gadget_views(lone));
    Play immediate{&chain, {{"*", 0}, {"p", 0}, {"o", 1}, {"q", 2}, {"r", 3}}};
    CHECK(verify_gadget_views(immediate));
    Arena deep = fixtures::deep_arena();
    CHECK(verify_gadget_views(fixtures::high_level_play(deep)));
}

TEST_CASE("the gadget keeps the O-level of the deep play under depth - 2") {
    Arena a = fixtures::deep_arena();
    Play s = fixtures::high_level_play(a);
    REQUIRE(level_report(s).play_level == 6);
    GadgetPlay g = apply_gadget(s);
    CHECK(level_report(g.play).o_level <= 3);
    CHECK(verify_normalization(s, 5));
    CHECK(verify_normalization(s));
}

TEST_CASE("normalization rejects shallow and infinite arenas") {
    Arena a = fixtures::chain_arena();
    Play s{&a, {{"*", 0}, {"p", 0}, {"o", 1}}};
    CHECK_THROWS_AS(verify_normalization(s, 1), std::invalid_argument);

    Arena cyclic;
    cyclic.name = "cyclic";
    cyclic.moves = {"*", "a", "b"};
    cyclic.labels = {{"*", Polarity::O}, {"a", Polarity::P}, {"b", Polarity::O}};
    cyclic.enabling = {{"*", "a"}, {"a", "b"}, {"b", "a"}};
    cyclic.initials = {"*"};
    Play lone{&cyclic, {{"*", 0}}};
    CHECK_THROWS_AS(verify_normalization(lone), std::invalid_argument);
}

TEST_CASE("stripping the gadget restores the play") {
    Arena a = fixtures::deep_arena();
    Play s = fixtures::high_level_play(a);
    GadgetPlay g = apply_gadget(s);
    Play back = strip_gadget(g, a);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(back.move(i) == s.move(i));
        if (i > 0) CHECK(back.justifier(i) == s.justifier(i));
    }
}

TEST_CASE("apply_gadget rejects non-visible plays") {
    Arena a = fixtures::chain_arena();
    Play s{&a, {{"*", 0}, {"p", 0}, {"o", 1}, {"p", 0}, {"o", 1}}};
    CHECK_THROWS_AS(apply_gadget(s), std::invalid_argument);
}
