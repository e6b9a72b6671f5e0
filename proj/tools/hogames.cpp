#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hogames/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Pointer-sequence game calculus: plays, views, backtracking levels, "
                 "trimming, the inactivation gadget and strategy interaction"};
    app.require_subcommand(1);

    std::string arena_path, play_path, sigma_path, tau_path;
    std::string check = "all", format = "dot";
    std::optional<std::string> opt_play, dump_dir;
    std::optional<std::size_t> max_steps;
    std::size_t level = 1, count = 100;
    bool show_activity = false;
    char player = 'P';
    hogames::GenConfig cfg;

    auto* validate = app.add_subcommand("validate", "Validate an arena and optionally a play");
    validate->add_option("--arena", arena_path, "arena file")->required();
    std::string vplay;
    auto* vp = validate->add_option("--play", vplay, "play file");

    auto* analyze = app.add_subcommand("analyze", "Per-move levels and level summary");
    analyze->add_option("--arena", arena_path, "arena file")->required();
    analyze->add_option("--play", play_path, "play file")->required();
    analyze->add_flag("--activity", show_activity, "print per-prefix activity tables");

    auto* trim = app.add_subcommand("trim", "Trim a play at a level/player pair");
    trim->add_option("--arena", arena_path, "arena file")->required();
    trim->add_option("--play", play_path, "play file")->required();
    trim->add_option("--level", level, "backtracking level")->required();
    trim->add_option("--player", player, "P or O")->required()
        ->check(CLI::IsMember({'P', 'O'}));

    auto* gadget = app.add_subcommand("gadget", "Insert the off/on normalization pairs");
    gadget->add_option("--arena", arena_path, "arena file")->required();
    gadget->add_option("--play", play_path, "play file")->required();

    auto* interact = app.add_subcommand("interact", "Play two strategies against each other");
    interact->add_option("--arena", arena_path, "arena file")->required();
    interact->add_option("--sigma", sigma_path, "P strategy file")->required();
    interact->add_option("--tau", tau_path, "O strategy file")->required();
    std::size_t steps_flag = 0;
    auto* ms = interact->add_option("--max-steps", steps_flag, "step limit");

    auto* random = app.add_subcommand("random", "Seeded property-test runs");
    random->add_option("--seed", cfg.seed, "PRNG seed");
    random->add_option("--count", count, "cases per suite");
    random->add_option("--check", check, "all or one suite name");
    random->add_option("--depth-min", cfg.depth_min, "min arena depth");
    random->add_option("--depth-max", cfg.depth_max, "max arena depth");
    random->add_option("--branch-min", cfg.branch_min, "min branching");
    random->add_option("--branch-max", cfg.branch_max, "max branching");
    random->add_option("--length", cfg.length_target, "play length target");
    random->add_option("--propensity", cfg.propensity, "backtracking propensity in [0,1]");
    std::string dump_flag;
    auto* dd = random->add_option("--dump-dir", dump_flag, "where to write counterexamples");

    auto* render = app.add_subcommand("render", "Pointer diagram for a play");
    render->add_option("--arena", arena_path, "arena file")->required();
    render->add_option("--play", play_path, "play file")->required();
    render->add_option("--format", format, "dot or ascii");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hogames::Polarity pol = player == 'P' ? hogames::Polarity::P : hogames::Polarity::O;
    if (*vp) opt_play = vplay;
    if (*ms) max_steps = steps_flag;
    if (*dd) dump_dir = dump_flag;

    if (validate->parsed())
        return hogames::cmd_validate(arena_path, opt_play, std::cout);
    if (analyze->parsed())
        return hogames::cmd_analyze(arena_path, play_path, show_activity, std::cout);
    if (trim->parsed())
        return hogames::cmd_trim(arena_path, play_path, level, pol, std::cout);
    if (gadget->parsed()) return hogames::cmd_gadget(arena_path, play_path, std::cout);
    if (interact->parsed())
        return hogames::cmd_interact(arena_path, sigma_path, tau_path, max_steps, std::cout);
    if (random->parsed())
        return hogames::cmd_random(cfg, count, check, dump_dir, std::cout);
    if (render->parsed())
        return hogames::cmd_render(arena_path, play_path, format, std::cout);
    return 2;
}
