#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hogames/checks.hpp"

namespace hogames {

/// All commands print a human report followed by one KEY=VALUE footer block
/// and return the process exit code: 0 success, 1 validation or property
/// failure, 2 usage or parse error.

int cmd_validate(const std::string& arena_path, const std::optional<std::string>& play_path,
                 std::ostream& out);

int cmd_analyze(const std::string& arena_path, const std::string& play_path,
                bool show_activity, std::ostream& out);

int cmd_trim(const std::string& arena_path, const std::string& play_path, std::size_t level,
             Polarity player, std::ostream& out);

int cmd_gadget(const std::string& arena_path, const std::string& play_path,
               std::ostream& out);

int cmd_interact(const std::string& arena_path, const std::string& sigma_path,
                 const std::string& tau_path, std::optional<std::size_t> max_steps,
                 std::ostream& out);

int cmd_random(const GenConfig& cfg, std::size_t count, const std::string& check,
               const std::optional<std::string>& dump_dir, std::ostream& out);

int cmd_render(const std::string& arena_path, const std::string& play_path,
               const std::string& format, std::ostream& out);

}  // namespace hogames
