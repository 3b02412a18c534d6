#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "setopt/instance.hpp"

namespace setopt::cli {

/// Exit statuses of the command line tool.
enum Status : int { Ok = 0, HardFailure = 1, Usage = 2 };

/// Runs one command. `args` excludes the program name. Human summaries go to
/// `out`, diagnostics to `err`; machine reports go to the --out path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG 1.1 scatter of a planar instance: one group per image (points, or the
/// polygon outline of a polytope), minimal points enlarged, members filled.
std::string render_svg(const Instance& inst, const std::vector<bool>& member);

/// Header row plus one row per decision; for images outside the plane.
std::string render_csv(const Instance& inst, const std::vector<bool>& member);

}  // namespace setopt::cli
