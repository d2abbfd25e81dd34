#pragma once

#include <string>

#include "sric/integrate.hpp"

namespace sric {

/// CSV with a mandatory header "t,<columns...>" and one row per sample.
/// Values are printed with %.17g, so identical runs are byte-identical.
std::string trajectory_to_csv(const Trajectory& traj);

void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Reads a CSV produced by write_trajectory_csv (or any file with the same
/// header contract). Stepper metadata is not recoverable from CSV; the
/// label is taken from the caller.
Trajectory read_trajectory_csv(const std::string& path, const std::string& equation_label = "");

}  // namespace sric
