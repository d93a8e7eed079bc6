#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "socioeco/integrate.hpp"

namespace socioeco {

/// Column names for a full-system trajectory: t, x, y1..yn.
std::vector<std::string> full_state_columns(int n_agents);
/// t, z, u.
std::vector<std::string> aggregate_columns();
/// t, v, w.
std::vector<std::string> shifted_columns();

/// Writes one header row and one sample per line, values at 17 significant
/// digits so doubles round-trip exactly. columns.size() must equal dim + 1.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const std::vector<std::string>& columns);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const std::vector<std::string>& columns);

/// The exact digit string used in CSV output (shared with the JSON reports).
std::string format_double(double v);

}  // namespace socioeco
