#pragma once

#include "hopfcm/simulate.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hopfcm {

// t,u,v,w with 17 significant digits; the header uses `names`.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory<double>& tr,
                          const std::array<std::string, 3>& names = {"u", "v", "w"});

// One two-column file per state variable: <stem>_<name>.csv with t,<name>.
std::vector<std::filesystem::path> write_series_csv(const std::filesystem::path& stem, const Trajectory<double>& tr,
                                                    const std::array<std::string, 3>& names = {"u", "v", "w"});

// rho0,dbar rows.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<DisplacementSample<double>>& samples);

// Matplotlib script drawing every CSV in `csv_files` as a 3D orbit.
void write_plot_script(const std::filesystem::path& path, const std::vector<std::filesystem::path>& csv_files,
                       const std::string& title, const std::array<std::string, 3>& names = {"u", "v", "w"});

}  // namespace hopfcm
