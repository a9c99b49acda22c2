#pragma once

// CSV writers. Every file starts with a '#' provenance line carrying the tool
// version and the hash of the configuration that produced it, followed by a
// header row. Angles are written in degrees.

#include <ostream>
#include <string>
#include <vector>

#include "omnihex/simulator.hpp"
#include "omnihex/wrench_analysis.hpp"

namespace omnihex {

const char* version();

/// "# omnihex <version> config=<hash>" plus any extra key=value pairs.
std::string provenance_line(const std::string& config_hash, const std::string& extra = "");

/// t, H (3x4 row-major), T_B, phi_rot, phi_pos, T_e, |tau|, |f|, lambda_1..6,
/// then the feedforward, proportional and derivative wrenches.
std::vector<std::string> sim_log_columns();

void write_sim_log(std::ostream& os, const SimResult& result, const std::string& config_hash);

void write_grid_surface(std::ostream& os, const GridSurface& surface,
                        const std::string& config_hash);

void write_weight_sweep(std::ostream& os, const std::vector<TiltOptimum>& rows,
                        const std::string& config_hash);

void write_scale_sweep(std::ostream& os, const std::vector<ScaleSweepRow>& rows,
                       const std::string& config_hash);

/// One row per thrust-box corner: the six signs and the image point.
/// `metrics` ends up in the provenance line.
void write_vertices(std::ostream& os, const std::vector<ZonotopePoint>& vertices,
                    const std::string& metrics, const std::string& config_hash);

}  // namespace omnihex
