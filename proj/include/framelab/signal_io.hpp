// File formats: signal CSV (`x,re,im`, uniform spacing validated on load)
// and coefficient-table CSV (`n,m,re,im`) with a JSON sidecar carrying the
// frame configuration, kind, window, frame constant and grid.  Doubles are
// printed with 17 significant digits so round trips preserve values exactly.

#pragma once

#include <string>

#include "framelab/frames.hpp"

namespace framelab {

SampledSignal read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const SampledSignal& f);

struct TableBundle {
  CoefficientTable table;
  FrameConfig cfg;
  Grid grid;
  double frame_const = 0.0;
};

void write_table(const std::string& csv_path, const std::string& json_path,
                 const FrameConfig& cfg, const CoefficientTable& table,
                 const Grid& grid);
TableBundle read_table(const std::string& csv_path, const std::string& json_path);

std::string frame_kind_name(FrameKind kind);
FrameKind frame_kind_from_name(const std::string& name);

/// Shortest-exact decimal form of a double (17 significant digits).
std::string format_double(double v);

}  // namespace framelab
