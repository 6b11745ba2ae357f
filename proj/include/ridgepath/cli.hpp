#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ridgepath/config.hpp"

namespace ridgepath {

// Full driver: parses args (program name excluded), dispatches to the
// subcommand, and maps exceptions to exit codes. 0 on success, 2 for
// configuration and data errors, 1 for anything unexpected.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Stage 1: writes the 2p+1 frame (y, x's, np's) as np_frame.csv, one
// fit_np<j>.json per predictor, and standardization.json.
int cmd_smooth(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Stage 2: writes trace_<model>.csv, trace_<model>_coef.svg,
// trace_<model>_risk.svg per requested model, report.json, and for
// mode=both pairs.csv over the most predictive variables.
int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Correlation tables: corr_x.{csv,txt} and corr_np.{csv,txt}.
int cmd_corr(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Prints where to obtain the benchmark dataset and the expected columns.
int cmd_fetch_instructions(std::ostream& out);

}  // namespace ridgepath
