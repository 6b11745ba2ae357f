#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ridgepath {

// One run's settings. Precedence: CLI flags over JSON config over defaults.
struct RunConfig {
    std::string input;
    std::string y_column;
    std::vector<std::string> x_columns;
    int k{10};
    int steps{101};
    std::string out_dir{"."};
    std::string mode{"both"};  // linear | np | both
    long seed{0};
};

// Throws std::invalid_argument naming the offending field.
void validate_config(const RunConfig& cfg);

// Overlays recognized keys onto base: input, y, x (array of names), k,
// steps, out, mode, seed. Unknown keys are an error.
RunConfig apply_json_config(const nlohmann::json& j, RunConfig base);

// Reads a JSON config file and overlays it.
RunConfig load_json_config(const std::string& path, RunConfig base);

// "a,b,c" -> {"a","b","c"}, trimming blanks around each name.
std::vector<std::string> split_name_list(const std::string& s);

}  // namespace ridgepath
