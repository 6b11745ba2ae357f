#include "ridgepath/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace ridgepath {

void validate_config(const RunConfig& cfg) {
    if (cfg.input.empty())
        throw std::invalid_argument("config: an input CSV is required (--input)");
    if (cfg.y_column.empty())
        throw std::invalid_argument("config: an outcome column is required (--y)");
    if (cfg.x_columns.empty())
        throw std::invalid_argument(
            "config: at least one predictor column is required (--x)");
    std::set<std::string> seen;
    for (const std::string& name : cfg.x_columns) {
        if (name.empty())
            throw std::invalid_argument("config: empty predictor name in --x");
        if (!seen.insert(name).second)
            throw std::invalid_argument("config: duplicate predictor column: " +
                                        name);
        if (name == cfg.y_column)
            throw std::invalid_argument(
                "config: outcome column repeated among predictors: " + name);
    }
    if (cfg.k < 4)
        throw std::invalid_argument("config: k must be at least 4");
    if (cfg.steps < 2)
        throw std::invalid_argument("config: steps must be at least 2");
    if (cfg.mode != "linear" && cfg.mode != "np" && cfg.mode != "both")
        throw std::invalid_argument("config: mode must be one of linear, np, "
                                    "both, not \"" + cfg.mode + "\"");
    if (cfg.out_dir.empty())
        throw std::invalid_argument("config: output directory must be nonempty");
}

RunConfig apply_json_config(const nlohmann::json& j, RunConfig base) {
    if (!j.is_object())
        throw std::invalid_argument("config: JSON config must be an object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        const nlohmann::json& v = item.value();
        if (key == "input") {
            base.input = v.get<std::string>();
        } else if (key == "y") {
            base.y_column = v.get<std::string>();
        } else if (key == "x") {
            base.x_columns = v.get<std::vector<std::string>>();
        } else if (key == "k") {
            base.k = v.get<int>();
        } else if (key == "steps") {
            base.steps = v.get<int>();
        } else if (key == "out") {
            base.out_dir = v.get<std::string>();
        } else if (key == "mode") {
            base.mode = v.get<std::string>();
        } else if (key == "seed") {
            base.seed = v.get<long>();
        } else {
            throw std::invalid_argument("config: unknown key: " + key);
        }
    }
    return base;
}

RunConfig load_json_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: invalid JSON in " + path + ": " +
                                    e.what());
    }
    return apply_json_config(j, std::move(base));
}

std::vector<std::string> split_name_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&]() {
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

}  // namespace ridgepath
