#include "ridgepath/dataset.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ridgepath/numio.hpp"

namespace ridgepath {

namespace {

bool is_missing(const std::string& field) {
    return field.empty() || field == "NA" || field == "na" || field == "NaN";
}

void validate_dataset(const Dataset& d, const std::string& path) {
    if (d.p < 1) throw std::runtime_error(path + ": no predictor columns selected");
    if (d.n < d.p + 2) {
        throw std::runtime_error(path + ": only " + std::to_string(d.n) +
                                 " usable rows for p = " + std::to_string(d.p) +
                                 " predictors (need at least p + 2)");
    }
    for (Eigen::Index j = 0; j <= d.p; ++j) {
        const Eigen::VectorXd& col = (j == 0) ? d.y : static_cast<const Eigen::VectorXd&>(d.X.col(j - 1));
        double sd = sample_sd(col);
        if (!(sd > 0.0)) {
            throw std::runtime_error(path + ": column \"" + d.names[static_cast<size_t>(j)] +
                                     "\" has zero variance");
        }
    }
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& y_col,
                 const std::vector<std::string>& x_cols) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file, no header row");
    const std::vector<std::string> header = split_csv_line(line);

    auto column_index = [&](const std::string& name) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw std::runtime_error(path + ": column \"" + name + "\" not found in header");
    };

    std::vector<size_t> indices;
    indices.push_back(column_index(y_col));
    for (const auto& name : x_cols) indices.push_back(column_index(name));

    const size_t ncols = indices.size();
    std::vector<std::vector<double>> cols(ncols);
    long dropped = 0;
    long lineno = 1;
    std::vector<double> row(ncols);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        bool missing = false;
        for (size_t i = 0; i < ncols; ++i) {
            if (indices[i] >= fields.size()) {
                missing = true;  // short row: selected cell absent
                break;
            }
            const std::string& f = fields[indices[i]];
            if (is_missing(f)) {
                missing = true;
                break;
            }
            double v = 0.0;
            if (!try_parse_double(f, v) || !std::isfinite(v)) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": non-numeric value \"" + f + "\" in column \"" +
                                         (indices[i] < header.size() ? header[indices[i]] : "?") +
                                         "\"");
            }
            row[i] = v;
        }
        if (missing) {
            ++dropped;
            continue;
        }
        for (size_t i = 0; i < ncols; ++i) cols[i].push_back(row[i]);
    }

    const Eigen::Index n = static_cast<Eigen::Index>(cols[0].size());
    if (n == 0) throw std::runtime_error(path + ": no usable rows after dropping missing values");

    Dataset d;
    d.names.push_back(y_col);
    d.names.insert(d.names.end(), x_cols.begin(), x_cols.end());
    d.n = n;
    d.p = static_cast<Eigen::Index>(x_cols.size());
    d.y = Eigen::Map<Eigen::VectorXd>(cols[0].data(), n);
    d.X.resize(n, d.p);
    for (Eigen::Index j = 0; j < d.p; ++j) {
        d.X.col(j) = Eigen::Map<Eigen::VectorXd>(cols[static_cast<size_t>(j) + 1].data(), n);
    }
    d.dropped_rows = dropped;
    validate_dataset(d, path);
    return d;
}

void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<Eigen::VectorXd>& columns) {
    if (names.size() != columns.size()) throw std::invalid_argument("write_csv: names/columns mismatch");
    if (columns.empty()) throw std::invalid_argument("write_csv: no columns");
    const Eigen::Index n = columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != n) throw std::invalid_argument("write_csv: ragged columns");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (size_t j = 0; j < names.size(); ++j) {
        if (j) out << ',';
        out << names[j];
    }
    out << '\n';
    for (Eigen::Index i = 0; i < n; ++i) {
        for (size_t j = 0; j < columns.size(); ++j) {
            if (j) out << ',';
            out << format_double(columns[j][i]);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

double sample_mean(const Eigen::VectorXd& v) { return v.mean(); }

double sample_sd(const Eigen::VectorXd& v) {
    if (v.size() < 2) throw std::invalid_argument("sample_sd: need at least 2 values");
    const double m = v.mean();
    return std::sqrt((v.array() - m).square().sum() / static_cast<double>(v.size() - 1));
}

Eigen::VectorXd standardize_vector(const Eigen::VectorXd& v) {
    const double m = sample_mean(v);
    const double s = sample_sd(v);
    if (!(s > 0.0)) throw std::runtime_error("standardize_vector: constant input");
    return (v.array() - m) / s;
}

StandardizedDesign standardize(const Dataset& d) {
    StandardizedDesign sd;
    sd.names = d.names;
    sd.x_means.resize(d.p);
    sd.x_sds.resize(d.p);
    sd.Xs.resize(d.n, d.p);
    for (Eigen::Index j = 0; j < d.p; ++j) {
        sd.x_means[j] = sample_mean(d.X.col(j));
        sd.x_sds[j] = sample_sd(d.X.col(j));
        if (!(sd.x_sds[j] > 0.0)) {
            throw std::runtime_error("standardize: column \"" + d.x_name(j) + "\" has zero variance");
        }
        sd.Xs.col(j) = (d.X.col(j).array() - sd.x_means[j]) / sd.x_sds[j];
    }
    sd.y_mean = sample_mean(d.y);
    sd.y_sd = sample_sd(d.y);
    if (!(sd.y_sd > 0.0)) {
        throw std::runtime_error("standardize: column \"" + d.y_name() + "\" has zero variance");
    }
    sd.ys = (d.y.array() - sd.y_mean) / sd.y_sd;
    return sd;
}

nlohmann::json standardization_json(const StandardizedDesign& sd) {
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back({{"column", sd.names.front()}, {"mean", sd.y_mean}, {"sd", sd.y_sd}});
    for (Eigen::Index j = 0; j < sd.x_means.size(); ++j) {
        arr.push_back({{"column", sd.names[static_cast<size_t>(j) + 1]},
                       {"mean", sd.x_means[j]},
                       {"sd", sd.x_sds[j]}});
    }
    return arr;
}

}  // namespace ridgepath
