#include "ridgepath/trace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ridgepath/numio.hpp"

namespace ridgepath {

TraceSeries build_traces(const CanonicalModel& cm, const ShrinkagePath& path,
                         int steps) {
    if (steps < 2) throw std::invalid_argument("build_traces: steps must be >= 2");

    double p = static_cast<double>(path.p);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i < steps; ++i)
        grid.push_back(p * (static_cast<double>(i) / (steps - 1)));
    auto pos = std::lower_bound(grid.begin(), grid.end(), path.m_star);
    if (pos == grid.end() || *pos != path.m_star)
        grid.insert(pos, path.m_star);

    TraceSeries t;
    t.p = path.p;
    t.m_star = path.m_star;
    t.m_grid = grid;
    Eigen::Index rows = static_cast<Eigen::Index>(grid.size());
    t.delta.resize(rows, path.p);
    t.coef.resize(rows, path.p);
    t.risk.resize(rows, path.p);
    for (Eigen::Index r = 0; r < rows; ++r) {
        double m = grid[static_cast<std::size_t>(r)];
        t.delta.row(r) = delta_at(path, m).transpose();
        t.coef.row(r) = beta_at(cm, path, m).transpose();
        t.risk.row(r) = relative_risk_at(cm, path, m).transpose();
    }
    return t;
}

void write_trace_csv(const TraceSeries& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    out << "m";
    for (int j = 1; j <= t.p; ++j) out << ",delta_" << j;
    for (int j = 1; j <= t.p; ++j) out << ",beta_" << j;
    for (int j = 1; j <= t.p; ++j) out << ",risk_" << j;
    out << "\n";
    for (std::size_t r = 0; r < t.m_grid.size(); ++r) {
        Eigen::Index row = static_cast<Eigen::Index>(r);
        out << format_double(t.m_grid[r]);
        for (int j = 0; j < t.p; ++j) out << "," << format_double(t.delta(row, j));
        for (int j = 0; j < t.p; ++j) out << "," << format_double(t.coef(row, j));
        for (int j = 0; j < t.p; ++j) out << "," << format_double(t.risk(row, j));
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

TraceSeries read_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("trace csv is empty: " + path);
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 4 || (header.size() - 1) % 3 != 0 || header[0] != "m")
        throw std::runtime_error("trace csv has an unexpected header: " + path);
    int p = static_cast<int>((header.size() - 1) / 3);
    for (int j = 0; j < p; ++j) {
        if (header[static_cast<std::size_t>(1 + j)] != "delta_" + std::to_string(j + 1) ||
            header[static_cast<std::size_t>(1 + p + j)] != "beta_" + std::to_string(j + 1) ||
            header[static_cast<std::size_t>(1 + 2 * p + j)] != "risk_" + std::to_string(j + 1))
            throw std::runtime_error("trace csv has an unexpected header: " + path);
    }

    TraceSeries t;
    t.p = p;
    std::vector<double> m_values;
    std::vector<double> flat;  // delta rows then beta rows then risk, per line
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("trace csv row " + std::to_string(lineno) +
                                     " has wrong cell count: " + path);
        for (const std::string& cell : cells) flat.push_back(parse_double(cell));
        m_values.push_back(flat[flat.size() - header.size()]);
    }
    std::size_t rows = m_values.size();
    t.m_grid = m_values;
    t.delta.resize(static_cast<Eigen::Index>(rows), p);
    t.coef.resize(static_cast<Eigen::Index>(rows), p);
    t.risk.resize(static_cast<Eigen::Index>(rows), p);
    for (std::size_t r = 0; r < rows; ++r) {
        const double* base = flat.data() + r * header.size();
        for (int j = 0; j < p; ++j) {
            t.delta(static_cast<Eigen::Index>(r), j) = base[1 + j];
            t.coef(static_cast<Eigen::Index>(r), j) = base[1 + p + j];
            t.risk(static_cast<Eigen::Index>(r), j) = base[1 + 2 * p + j];
        }
    }
    return t;
}

}  // namespace ridgepath
