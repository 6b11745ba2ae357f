#include "ridgepath/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ridgepath/numio.hpp"

namespace ridgepath {

double pearson_corr(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pearson_corr: length mismatch");
    if (a.size() < 3) throw std::invalid_argument("pearson_corr: need at least 3 observations");
    if (a == b) return 1.0;  // self-correlation is exactly 1
    const Eigen::ArrayXd da = a.array() - a.mean();
    const Eigen::ArrayXd db = b.array() - b.mean();
    const double na = std::sqrt(da.square().sum());
    const double nb = std::sqrt(db.square().sum());
    if (!(na > 0.0) || !(nb > 0.0)) throw std::invalid_argument("pearson_corr: constant input vector");
    const double r = (da * db).sum() / (na * nb);
    return std::clamp(r, -1.0, 1.0);
}

Eigen::MatrixXd corr_table(const std::vector<Eigen::VectorXd>& columns) {
    const Eigen::Index k = static_cast<Eigen::Index>(columns.size());
    if (k == 0) throw std::invalid_argument("corr_table: no columns");
    Eigen::MatrixXd table = Eigen::MatrixXd::Identity(k, k);
    for (Eigen::Index i = 1; i < k; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            const double r = pearson_corr(columns[static_cast<size_t>(i)], columns[static_cast<size_t>(j)]);
            table(i, j) = r;
            table(j, i) = r;
        }
    }
    return table;
}

std::string corr_table_text(const Eigen::MatrixXd& table, const std::vector<std::string>& names) {
    const Eigen::Index k = table.rows();
    if (static_cast<Eigen::Index>(names.size()) != k) {
        throw std::invalid_argument("corr_table_text: names/table mismatch");
    }
    size_t name_width = 8;
    for (const auto& n : names) name_width = std::max(name_width, n.size());
    const size_t cell = 9;  // " -0.1234"

    std::ostringstream out;
    out << std::string(name_width, ' ');
    for (Eigen::Index j = 0; j < k; ++j) {
        std::string h = names[static_cast<size_t>(j)];
        if (h.size() > cell - 1) h.resize(cell - 1);
        out << std::string(cell - h.size(), ' ') << h;
    }
    out << '\n';
    for (Eigen::Index i = 0; i < k; ++i) {
        const std::string& n = names[static_cast<size_t>(i)];
        out << n << std::string(name_width - n.size(), ' ');
        for (Eigen::Index j = 0; j <= i; ++j) {
            std::string v = format_fixed(table(i, j), 4);
            out << std::string(cell - v.size(), ' ') << v;
        }
        out << '\n';
    }
    return out.str();
}

void write_corr_csv(const std::string& path, const Eigen::MatrixXd& table,
                    const std::vector<std::string>& names) {
    const Eigen::Index k = table.rows();
    if (static_cast<Eigen::Index>(names.size()) != k) {
        throw std::invalid_argument("write_corr_csv: names/table mismatch");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "variable";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (Eigen::Index i = 0; i < k; ++i) {
        out << names[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < k; ++j) {
            out << ',';
            if (j <= i) out << format_double(table(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ridgepath
