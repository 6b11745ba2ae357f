#include "ridgepath/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ridgepath/numio.hpp"

namespace ridgepath {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

ModelArtifacts fit_model(const Dataset& d, const std::string& label) {
    ModelArtifacts a;
    a.label = label;
    a.sd = standardize(d);
    a.cm = canonical_decompose(a.sd);
    a.path = dmse_factors(a.cm);
    return a;
}

ModelSummary summarize(const ModelArtifacts& a) {
    ModelSummary s;
    s.label = a.label;
    s.formula = a.sd.names.front() + " ~ ";
    for (std::size_t j = 1; j < a.sd.names.size(); ++j) {
        if (j > 1) s.formula += " + ";
        s.formula += a.sd.names[j];
    }
    s.rms = a.cm.rms_ols;
    s.resid_se = a.cm.resid_se;
    s.ols_betas = a.cm.beta_ols;
    s.ml_betas = beta_at(a.cm, a.path, a.path.m_star);
    s.ols_risks = relative_risk_at(a.cm, a.path, 0.0);
    s.ml_risks = relative_risk_at(a.cm, a.path, a.path.m_star);
    s.d_mse = a.path.d_mse;
    s.m_star = a.path.m_star;
    return s;
}

ComparisonReport compare_models(const ModelArtifacts& first,
                                const ModelArtifacts& second) {
    if (first.cm.p != second.cm.p)
        throw std::invalid_argument("compare_models: models have different p");
    auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    if (first.cm.n != second.cm.n ||
        !close(first.sd.y_mean, second.sd.y_mean) ||
        !close(first.sd.y_sd, second.sd.y_sd))
        throw std::invalid_argument(
            "compare_models: models were fit to different outcomes");

    ComparisonReport r;
    r.first = summarize(first);
    r.second = summarize(second);
    r.first_products = r.first.rms * r.first.ml_risks;
    r.second_products = r.second.rms * r.second.ml_risks;
    for (Eigen::Index j = 0; j < r.first_products.size(); ++j) {
        if (r.second_products[j] < r.first_products[j])
            ++r.second_wins;
        else if (r.second_products[j] > r.first_products[j])
            ++r.second_losses;
        else
            ++r.ties;
    }
    return r;
}

nlohmann::json summary_to_json(const ModelSummary& s) {
    nlohmann::json j;
    j["formula"] = s.formula;
    j["residualMeanSquare"] = s.rms;
    j["residualStdError"] = s.resid_se;
    j["olsBetas"] = to_std(s.ols_betas);
    j["mlBetas"] = to_std(s.ml_betas);
    j["olsRisks"] = to_std(s.ols_risks);
    j["mlRisks"] = to_std(s.ml_risks);
    j["dMSE"] = to_std(s.d_mse);
    j["mStar"] = s.m_star;
    return j;
}

nlohmann::json report_to_json(const ComparisonReport& r) {
    nlohmann::json j;
    j["models"][r.first.label] = summary_to_json(r.first);
    j["models"][r.second.label] = summary_to_json(r.second);
    nlohmann::json cmp;
    cmp["order"] = {r.first.label, r.second.label};
    cmp["riskProducts"][r.first.label] = to_std(r.first_products);
    cmp["riskProducts"][r.second.label] = to_std(r.second_products);
    cmp["wins"][r.first.label] = r.second_losses;
    cmp["wins"][r.second.label] = r.second_wins;
    cmp["ties"] = r.ties;
    j["comparison"] = cmp;
    return j;
}

std::vector<PairBlock> pairs_data(const std::vector<std::string>& names,
                                  const std::vector<Eigen::VectorXd>& columns,
                                  const std::vector<std::string>& selection) {
    if (names.size() != columns.size())
        throw std::invalid_argument("pairs_data: names/columns size mismatch");

    std::vector<Eigen::Index> idx;
    idx.reserve(selection.size());
    for (const std::string& want : selection) {
        auto it = std::find(names.begin(), names.end(), want);
        if (it == names.end())
            throw std::invalid_argument("pairs_data: unknown column: " + want);
        idx.push_back(static_cast<Eigen::Index>(it - names.begin()));
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (columns[static_cast<std::size_t>(idx[a])].size() !=
                columns[static_cast<std::size_t>(idx[b])].size())
                throw std::invalid_argument("pairs_data: unequal column lengths");

    std::vector<PairBlock> blocks;
    int counter = 0;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            PairBlock blk;
            blk.index = ++counter;
            blk.x_name = selection[j];
            blk.y_name = selection[i];
            blk.x = columns[static_cast<std::size_t>(idx[j])];
            blk.y = columns[static_cast<std::size_t>(idx[i])];
            blocks.push_back(std::move(blk));
        }
    }
    return blocks;
}

void write_pairs_csv(const std::string& path,
                     const std::vector<PairBlock>& blocks) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "pairIndex,xName,yName,xValue,yValue\n";
    for (const PairBlock& blk : blocks) {
        for (Eigen::Index r = 0; r < blk.x.size(); ++r) {
            out << blk.index << "," << blk.x_name << "," << blk.y_name << ","
                << format_double(blk.x[r]) << "," << format_double(blk.y[r])
                << "\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ridgepath
