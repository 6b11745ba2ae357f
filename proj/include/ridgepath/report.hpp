#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ridgepath/dataset.hpp"
#include "ridgepath/trace.hpp"

namespace ridgepath {

// Everything Stage 2 derives from one dataset, kept together so summaries,
// traces, and reports draw from the same fit.
struct ModelArtifacts {
    std::string label;
    StandardizedDesign sd;
    CanonicalModel cm;
    ShrinkagePath path;
};

ModelArtifacts fit_model(const Dataset& d, const std::string& label);

// Per-model comparison block: the eight table rows plus the formula.
struct ModelSummary {
    std::string label;
    std::string formula;         // "y ~ x1 + x2 + ..."
    double rms{0};               // residual mean square, standardized scale
    double resid_se{0};
    Eigen::VectorXd ols_betas;   // m = 0, standardized
    Eigen::VectorXd ml_betas;    // m = mStar
    Eigen::VectorXd ols_risks;   // m = 0
    Eigen::VectorXd ml_risks;    // m = mStar
    Eigen::VectorXd d_mse;
    double m_star{0};
};

ModelSummary summarize(const ModelArtifacts& a);

// Cross-model comparison. Risk products are rms * mlRisk_j per variable; a
// strict product win for one model on a variable is a loss for the other,
// and equal products count as a tie, so wins + losses + ties = p.
struct ComparisonReport {
    ModelSummary first;
    ModelSummary second;
    Eigen::VectorXd first_products;
    Eigen::VectorXd second_products;
    int second_wins{0};
    int second_losses{0};
    int ties{0};
};

// Requires equal p and the same underlying outcome (n, mean, sd).
ComparisonReport compare_models(const ModelArtifacts& first,
                                const ModelArtifacts& second);

nlohmann::json summary_to_json(const ModelSummary& s);
nlohmann::json report_to_json(const ComparisonReport& r);

// One scatter block per unordered pair of selected columns, lower-triangle
// order: (s1,s0), (s2,s0), (s2,s1), ... Row order inside a block is the
// input row order. pairIndex starts at 1.
struct PairBlock {
    int index{0};
    std::string x_name;
    std::string y_name;
    Eigen::VectorXd x;
    Eigen::VectorXd y;
};

std::vector<PairBlock> pairs_data(const std::vector<std::string>& names,
                                  const std::vector<Eigen::VectorXd>& columns,
                                  const std::vector<std::string>& selection);

// Long format: pairIndex,xName,yName,xValue,yValue.
void write_pairs_csv(const std::string& path,
                     const std::vector<PairBlock>& blocks);

}  // namespace ridgepath
