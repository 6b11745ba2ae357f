// Acceptance gate. Prints one PASS / FAIL / SKIP line per criterion and
// exits nonzero when anything fails. Criteria 1-6 verify the pipeline
// against published benchmark values for the archived EPA air-quality
// dataset (doi:10.5061/dryad.63xsj3v58) and are skipped with a pointer to
// `ridgepath fetch-instructions` when the CSV is not available; criteria
// 7-13 run on synthetic data alone.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ridgepath/correlation.hpp"
#include "ridgepath/dataset.hpp"
#include "ridgepath/report.hpp"
#include "ridgepath/smoother.hpp"
#include "ridgepath/svg.hpp"
#include "support.hpp"

using namespace ridgepath;

namespace {

// Benchmark reference values for the archived EPA dataset: correlation
// blocks and the linear / np model summaries (OLS and shrunken).
namespace bench {

constexpr const char* kYColumn = "AACRmort";
const std::vector<std::string> kXColumns = {"Avoc",   "Bvoc",     "PREMdeath",
                                            "ASmoke", "ChildPOV", "IncomIEQ"};

// cor(y, x_j), then the strict lower triangle of cor(x_i, x_j) by rows.
constexpr double kXBlockYRow[6] = {0.2489, 0.4589, 0.6421,
                                   0.6047, 0.5524, 0.3040};
constexpr double kXBlockLower[15] = {
    0.58472,                                // x2 vs x1
    0.08896, 0.4217,                        // x3 vs x1,x2
    0.32707, 0.4622, 0.67611,               // x4
    0.11336, 0.4884, 0.69932, 0.6605,       // x5
    0.13933, 0.4163, 0.41804, 0.3800, 0.5708};  // x6

constexpr double kNpBlockYRow[6] = {0.3888, 0.4809, 0.6769,
                                    0.6156, 0.5656, 0.3379};
constexpr double kNpBlockLower[15] = {
    0.5991,
    0.3077, 0.5117,
    0.5002, 0.5485, 0.6621,
    0.3029, 0.5192, 0.7348, 0.6607,
    0.1884, 0.4378, 0.4389, 0.3775, 0.5775};

constexpr double kLinRms = 0.506395;
constexpr double kLinResidSE = 0.711615;
constexpr double kLinOlsBetas[6] = {0.060975, 0.136652, 0.389470,
                                    0.216750, 0.099290, -0.063270};
constexpr double kLinMlBetas[6] = {0.064848, 0.134431, 0.384555,
                                   0.218586, 0.101132, -0.062424};
constexpr double kLinOlsRisks[6] = {0.000613, 0.000745, 0.000821,
                                    0.000822, 0.000968, 0.000519};
constexpr double kLinMlRisks[6] = {0.000292, 0.000428, 0.000756,
                                   0.000380, 0.000524, 0.000488};
constexpr double kLinDmse[6] = {0.9996, 0.9413, 0.9964,
                                0.9429, 0.9728, 0.003282};

constexpr double kNpRms = 0.479143;
constexpr double kNpResidSE = 0.692202;
constexpr double kNpOlsBetas[6] = {0.098704, 0.056765, 0.451541,
                                   0.214582, 0.035727, -0.005387};
constexpr double kNpMlBetas[6] = {0.103079, 0.056651, 0.443230,
                                  0.221146, 0.034597, -0.006164};
constexpr double kNpOlsRisks[6] = {0.000590, 0.000715, 0.000852,
                                   0.000815, 0.000996, 0.000533};
constexpr double kNpMlRisks[6] = {0.000380, 0.000559, 0.000911,
                                  0.000790, 0.000939, 0.000453};
constexpr double kNpDmse[6] = {0.9997, 0.4332, 0.9961,
                               0.8721, 0.9359, 0.9882};
constexpr double kNpMStar = 0.775;

}  // namespace bench

struct Outcome {
    std::string status;  // PASS | FAIL | SKIP
    std::string detail;
};

Outcome pass(const std::string& detail) { return {"PASS", detail}; }
Outcome fail(const std::string& detail) { return {"FAIL", detail}; }
Outcome skip(const std::string& detail) { return {"SKIP", detail}; }

std::string root() { return testsupport::repo_root().string(); }

std::string dryad_path() {
    const char* env = std::getenv("RIDGEPATH_DRYAD_CSV");
    if (env != nullptr && *env != '\0') return env;
    return root() + "/data/dryad_epa_pm.csv";
}

bool have_dryad() { return std::filesystem::exists(dryad_path()); }

Outcome skip_no_dryad() {
    return skip(
        "benchmark CSV not found at " + dryad_path() +
        " (set RIDGEPATH_DRYAD_CSV; see `ridgepath fetch-instructions`)");
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

double max_abs_diff(const Eigen::VectorXd& got, const double* ref) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - ref[i]));
    return worst;
}

// Loads once and caches: every benchmark criterion draws on the same fits.
struct BenchModels {
    Dataset d;
    ModelArtifacts linear;
    Dataset dnp;
    ModelArtifacts np;
};

const BenchModels& bench_models() {
    static BenchModels m = [] {
        BenchModels b;
        b.d = load_csv(dryad_path(), bench::kYColumn, bench::kXColumns);
        b.linear = fit_model(b.d, "linear");
        b.dnp = b.d;
        b.dnp.names = {b.d.y_name()};
        for (int j = 0; j < 6; ++j)
            b.dnp.names.push_back("np" + std::to_string(j + 1));
        b.dnp.X = np_transform(b.d);
        b.np = fit_model(b.dnp, "np");
        return b;
    }();
    return m;
}

Outcome c1_x_correlations() {
    if (!have_dryad()) return skip_no_dryad();
    auto t0 = std::chrono::steady_clock::now();
    Dataset d = load_csv(dryad_path(), bench::kYColumn, bench::kXColumns);
    std::vector<Eigen::VectorXd> cols = {d.y};
    for (int j = 0; j < 6; ++j) cols.push_back(d.X.col(j));
    Eigen::MatrixXd t = corr_table(cols);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

    double worst = 0.0;
    for (int j = 0; j < 6; ++j)
        worst = std::max(worst,
                         std::abs(t(j + 1, 0) - bench::kXBlockYRow[j]));
    int k = 0;
    for (int i = 2; i <= 6; ++i)
        for (int j = 1; j < i; ++j)
            worst = std::max(worst,
                             std::abs(t(i, j) - bench::kXBlockLower[k++]));

    if (worst > 5e-4)
        return fail("x-block correlation off by " + fmt(worst) +
                    " (limit 5e-4)");
    if (secs >= 1.0)
        return fail("correlation pass took " + fmt(secs) + " s (limit 1 s)");
    return pass("21 correlations within 5e-4 in " + fmt(secs) + " s");
}

Outcome c2_linear_ols() {
    if (!have_dryad()) return skip_no_dryad();
    const ModelArtifacts& a = bench_models().linear;
    double beta_err = max_abs_diff(a.cm.beta_ols, bench::kLinOlsBetas);
    double se_err = std::abs(a.cm.resid_se - bench::kLinResidSE);
    double rms_err = std::abs(a.cm.rms_ols - bench::kLinRms);
    if (beta_err > 1e-4) return fail("OLS beta off by " + fmt(beta_err));
    if (se_err > 1e-4) return fail("residual SE off by " + fmt(se_err));
    if (rms_err > 1e-4) return fail("residual mean square off by " + fmt(rms_err));
    return pass("OLS betas, residual SE, and mean square within 1e-4");
}

Outcome c3_linear_ols_risks() {
    if (!have_dryad()) return skip_no_dryad();
    const ModelArtifacts& a = bench_models().linear;
    Eigen::VectorXd risks = relative_risk_at(a.cm, a.path, 0.0);
    double err = max_abs_diff(risks, bench::kLinOlsRisks);
    if (err > 5e-5) return fail("OLS risk off by " + fmt(err) + " (limit 5e-5)");
    return pass("OLS relative risks within 5e-5");
}

Outcome c4_linear_shrunken() {
    if (!have_dryad()) return skip_no_dryad();
    const ModelArtifacts& a = bench_models().linear;
    double dmse_err = max_abs_diff(a.path.d_mse, bench::kLinDmse);
    if (dmse_err > 1e-3) return fail("dMSE off by " + fmt(dmse_err));

    Eigen::VectorXd ml = beta_at(a.cm, a.path, a.path.m_star);
    double beta_err = max_abs_diff(ml, bench::kLinMlBetas);
    if (beta_err > 2e-3) return fail("shrunken beta off by " + fmt(beta_err));

    Eigen::VectorXd risks = relative_risk_at(a.cm, a.path, a.path.m_star);
    for (int j = 0; j < 6; ++j) {
        double rel = std::abs(risks[j] - bench::kLinMlRisks[j]) /
                     bench::kLinMlRisks[j];
        if (rel > 0.20)
            return fail("shrunken risk " + std::to_string(j + 1) + " off by " +
                        fmt(100 * rel) + "% (limit 20%)");
    }
    return pass("dMSE within 1e-3, shrunken betas within 2e-3, risks within 20%");
}

Outcome c5_np_model() {
    if (!have_dryad()) return skip_no_dryad();
    const BenchModels& b = bench_models();
    const double tol = 0.02;

    // np-block correlations.
    std::vector<Eigen::VectorXd> cols = {b.dnp.y};
    for (int j = 0; j < 6; ++j) cols.push_back(b.dnp.X.col(j));
    Eigen::MatrixXd t = corr_table(cols);
    double worst = 0.0;
    for (int j = 0; j < 6; ++j)
        worst = std::max(worst,
                         std::abs(t(j + 1, 0) - bench::kNpBlockYRow[j]));
    int k = 0;
    for (int i = 2; i <= 6; ++i)
        for (int j = 1; j < i; ++j)
            worst = std::max(worst,
                             std::abs(t(i, j) - bench::kNpBlockLower[k++]));
    if (worst > tol) return fail("np correlation off by " + fmt(worst));

    const ModelArtifacts& a = b.np;
    if (std::abs(a.cm.rms_ols - bench::kNpRms) > tol)
        return fail("np residual mean square off by " +
                    fmt(std::abs(a.cm.rms_ols - bench::kNpRms)));
    if (std::abs(a.cm.resid_se - bench::kNpResidSE) > tol)
        return fail("np residual SE off");
    double err = max_abs_diff(a.cm.beta_ols, bench::kNpOlsBetas);
    if (err > tol) return fail("np OLS beta off by " + fmt(err));
    err = max_abs_diff(beta_at(a.cm, a.path, a.path.m_star),
                       bench::kNpMlBetas);
    if (err > tol) return fail("np shrunken beta off by " + fmt(err));
    err = max_abs_diff(relative_risk_at(a.cm, a.path, 0.0),
                       bench::kNpOlsRisks);
    if (err > tol) return fail("np OLS risk off by " + fmt(err));
    err = max_abs_diff(relative_risk_at(a.cm, a.path, a.path.m_star),
                       bench::kNpMlRisks);
    if (err > tol) return fail("np shrunken risk off by " + fmt(err));
    err = max_abs_diff(a.path.d_mse, bench::kNpDmse);
    if (err > tol) return fail("np dMSE off by " + fmt(err));
    if (std::abs(a.path.m_star - bench::kNpMStar) > tol)
        return fail("np mStar " + fmt(a.path.m_star) + " vs " +
                    fmt(bench::kNpMStar));
    return pass("np correlations, summaries, and mStar within 0.02");
}

Outcome c6_np_wins() {
    if (!have_dryad()) return skip_no_dryad();
    const BenchModels& b = bench_models();
    ComparisonReport r = compare_models(b.linear, b.np);
    if (r.second_wins < 4)
        return fail("np risk product wins on only " +
                    std::to_string(r.second_wins) + " of 6 variables");
    if (!(b.np.cm.resid_se < b.linear.cm.resid_se))
        return fail("np residual SE is not below the linear one");
    return pass("np wins " + std::to_string(r.second_wins) +
                " of 6 risk products and lowers the residual SE");
}

Outcome c7_trace_identity() {
    testsupport::Rng rng(700);
    for (int trial = 0; trial < 1000; ++trial) {
        int p = 1 + static_cast<int>(rng.uniform_int(0, 9));
        ShrinkagePath path;
        path.p = p;
        path.d_mse = Eigen::VectorXd(p);
        for (int i = 0; i < p; ++i) path.d_mse[i] = rng.uniform();
        path.m_star = p - path.d_mse.sum();

        Eigen::VectorXd at0 = delta_at(path, 0.0);
        Eigen::VectorXd atp = delta_at(path, static_cast<double>(p));
        if (!(at0.array() == 1.0).all())
            return fail("delta(0) is not exactly all ones");
        if (!(atp.array() == 0.0).all())
            return fail("delta(p) is not exactly zero");

        for (int k = 0; k < 100; ++k) {
            double m = rng.uniform(0.0, static_cast<double>(p));
            double gap = std::abs(delta_at(path, m).sum() - (p - m));
            if (gap >= 1e-12)
                return fail("trace identity violated by " + fmt(gap) +
                            " at p=" + std::to_string(p));
        }
    }
    return pass("sum(delta) = p - m within 1e-12 on 1000 paths x 100 extents");
}

Outcome c8_dmse_optimality() {
    testsupport::Rng rng(800);
    for (int trial = 0; trial < 100; ++trial) {
        int p = 1 + static_cast<int>(rng.uniform_int(0, 5));
        CanonicalModel cm;
        cm.p = p;
        cm.n = 50;
        cm.V = Eigen::MatrixXd::Identity(p, p);
        cm.lambda_eig = Eigen::VectorXd(p);
        cm.c = Eigen::VectorXd(p);
        for (int i = 0; i < p; ++i) {
            cm.lambda_eig[i] = std::pow(10.0, rng.uniform(-2.0, 2.0));
            cm.c[i] = rng.normal();
        }
        cm.beta_ols = cm.c;
        cm.sigma2 = std::pow(10.0, rng.uniform(-2.0, 1.0));
        ShrinkagePath path = dmse_factors(cm);

        for (int i = 0; i < p; ++i) {
            double lambda = cm.lambda_eig[i], c = cm.c[i];
            auto risk = [&](double del) {
                return del * del * cm.sigma2 / lambda +
                       (1 - del) * (1 - del) * c * c;
            };
            double best = 0.0, best_risk = risk(0.0);
            for (int g = 1; g <= 1000; ++g) {
                double del = g / 1000.0;
                if (risk(del) < best_risk) {
                    best_risk = risk(del);
                    best = del;
                }
            }
            if (std::abs(path.d_mse[i] - best) > 0.001)
                return fail("dMSE misses the grid optimum by " +
                            fmt(std::abs(path.d_mse[i] - best)));
        }
    }
    return pass("componentwise dMSE attains the 1001-point risk minimum on "
                "100 instances");
}

Dataset random_dataset(testsupport::Rng& rng, int n, int p) {
    Dataset d;
    d.names.push_back("y");
    for (int j = 0; j < p; ++j) d.names.push_back("x" + std::to_string(j + 1));
    d.n = n;
    d.p = p;
    d.X = rng.normal_matrix(n, p);
    d.y = d.X * rng.normal_vector(p) + 0.6 * rng.normal_vector(n);
    return d;
}

Outcome c9_ols_oracle() {
    testsupport::Rng rng(900);
    for (int trial = 0; trial < 100; ++trial) {
        int p = 1 + static_cast<int>(rng.uniform_int(0, 7));
        int n = p + 3 + static_cast<int>(rng.uniform_int(0, 197 - p));
        Dataset d = random_dataset(rng, n, p);
        StandardizedDesign sd = standardize(d);
        CanonicalModel cm = canonical_decompose(sd);
        ShrinkagePath path = dmse_factors(cm);

        Eigen::MatrixXd G = sd.Xs.transpose() * sd.Xs;
        Eigen::VectorXd oracle = G.ldlt().solve(sd.Xs.transpose() * sd.ys);
        double scale = std::max(1.0, oracle.cwiseAbs().maxCoeff());
        double beta_err =
            (beta_at(cm, path, 0.0) - oracle).cwiseAbs().maxCoeff() / scale;
        if (beta_err > 1e-8)
            return fail("OLS beta off by " + fmt(beta_err) + " relative");

        Eigen::VectorXd diag = G.inverse().diagonal();
        double risk_err = (relative_risk_at(cm, path, 0.0) - diag)
                              .cwiseAbs()
                              .maxCoeff() /
                          std::max(1.0, diag.maxCoeff());
        if (risk_err > 1e-8)
            return fail("risk(0) off the inverse Gram diagonal by " +
                        fmt(risk_err));
    }
    return pass("beta(0) and risk(0) match dense oracles to 1e-8 on 100 "
                "instances");
}

Outcome c10_pivot_invariant() {
    testsupport::Rng rng(1000);
    for (int trial = 0; trial < 25; ++trial) {
        int p = 2 + static_cast<int>(rng.uniform_int(0, 4));
        int n = 40 + static_cast<int>(rng.uniform_int(0, 60));
        Dataset d = random_dataset(rng, n, p);
        // Arbitrary units so the pivot is not trivially centered.
        d.y = (d.y.array() * rng.uniform(0.5, 30.0) + rng.uniform(-50.0, 50.0))
                  .matrix();
        for (int j = 0; j < p; ++j)
            d.X.col(j) = (d.X.col(j).array() * rng.uniform(0.1, 20.0) +
                          rng.uniform(-10.0, 10.0))
                             .matrix();
        StandardizedDesign sd = standardize(d);
        CanonicalModel cm = canonical_decompose(sd);
        ShrinkagePath path = dmse_factors(cm);
        TraceSeries t = build_traces(cm, path, 101);

        Eigen::VectorXd x_means = d.X.colwise().mean();
        double y_mean = d.y.mean();
        for (double m : t.m_grid) {
            PathPoint pt = path_point_at(cm, path, sd, m);
            double at_means =
                pt.intercept + x_means.dot(destandardize(pt.beta, sd));
            double gap = std::abs(at_means - y_mean) /
                         std::max(1.0, std::abs(y_mean));
            if (gap > 1e-10)
                return fail("fit at the means misses ybar by " + fmt(gap));
        }
    }
    return pass("intercept pivots through the sample means to 1e-10 across "
                "the m-grid");
}

Outcome c11_smoother_suite() {
    auto t0 = std::chrono::steady_clock::now();
    testsupport::Rng rng(1100);

    // Linear reproduction within the penalty null space.
    Eigen::VectorXd x(150);
    for (int i = 0; i < 150; ++i) x[i] = std::exp(rng.normal());
    Eigen::VectorXd lin = (4.0 - 2.5 * x.array()).matrix();
    SplineBasis b = build_basis(x, 10);
    for (double lambda : {0.0, 1.0, 1e6}) {
        SmootherFit fit = fit_penalized(lin, x, b, lambda);
        if ((fit.fitted - lin).cwiseAbs().maxCoeff() > 1e-8)
            return fail("linear signal distorted at lambda " + fmt(lambda));
    }

    // edf -> 2 under extreme smoothing.
    Eigen::VectorXd noisy(150);
    for (int i = 0; i < 150; ++i) noisy[i] = std::sin(x[i]) + rng.normal();
    SmootherFit hard = fit_penalized(noisy, x, b, 1e12);
    if (std::abs(hard.edf - 2.0) > 0.05)
        return fail("edf at extreme lambda is " + fmt(hard.edf));

    // Dense hat-matrix oracle on n = 20.
    Eigen::VectorXd xs(20), ys(20);
    for (int i = 0; i < 20; ++i) {
        xs[i] = i / 19.0;
        ys[i] = rng.normal();
    }
    SplineBasis bs = build_basis(xs, 6);
    double lambda = 0.41;
    Eigen::MatrixXd B = design_matrix(bs, xs);
    Eigen::MatrixXd A =
        B.transpose() * B + lambda * difference_penalty(bs);
    Eigen::MatrixXd H = B * A.inverse() * B.transpose();
    if ((H - H.transpose()).cwiseAbs().maxCoeff() > 1e-8)
        return fail("hat matrix is not symmetric");
    SmootherFit sf = fit_penalized(ys, xs, bs, lambda);
    if (std::abs(sf.edf - H.trace()) > 1e-8)
        return fail("edf disagrees with the hat-matrix trace");

    // GCV recovers a sine curve, fixed seed.
    int n = 500;
    Eigen::VectorXd sx(n), truth(n), sy(n);
    for (int i = 0; i < n; ++i) {
        sx[i] = rng.uniform();
        truth[i] = std::sin(2.0 * 3.14159265358979 * sx[i]);
        sy[i] = truth[i] + 0.3 * rng.normal();
    }
    SmootherFit sel = gcv_select(sy, sx, build_basis(sx, 10));
    double r = (sel.fitted.array() - sel.fitted.mean())
                   .cwiseProduct(truth.array() - truth.mean())
                   .sum() /
               std::sqrt((sel.fitted.array() - sel.fitted.mean())
                             .square()
                             .sum() *
                         (truth.array() - truth.mean()).square().sum());
    if (r <= 0.95) return fail("GCV sine recovery correlation " + fmt(r));

    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= 10.0)
        return fail("smoother suite took " + fmt(secs) + " s (limit 10 s)");
    return pass("linear null space, edf limits, hat oracle, GCV recovery in " +
                fmt(secs) + " s");
}

int run_cli_process(const std::string& env_prefix, const std::string& args) {
    const char* cli = std::getenv("RIDGEPATH_CLI");
    std::string bin =
        cli != nullptr && *cli != '\0' ? cli : root() + "/build/ridgepath";
    std::string cmd = env_prefix + " '" + bin + "' " + args +
                      " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

bool dirs_identical(const std::filesystem::path& a,
                    const std::filesystem::path& b, std::string& why) {
    std::map<std::string, std::filesystem::path> files_a, files_b;
    for (const auto& e : std::filesystem::recursive_directory_iterator(a))
        if (e.is_regular_file())
            files_a[e.path().lexically_relative(a).string()] = e.path();
    for (const auto& e : std::filesystem::recursive_directory_iterator(b))
        if (e.is_regular_file())
            files_b[e.path().lexically_relative(b).string()] = e.path();
    if (files_a.size() != files_b.size()) {
        why = "different artifact counts";
        return false;
    }
    for (const auto& [rel, path] : files_a) {
        auto it = files_b.find(rel);
        if (it == files_b.end()) {
            why = rel + " missing from the second run";
            return false;
        }
        if (testsupport::read_file(path) != testsupport::read_file(it->second)) {
            why = rel + " differs between runs";
            return false;
        }
    }
    return true;
}

Outcome c12_determinism() {
    std::string input = root() + "/data/synthetic.csv";
    if (!std::filesystem::exists(input))
        return fail("synthetic fixture missing at " + input);

    auto run_into = [&](const std::string& env_prefix,
                        const std::filesystem::path& dir) {
        std::string common = "--input '" + input +
                             "' --y y --x x1,x2,x3,x4 --out '" +
                             dir.string() + "'";
        if (run_cli_process(env_prefix, "fit " + common) != 0) return false;
        if (run_cli_process(env_prefix, "smooth " + common) != 0) return false;
        if (run_cli_process(env_prefix, "corr " + common) != 0) return false;
        return true;
    };

    std::filesystem::path a = testsupport::temp_dir("acc12a");
    std::filesystem::path b = testsupport::temp_dir("acc12b");
    std::filesystem::path c = testsupport::temp_dir("acc12c");
    if (!run_into("env RIDGEPATH_THREADS=1", a))
        return fail("CLI run (threads=1) failed");
    if (!run_into("env RIDGEPATH_THREADS=1", b))
        return fail("repeat CLI run (threads=1) failed");
    if (!run_into("env -u RIDGEPATH_THREADS", c))
        return fail("CLI run (threads auto) failed");

    std::string why;
    if (!dirs_identical(a, b, why))
        return fail("threads=1 reruns differ: " + why);
    if (!dirs_identical(a, c, why))
        return fail("threads=1 vs auto differ: " + why);

    size_t count = 0;
    for (const auto& e : std::filesystem::recursive_directory_iterator(a))
        if (e.is_regular_file()) ++count;
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
    std::filesystem::remove_all(c);
    return pass("three CLI runs produced " + std::to_string(count) +
                " byte-identical artifacts each");
}

Outcome c13_round_trips() {
    testsupport::Rng rng(1300);
    Dataset d = random_dataset(rng, 80, 4);
    ModelArtifacts a = fit_model(d, "m");
    TraceSeries t = build_traces(a.cm, a.path, 51);

    std::filesystem::path dir = testsupport::temp_dir("acc13");
    std::string csv = (dir / "trace.csv").string();
    write_trace_csv(t, csv);
    TraceSeries back = read_trace_csv(csv);
    double worst = 0.0;
    for (size_t i = 0; i < t.m_grid.size(); ++i)
        worst = std::max(worst, std::abs(back.m_grid[i] - t.m_grid[i]));
    worst = std::max(worst, (back.delta - t.delta).cwiseAbs().maxCoeff());
    worst = std::max(worst, (back.coef - t.coef).cwiseAbs().maxCoeff());
    worst = std::max(worst, (back.risk - t.risk).cwiseAbs().maxCoeff());
    if (worst > 1e-12)
        return fail("trace CSV round trip off by " + fmt(worst));

    Eigen::VectorXd x(120), y(120);
    for (int i = 0; i < 120; ++i) {
        x[i] = rng.uniform(0.0, 3.0);
        y[i] = std::sin(2.0 * x[i]) + 0.2 * rng.normal();
    }
    SmootherFit fit = gcv_select(y, x, build_basis(x, 10));
    SmootherFit reloaded = fit_from_json(fit_to_json(fit));
    double fit_worst = (reloaded.coef - fit.coef).cwiseAbs().maxCoeff();
    for (int i = 0; i < 50; ++i) {
        double xv = rng.uniform(-1.0, 4.0);
        fit_worst = std::max(
            fit_worst, std::abs(predict_one(reloaded, xv) - predict_one(fit, xv)));
    }
    if (fit_worst > 1e-12)
        return fail("fit JSON round trip off by " + fmt(fit_worst));

    std::filesystem::remove_all(dir);
    return pass("trace CSV and fit JSON reload within 1e-12");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "benchmark x-block correlations", c1_x_correlations},
        {2, "benchmark linear OLS summary", c2_linear_ols},
        {3, "benchmark linear OLS risks", c3_linear_ols_risks},
        {4, "benchmark linear shrunken summary", c4_linear_shrunken},
        {5, "benchmark np model summary", c5_np_model},
        {6, "benchmark np risk-product verdict", c6_np_wins},
        {7, "shrinkage trace identity", c7_trace_identity},
        {8, "componentwise dMSE optimality", c8_dmse_optimality},
        {9, "OLS endpoint oracle", c9_ols_oracle},
        {10, "intercept pivot invariant", c10_pivot_invariant},
        {11, "smoother property suite", c11_smoother_suite},
        {12, "CLI determinism", c12_determinism},
        {13, "serialization round trips", c13_round_trips},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o = fail(std::string("exception: ") + ex.what());
        }
        if (o.status == "FAIL") ++failures;
        std::cout << "criterion " << (e.id < 10 ? " " : "") << e.id << ": "
                  << o.status << "  " << e.label << " -- " << o.detail
                  << "\n";
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    return 0;
}
