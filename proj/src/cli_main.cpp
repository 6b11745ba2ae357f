#include "ridgepath/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ridgepath/canonical.hpp"
#include "ridgepath/correlation.hpp"
#include "ridgepath/dataset.hpp"
#include "ridgepath/numio.hpp"
#include "ridgepath/report.hpp"
#include "ridgepath/shrinkage.hpp"
#include "ridgepath/smoother.hpp"
#include "ridgepath/svg.hpp"
#include "ridgepath/trace.hpp"

namespace fs = std::filesystem;

namespace ridgepath {

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::vector<std::string> np_names(Eigen::Index p) {
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < p; ++j)
        names.push_back("np" + std::to_string(j + 1));
    return names;
}

// Stage-1 output as a Dataset so Stage 2 can treat it like any other design.
Dataset np_dataset(const Dataset& d, int k, std::vector<std::string>* notes) {
    Dataset dnp;
    dnp.names.push_back(d.y_name());
    for (const std::string& name : np_names(d.p)) dnp.names.push_back(name);
    dnp.y = d.y;
    dnp.X = np_transform(d, k, notes);
    dnp.n = d.n;
    dnp.p = d.p;
    dnp.dropped_rows = d.dropped_rows;
    return dnp;
}

void report_notes(const std::vector<std::string>& notes, std::ostream& err) {
    for (const std::string& note : notes) err << "note: " << note << "\n";
}

void emit_model_outputs(const ModelArtifacts& a, const RunConfig& cfg,
                        std::ostream& out) {
    TraceSeries t = build_traces(a.cm, a.path, cfg.steps);
    std::vector<std::string> xnames(a.sd.names.begin() + 1, a.sd.names.end());
    write_trace_csv(t, join_path(cfg.out_dir, "trace_" + a.label + ".csv"));
    write_trace_svg(t, TraceKind::coef,
                    join_path(cfg.out_dir, "trace_" + a.label + "_coef.svg"),
                    xnames);
    write_trace_svg(t, TraceKind::risk,
                    join_path(cfg.out_dir, "trace_" + a.label + "_risk.svg"),
                    xnames);
    out << "model " << a.label << ": rms=" << format_general(a.cm.rms_ols, 6)
        << " residSE=" << format_general(a.cm.resid_se, 6)
        << " mStar=" << format_general(a.path.m_star, 6) << "\n";
}

void attach_model_audit(nlohmann::json& report, const ModelArtifacts& a) {
    report["audit"][a.label]["canonical"] = canonical_to_json(a.cm);
    report["audit"][a.label]["path"] = path_to_json(a.path);
    report["standardization"][a.label] = standardization_json(a.sd);

    Eigen::VectorXd ml_beta = beta_at(a.cm, a.path, a.path.m_star);
    nlohmann::json orig;
    Eigen::VectorXd ols_orig = destandardize(a.cm.beta_ols, a.sd);
    Eigen::VectorXd ml_orig = destandardize(ml_beta, a.sd);
    orig["olsBetas"] = std::vector<double>(ols_orig.data(),
                                           ols_orig.data() + ols_orig.size());
    orig["olsIntercept"] = intercept_at(a.sd, a.cm.beta_ols);
    orig["mlBetas"] =
        std::vector<double>(ml_orig.data(), ml_orig.data() + ml_orig.size());
    orig["mlIntercept"] = intercept_at(a.sd, ml_beta);
    orig["residualMeanSquare"] = a.cm.rms_ols * a.sd.y_sd * a.sd.y_sd;
    orig["residualStdError"] = a.cm.resid_se * a.sd.y_sd;
    report["originalUnits"][a.label] = orig;
}

// The two most predictive np variables by |ML beta|, ties to the lower index.
std::vector<Eigen::Index> top_two_predictors(const ModelArtifacts& np) {
    Eigen::VectorXd ml = beta_at(np.cm, np.path, np.path.m_star);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(ml.size()));
    for (std::size_t j = 0; j < order.size(); ++j)
        order[j] = static_cast<Eigen::Index>(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         return std::abs(ml[a]) > std::abs(ml[b]);
                     });
    order.resize(std::min<std::size_t>(2, order.size()));
    return order;
}

}  // namespace

int cmd_smooth(const RunConfig& cfg, std::ostream&, std::ostream& err) {
    validate_config(cfg);
    Dataset d = load_csv(cfg.input, cfg.y_column, cfg.x_columns);
    if (d.dropped_rows > 0)
        err << "note: dropped " << d.dropped_rows
            << " rows with missing values\n";

    std::vector<SmootherFit> fits = np_fits(d, cfg.k);
    fs::create_directories(cfg.out_dir);

    std::vector<std::string> names;
    std::vector<Eigen::VectorXd> cols;
    names.push_back(d.y_name());
    cols.push_back(d.y);
    for (Eigen::Index j = 0; j < d.p; ++j) {
        names.push_back(d.x_name(j));
        cols.push_back(d.X.col(j));
    }
    for (Eigen::Index j = 0; j < d.p; ++j) {
        names.push_back("np" + std::to_string(j + 1));
        cols.push_back(fits[static_cast<std::size_t>(j)].fitted);
    }
    write_csv(join_path(cfg.out_dir, "np_frame.csv"), names, cols);

    for (Eigen::Index j = 0; j < d.p; ++j) {
        const SmootherFit& fit = fits[static_cast<std::size_t>(j)];
        nlohmann::json fj = fit_to_json(fit);
        fj["column"] = d.x_name(j);
        write_json_file(
            join_path(cfg.out_dir, "fit_np" + std::to_string(j + 1) + ".json"),
            fj);
        if (!fit.basis.note.empty())
            err << "note: x" << (j + 1) << " (" << d.x_name(j)
                << "): " << fit.basis.note << "\n";
    }

    write_json_file(join_path(cfg.out_dir, "standardization.json"),
                    standardization_json(standardize(d)));
    return 0;
}

int cmd_corr(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_config(cfg);
    Dataset d = load_csv(cfg.input, cfg.y_column, cfg.x_columns);
    if (d.dropped_rows > 0)
        err << "note: dropped " << d.dropped_rows
            << " rows with missing values\n";
    fs::create_directories(cfg.out_dir);

    std::vector<std::string> x_names{d.y_name()};
    std::vector<Eigen::VectorXd> x_cols{d.y};
    for (Eigen::Index j = 0; j < d.p; ++j) {
        x_names.push_back(d.x_name(j));
        x_cols.push_back(d.X.col(j));
    }
    Eigen::MatrixXd tx = corr_table(x_cols);
    write_corr_csv(join_path(cfg.out_dir, "corr_x.csv"), tx, x_names);
    std::string text_x = corr_table_text(tx, x_names);
    write_text(join_path(cfg.out_dir, "corr_x.txt"), text_x);
    out << "x-block correlations\n" << text_x << "\n";

    std::vector<std::string> notes;
    Eigen::MatrixXd np = np_transform(d, cfg.k, &notes);
    report_notes(notes, err);
    std::vector<std::string> n_names{d.y_name()};
    std::vector<Eigen::VectorXd> n_cols{d.y};
    for (Eigen::Index j = 0; j < d.p; ++j) {
        n_names.push_back("np" + std::to_string(j + 1));
        n_cols.push_back(np.col(j));
    }
    Eigen::MatrixXd tn = corr_table(n_cols);
    write_corr_csv(join_path(cfg.out_dir, "corr_np.csv"), tn, n_names);
    std::string text_n = corr_table_text(tn, n_names);
    write_text(join_path(cfg.out_dir, "corr_np.txt"), text_n);
    out << "np-block correlations\n" << text_n;
    return 0;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_config(cfg);
    Dataset d = load_csv(cfg.input, cfg.y_column, cfg.x_columns);
    if (d.dropped_rows > 0)
        err << "note: dropped " << d.dropped_rows
            << " rows with missing values\n";
    fs::create_directories(cfg.out_dir);

    bool want_linear = cfg.mode == "linear" || cfg.mode == "both";
    bool want_np = cfg.mode == "np" || cfg.mode == "both";

    std::optional<ModelArtifacts> lin;
    std::optional<ModelArtifacts> np;
    std::optional<Dataset> dnp;
    if (want_linear) lin = fit_model(d, "linear");
    if (want_np) {
        std::vector<std::string> notes;
        dnp = np_dataset(d, cfg.k, &notes);
        report_notes(notes, err);
        np = fit_model(*dnp, "np");
    }

    if (lin) emit_model_outputs(*lin, cfg, out);
    if (np) emit_model_outputs(*np, cfg, out);

    nlohmann::json report;
    if (lin && np) {
        ComparisonReport cmp = compare_models(*lin, *np);
        report = report_to_json(cmp);
        out << "np risk product wins on " << cmp.second_wins << " of "
            << lin->cm.p << " variables (" << cmp.second_losses << " losses, "
            << cmp.ties << " ties)\n";
    } else {
        const ModelArtifacts& only = lin ? *lin : *np;
        report["models"][only.label] = summary_to_json(summarize(only));
    }
    if (lin) attach_model_audit(report, *lin);
    if (np) attach_model_audit(report, *np);
    report["run"]["input"] = cfg.input;
    report["run"]["n"] = d.n;
    report["run"]["p"] = d.p;
    report["run"]["droppedRows"] = d.dropped_rows;
    report["run"]["k"] = cfg.k;
    report["run"]["steps"] = cfg.steps;
    report["run"]["mode"] = cfg.mode;
    write_json_file(join_path(cfg.out_dir, "report.json"), report);

    if (lin && np) {
        std::vector<std::string> all_names{d.y_name()};
        std::vector<Eigen::VectorXd> all_cols{d.y};
        for (Eigen::Index j = 0; j < d.p; ++j) {
            all_names.push_back(d.x_name(j));
            all_cols.push_back(d.X.col(j));
        }
        for (Eigen::Index j = 0; j < d.p; ++j) {
            all_names.push_back("np" + std::to_string(j + 1));
            all_cols.push_back(dnp->X.col(j));
        }
        std::vector<std::string> selection{d.y_name()};
        for (Eigen::Index j : top_two_predictors(*np)) {
            selection.push_back(d.x_name(j));
            selection.push_back("np" + std::to_string(j + 1));
        }
        write_pairs_csv(join_path(cfg.out_dir, "pairs.csv"),
                        pairs_data(all_names, all_cols, selection));
    }
    return 0;
}

int cmd_fetch_instructions(std::ostream& out) {
    out << "No data is downloaded by this tool.\n"
           "\n"
           "The benchmark dataset (EPA particulate-matter county data) is\n"
           "archived in the Dryad digital repository:\n"
           "\n"
           "    https://doi.org/10.5061/dryad.63xsj3v58\n"
           "\n"
           "Download the CSV from the archive and pass its path via --input.\n"
           "Expected columns:\n"
           "    outcome:    AACRmort\n"
           "    predictors: Avoc, Bvoc, PREMdeath, ASmoke, ChildPOV, IncomIEQ\n"
           "\n"
           "Example:\n"
           "    ridgepath fit --input data/dryad_epa_pm.csv --y AACRmort \\\n"
           "        --x Avoc,Bvoc,PREMdeath,ASmoke,ChildPOV,IncomIEQ --out "
           "results\n";
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "Two-stage shrinkage regression: univariate spline smoothing and "
        "generalized ridge traces"};
    app.name("ridgepath");
    app.require_subcommand(0, 1);

    struct Flags {
        std::string input, y, x, out, mode, config;
        int k{0}, steps{0};
        long seed{0};
    };
    Flags smooth_f, fit_f, corr_f;

    auto add_common = [](CLI::App* sub, Flags& f) {
        sub->add_option("--input", f.input, "input CSV path");
        sub->add_option("--y", f.y, "outcome column name");
        sub->add_option("--x", f.x, "comma-separated predictor columns");
        sub->add_option("--k", f.k, "spline basis size (default 10)");
        sub->add_option("--steps", f.steps, "trace grid size (default 101)");
        sub->add_option("--mode", f.mode, "linear | np | both (default both)");
        sub->add_option("--out", f.out, "output directory (default .)");
        sub->add_option("--config", f.config, "JSON config file");
        sub->add_option("--seed", f.seed, "seed for simulation helpers");
    };

    CLI::App* smooth = app.add_subcommand(
        "smooth", "Stage 1: per-predictor spline smoothing (np frame)");
    add_common(smooth, smooth_f);
    CLI::App* fit = app.add_subcommand(
        "fit", "Stage 2: shrinkage traces and comparison report");
    add_common(fit, fit_f);
    CLI::App* corr =
        app.add_subcommand("corr", "correlation tables for x and np blocks");
    add_common(corr, corr_f);
    CLI::App* fetch = app.add_subcommand(
        "fetch-instructions", "how to obtain the benchmark dataset");

    std::vector<const char*> argv;
    argv.push_back("ridgepath");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto build_config = [](const CLI::App* sub, const Flags& f) {
        RunConfig cfg;
        if (sub->count("--config") > 0)
            cfg = load_json_config(f.config, std::move(cfg));
        if (sub->count("--input") > 0) cfg.input = f.input;
        if (sub->count("--y") > 0) cfg.y_column = f.y;
        if (sub->count("--x") > 0) cfg.x_columns = split_name_list(f.x);
        if (sub->count("--k") > 0) cfg.k = f.k;
        if (sub->count("--steps") > 0) cfg.steps = f.steps;
        if (sub->count("--mode") > 0) cfg.mode = f.mode;
        if (sub->count("--out") > 0) cfg.out_dir = f.out;
        if (sub->count("--seed") > 0) cfg.seed = f.seed;
        return cfg;
    };

    try {
        if (smooth->parsed()) return cmd_smooth(build_config(smooth, smooth_f), out, err);
        if (fit->parsed()) return cmd_fit(build_config(fit, fit_f), out, err);
        if (corr->parsed()) return cmd_corr(build_config(corr, corr_f), out, err);
        if (fetch->parsed()) return cmd_fetch_instructions(out);
        err << "error: a subcommand is required (smooth, fit, corr, "
               "fetch-instructions)\n";
        err << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ridgepath
