#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "surfit/distributions.hpp"
#include "surfit/error.hpp"
#include "surfit/evaluation.hpp"
#include "surfit/goodness_of_fit.hpp"
#include "surfit/io.hpp"
#include "surfit/metrics.hpp"
#include "surfit/regressor.hpp"
#include "surfit/sur_model.hpp"

namespace surfit::cli {

namespace {

using nlohmann::json;

struct Shared {
    std::uint64_t seed = 0;
    int jnd_order = 1;
    double p = 50.0;
    std::string out;
};

struct MlpFlags {
    int epochs = 30;
    double lr = 1e-5;
    int batch = 16;
    double dropout = 0.25;
    int patches = 5;
    std::vector<int> hidden{512, 256, 128};

    MlpConfig config(std::uint32_t feature_dim, std::uint64_t seed) const {
        MlpConfig c;
        c.input_dim = static_cast<int>(3 * feature_dim);
        c.hidden = hidden;
        c.dropout = dropout;
        c.lr = lr;
        c.epochs = epochs;
        c.batch = batch;
        c.patches = patches;
        c.seed = seed;
        return c;
    }
};

void add_seed(CLI::App* app, Shared& s) { app->add_option("--seed", s.seed, "RNG seed")->capture_default_str(); }
void add_order(CLI::App* app, Shared& s) {
    app->add_option("--jnd-order", s.jnd_order, "JND order")->check(CLI::Range(1, 3))->capture_default_str();
}
void add_p(CLI::App* app, Shared& s) {
    app->add_option("--p", s.p, "percentile for p% JND / p% SUR")->check(CLI::Range(0.0, 100.0))->capture_default_str();
}
void add_out(CLI::App* app, Shared& s) { app->add_option("--out", s.out, "output path (default stdout)"); }

void add_mlp(CLI::App* app, MlpFlags& m) {
    app->add_option("--epochs", m.epochs, "training epochs")->capture_default_str();
    app->add_option("--lr", m.lr, "Adam learning rate")->capture_default_str();
    app->add_option("--batch", m.batch, "mini-batch size")->capture_default_str();
    app->add_option("--dropout", m.dropout, "dropout ratio")->capture_default_str();
    app->add_option("--patches", m.patches, "patches per image")->capture_default_str();
    app->add_option("--hidden", m.hidden, "hidden layer widths")->delimiter(',')->capture_default_str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json gev_json(const GevParams& p) { return {{"xi", p.xi}, {"mu", p.mu}, {"sigma", p.sigma}}; }

std::vector<int> select_images(const JndSampleTable& table, int order, const std::optional<int>& image) {
    std::vector<int> ids = table.image_ids(order);
    if (image) {
        if (std::find(ids.begin(), ids.end(), *image) == ids.end()) {
            throw Error(ErrorCode::missing_data, "no samples for image " + std::to_string(*image));
        }
        ids = {*image};
    }
    if (ids.empty()) throw Error(ErrorCode::missing_data, "no samples at the requested JND order");
    return ids;
}

EvalDataset dataset_without_features(const JndSampleTable& table, int order) {
    EvalDataset d;
    d.name = table.dataset();
    d.jnd_order = order;
    for (int image : table.image_ids(order)) d.jnd_qf[image] = table.samples(image, order);
    return d;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SUR curve modeling: JND distribution fitting, SUR prediction and evaluation", "surfit"};
    app.require_subcommand(1);
    Shared s;
    MlpFlags mlp;
    std::function<void()> action;

    // fit-dist
    std::string samples_path, family_name_arg = "gev";
    std::optional<int> image;
    auto* fit_dist = app.add_subcommand("fit-dist", "maximum-likelihood fit of one family to JND samples");
    fit_dist->add_option("--samples", samples_path, "JND CSV")->required();
    fit_dist->add_option("--family", family_name_arg, "distribution family")->capture_default_str();
    fit_dist->add_option("--image", image, "restrict to one image");
    add_order(fit_dist, s);
    add_out(fit_dist, s);
    fit_dist->callback([&] {
        action = [&] {
            const Family family = parse_family(family_name_arg);
            const JndSampleTable table = load_jnd_csv(samples_path);
            json rows = json::array();
            for (int id : select_images(table, s.jnd_order, image)) {
                json row = json::parse(fit_result_json(fit_mle(table.samples(id, s.jnd_order), family)));
                row["image_id"] = id;
                rows.push_back(row);
            }
            emit(dump(image ? rows.front() : rows), s.out, out);
        };
    });

    // select-model
    std::vector<std::string> families;
    int resamples = 999;
    auto* select = app.add_subcommand("select-model", "rank candidate families by mean NLL and A-D rejections");
    select->add_option("--samples", samples_path, "JND CSV")->required();
    select->add_option("--families", families, "families to rank (default: all)")->delimiter(',');
    select->add_option("--resamples", resamples, "bootstrap resamples per A-D test")->capture_default_str();
    add_seed(select, s);
    add_order(select, s);
    add_out(select, s);
    select->callback([&] {
        action = [&] {
            std::vector<Family> kinds;
            for (const auto& f : families) kinds.push_back(parse_family(f));
            if (kinds.empty()) kinds.assign(kAllFamilies.begin(), kAllFamilies.end());
            const JndSampleTable table = load_jnd_csv(samples_path);
            std::vector<std::vector<double>> images;
            for (int id : select_images(table, s.jnd_order, std::nullopt)) images.push_back(table.samples(id, s.jnd_order));
            RankOptions ro;
            ro.bootstrap.resamples = resamples;
            ro.bootstrap.seed = s.seed;
            emit(ranking_json(rank_models(images, kinds, ro)) + "\n", s.out, out);
        };
    });

    // sur-curve
    std::optional<double> xi, mu, sigma;
    std::string params_path;
    bool plot_data = false;
    std::optional<double> p_query;
    int n_levels = kJpegLevels;
    auto* sur_curve = app.add_subcommand("sur-curve", "sample a SUR curve from GEV parameters or raw samples");
    sur_curve->add_option("--xi", xi, "GEV shape");
    sur_curve->add_option("--mu", mu, "GEV location (QF)");
    sur_curve->add_option("--sigma", sigma, "GEV scale (QF)");
    sur_curve->add_option("--params", params_path, "parameter JSON written by fit-dist --image");
    sur_curve->add_option("--samples", samples_path, "JND CSV (empirical curve for --image)");
    sur_curve->add_option("--image", image, "image id for CSV rows / empirical curve");
    sur_curve->add_option("--levels", n_levels, "number of distortion levels")->capture_default_str();
    sur_curve->add_flag("--plot-data", plot_data, "emit level,sur pairs only");
    sur_curve->add_option("--p", p_query, "report p% JND and p% SUR instead of the curve")
        ->check(CLI::Range(0.0, 100.0));
    add_order(sur_curve, s);
    add_out(sur_curve, s);
    sur_curve->callback([&] {
        action = [&] {
            SurCurve curve;
            if (!samples_path.empty()) {
                if (!image) throw Error(ErrorCode::invalid_argument, "--samples needs --image");
                const JndSampleTable table = load_jnd_csv(samples_path);
                curve = empirical_sur(table.samples(*select_images(table, s.jnd_order, image).begin(), s.jnd_order),
                                      n_levels);
            } else if (!params_path.empty()) {
                curve = sur_from_params(parse_fit_result_json(read_text_file(params_path)).distribution().gev(), n_levels);
            } else {
                if (!xi || !mu || !sigma) {
                    throw Error(ErrorCode::invalid_argument, "give --xi/--mu/--sigma, --params or --samples");
                }
                curve = sur_from_params(GevParams{*xi, *mu, *sigma}, n_levels);
            }
            if (p_query) {
                json j{{"p", *p_query}};
                try {
                    j["p_jnd"] = p_jnd(curve, *p_query);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::unreachable_percentile) throw;
                    j["p_jnd"] = nullptr;
                }
                try {
                    j["p_sur"] = p_sur(curve, *p_query);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::unreachable_percentile) throw;
                    j["p_sur"] = nullptr;
                }
                emit(dump(j), s.out, out);
                return;
            }
            std::ostringstream ss;
            if (plot_data) {
                char buf[64];
                ss << "level,sur\n";
                for (int y = 1; y <= curve.n_levels(); ++y) {
                    std::snprintf(buf, sizeof buf, "%.17g", curve.at(y));
                    ss << y << ',' << buf << '\n';
                }
            } else {
                write_sur_csv(ss, image.value_or(0), curve);
            }
            emit(ss.str(), s.out, out);
        };
    });

    // fit-sur
    std::string sur_path;
    auto* fit_sur = app.add_subcommand("fit-sur", "least-squares GEV fit to sampled SUR curves");
    fit_sur->add_option("--sur", sur_path, "SUR CSV (image_id,level,sur)")->required();
    add_out(fit_sur, s);
    fit_sur->callback([&] {
        action = [&] {
            json rows = json::array();
            for (const auto& [id, values] : load_sur_csv(sur_path)) {
                const SurFit fit = fit_sur_lsq(values);
                json row = gev_json(fit.params);
                row["image_id"] = id;
                row["residual"] = fit.residual;
                row["converged"] = fit.converged;
                rows.push_back(row);
            }
            emit(dump(rows), s.out, out);
        };
    });

    // metrics
    std::string pairs_path, psnr_path, scheme_arg = "qf_grid";
    auto* metrics = app.add_subcommand("metrics", "Bhattacharyya distance, delta JND and delta PSNR per image");
    metrics->add_option("--pairs", pairs_path, "GEV parameter pairs CSV")->required();
    metrics->add_option("--psnr", psnr_path, "PSNR CSV (enables delta PSNR)");
    metrics->add_option("--scheme", scheme_arg, "real_line, clipped_qf or qf_grid")->capture_default_str();
    add_p(metrics, s);
    add_out(metrics, s);
    metrics->callback([&] {
        action = [&] {
            BhattacharyyaOptions bo;
            bo.scheme = parse_scheme(scheme_arg);
            const auto pairs = load_param_pairs_csv(pairs_path);
            if (pairs.empty()) throw Error(ErrorCode::insufficient_data, "no parameter pairs");
            json rows = json::array();
            double sum_b = 0.0, sum_j = 0.0;
            if (!psnr_path.empty()) {
                const auto curves = load_psnr_csv(psnr_path);
                std::vector<ImageMetrics> per;
                for (const auto& pp : pairs) {
                    const auto it = curves.find(pp.image_id);
                    if (it == curves.end()) {
                        throw Error(ErrorCode::missing_data, "no PSNR curve for image " + std::to_string(pp.image_id));
                    }
                    per.push_back(image_metrics(pp.image_id, pp.gt, pp.pred, it->second, s.p, bo));
                }
                const MetricMeans m = aggregate(per);
                json j{{"per_image", json::parse(image_metrics_json(per))},
                       {"avg", {{"bhattacharyya", m.bhattacharyya}, {"delta_jnd", m.delta_jnd}, {"delta_psnr", m.delta_psnr}}}};
                emit(dump(j), s.out, out);
                return;
            }
            for (const auto& pp : pairs) {
                const double b = bhattacharyya(pp.gt, pp.pred, bo).distance;
                const int gl = p_jnd(sur_from_params(pp.gt), s.p);
                const int pl = p_jnd(sur_from_params(pp.pred), s.p);
                rows.push_back({{"image_id", pp.image_id},
                                {"gt", gev_json(pp.gt)},
                                {"pred", gev_json(pp.pred)},
                                {"bhattacharyya", std::isfinite(b) ? json(b) : json(nullptr)},
                                {"jnd", gl},
                                {"jnd_pred", pl},
                                {"delta_jnd", std::abs(pl - gl)}});
                sum_b += b;
                sum_j += std::abs(pl - gl);
            }
            const double n = static_cast<double>(pairs.size());
            json j{{"per_image", rows}, {"avg", {{"bhattacharyya", sum_b / n}, {"delta_jnd", sum_j / n}}}};
            emit(dump(j), s.out, out);
        };
    });

    // baseline
    int folds = 10;
    auto* baseline = app.add_subcommand("baseline", "PSNR-threshold p% JND prediction on k folds");
    baseline->add_option("--samples", samples_path, "JND CSV")->required();
    baseline->add_option("--psnr", psnr_path, "PSNR CSV")->required();
    baseline->add_option("--folds", folds, "fold count")->capture_default_str();
    add_seed(baseline, s);
    add_order(baseline, s);
    add_p(baseline, s);
    add_out(baseline, s);
    baseline->callback([&] {
        action = [&] {
            const JndSampleTable table = load_jnd_csv(samples_path);
            const EvalDataset data = dataset_without_features(table, s.jnd_order);
            const auto gt = fit_ground_truth(data);
            const FoldPlan plan = kfold_split(table.image_ids(s.jnd_order), folds, s.seed);
            emit(baseline_report_json(run_baseline(gt, load_psnr_csv(psnr_path), plan, s.p)), s.out, out);
        };
    });

    // train
    std::string features_path;
    auto* train_cmd = app.add_subcommand("train", "train the regression head on every image but one validation fold");
    train_cmd->add_option("--samples", samples_path, "JND CSV")->required();
    train_cmd->add_option("--features", features_path, "SURFEAT1 feature file")->required();
    train_cmd->add_option("--folds", folds, "fold count; fold 0 is held out for validation")->capture_default_str();
    add_mlp(train_cmd, mlp);
    add_seed(train_cmd, s);
    add_order(train_cmd, s);
    train_cmd->add_option("--out", s.out, "model file")->required();
    train_cmd->callback([&] {
        action = [&] {
            const JndSampleTable table = load_jnd_csv(samples_path);
            const FeatureStore features = read_features(features_path);
            const EvalDataset data = dataset_without_features(table, s.jnd_order);
            const auto gt = fit_ground_truth(data);
            const FoldPlan plan = kfold_split(table.image_ids(s.jnd_order), folds, s.seed);
            const MlpConfig cfg = mlp.config(features.dim(), s.seed);
            const auto train_records = training_records(features, plan.train_images(0), gt, kJpegLevels, cfg.patches);
            const auto val_records = training_records(features, plan.folds[0], gt, kJpegLevels, cfg.patches);
            const MlpModel model = train(train_records, val_records, cfg);
            std::ofstream f(s.out, std::ios::binary | std::ios::trunc);
            if (!f) throw Error(ErrorCode::io_error, "cannot write '" + s.out + "'");
            write_model(f, model);
            out << "best validation L1 " << model.best_validation_loss << " at epoch " << model.best_epoch << "\n";
        };
    });

    // predict
    std::string model_path;
    int predict_image = 0;
    auto* predict = app.add_subcommand("predict", "predict and fit the SUR curve of one image");
    predict->add_option("--model", model_path, "model file")->required();
    predict->add_option("--features", features_path, "SURFEAT1 feature file")->required();
    predict->add_option("--image", predict_image, "image id")->required();
    add_p(predict, s);
    add_out(predict, s);
    predict->callback([&] {
        action = [&] {
            std::ifstream f(model_path, std::ios::binary);
            if (!f) throw Error(ErrorCode::io_error, "cannot open '" + model_path + "'");
            const MlpModel model = read_model(f);
            const FeatureStore features = read_features(features_path);
            const std::vector<double> sur = predict_sur_curve(model, features, predict_image, kJpegLevels);
            const SurFit fit = fit_sur_lsq(sur);
            json j{{"image_id", predict_image},
                   {"sur", sur},
                   {"params", gev_json(fit.params)},
                   {"residual", fit.residual},
                   {"p", s.p},
                   {"p_jnd", p_jnd(sur_from_params(fit.params), s.p)}};
            emit(dump(j), s.out, out);
        };
    });

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "k-fold evaluation of the regressor and the baseline");
    evaluate->add_option("--samples", samples_path, "JND CSV")->required();
    evaluate->add_option("--features", features_path, "SURFEAT1 feature file")->required();
    evaluate->add_option("--psnr", psnr_path, "PSNR CSV")->required();
    evaluate->add_option("--folds", folds, "fold count")->capture_default_str();
    evaluate->add_option("--scheme", scheme_arg, "Bhattacharyya scheme")->capture_default_str();
    add_mlp(evaluate, mlp);
    add_seed(evaluate, s);
    add_order(evaluate, s);
    add_p(evaluate, s);
    add_out(evaluate, s);
    evaluate->callback([&] {
        action = [&] {
            const JndSampleTable table = load_jnd_csv(samples_path);
            const FeatureStore features = read_features(features_path);
            const EvalDataset data = make_dataset(table, s.jnd_order, features, load_psnr_csv(psnr_path));
            const FoldPlan plan = kfold_split(table.image_ids(s.jnd_order), folds, s.seed);
            EvalConfig cfg;
            cfg.mlp = mlp.config(features.dim(), s.seed);
            cfg.p = s.p;
            cfg.bhattacharyya.scheme = parse_scheme(scheme_arg);
            emit(run_evaluation(data, plan, cfg).to_json(), s.out, out);
        };
    });

    // Help for the subcommand being parsed, if any.
    auto help_text = [&] {
        const auto parsed = app.get_subcommands();
        return parsed.empty() ? app.help() : parsed.front()->help();
    };
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << help_text();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << help_text();
        return 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace surfit::cli
