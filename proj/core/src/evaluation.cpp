#include "surfit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "surfit/distributions.hpp"
#include "surfit/error.hpp"
#include "surfit/rng.hpp"
#include "surfit/sur_model.hpp"

namespace surfit {

namespace {

using nlohmann::json;

json baseline_json(std::span<const BaselineRow> rows, const MetricMeans& avg);

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json means_json(const MetricMeans& m, bool with_bhattacharyya) {
    json j{{"delta_jnd", m.delta_jnd}, {"delta_psnr", m.delta_psnr}};
    if (with_bhattacharyya) j["bhattacharyya"] = number_or_null(m.bhattacharyya);
    return j;
}

FeatureKey key(int image, int level, int patch) {
    return {static_cast<std::uint32_t>(image), static_cast<std::uint16_t>(level), static_cast<std::uint16_t>(patch)};
}

void check_complete(const EvalDataset& data, const FoldPlan& plan, const EvalConfig& cfg) {
    std::vector<std::string> gaps;
    if (data.features == nullptr) throw Error(ErrorCode::missing_data, "no feature store supplied");
    for (const auto& [image, fold] : plan.assignment) {
        const std::string tag = "image " + std::to_string(image) + ": ";
        const auto samples = data.jnd_qf.find(image);
        if (samples == data.jnd_qf.end() || samples->second.size() < 3) gaps.push_back(tag + "fewer than 3 JND samples");
        const auto curve = data.psnr.find(image);
        if (curve == data.psnr.end() || curve->second.n_levels() < cfg.n_levels) gaps.push_back(tag + "PSNR curve");
        int missing = 0;
        for (int level = 0; level <= cfg.n_levels; ++level) {
            for (int patch = 0; patch < cfg.mlp.patches; ++patch) {
                if (!data.features->contains(key(image, level, patch))) ++missing;
            }
        }
        if (missing > 0) gaps.push_back(tag + std::to_string(missing) + " feature records");
    }
    if (!gaps.empty()) {
        std::string msg = "evaluation inputs incomplete:";
        for (const auto& g : gaps) msg += "\n  " + g;
        throw Error(ErrorCode::missing_data, msg);
    }
}

}  // namespace

std::vector<int> FoldPlan::train_images(int test_fold) const {
    std::vector<int> out;
    for (int f = 0; f < k; ++f) {
        if (f == test_fold) continue;
        out.insert(out.end(), folds[static_cast<std::size_t>(f)].begin(), folds[static_cast<std::size_t>(f)].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

FoldPlan kfold_split(std::vector<int> image_ids, int k, std::uint64_t seed) {
    std::sort(image_ids.begin(), image_ids.end());
    if (std::adjacent_find(image_ids.begin(), image_ids.end()) != image_ids.end()) {
        throw Error(ErrorCode::invalid_argument, "duplicate image id in fold split");
    }
    if (k < 1) throw Error(ErrorCode::invalid_argument, "fold count must be positive");
    if (static_cast<std::size_t>(k) > image_ids.size()) {
        throw Error(ErrorCode::invalid_argument, "more folds (" + std::to_string(k) + ") than images (" +
                                                     std::to_string(image_ids.size()) + ")");
    }
    std::mt19937_64 rng = make_stream(seed, 0);
    shuffle_in_place(image_ids, rng);

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.folds.resize(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < image_ids.size(); ++i) {
        const int fold = static_cast<int>(i % static_cast<std::size_t>(k));
        plan.assignment[image_ids[i]] = fold;
        plan.folds[static_cast<std::size_t>(fold)].push_back(image_ids[i]);
    }
    for (auto& f : plan.folds) std::sort(f.begin(), f.end());
    return plan;
}

EvalDataset make_dataset(const JndSampleTable& table, int jnd_order, const FeatureStore& features,
                         std::map<int, PsnrCurve> psnr) {
    if (jnd_order < 1 || jnd_order > 3) throw Error(ErrorCode::invalid_argument, "jnd_order must be 1, 2 or 3");
    EvalDataset d;
    d.name = table.dataset();
    d.jnd_order = jnd_order;
    for (int image : table.image_ids(jnd_order)) d.jnd_qf[image] = table.samples(image, jnd_order);
    d.features = &features;
    d.psnr = std::move(psnr);
    return d;
}

std::map<int, GevParams> fit_ground_truth(const EvalDataset& data) {
    std::map<int, GevParams> gt;
    for (const auto& [image, qf] : data.jnd_qf) {
        const FitResult fit = fit_mle(qf, Family::gev);
        if (!fit.converged) {
            throw Error(ErrorCode::degenerate_fit, "GEV fit did not converge for image " + std::to_string(image));
        }
        gt[image] = fit.distribution().gev();
    }
    return gt;
}

std::vector<TrainRecord> training_records(const FeatureStore& features, const std::vector<int>& images,
                                          const std::map<int, GevParams>& gt, int n_levels, int patches) {
    std::vector<TrainRecord> out;
    out.reserve(images.size() * static_cast<std::size_t>(n_levels * patches));
    for (int image : images) {
        const SurCurve sur = sur_from_params(gt.at(image), n_levels);
        for (int level = 1; level <= n_levels; ++level) {
            for (int patch = 0; patch < patches; ++patch) {
                TrainRecord r;
                r.ref_features = features.get(key(image, 0, patch));
                r.dist_features = features.get(key(image, level, patch));
                r.target = sur.at(level);
                r.image_id = image;
                r.level = level;
                r.patch_id = patch;
                out.push_back(r);
            }
        }
    }
    return out;
}

std::vector<double> predict_sur_curve(const MlpModel& model, const FeatureStore& features, int image_id,
                                      int n_levels) {
    const int patches = model.config.patches;
    std::vector<double> predicted(static_cast<std::size_t>(n_levels));
    std::vector<std::vector<float>> inputs(static_cast<std::size_t>(patches));
    for (int level = 1; level <= n_levels; ++level) {
        for (int patch = 0; patch < patches; ++patch) {
            inputs[static_cast<std::size_t>(patch)] =
                assemble_input(features.get(key(image_id, 0, patch)), features.get(key(image_id, level, patch)));
        }
        predicted[static_cast<std::size_t>(level - 1)] = predict_image_level(model, inputs);
    }
    return predicted;
}

std::vector<BaselineRow> run_baseline(const std::map<int, GevParams>& gt, const std::map<int, PsnrCurve>& psnr,
                                      const FoldPlan& plan, double p, int n_levels) {
    if (plan.k < 2) throw Error(ErrorCode::insufficient_data, "baseline needs at least two folds");
    std::map<int, int> gt_level;
    for (const auto& [image, fold] : plan.assignment) {
        if (!gt.contains(image) || !psnr.contains(image)) {
            throw Error(ErrorCode::missing_data, "image " + std::to_string(image) + " lacks parameters or a PSNR curve");
        }
        gt_level[image] = p_jnd(sur_from_params(gt.at(image), n_levels), p);
    }
    std::vector<BaselineRow> rows;
    for (int f = 0; f < plan.k; ++f) {
        std::vector<double> train_psnr;
        for (int id : plan.train_images(f)) train_psnr.push_back(psnr.at(id).at(gt_level.at(id)));
        const double threshold = baseline_threshold(train_psnr);
        for (int image : plan.folds[static_cast<std::size_t>(f)]) {
            const PsnrCurve& curve = psnr.at(image);
            BaselineRow b;
            b.image_id = image;
            b.fold = f;
            b.threshold = threshold;
            b.gt_level = gt_level.at(image);
            const BaselinePrediction pred = predict_jnd_baseline(curve, threshold);
            b.pred_level = pred.level;
            b.saturated = pred.saturated;
            b.delta_jnd = std::abs(b.pred_level - b.gt_level);
            b.gt_psnr = curve.at(b.gt_level);
            b.pred_psnr = curve.at(b.pred_level);
            b.delta_psnr = std::abs(b.pred_psnr - b.gt_psnr);
            rows.push_back(b);
        }
    }
    return rows;
}

MetricMeans baseline_means(std::span<const BaselineRow> rows) {
    if (rows.empty()) throw Error(ErrorCode::insufficient_data, "no baseline rows");
    MetricMeans m;
    for (const auto& b : rows) {
        m.delta_jnd += b.delta_jnd;
        m.delta_psnr += b.delta_psnr;
    }
    m.delta_jnd /= static_cast<double>(rows.size());
    m.delta_psnr /= static_cast<double>(rows.size());
    return m;
}

EvalReport run_evaluation(const EvalDataset& data, const FoldPlan& plan, const EvalConfig& cfg) {
    cfg.mlp.validate();
    if (plan.k < 3) {
        throw Error(ErrorCode::insufficient_data,
                    "training set is empty: " + std::to_string(plan.k) + " fold(s) leave nothing after test and validation");
    }
    check_complete(data, plan, cfg);

    if (static_cast<std::uint64_t>(cfg.mlp.input_dim) != 3ull * data.features->dim()) {
        throw Error(ErrorCode::invalid_argument, "input_dim must be three times the feature dimension");
    }

    std::map<int, GevParams> gt;
    {
        EvalDataset subset = data;
        std::erase_if(subset.jnd_qf, [&](const auto& kv) { return !plan.assignment.contains(kv.first); });
        gt = fit_ground_truth(subset);
    }

    EvalReport report;
    report.dataset = data.name;
    report.seed = plan.seed;
    report.jnd_order = data.jnd_order;
    report.k = plan.k;

    for (int f = 0; f < plan.k; ++f) {
        const std::vector<int>& test = plan.folds[static_cast<std::size_t>(f)];
        const int val_fold = (f + 1) % plan.k;
        const std::vector<int>& val = plan.folds[static_cast<std::size_t>(val_fold)];
        std::vector<int> train_ids;
        for (int g = 0; g < plan.k; ++g) {
            if (g == f || g == val_fold) continue;
            const auto& ids = plan.folds[static_cast<std::size_t>(g)];
            train_ids.insert(train_ids.end(), ids.begin(), ids.end());
        }
        std::sort(train_ids.begin(), train_ids.end());

        const std::set<int> test_set(test.begin(), test.end());
        for (int id : train_ids) {
            if (test_set.contains(id)) throw Error(ErrorCode::validation_error, "test image leaked into training");
        }
        for (int id : val) {
            if (test_set.contains(id)) throw Error(ErrorCode::validation_error, "test image leaked into validation");
        }

        const auto train_records = training_records(*data.features, train_ids, gt, cfg.n_levels, cfg.mlp.patches);
        const auto val_records = training_records(*data.features, val, gt, cfg.n_levels, cfg.mlp.patches);
        MlpConfig mcfg = cfg.mlp;
        mcfg.seed = splitmix64(cfg.mlp.seed ^ static_cast<std::uint64_t>(f));
        const MlpModel model = train(train_records, val_records, mcfg);
        report.validation_loss.push_back(model.best_validation_loss);

        for (int image : test) {
            const std::vector<double> predicted = predict_sur_curve(model, *data.features, image, cfg.n_levels);
            const SurFit fit = fit_sur_lsq(predicted);
            const PsnrCurve& curve = data.psnr.at(image);
            report.per_image.push_back(image_metrics(image, gt.at(image), fit.params, curve, cfg.p, cfg.bhattacharyya));
            report.fold_of.push_back(f);
        }
    }

    report.avg = aggregate(report.per_image);
    std::vector<double> gt_psnr, pred_psnr;
    for (const auto& m : report.per_image) {
        gt_psnr.push_back(m.gt_psnr);
        pred_psnr.push_back(m.pred_psnr);
    }
    try {
        report.plcc = plcc(gt_psnr, pred_psnr);
    } catch (const Error&) {
        report.plcc.reset();
    }
    report.baseline = run_baseline(gt, data.psnr, plan, cfg.p, cfg.n_levels);
    report.baseline_avg = baseline_means(report.baseline);
    return report;
}

std::string EvalReport::to_json() const {
    json rows = json::array();
    for (std::size_t i = 0; i < per_image.size(); ++i) {
        const ImageMetrics& m = per_image[i];
        rows.push_back({{"image_id", m.image_id},
                        {"fold", fold_of.at(i)},
                        {"gt", {{"xi", m.gt.xi}, {"mu", m.gt.mu}, {"sigma", m.gt.sigma}}},
                        {"pred", {{"xi", m.pred.xi}, {"mu", m.pred.mu}, {"sigma", m.pred.sigma}}},
                        {"bhattacharyya", number_or_null(m.bhattacharyya)},
                        {"jnd", m.gt_level},
                        {"jnd_pred", m.pred_level},
                        {"delta_jnd", m.delta_jnd},
                        {"psnr", m.gt_psnr},
                        {"psnr_pred", m.pred_psnr},
                        {"delta_psnr", m.delta_psnr}});
    }
    json j;
    j["dataset"] = dataset;
    j["seed"] = seed;
    j["jnd_order"] = jnd_order;
    j["folds"] = k;
    j["per_image"] = rows;
    j["avg"] = means_json(avg, true);
    j["plcc"] = plcc ? json(*plcc) : json(nullptr);
    j["baseline"] = baseline_json(baseline, baseline_avg);
    j["validation_loss"] = validation_loss;
    return j.dump(2) + "\n";
}

std::string baseline_report_json(std::span<const BaselineRow> rows) {
    return baseline_json(rows, baseline_means(rows)).dump(2) + "\n";
}

namespace {

json baseline_json(std::span<const BaselineRow> rows, const MetricMeans& avg) {
    json base = json::array();
    for (const BaselineRow& b : rows) {
        base.push_back({{"image_id", b.image_id},
                        {"fold", b.fold},
                        {"threshold", b.threshold},
                        {"jnd", b.gt_level},
                        {"jnd_pred", b.pred_level},
                        {"saturated", b.saturated},
                        {"delta_jnd", b.delta_jnd},
                        {"psnr", b.gt_psnr},
                        {"psnr_pred", b.pred_psnr},
                        {"delta_psnr", b.delta_psnr}});
    }
    return {{"per_image", base}, {"avg", means_json(avg, false)}};
}

}  // namespace

}  // namespace surfit
