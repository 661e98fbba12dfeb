#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfit/baseline.hpp"
#include "surfit/io.hpp"
#include "surfit/metrics.hpp"
#include "surfit/regressor.hpp"

namespace surfit {

struct FoldPlan {
    int k = 0;
    std::uint64_t seed = 0;
    std::map<int, int> assignment;        // image id -> fold
    std::vector<std::vector<int>> folds;  // ascending ids per fold

    std::vector<int> train_images(int test_fold) const;
};

/// Shuffles the (sorted, unique) ids with `seed`, then deals them round-robin.
FoldPlan kfold_split(std::vector<int> image_ids, int k, std::uint64_t seed);

struct EvalDataset {
    std::string name;
    int jnd_order = 1;
    std::map<int, std::vector<double>> jnd_qf;  // raw QF annotations per image
    const FeatureStore* features = nullptr;
    std::map<int, PsnrCurve> psnr;
};

struct EvalConfig {
    MlpConfig mlp{};
    double p = 50.0;
    BhattacharyyaOptions bhattacharyya{BhattacharyyaScheme::qf_grid};
    int n_levels = 100;
};

struct BaselineRow {
    int image_id = 0;
    int fold = 0;
    double threshold = 0.0;
    int gt_level = 0;
    int pred_level = 0;
    bool saturated = false;
    int delta_jnd = 0;
    double gt_psnr = 0.0;
    double pred_psnr = 0.0;
    double delta_psnr = 0.0;
};

struct EvalReport {
    std::string dataset;
    std::uint64_t seed = 0;
    int jnd_order = 1;
    int k = 0;
    std::vector<ImageMetrics> per_image;  // ordered by fold, then image id
    std::vector<int> fold_of;             // parallel to per_image
    MetricMeans avg{};
    std::optional<double> plcc;  // PSNR at GT vs predicted p% JND; empty if undefined
    std::vector<BaselineRow> baseline;
    MetricMeans baseline_avg{};  // bhattacharyya is unused for the baseline
    std::vector<double> validation_loss;  // best validation L1 per fold

    std::string to_json() const;
};

/// Builds the dataset for one JND order from loaded files.
EvalDataset make_dataset(const JndSampleTable& table, int jnd_order, const FeatureStore& features,
                         std::map<int, PsnrCurve> psnr);

/// Ground-truth GEV per image, fitted by MLE on the QF axis.
std::map<int, GevParams> fit_ground_truth(const EvalDataset& data);

/// One record per (image, level 1..n_levels, patch) with the GT SUR as target.
/// The records view into `features`, which must outlive them.
std::vector<TrainRecord> training_records(const FeatureStore& features, const std::vector<int>& images,
                                          const std::map<int, GevParams>& gt, int n_levels, int patches);

/// Patch-averaged SUR prediction at levels 1..n_levels.
std::vector<double> predict_sur_curve(const MlpModel& model, const FeatureStore& features, int image_id,
                                      int n_levels);

/// PSNR-threshold baseline on the folds of `plan`. The threshold for each test fold is the mean PSNR at the ground-truth p% JND of
/// every other image.
std::vector<BaselineRow> run_baseline(const std::map<int, GevParams>& gt, const std::map<int, PsnrCurve>& psnr,
                                      const FoldPlan& plan, double p = 50.0, int n_levels = 100);

MetricMeans baseline_means(std::span<const BaselineRow> rows);
std::string baseline_report_json(std::span<const BaselineRow> rows);

EvalReport run_evaluation(const EvalDataset& data, const FoldPlan& plan, const EvalConfig& cfg);

}  // namespace surfit
