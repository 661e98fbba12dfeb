#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace surfit {

struct MlpConfig {
    int input_dim = 30144;
    std::vector<int> hidden{512, 256, 128};
    double dropout = 0.25;
    double lr = 1e-5;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int epochs = 30;
    int batch = 16;
    int patches = 5;
    std::uint64_t seed = 0;

    /// Throws invalid_argument when a field is out of range.
    void validate() const;
};

struct DenseLayer {
    int rows = 0;  // outputs
    int cols = 0;  // inputs
    std::vector<double> weights;  // row-major rows x cols
    std::vector<double> bias;     // rows
};

struct MlpModel {
    MlpConfig config;
    std::vector<DenseLayer> layers;
    double best_validation_loss = 0.0;
    int best_epoch = 0;
};

/// He-uniform weights, zero biases, drawn from the config seed.
MlpModel init_model(const MlpConfig& cfg);

/// [ref, dist, ref - dist].
std::vector<float> assemble_input(std::span<const float> ref_features, std::span<const float> dist_features);

/// Scalar output. When `training` is set, inverted dropout is applied to every
/// hidden layer using `rng`, which must then be non-null.
double forward(const MlpModel& m, std::span<const float> x, bool training = false, std::mt19937_64* rng = nullptr);

struct Example {
    std::span<const float> x;  // assembled input
    double target = 0.0;
};

double mean_l1(const MlpModel& m, std::span<const Example> examples);

struct Gradient {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> bias;
};

/// Mean L1 loss over `batch` and its gradient with respect to every parameter.
/// The subgradient at zero residual is 0. Dropout is applied when `rng` is set.
double l1_loss_gradient(const MlpModel& m, std::span<const Example> batch, Gradient& g,
                        std::mt19937_64* rng = nullptr);

struct TrainRecord {
    std::span<const float> ref_features;
    std::span<const float> dist_features;
    double target = 0.0;  // SUR at this level
    int image_id = 0;
    int level = 0;
    int patch_id = 0;
};

/// Adam on mean L1 loss. Validation L1 is measured before training (epoch 0)
/// and after every epoch; the parameters of the best epoch are returned.
MlpModel train(std::span<const TrainRecord> records, std::span<const TrainRecord> validation, const MlpConfig& cfg);

/// Mean of per-patch predictions clamped to [0, 1].
double predict_image_level(const MlpModel& m, std::span<const std::vector<float>> patches);

void write_model(std::ostream& out, const MlpModel& m);
MlpModel read_model(std::istream& in);

}  // namespace surfit
