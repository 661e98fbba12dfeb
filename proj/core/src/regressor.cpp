#include "surfit/regressor.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "binary_io.hpp"
#include "surfit/error.hpp"
#include "surfit/rng.hpp"

namespace surfit {

namespace {

constexpr char kModelMagic[9] = "SURMLP01";

// Stream indices below this are shuffle streams; dropout streams sit above it.
constexpr std::uint64_t kDropoutStreamBase = 1u << 20;

struct Trace {
    std::vector<std::vector<double>> act;   // act[0] input, act[l + 1] output of layer l
    std::vector<std::vector<double>> gate;  // hidden layers: d act / d pre-activation
};

void run_forward(const MlpModel& m, std::span<const float> x, std::mt19937_64* rng, Trace& t) {
    const auto& layers = m.layers;
    if (static_cast<int>(x.size()) != layers.front().cols) {
        throw Error(ErrorCode::invalid_argument, "input length " + std::to_string(x.size()) +
                                                     " does not match the network input " +
                                                     std::to_string(layers.front().cols));
    }
    const double keep = 1.0 - m.config.dropout;
    t.act.resize(layers.size() + 1);
    t.gate.resize(layers.size() - 1);
    t.act[0].assign(x.begin(), x.end());
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const DenseLayer& L = layers[l];
        const std::vector<double>& in = t.act[l];
        std::vector<double>& out = t.act[l + 1];
        out.resize(static_cast<std::size_t>(L.rows));
        for (int i = 0; i < L.rows; ++i) {
            const double* w = L.weights.data() + static_cast<std::size_t>(i) * L.cols;
            double s = L.bias[static_cast<std::size_t>(i)];
            for (int j = 0; j < L.cols; ++j) s += w[j] * in[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = s;
        }
        if (l + 1 == layers.size()) break;
        std::vector<double>& g = t.gate[l];
        g.resize(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            double factor = out[i] > 0.0 ? 1.0 : 0.0;
            if (rng != nullptr && m.config.dropout > 0.0) {
                factor = uniform_open01(*rng) < keep ? factor / keep : 0.0;
            }
            g[i] = factor;
            out[i] *= factor;
        }
    }
}

std::vector<Example> examples_view(std::span<const TrainRecord> recs, std::vector<std::vector<float>>& storage,
                                   std::span<const std::size_t> index) {
    storage.resize(index.size());
    std::vector<Example> ex(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) {
        const TrainRecord& r = recs[index[k]];
        storage[k] = assemble_input(r.ref_features, r.dist_features);
        ex[k] = Example{storage[k], r.target};
    }
    return ex;
}

double validation_l1(const MlpModel& m, std::span<const TrainRecord> recs) {
    double s = 0.0;
    for (const TrainRecord& r : recs) {
        const std::vector<float> x = assemble_input(r.ref_features, r.dist_features);
        s += std::abs(forward(m, x) - r.target);
    }
    return s / static_cast<double>(recs.size());
}

void check_records(std::span<const TrainRecord> recs, const MlpConfig& cfg, const char* what) {
    for (const TrainRecord& r : recs) {
        if (static_cast<int>(3 * r.ref_features.size()) != cfg.input_dim) {
            throw Error(ErrorCode::invalid_argument, std::string(what) + " feature length does not match input_dim / 3");
        }
        if (!(r.target >= 0.0 && r.target <= 1.0)) {
            throw Error(ErrorCode::invalid_argument, std::string(what) + " target outside [0, 1]");
        }
    }
}

nlohmann::json config_json(const MlpModel& m) {
    const MlpConfig& c = m.config;
    return {{"input_dim", c.input_dim}, {"hidden", c.hidden},   {"dropout", c.dropout},
            {"lr", c.lr},               {"beta1", c.beta1},     {"beta2", c.beta2},
            {"epsilon", c.epsilon},     {"epochs", c.epochs},   {"batch", c.batch},
            {"patches", c.patches},     {"seed", c.seed},       {"best_validation_loss", m.best_validation_loss},
            {"best_epoch", m.best_epoch}};
}

}  // namespace

void MlpConfig::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::invalid_argument, msg); };
    if (input_dim <= 0) fail("input_dim must be positive");
    for (int h : hidden) {
        if (h <= 0) fail("hidden layer sizes must be positive");
    }
    if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must lie in [0, 1)");
    if (!(lr > 0.0)) fail("learning rate must be positive");
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) fail("Adam betas must lie in [0, 1)");
    if (!(epsilon > 0.0)) fail("Adam epsilon must be positive");
    if (epochs < 0) fail("epochs must be non-negative");
    if (batch <= 0) fail("batch size must be positive");
    if (patches <= 0) fail("patch count must be positive");
}

MlpModel init_model(const MlpConfig& cfg) {
    cfg.validate();
    MlpModel m;
    m.config = cfg;
    std::mt19937_64 rng = make_stream(cfg.seed, 0);
    int in = cfg.input_dim;
    std::vector<int> sizes = cfg.hidden;
    sizes.push_back(1);
    for (int out : sizes) {
        DenseLayer L;
        L.rows = out;
        L.cols = in;
        L.weights.resize(static_cast<std::size_t>(out) * static_cast<std::size_t>(in));
        L.bias.assign(static_cast<std::size_t>(out), 0.0);
        const double limit = std::sqrt(6.0 / in);
        for (double& w : L.weights) w = limit * (2.0 * uniform_open01(rng) - 1.0);
        m.layers.push_back(std::move(L));
        in = out;
    }
    return m;
}

std::vector<float> assemble_input(std::span<const float> ref_features, std::span<const float> dist_features) {
    if (ref_features.size() != dist_features.size()) {
        throw Error(ErrorCode::invalid_argument, "reference and distorted features differ in length");
    }
    const std::size_t d = ref_features.size();
    std::vector<float> x(3 * d);
    std::copy(ref_features.begin(), ref_features.end(), x.begin());
    std::copy(dist_features.begin(), dist_features.end(), x.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t i = 0; i < d; ++i) x[2 * d + i] = ref_features[i] - dist_features[i];
    return x;
}

double forward(const MlpModel& m, std::span<const float> x, bool training, std::mt19937_64* rng) {
    if (m.layers.empty()) throw Error(ErrorCode::invalid_argument, "model has no layers");
    if (training && rng == nullptr) throw Error(ErrorCode::invalid_argument, "training forward pass needs an RNG");
    Trace t;
    run_forward(m, x, training ? rng : nullptr, t);
    return t.act.back()[0];
}

double mean_l1(const MlpModel& m, std::span<const Example> examples) {
    if (examples.empty()) throw Error(ErrorCode::insufficient_data, "no examples");
    double s = 0.0;
    for (const Example& e : examples) s += std::abs(forward(m, e.x) - e.target);
    return s / static_cast<double>(examples.size());
}

double l1_loss_gradient(const MlpModel& m, std::span<const Example> batch, Gradient& g, std::mt19937_64* rng) {
    if (batch.empty()) throw Error(ErrorCode::insufficient_data, "empty batch");
    const auto& layers = m.layers;
    g.weights.resize(layers.size());
    g.bias.resize(layers.size());
    for (std::size_t l = 0; l < layers.size(); ++l) {
        g.weights[l].assign(layers[l].weights.size(), 0.0);
        g.bias[l].assign(layers[l].bias.size(), 0.0);
    }

    const double inv_n = 1.0 / static_cast<double>(batch.size());
    double loss = 0.0;
    Trace t;
    std::vector<double> delta, prev;
    for (const Example& e : batch) {
        run_forward(m, e.x, rng, t);
        const double r = t.act.back()[0] - e.target;
        loss += std::abs(r);
        const double sign = r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0);
        delta.assign(1, sign * inv_n);
        for (std::size_t l = layers.size(); l-- > 0;) {
            const DenseLayer& L = layers[l];
            const std::vector<double>& in = t.act[l];
            double* gw = g.weights[l].data();
            for (int i = 0; i < L.rows; ++i) {
                const double d = delta[static_cast<std::size_t>(i)];
                g.bias[l][static_cast<std::size_t>(i)] += d;
                if (d == 0.0) continue;
                double* row = gw + static_cast<std::size_t>(i) * L.cols;
                for (int j = 0; j < L.cols; ++j) row[j] += d * in[static_cast<std::size_t>(j)];
            }
            if (l == 0) break;
            prev.assign(static_cast<std::size_t>(L.cols), 0.0);
            for (int i = 0; i < L.rows; ++i) {
                const double d = delta[static_cast<std::size_t>(i)];
                if (d == 0.0) continue;
                const double* w = L.weights.data() + static_cast<std::size_t>(i) * L.cols;
                for (int j = 0; j < L.cols; ++j) prev[static_cast<std::size_t>(j)] += w[j] * d;
            }
            const std::vector<double>& gate = t.gate[l - 1];
            for (std::size_t j = 0; j < prev.size(); ++j) prev[j] *= gate[j];
            delta.swap(prev);
        }
    }
    return loss * inv_n;
}

MlpModel train(std::span<const TrainRecord> records, std::span<const TrainRecord> validation, const MlpConfig& cfg) {
    if (records.empty()) throw Error(ErrorCode::insufficient_data, "empty training set");
    if (validation.empty()) throw Error(ErrorCode::insufficient_data, "empty validation set");
    check_records(records, cfg, "training");
    check_records(validation, cfg, "validation");

    MlpModel m = init_model(cfg);
    m.best_validation_loss = validation_l1(m, validation);
    m.best_epoch = 0;
    std::vector<DenseLayer> best = m.layers;

    struct Moments {
        std::vector<double> m, v;
    };
    std::vector<Moments> w_state(m.layers.size()), b_state(m.layers.size());
    for (std::size_t l = 0; l < m.layers.size(); ++l) {
        w_state[l] = {std::vector<double>(m.layers[l].weights.size()), std::vector<double>(m.layers[l].weights.size())};
        b_state[l] = {std::vector<double>(m.layers[l].bias.size()), std::vector<double>(m.layers[l].bias.size())};
    }
    auto adam = [&](std::vector<double>& theta, const std::vector<double>& grad, Moments& s, double c1, double c2) {
        for (std::size_t i = 0; i < theta.size(); ++i) {
            s.m[i] = cfg.beta1 * s.m[i] + (1.0 - cfg.beta1) * grad[i];
            s.v[i] = cfg.beta2 * s.v[i] + (1.0 - cfg.beta2) * grad[i] * grad[i];
            theta[i] -= cfg.lr * (s.m[i] / c1) / (std::sqrt(s.v[i] / c2) + cfg.epsilon);
        }
    };

    std::vector<std::size_t> order(records.size());
    std::vector<std::vector<float>> storage;
    Gradient g;
    long long step = 0;
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::mt19937_64 shuffle_rng = make_stream(cfg.seed, static_cast<std::uint64_t>(epoch));
        shuffle_in_place(order, shuffle_rng);
        std::mt19937_64 dropout_rng = make_stream(cfg.seed, kDropoutStreamBase + static_cast<std::uint64_t>(epoch));

        for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(cfg.batch)) {
            const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(cfg.batch));
            const auto batch = examples_view(records, storage, std::span(order).subspan(start, end - start));
            const double loss = l1_loss_gradient(m, batch, g, &dropout_rng);
            if (!std::isfinite(loss)) {
                throw Error(ErrorCode::training_failure, "non-finite training loss at epoch " + std::to_string(epoch));
            }
            ++step;
            const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
            const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
            for (std::size_t l = 0; l < m.layers.size(); ++l) {
                adam(m.layers[l].weights, g.weights[l], w_state[l], c1, c2);
                adam(m.layers[l].bias, g.bias[l], b_state[l], c1, c2);
            }
        }

        const double val = validation_l1(m, validation);
        if (!std::isfinite(val)) {
            throw Error(ErrorCode::training_failure, "non-finite validation loss at epoch " + std::to_string(epoch));
        }
        if (val < m.best_validation_loss) {
            m.best_validation_loss = val;
            m.best_epoch = epoch;
            best = m.layers;
        }
    }
    m.layers = std::move(best);
    return m;
}

double predict_image_level(const MlpModel& m, std::span<const std::vector<float>> patches) {
    if (static_cast<int>(patches.size()) != m.config.patches) {
        throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(m.config.patches) + " patches, got " +
                                                     std::to_string(patches.size()));
    }
    double s = 0.0;
    for (const auto& x : patches) s += forward(m, x);
    return std::clamp(s / static_cast<double>(patches.size()), 0.0, 1.0);
}

void write_model(std::ostream& out, const MlpModel& m) {
    out.write(kModelMagic, 8);
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(m.layers.size()));
    for (const DenseLayer& L : m.layers) {
        detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(L.rows));
        detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(L.cols));
    }
    for (const DenseLayer& L : m.layers) {
        for (double w : L.weights) detail::put_le<float>(out, static_cast<float>(w));
        for (double b : L.bias) detail::put_le<float>(out, static_cast<float>(b));
    }
    const std::string cfg = config_json(m).dump();
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(cfg.size()));
    out.write(cfg.data(), static_cast<std::streamsize>(cfg.size()));
    if (!out) throw Error(ErrorCode::io_error, "failed to write model");
}

MlpModel read_model(std::istream& in) {
    detail::expect_magic(in, kModelMagic);
    const auto count = detail::get_le<std::uint32_t>(in, "layer count");
    if (count == 0 || count > 64) throw Error(ErrorCode::parse_error, "implausible layer count");
    MlpModel m;
    m.layers.resize(count);
    for (DenseLayer& L : m.layers) {
        L.rows = static_cast<int>(detail::get_le<std::uint32_t>(in, "layer rows"));
        L.cols = static_cast<int>(detail::get_le<std::uint32_t>(in, "layer cols"));
        if (L.rows <= 0 || L.cols <= 0 || L.rows > (1 << 24) || L.cols > (1 << 24)) {
            throw Error(ErrorCode::parse_error, "implausible layer shape");
        }
    }
    for (std::size_t l = 0; l < m.layers.size(); ++l) {
        DenseLayer& L = m.layers[l];
        if (l > 0 && L.cols != m.layers[l - 1].rows) throw Error(ErrorCode::parse_error, "layer shapes do not chain");
        L.weights.resize(static_cast<std::size_t>(L.rows) * static_cast<std::size_t>(L.cols));
        L.bias.resize(static_cast<std::size_t>(L.rows));
        for (double& w : L.weights) w = detail::get_le<float>(in, "weights");
        for (double& b : L.bias) b = detail::get_le<float>(in, "bias");
    }
    if (m.layers.back().rows != 1) throw Error(ErrorCode::parse_error, "output layer must have one unit");

    const auto len = detail::get_le<std::uint32_t>(in, "config length");
    std::string blob(len, '\0');
    if (!in.read(blob.data(), static_cast<std::streamsize>(len))) {
        throw Error(ErrorCode::parse_error, "truncated file while reading config");
    }
    try {
        const auto j = nlohmann::json::parse(blob);
        MlpConfig& c = m.config;
        c.input_dim = j.at("input_dim").get<int>();
        c.hidden = j.at("hidden").get<std::vector<int>>();
        c.dropout = j.at("dropout").get<double>();
        c.lr = j.at("lr").get<double>();
        c.beta1 = j.at("beta1").get<double>();
        c.beta2 = j.at("beta2").get<double>();
        c.epsilon = j.at("epsilon").get<double>();
        c.epochs = j.at("epochs").get<int>();
        c.batch = j.at("batch").get<int>();
        c.patches = j.at("patches").get<int>();
        c.seed = j.at("seed").get<std::uint64_t>();
        m.best_validation_loss = j.at("best_validation_loss").get<double>();
        m.best_epoch = j.at("best_epoch").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad model config: ") + e.what());
    }
    m.config.validate();
    if (m.layers.front().cols != m.config.input_dim || m.layers.size() != m.config.hidden.size() + 1) {
        throw Error(ErrorCode::parse_error, "model config disagrees with the stored layer shapes");
    }
    return m;
}

}  // namespace surfit
