#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "surfit/baseline.hpp"
#include "surfit/distributions.hpp"
#include "surfit/goodness_of_fit.hpp"
#include "surfit/metrics.hpp"

namespace surfit {

struct JndRecord {
    std::string dataset;
    int image_id = 0;
    int subject_id = 0;
    int jnd_order = 1;  // 1..3
    int qf = 0;         // 1..100
};

struct JndSampleTable {
    std::vector<JndRecord> rows;

    /// QF annotations of `image_id` at `jnd_order`, in file order.
    std::vector<double> samples(int image_id, int jnd_order) const;
    /// Image ids with at least one annotation at `jnd_order`, ascending.
    std::vector<int> image_ids(int jnd_order) const;
    /// Dataset tag of the first row; empty for an empty table.
    std::string dataset() const;
};

/// Parses `dataset,image_id,subject_id,jnd_order,qf`. `source` names the
/// input in error messages, which also carry the 1-based line number.
JndSampleTable parse_jnd_csv(std::istream& in, const std::string& source = "<input>");
JndSampleTable load_jnd_csv(const std::filesystem::path& path);
void write_jnd_csv(std::ostream& out, const JndSampleTable& table);

/// Parses `image_id,level,psnr_db`; each image must cover levels 1..N once.
std::map<int, PsnrCurve> parse_psnr_csv(std::istream& in, const std::string& source = "<input>");
std::map<int, PsnrCurve> load_psnr_csv(const std::filesystem::path& path);
void write_psnr_csv(std::ostream& out, const std::map<int, PsnrCurve>& curves);

/// Parses `image_id,level,sur`; returns SUR(1..N) per image.
std::map<int, std::vector<double>> parse_sur_csv(std::istream& in, const std::string& source = "<input>");
std::map<int, std::vector<double>> load_sur_csv(const std::filesystem::path& path);

struct ParamPair {
    int image_id = 0;
    GevParams gt{};
    GevParams pred{};
};

/// Parses `image_id,gt_xi,gt_mu,gt_sigma,pred_xi,pred_mu,pred_sigma`.
std::vector<ParamPair> parse_param_pairs_csv(std::istream& in, const std::string& source = "<input>");
std::vector<ParamPair> load_param_pairs_csv(const std::filesystem::path& path);

inline constexpr int kMaxFeatureLevel = 100;  // level 0 is the reference image
inline constexpr int kMaxPatchId = 4;

struct FeatureKey {
    std::uint32_t image_id = 0;
    std::uint16_t level = 0;
    std::uint16_t patch_id = 0;

    auto operator<=>(const FeatureKey&) const = default;
};

/// Fixed-dimension float vectors keyed by (image, level, patch).
class FeatureStore {
public:
    explicit FeatureStore(std::uint32_t dim = 0) : dim_(dim) {}

    std::uint32_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return index_.size(); }

    /// Throws validation_error on a duplicate key, a bad key or a wrong length.
    void add(const FeatureKey& key, std::span<const float> values);
    bool contains(const FeatureKey& key) const { return index_.contains(key); }
    /// Throws missing_data when absent.
    std::span<const float> get(const FeatureKey& key) const;

    /// Keys in ascending order.
    std::vector<FeatureKey> keys() const;

private:
    std::uint32_t dim_;
    std::vector<float> data_;
    std::map<FeatureKey, std::size_t> index_;
};

FeatureStore parse_features(std::istream& in);
FeatureStore read_features(const std::filesystem::path& path);
/// Records are written in ascending key order.
void write_features(std::ostream& out, const FeatureStore& store);

/// {"family":..., <named params>..., "nll":..., "converged":...}
std::string fit_result_json(const FitResult& fit);
FitResult parse_fit_result_json(const std::string& text);

std::string ranking_json(const ModelRanking& ranking);

/// One JSON object per image: parameters, levels, PSNRs and distances.
std::string image_metrics_json(std::span<const ImageMetrics> rows);

/// Reads a whole file; throws io_error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace surfit
