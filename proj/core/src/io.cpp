#include "surfit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "binary_io.hpp"
#include "surfit/error.hpp"

namespace surfit {

namespace {

using nlohmann::json;

constexpr char kFeatureMagic[9] = "SURFEAT1";
constexpr std::uint32_t kFeatureVersion = 1;
constexpr std::uint32_t kMaxFeatureDim = 1u << 24;

std::string where(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line) + ": "; }

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    return ec == std::errc() && ptr == end;
}

// Reads lines, checks the header and hands each data line to `row`.
template <typename RowFn>
void for_each_csv_row(std::istream& in, const std::string& source, std::string_view header, std::size_t fields,
                      RowFn row) {
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != header) {
                throw Error(ErrorCode::parse_error, where(source, line_no) + "expected header '" +
                                                        std::string(header) + "'");
            }
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != fields) {
            throw Error(ErrorCode::parse_error, where(source, line_no) + "expected " + std::to_string(fields) +
                                                    " fields, found " + std::to_string(f.size()));
        }
        row(f, line_no);
    }
    if (!saw_header) throw Error(ErrorCode::parse_error, source + ": empty file");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::ifstream open_input(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    return in;
}

json gev_json(const GevParams& p) { return {{"xi", p.xi}, {"mu", p.mu}, {"sigma", p.sigma}}; }

}  // namespace

std::vector<double> JndSampleTable::samples(int image_id, int jnd_order) const {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.image_id == image_id && r.jnd_order == jnd_order) out.push_back(r.qf);
    }
    return out;
}

std::vector<int> JndSampleTable::image_ids(int jnd_order) const {
    std::set<int> ids;
    for (const auto& r : rows) {
        if (r.jnd_order == jnd_order) ids.insert(r.image_id);
    }
    return {ids.begin(), ids.end()};
}

std::string JndSampleTable::dataset() const { return rows.empty() ? std::string() : rows.front().dataset; }

JndSampleTable parse_jnd_csv(std::istream& in, const std::string& source) {
    JndSampleTable table;
    // (dataset, image, subject) -> qf indexed by order, with the line it came from.
    std::map<std::tuple<std::string, int, int>, std::map<int, std::pair<int, std::size_t>>> chains;
    for_each_csv_row(in, source, "dataset,image_id,subject_id,jnd_order,qf", 5,
                     [&](const std::vector<std::string_view>& f, std::size_t line) {
                         JndRecord r;
                         r.dataset = std::string(f[0]);
                         if (r.dataset.empty()) throw Error(ErrorCode::parse_error, where(source, line) + "empty dataset tag");
                         if (!parse_number(f[1], r.image_id) || !parse_number(f[2], r.subject_id) ||
                             !parse_number(f[3], r.jnd_order)) {
                             throw Error(ErrorCode::parse_error, where(source, line) + "malformed integer field");
                         }
                         double qf = 0.0;
                         if (!parse_number(f[4], qf)) {
                             throw Error(ErrorCode::parse_error, where(source, line) + "malformed qf");
                         }
                         if (qf != std::floor(qf) || qf < 1.0 || qf > 100.0) {
                             throw Error(ErrorCode::validation_error,
                                         where(source, line) + "qf must be an integer in [1, 100]");
                         }
                         r.qf = static_cast<int>(qf);
                         if (r.jnd_order < 1 || r.jnd_order > 3) {
                             throw Error(ErrorCode::validation_error, where(source, line) + "jnd_order must be 1, 2 or 3");
                         }
                         auto& chain = chains[{r.dataset, r.image_id, r.subject_id}];
                         if (!chain.emplace(r.jnd_order, std::pair{r.qf, line}).second) {
                             throw Error(ErrorCode::validation_error,
                                         where(source, line) + "duplicate annotation for this subject and order");
                         }
                         table.rows.push_back(std::move(r));
                     });
    for (const auto& [key, chain] : chains) {
        const std::pair<int, std::size_t>* prev = nullptr;
        for (const auto& [order, entry] : chain) {
            if (prev != nullptr && entry.first >= prev->first) {
                throw Error(ErrorCode::validation_error,
                            where(source, std::max(entry.second, prev->second)) +
                                "qf must decrease strictly with jnd_order for subject " +
                                std::to_string(std::get<2>(key)) + " of image " + std::to_string(std::get<1>(key)));
            }
            prev = &entry;
        }
    }
    return table;
}

JndSampleTable load_jnd_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_jnd_csv(in, path.string());
}

void write_jnd_csv(std::ostream& out, const JndSampleTable& table) {
    out << "dataset,image_id,subject_id,jnd_order,qf\n";
    for (const auto& r : table.rows) {
        out << r.dataset << ',' << r.image_id << ',' << r.subject_id << ',' << r.jnd_order << ',' << r.qf << '\n';
    }
}

std::map<int, PsnrCurve> parse_psnr_csv(std::istream& in, const std::string& source) {
    std::map<int, std::map<int, double>> levels;
    for_each_csv_row(in, source, "image_id,level,psnr_db", 3,
                     [&](const std::vector<std::string_view>& f, std::size_t line) {
                         int image = 0, level = 0;
                         double psnr = 0.0;
                         if (!parse_number(f[0], image) || !parse_number(f[1], level) || !parse_number(f[2], psnr)) {
                             throw Error(ErrorCode::parse_error, where(source, line) + "malformed field");
                         }
                         if (level < 1 || level > kMaxFeatureLevel) {
                             throw Error(ErrorCode::validation_error, where(source, line) + "level outside 1..100");
                         }
                         if (!std::isfinite(psnr) || psnr <= 0.0) {
                             throw Error(ErrorCode::validation_error, where(source, line) + "PSNR must be finite and positive");
                         }
                         if (!levels[image].emplace(level, psnr).second) {
                             throw Error(ErrorCode::validation_error, where(source, line) + "duplicate level");
                         }
                     });
    std::map<int, PsnrCurve> curves;
    for (const auto& [image, by_level] : levels) {
        const int n = by_level.rbegin()->first;
        if (static_cast<int>(by_level.size()) != n) {
            throw Error(ErrorCode::validation_error,
                        source + ": image " + std::to_string(image) + " does not cover levels 1.." + std::to_string(n));
        }
        PsnrCurve c;
        c.image_id = image;
        for (const auto& [level, psnr] : by_level) c.psnr.push_back(psnr);
        curves.emplace(image, std::move(c));
    }
    return curves;
}

std::map<int, PsnrCurve> load_psnr_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_psnr_csv(in, path.string());
}

void write_psnr_csv(std::ostream& out, const std::map<int, PsnrCurve>& curves) {
    out << "image_id,level,psnr_db\n";
    for (const auto& [image, c] : curves) {
        for (int level = 1; level <= c.n_levels(); ++level) {
            out << image << ',' << level << ',' << format_double(c.at(level)) << '\n';
        }
    }
}

std::map<int, std::vector<double>> parse_sur_csv(std::istream& in, const std::string& source) {
    std::map<int, std::map<int, double>> levels;
    for_each_csv_row(in, source, "image_id,level,sur", 3, [&](const std::vector<std::string_view>& f, std::size_t line) {
        int image = 0, level = 0;
        double sur = 0.0;
        if (!parse_number(f[0], image) || !parse_number(f[1], level) || !parse_number(f[2], sur)) {
            throw Error(ErrorCode::parse_error, where(source, line) + "malformed field");
        }
        if (level < 1) throw Error(ErrorCode::validation_error, where(source, line) + "level must be at least 1");
        if (!(sur >= 0.0 && sur <= 1.0)) throw Error(ErrorCode::validation_error, where(source, line) + "SUR outside [0, 1]");
        if (!levels[image].emplace(level, sur).second) {
            throw Error(ErrorCode::validation_error, where(source, line) + "duplicate level");
        }
    });
    std::map<int, std::vector<double>> out;
    for (const auto& [image, by_level] : levels) {
        if (static_cast<int>(by_level.size()) != by_level.rbegin()->first) {
            throw Error(ErrorCode::validation_error, source + ": image " + std::to_string(image) + " has gaps in its levels");
        }
        auto& v = out[image];
        for (const auto& [level, sur] : by_level) v.push_back(sur);
    }
    return out;
}

std::map<int, std::vector<double>> load_sur_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_sur_csv(in, path.string());
}

std::vector<ParamPair> parse_param_pairs_csv(std::istream& in, const std::string& source) {
    std::vector<ParamPair> out;
    for_each_csv_row(in, source, "image_id,gt_xi,gt_mu,gt_sigma,pred_xi,pred_mu,pred_sigma", 7,
                     [&](const std::vector<std::string_view>& f, std::size_t line) {
                         ParamPair p;
                         if (!parse_number(f[0], p.image_id) || !parse_number(f[1], p.gt.xi) ||
                             !parse_number(f[2], p.gt.mu) || !parse_number(f[3], p.gt.sigma) ||
                             !parse_number(f[4], p.pred.xi) || !parse_number(f[5], p.pred.mu) ||
                             !parse_number(f[6], p.pred.sigma)) {
                             throw Error(ErrorCode::parse_error, where(source, line) + "malformed field");
                         }
                         if (!is_valid(p.gt) || !is_valid(p.pred)) {
                             throw Error(ErrorCode::validation_error, where(source, line) + "invalid GEV parameters");
                         }
                         out.push_back(p);
                     });
    return out;
}

std::vector<ParamPair> load_param_pairs_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_param_pairs_csv(in, path.string());
}

void FeatureStore::add(const FeatureKey& key, std::span<const float> values) {
    if (values.size() != dim_) {
        throw Error(ErrorCode::validation_error, "feature vector length " + std::to_string(values.size()) +
                                                     " differs from store dimension " + std::to_string(dim_));
    }
    if (key.level > kMaxFeatureLevel || key.patch_id > kMaxPatchId) {
        throw Error(ErrorCode::validation_error, "feature key outside level 0..100 / patch 0..4");
    }
    if (index_.contains(key)) {
        throw Error(ErrorCode::validation_error, "duplicate feature key (image " + std::to_string(key.image_id) +
                                                     ", level " + std::to_string(key.level) + ", patch " +
                                                     std::to_string(key.patch_id) + ")");
    }
    index_.emplace(key, data_.size());
    data_.insert(data_.end(), values.begin(), values.end());
}

std::span<const float> FeatureStore::get(const FeatureKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) {
        throw Error(ErrorCode::missing_data, "no features for image " + std::to_string(key.image_id) + ", level " +
                                                 std::to_string(key.level) + ", patch " + std::to_string(key.patch_id));
    }
    return std::span<const float>(data_).subspan(it->second, dim_);
}

std::vector<FeatureKey> FeatureStore::keys() const {
    std::vector<FeatureKey> out;
    out.reserve(index_.size());
    for (const auto& [k, offset] : index_) out.push_back(k);
    return out;
}

FeatureStore parse_features(std::istream& in) {
    detail::expect_magic(in, kFeatureMagic);
    const auto version = detail::get_le<std::uint32_t>(in, "version");
    if (version != kFeatureVersion) {
        throw Error(ErrorCode::parse_error, "unsupported feature file version " + std::to_string(version));
    }
    const auto dim = detail::get_le<std::uint32_t>(in, "dimension");
    const auto count = detail::get_le<std::uint32_t>(in, "record count");
    if (dim > kMaxFeatureDim) throw Error(ErrorCode::parse_error, "implausible feature dimension " + std::to_string(dim));
    FeatureStore store(dim);
    std::vector<float> values(dim);
    for (std::uint32_t r = 0; r < count; ++r) {
        FeatureKey key;
        key.image_id = detail::get_le<std::uint32_t>(in, "record image id");
        key.level = detail::get_le<std::uint16_t>(in, "record level");
        key.patch_id = detail::get_le<std::uint16_t>(in, "record patch id");
        for (float& v : values) v = detail::get_le<float>(in, "feature values");
        store.add(key, values);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw Error(ErrorCode::parse_error, "trailing bytes after the last feature record");
    }
    return store;
}

FeatureStore read_features(const std::filesystem::path& path) {
    auto in = open_input(path, std::ios::in | std::ios::binary);
    return parse_features(in);
}

void write_features(std::ostream& out, const FeatureStore& store) {
    out.write(kFeatureMagic, 8);
    detail::put_le<std::uint32_t>(out, kFeatureVersion);
    detail::put_le<std::uint32_t>(out, store.dim());
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(store.size()));
    for (const FeatureKey& k : store.keys()) {
        detail::put_le<std::uint32_t>(out, k.image_id);
        detail::put_le<std::uint16_t>(out, k.level);
        detail::put_le<std::uint16_t>(out, k.patch_id);
        for (float v : store.get(k)) detail::put_le<float>(out, v);
    }
    if (!out) throw Error(ErrorCode::io_error, "failed to write feature store");
}

std::string fit_result_json(const FitResult& fit) {
    json j;
    j["family"] = std::string(family_name(fit.family));
    const auto names = parameter_names(fit.family);
    for (std::size_t i = 0; i < names.size() && i < fit.params.size(); ++i) {
        j[std::string(names[i])] = number_or_null(fit.params[i]);
    }
    j["nll"] = number_or_null(fit.nll);
    j["converged"] = fit.converged;
    return j.dump(2);
}

FitResult parse_fit_result_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        FitResult fit;
        fit.family = parse_family(j.at("family").get<std::string>());
        for (std::string_view name : parameter_names(fit.family)) {
            fit.params.push_back(j.at(std::string(name)).get<double>());
        }
        const auto& nll = j.at("nll");
        fit.nll = nll.is_null() ? std::numeric_limits<double>::infinity() : nll.get<double>();
        fit.converged = j.at("converged").get<bool>();
        return fit;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad parameter JSON: ") + e.what());
    }
}

std::string ranking_json(const ModelRanking& ranking) {
    json rows = json::array();
    for (const auto& f : ranking.families) {
        rows.push_back({{"family", std::string(family_name(f.family))},
                        {"mean_nll", number_or_null(f.mean_nll)},
                        {"log_likelihood_rank", f.nll_rank},
                        {"fit_failures", f.fit_failures},
                        {"ad_reject", f.ad_rejections},
                        {"ad_rank", f.ad_rank}});
    }
    json excluded = json::array();
    for (Family f : ranking.excluded) excluded.push_back(std::string(family_name(f)));
    return json{{"images", ranking.image_count},
                {"families", rows},
                {"excluded", excluded},
                {"diagnostics", ranking.diagnostics}}
        .dump(2);
}

std::string image_metrics_json(std::span<const ImageMetrics> rows) {
    json out = json::array();
    for (const auto& m : rows) {
        out.push_back({{"image_id", m.image_id},
                       {"gt", gev_json(m.gt)},
                       {"pred", gev_json(m.pred)},
                       {"bhattacharyya", number_or_null(m.bhattacharyya)},
                       {"jnd", m.gt_level},
                       {"jnd_pred", m.pred_level},
                       {"delta_jnd", m.delta_jnd},
                       {"psnr", m.gt_psnr},
                       {"psnr_pred", m.pred_psnr},
                       {"delta_psnr", m.delta_psnr}});
    }
    return out.dump(2);
}

std::string read_text_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::out | std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path.string() + "'");
}

}  // namespace surfit
