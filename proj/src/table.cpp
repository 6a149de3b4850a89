#include "tab2img/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tab2img/errors.hpp"

namespace tab2img {

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, delim)) out.push_back(cell);
    if (!line.empty() && line.back() == delim) out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

char detect_delim(const std::string& header) {
    const auto tabs = std::count(header.begin(), header.end(), '\t');
    const auto commas = std::count(header.begin(), header.end(), ',');
    return tabs >= commas ? '\t' : ',';
}

double parse_cell(const std::string& raw, std::size_t line_no, const std::string& feature) {
    const std::string s = strip(raw);
    if (s.empty()) throw DataError("line " + std::to_string(line_no) + ": empty cell for feature '" + feature + "'");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw DataError("line " + std::to_string(line_no) + ": non-numeric cell '" + s + "' for feature '" +
                        feature + "'");
    if (!std::isfinite(v))
        throw DataError("line " + std::to_string(line_no) + ": non-finite cell for feature '" + feature + "'");
    if (v < 0.0) throw DataError("line " + std::to_string(line_no) + ": negative value " + s);
    return v;
}

std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

// Two-column key/value file. Lookups are by key, so a header row is inert
// and needs no special handling.
std::unordered_map<std::string, std::string> load_two_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::unordered_map<std::string, std::string> out;
    std::string line;
    char delim = '\t';
    bool first = true;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        if (first) {
            delim = detect_delim(line);
            first = false;
        }
        auto cells = split_line(line, delim);
        if (cells.size() < 2) throw DataError("malformed two-column row in " + path + ": '" + line + "'");
        out[strip(cells[0])] = strip(cells[1]);
    }
    return out;
}

}  // namespace

AbundanceTable::AbundanceTable(std::string dataset_id, std::vector<std::string> sample_ids,
                               std::vector<std::string> feature_names, std::vector<double> values,
                               std::vector<int> labels, std::vector<std::string> taxonomy, bool presence)
    : dataset_id_(std::move(dataset_id)),
      sample_ids_(std::move(sample_ids)),
      feature_names_(std::move(feature_names)),
      values_(std::move(values)),
      labels_(std::move(labels)),
      taxonomy_(std::move(taxonomy)),
      presence_(presence) {
    validate();
}

void AbundanceTable::validate() {
    const std::size_t n = sample_ids_.size();
    const std::size_t d = feature_names_.size();
    if (d < 1) throw DataError("no features");
    if (n < 2) throw DataError("need at least 2 samples, got " + std::to_string(n));
    if (values_.size() != n * d) throw DataError("value matrix shape mismatch");
    if (labels_.size() != n) throw DataError("label count does not match sample count");
    if (taxonomy_.size() != d) throw DataError("taxonomy count does not match feature count");

    bool has0 = false, has1 = false;
    for (int l : labels_) {
        if (l == 0) has0 = true;
        else if (l == 1) has1 = true;
        else throw DataError("label must be 0 or 1, got " + std::to_string(l));
    }
    if (!has0 || !has1) throw DataError("labels must contain both classes");

    std::unordered_set<std::string> seen;
    for (const auto& f : feature_names_)
        if (!seen.insert(f).second) throw DataError("duplicate feature name: " + f);

    for (double v : values_) {
        if (!std::isfinite(v)) throw DataError("non-finite value in table");
        if (v < 0.0 || v > 1.0) throw DataError("value out of [0,1]: " + std::to_string(v));
    }

    if (!presence_) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < d; ++j) sum += value(i, j);
            if (std::fabs(sum - 1.0) > 1e-3)
                warnings_.push_back("sample '" + sample_ids_[i] + "' row sum " + std::to_string(sum) +
                                    " deviates from 1");
        }
    }
}

std::size_t AbundanceTable::count_label(int label) const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

AbundanceTable load_abundance_table(const std::string& data_path, const std::string& labels_path,
                                    const std::string& taxonomy_path) {
    std::ifstream in(data_path);
    if (!in) throw DataError("cannot open data file: " + data_path);

    std::string header;
    while (std::getline(in, header) && strip(header).empty()) {}
    if (strip(header).empty()) throw DataError("no samples in " + data_path);

    const char delim = detect_delim(header);
    auto head_cells = split_line(header, delim);
    if (head_cells.size() < 2) throw DataError("header has no feature columns in " + data_path);

    std::vector<std::string> features;
    features.reserve(head_cells.size() - 1);
    for (std::size_t j = 1; j < head_cells.size(); ++j) features.push_back(strip(head_cells[j]));

    std::vector<std::string> sample_ids;
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto cells = split_line(line, delim);
        if (cells.size() != head_cells.size())
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(head_cells.size()) + " columns, got " + std::to_string(cells.size()));
        sample_ids.push_back(strip(cells[0]));
        for (std::size_t j = 1; j < cells.size(); ++j)
            values.push_back(parse_cell(cells[j], line_no, features[j - 1]));
    }
    if (sample_ids.empty()) throw DataError("no samples in " + data_path);

    auto label_map = load_two_column(labels_path);
    std::vector<int> labels;
    labels.reserve(sample_ids.size());
    for (const auto& sid : sample_ids) {
        auto it = label_map.find(sid);
        if (it == label_map.end()) throw DataError("missing label for sample '" + sid + "'");
        const std::string& v = it->second;
        if (v == "0") labels.push_back(0);
        else if (v == "1") labels.push_back(1);
        else throw DataError("label for sample '" + sid + "' must be 0 or 1, got '" + v + "'");
    }

    std::vector<std::string> taxonomy(features.begin(), features.end());
    if (!taxonomy_path.empty()) {
        auto tax_map = load_two_column(taxonomy_path);
        for (std::size_t j = 0; j < features.size(); ++j) {
            auto it = tax_map.find(features[j]);
            if (it != tax_map.end()) taxonomy[j] = it->second;
        }
    }

    return AbundanceTable(stem_of(data_path), std::move(sample_ids), std::move(features), std::move(values),
                          std::move(labels), std::move(taxonomy));
}

FeatureOrder phylo_sort(const AbundanceTable& table) {
    const std::size_t d = table.num_features();
    FeatureOrder order;
    order.key = "phylogenetic";
    order.permutation.resize(d);
    std::iota(order.permutation.begin(), order.permutation.end(), std::size_t{0});
    for (std::size_t j = 0; j < d; ++j)
        if (table.taxonomy()[j] == table.feature_names()[j]) order.used_name_fallback = true;
    // Byte-wise comparison on the raw strings; stable to keep original column
    // order on ties.
    std::stable_sort(order.permutation.begin(), order.permutation.end(),
                     [&](std::size_t a, std::size_t b) { return table.taxonomy()[a] < table.taxonomy()[b]; });
    return order;
}

AbundanceTable apply_order(const AbundanceTable& table, const FeatureOrder& order) {
    const std::size_t n = table.num_samples();
    const std::size_t d = table.num_features();
    if (order.permutation.size() != d) throw DataError("feature order size mismatch");

    std::vector<std::string> features(d), taxonomy(d);
    std::vector<double> values(n * d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t src = order.permutation[j];
        features[j] = table.feature_names()[src];
        taxonomy[j] = table.taxonomy()[src];
        for (std::size_t i = 0; i < n; ++i) values[i * d + j] = table.value(i, src);
    }
    return AbundanceTable(table.dataset_id(), table.sample_ids(), std::move(features), std::move(values),
                          table.labels(), std::move(taxonomy), table.is_presence());
}

AbundanceTable to_presence(const AbundanceTable& table) {
    std::vector<double> values(table.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = table.values()[i] > 0.0 ? 1.0 : 0.0;
    return AbundanceTable(table.dataset_id(), table.sample_ids(), table.feature_names(), std::move(values),
                          table.labels(), table.taxonomy(), /*presence=*/true);
}

LogHistogram log_histogram(const AbundanceTable& table, double base) {
    if (base <= 1.0) throw ConfigError("histogram base must be > 1");
    LogHistogram hist;
    hist.base = base;

    const double log_base = std::log(base);
    long min_bucket = 0, max_bucket = 0;
    bool any = false;
    std::vector<long> buckets;
    buckets.reserve(table.values().size());
    for (double v : table.values()) {
        if (v == 0.0) {
            ++hist.zeros_excluded;
            continue;
        }
        const long b = static_cast<long>(std::floor(std::log(v) / log_base));
        buckets.push_back(b);
        if (!any) {
            min_bucket = max_bucket = b;
            any = true;
        } else {
            min_bucket = std::min(min_bucket, b);
            max_bucket = std::max(max_bucket, b);
        }
    }
    if (!any) throw DataError("empty histogram");

    const std::size_t nbins = static_cast<std::size_t>(max_bucket - min_bucket + 1);
    hist.counts.assign(nbins, 0);
    hist.edges.resize(nbins + 1);
    for (std::size_t i = 0; i <= nbins; ++i) hist.edges[i] = static_cast<double>(min_bucket + static_cast<long>(i));
    for (long b : buckets) ++hist.counts[static_cast<std::size_t>(b - min_bucket)];
    return hist;
}

void write_histogram_csv(const LogHistogram& hist, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << "edge_low,edge_high,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i)
        out << hist.edges[i] << "," << hist.edges[i + 1] << "," << hist.counts[i] << "\n";
    out << "# zeros_excluded," << hist.zeros_excluded << ",\n";
}

}  // namespace tab2img
