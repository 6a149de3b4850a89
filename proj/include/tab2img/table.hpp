#ifndef TAB2IMG_TABLE_HPP
#define TAB2IMG_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tab2img {

// Sample-by-feature relative abundance table with binary labels and one
// taxonomy string per feature. Immutable after load; operations return
// new tables.
class AbundanceTable {
public:
    AbundanceTable() = default;
    AbundanceTable(std::string dataset_id,
                   std::vector<std::string> sample_ids,
                   std::vector<std::string> feature_names,
                   std::vector<double> values,  // row-major, N x d
                   std::vector<int> labels,
                   std::vector<std::string> taxonomy,
                   bool presence = false);

    const std::string& dataset_id() const { return dataset_id_; }
    std::size_t num_samples() const { return sample_ids_.size(); }
    std::size_t num_features() const { return feature_names_.size(); }
    const std::vector<std::string>& sample_ids() const { return sample_ids_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::string>& taxonomy() const { return taxonomy_; }
    bool is_presence() const { return presence_; }

    double value(std::size_t sample, std::size_t feature) const {
        return values_[sample * feature_names_.size() + feature];
    }
    const std::vector<double>& values() const { return values_; }

    // Row-sum warnings collected during validation (empty when clean).
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Counts per class label {0, 1}.
    std::size_t count_label(int label) const;

private:
    void validate();

    std::string dataset_id_;
    std::vector<std::string> sample_ids_;
    std::vector<std::string> feature_names_;
    std::vector<double> values_;
    std::vector<int> labels_;
    std::vector<std::string> taxonomy_;
    bool presence_ = false;
    std::vector<std::string> warnings_;
};

// Permutation over feature columns plus the criterion that produced it.
struct FeatureOrder {
    std::vector<std::size_t> permutation;  // new position i holds old column permutation[i]
    std::string key;                       // "phylogenetic" or "original"
    // Set when one or more features had no taxonomy string and the feature
    // name itself was used; surfaced in run manifests.
    bool used_name_fallback = false;
};

// Histogram of log-transformed values; exact zeros are excluded and counted.
struct LogHistogram {
    double base = 4.0;
    std::vector<double> edges;        // log-space break points, strictly increasing, unit width
    std::vector<std::uint64_t> counts;  // counts.size() == edges.size() - 1
    std::uint64_t zeros_excluded = 0;
};

// Loads a delimited abundance table (header row = feature names, first column
// = sample id) plus a two-column labels file; taxonomy_path may be empty.
AbundanceTable load_abundance_table(const std::string& data_path,
                                    const std::string& labels_path,
                                    const std::string& taxonomy_path = "");

// Stable ascending byte-wise sort of features by taxonomy string.
FeatureOrder phylo_sort(const AbundanceTable& table);

// Applies a feature order, returning the column-permuted table.
AbundanceTable apply_order(const AbundanceTable& table, const FeatureOrder& order);

// value > 0 -> 1.0, value == 0 -> 0.0. Row-sum validation is suspended for
// the result.
AbundanceTable to_presence(const AbundanceTable& table);

LogHistogram log_histogram(const AbundanceTable& table, double base = 4.0);

void write_histogram_csv(const LogHistogram& hist, const std::string& path);

}  // namespace tab2img

#endif
