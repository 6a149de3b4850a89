#ifndef TAB2IMG_BINNING_HPP
#define TAB2IMG_BINNING_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tab2img {

enum class BinKind { EQW, SPB, QTF, PR };

std::string bin_kind_name(BinKind kind);
BinKind bin_kind_from_name(const std::string& name);

struct BinningScheme {
    BinKind kind = BinKind::SPB;
    int k = 10;               // EQW/SPB/QTF 10, PR 2
    double eqw_min = 0.0;     // EQW only
    double eqw_max = 1.0;     // EQW only
    int quantile_count = 1000;  // QTF only; clamped to the training value count

    static BinningScheme eqw(int k = 10, double min = 0.0, double max = 1.0);
    static BinningScheme spb();
    static BinningScheme qtf(int quantile_count = 1000, int k = 10);
    static BinningScheme pr();
};

// The ten fixed upper break edges of the log-4 species binning; the implicit
// lower bound is 0 and consecutive non-terminal edges grow by exactly 4x.
const std::vector<double>& spb_breaks();

// A discretization rule learned from training data only. Bin index 0 is
// reserved for exact zero (absent, rendered as background); positive values
// fall into 1..k with left-open/right-closed intervals.
class FittedBinner {
public:
    // train_values is row-major n_train x d. EQW/SPB/PR ignore the data; QTF
    // learns one quantile table per feature column.
    static FittedBinner fit(const BinningScheme& scheme, const std::vector<double>& train_values,
                            std::size_t n_train, std::size_t d, const std::string& fitted_on = "");

    int bin(double x, std::size_t feature = 0) const;

    const BinningScheme& scheme() const { return scheme_; }
    int k() const { return scheme_.k; }
    const std::vector<double>& edges() const { return edges_; }
    const std::string& fitted_on() const { return fitted_on_; }
    std::size_t num_features() const { return quantiles_.size(); }

    void save(const std::string& path) const;
    static FittedBinner load(const std::string& path);

private:
    double qtf_uniform(double x, std::size_t feature) const;

    BinningScheme scheme_;
    std::vector<double> edges_;                    // EQW/SPB upper edges
    std::vector<std::vector<double>> quantiles_;   // QTF: per-feature quantile table
    std::vector<double> references_;               // QTF: cumulative probabilities
    std::string fitted_on_;
};

}  // namespace tab2img

#endif
