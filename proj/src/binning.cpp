#include "tab2img/binning.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "tab2img/errors.hpp"

namespace tab2img {

using nlohmann::json;

std::string bin_kind_name(BinKind kind) {
    switch (kind) {
        case BinKind::EQW: return "EQW";
        case BinKind::SPB: return "SPB";
        case BinKind::QTF: return "QTF";
        case BinKind::PR: return "PR";
    }
    return "?";
}

BinKind bin_kind_from_name(const std::string& name) {
    if (name == "EQW" || name == "eqw") return BinKind::EQW;
    if (name == "SPB" || name == "spb") return BinKind::SPB;
    if (name == "QTF" || name == "qtf") return BinKind::QTF;
    if (name == "PR" || name == "pr") return BinKind::PR;
    throw ConfigError("unknown binning scheme: " + name);
}

BinningScheme BinningScheme::eqw(int k, double min, double max) {
    if (k < 2) throw ConfigError("EQW needs k >= 2");
    if (!(min < max)) throw ConfigError("EQW needs min < max");
    BinningScheme s;
    s.kind = BinKind::EQW;
    s.k = k;
    s.eqw_min = min;
    s.eqw_max = max;
    return s;
}

BinningScheme BinningScheme::spb() {
    BinningScheme s;
    s.kind = BinKind::SPB;
    s.k = 10;
    return s;
}

BinningScheme BinningScheme::qtf(int quantile_count, int k) {
    if (k < 2) throw ConfigError("QTF needs k >= 2");
    if (quantile_count < 2) throw ConfigError("QTF needs at least 2 quantiles");
    BinningScheme s;
    s.kind = BinKind::QTF;
    s.k = k;
    s.quantile_count = quantile_count;
    return s;
}

BinningScheme BinningScheme::pr() {
    BinningScheme s;
    s.kind = BinKind::PR;
    s.k = 2;
    return s;
}

const std::vector<double>& spb_breaks() {
    // Upper edges from 1e-7 growing 4x per step, terminated at 1. The 4x
    // literals are exact in binary (scaling by powers of two), so the
    // geometric ratio holds bit-for-bit.
    static const std::vector<double> edges = {1e-7,     4e-7,     1.6e-6,    6.4e-6,    2.56e-5,
                                              1.024e-4, 4.096e-4, 1.6384e-3, 6.5536e-3, 1.0};
    return edges;
}

FittedBinner FittedBinner::fit(const BinningScheme& scheme, const std::vector<double>& train_values,
                               std::size_t n_train, std::size_t d, const std::string& fitted_on) {
    if (train_values.size() != n_train * d) throw DataError("training matrix shape mismatch");
    FittedBinner b;
    b.scheme_ = scheme;
    b.fitted_on_ = fitted_on;

    switch (scheme.kind) {
        case BinKind::EQW: {
            const double w = (scheme.eqw_max - scheme.eqw_min) / scheme.k;
            b.edges_.resize(static_cast<std::size_t>(scheme.k));
            for (int i = 1; i <= scheme.k; ++i)
                b.edges_[static_cast<std::size_t>(i - 1)] = scheme.eqw_min + w * i;
            b.edges_.back() = scheme.eqw_max;  // avoid accumulated rounding at the top edge
            break;
        }
        case BinKind::SPB:
            b.edges_ = spb_breaks();
            break;
        case BinKind::PR:
            b.edges_ = {0.0};
            break;
        case BinKind::QTF: {
            if (n_train == 0) throw DataError("QTF needs training values");
            const std::size_t q = std::min<std::size_t>(static_cast<std::size_t>(scheme.quantile_count),
                                                        std::max<std::size_t>(n_train, 2));
            b.references_.resize(q);
            for (std::size_t i = 0; i < q; ++i)
                b.references_[i] = static_cast<double>(i) / static_cast<double>(q - 1);
            b.quantiles_.resize(d);
            std::vector<double> col(n_train);
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t i = 0; i < n_train; ++i) col[i] = train_values[i * d + j];
                std::sort(col.begin(), col.end());
                auto& tab = b.quantiles_[j];
                tab.resize(q);
                for (std::size_t i = 0; i < q; ++i) {
                    // Linear-interpolated order statistic at probability references_[i].
                    const double pos = b.references_[i] * static_cast<double>(n_train - 1);
                    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
                    const std::size_t hi = std::min(lo + 1, n_train - 1);
                    const double frac = pos - static_cast<double>(lo);
                    tab[i] = col[lo] + frac * (col[hi] - col[lo]);
                }
            }
            break;
        }
    }
    return b;
}

double FittedBinner::qtf_uniform(double x, std::size_t feature) const {
    const auto& q = quantiles_.at(feature);
    // Out-of-range values clamp to the bounds of the uniform output.
    if (x <= q.front()) return 0.0;
    if (x >= q.back()) {
        // A fully constant feature degenerates to output 0.
        if (q.front() == q.back()) return 0.0;
        return 1.0;
    }
    const auto lo_it = std::lower_bound(q.begin(), q.end(), x);
    if (*lo_it == x) {
        // Knot hit, possibly on a plateau of repeated quantiles: map to the
        // midpoint of the plateau's probability range.
        const auto hi_it = std::upper_bound(lo_it, q.end(), x);
        const std::size_t a = static_cast<std::size_t>(lo_it - q.begin());
        const std::size_t z = static_cast<std::size_t>(hi_it - q.begin()) - 1;
        return 0.5 * (references_[a] + references_[z]);
    }
    const std::size_t hi = static_cast<std::size_t>(lo_it - q.begin());
    const std::size_t lo = hi - 1;
    const double frac = (x - q[lo]) / (q[hi] - q[lo]);
    return references_[lo] + frac * (references_[hi] - references_[lo]);
}

int FittedBinner::bin(double x, std::size_t feature) const {
    if (x < 0.0) throw NumericError("bin_value: negative input " + std::to_string(x));
    if (x == 0.0) return 0;  // reserved absent bin

    switch (scheme_.kind) {
        case BinKind::PR:
            return 1;
        case BinKind::QTF: {
            const double u = qtf_uniform(x, feature);
            const int idx = static_cast<int>(std::ceil(u * scheme_.k));
            return std::clamp(idx, 1, scheme_.k);
        }
        case BinKind::EQW:
        case BinKind::SPB: {
            // Left-open/right-closed: first edge >= x wins; above the top
            // edge clamps to k.
            const auto it = std::lower_bound(edges_.begin(), edges_.end(), x);
            if (it == edges_.end()) return scheme_.k;
            return static_cast<int>(it - edges_.begin()) + 1;
        }
    }
    throw NumericError("bin_value: unreachable scheme");
}

void FittedBinner::save(const std::string& path) const {
    json j;
    j["scheme"] = bin_kind_name(scheme_.kind);
    j["k"] = scheme_.k;
    j["fitted_on"] = fitted_on_;
    if (scheme_.kind == BinKind::EQW) {
        j["eqw_min"] = scheme_.eqw_min;
        j["eqw_max"] = scheme_.eqw_max;
    }
    j["edges"] = edges_;
    if (scheme_.kind == BinKind::QTF) {
        j["quantile_count"] = scheme_.quantile_count;
        j["references"] = references_;
        j["quantiles"] = quantiles_;
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write binner file: " + path);
    out << j.dump(2) << "\n";
}

FittedBinner FittedBinner::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open binner file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("malformed binner file " + path + ": " + e.what());
    }
    FittedBinner b;
    b.scheme_.kind = bin_kind_from_name(j.at("scheme").get<std::string>());
    b.scheme_.k = j.at("k").get<int>();
    b.fitted_on_ = j.value("fitted_on", "");
    b.edges_ = j.at("edges").get<std::vector<double>>();
    if (b.scheme_.kind == BinKind::EQW) {
        b.scheme_.eqw_min = j.at("eqw_min").get<double>();
        b.scheme_.eqw_max = j.at("eqw_max").get<double>();
    }
    if (b.scheme_.kind == BinKind::QTF) {
        b.scheme_.quantile_count = j.at("quantile_count").get<int>();
        b.references_ = j.at("references").get<std::vector<double>>();
        b.quantiles_ = j.at("quantiles").get<std::vector<std::vector<double>>>();
    }
    return b;
}

}  // namespace tab2img
