#ifndef TAB2IMG_TSNE_HPP
#define TAB2IMG_TSNE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tab2img {

struct TsneConfig {
    double perplexity = 5.0;
    double learning_rate = 200.0;
    int iterations = 300;
    std::uint64_t seed = 0;
    double early_exaggeration = 4.0;  // applied for the first exaggeration_iters steps
    int exaggeration_iters = 50;
    double momentum_initial = 0.5;    // before momentum_switch_iter
    double momentum_final = 0.8;
    int momentum_switch_iter = 250;
};

// 2D coordinates per feature, fitted on training data only and reused to
// rasterize both training and test samples.
struct GlobalMap {
    std::vector<double> coords;  // d points, interleaved (x0, y0, x1, y1, ...)
    double bbox_min[2] = {0.0, 0.0};
    double bbox_max[2] = {0.0, 0.0};
    TsneConfig config;
    std::string fitted_on;
    std::vector<double> kl_trace;  // KL against the unexaggerated P, one entry per iteration

    std::size_t num_points() const { return coords.size() / 2; }

    void save(const std::string& path) const;
    static GlobalMap load(const std::string& path);
};

// Per-column standardization to zero mean / unit variance (columns = samples,
// rows = feature points). Zero-variance columns are centered only.
std::vector<double> standardize_columns(std::vector<double> points, std::size_t d, std::size_t m);

struct Affinities {
    std::vector<double> p;       // d x d symmetric, zero diagonal, sums to 1
    std::vector<double> sigmas;  // per-point bandwidths from the entropy search
};

// Gaussian conditional affinities with per-point bandwidth found by bisection
// so each conditional distribution's Shannon entropy (bits) matches
// log2(perplexity) within 1e-4, then symmetrized as (P_ij + P_ji) / (2d).
Affinities conditional_affinities(const std::vector<double>& points, std::size_t d, std::size_t m,
                                  double perplexity);

// Sum of p * log(p/q) in nats with the 0*log(0/q) = 0 convention.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q);

// Exact all-pairs t-SNE gradient descent from a caller-supplied initial
// layout (2d values, interleaved).
GlobalMap run_tsne_from(const std::vector<double>& points, std::size_t d, std::size_t m,
                        const TsneConfig& cfg, std::vector<double> initial_coords,
                        const std::string& fitted_on = "");

// Standard entry point: seeded Gaussian init with std 1e-4.
GlobalMap run_tsne(const std::vector<double>& points, std::size_t d, std::size_t m, const TsneConfig& cfg,
                   const std::string& fitted_on = "");

}  // namespace tab2img

#endif
