#include "tab2img/color.hpp"

#include <cmath>

#include "tab2img/errors.hpp"

namespace tab2img {

std::string color_kind_name(ColorKind kind) {
    switch (kind) {
        case ColorKind::Viridis: return "viridis";
        case ColorKind::Gray: return "gray";
        case ColorKind::BW: return "bw";
    }
    return "?";
}

ColorKind color_kind_from_name(const std::string& name) {
    if (name == "viridis" || name == "color") return ColorKind::Viridis;
    if (name == "gray" || name == "grays") return ColorKind::Gray;
    if (name == "bw" || name == "BW") return ColorKind::BW;
    throw ConfigError("unknown color scheme: " + name);
}

ColorScheme::ColorScheme(ColorKind kind, int k) : kind_(kind), k_(k) {
    if (k < 1) throw ConfigError("color scheme needs k >= 1");
    lut_.resize(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        auto& entry = lut_[static_cast<std::size_t>(i - 1)];
        switch (kind) {
            case ColorKind::Viridis: {
                // Sample the 256-entry table at bin centers (i-0.5)/k.
                const double pos = (static_cast<double>(i) - 0.5) / static_cast<double>(k);
                const auto idx = static_cast<std::size_t>(std::lround(pos * 255.0));
                entry = {kViridis256[idx][0], kViridis256[idx][1], kViridis256[idx][2]};
                break;
            }
            case ColorKind::Gray:
                // Evenly spaced, bin k darkest.
                entry = {1.0 - static_cast<double>(i) / static_cast<double>(k)};
                break;
            case ColorKind::BW:
                entry = {0.0};
                break;
        }
    }
}

std::vector<double> ColorScheme::color_of(int index) const {
    if (index < 0 || index > k_)
        throw NumericError("color_of: bin index " + std::to_string(index) + " out of 0.." + std::to_string(k_));
    if (index == 0) return std::vector<double>(static_cast<std::size_t>(channels()), 1.0);  // background
    return lut_[static_cast<std::size_t>(index - 1)];
}

}  // namespace tab2img
