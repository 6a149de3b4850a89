#ifndef TAB2IMG_COLOR_HPP
#define TAB2IMG_COLOR_HPP

#include <array>
#include <string>
#include <vector>

namespace tab2img {

extern const std::array<std::array<double, 3>, 256> kViridis256;

enum class ColorKind { Viridis, Gray, BW };

std::string color_kind_name(ColorKind kind);
ColorKind color_kind_from_name(const std::string& name);

// Bin-to-pixel lookup. Bin index 0 renders as background (white); index i in
// 1..k maps to lut()[i-1]. Gray levels descend from light to dark so the
// highest-abundance bin is darkest; BW paints every present bin black.
class ColorScheme {
public:
    ColorScheme(ColorKind kind, int k);

    ColorKind kind() const { return kind_; }
    int k() const { return k_; }
    int channels() const { return kind_ == ColorKind::Viridis ? 3 : 1; }

    // One pixel value per channel for a bin index in 0..k.
    std::vector<double> color_of(int index) const;

    const std::vector<std::vector<double>>& lut() const { return lut_; }

private:
    ColorKind kind_;
    int k_;
    std::vector<std::vector<double>> lut_;
};

}  // namespace tab2img

#endif
