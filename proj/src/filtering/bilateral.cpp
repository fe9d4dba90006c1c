#include <algorithm>
#include <cmath>
#include <vector>

#include "rbvision/filtering.hpp"

namespace rbvision {

ImageRgb bilateral_filter(const ImageRgb& img, int window, double sigma_space,
                          double sigma_color) {
    require_valid(img, "bilateral_filter");
    FilterSpec::bilateral(window, sigma_space, sigma_color).validate();

    const int w = img.width();
    const int h = img.height();
    const int radius = window / 2;

    std::vector<double> spatial(static_cast<std::size_t>(window) * window);
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            spatial[(dy + radius) * window + (dx + radius)] =
                std::exp(-(dx * dx + dy * dy) / (2.0 * sigma_space * sigma_space));
        }
    }
    // Range weight indexed by squared RGB distance (at most 3 * 255^2).
    std::vector<double> range(3 * 255 * 255 + 1);
    for (std::size_t d2 = 0; d2 < range.size(); ++d2) {
        range[d2] = std::exp(-static_cast<double>(d2) / (2.0 * sigma_color * sigma_color));
    }

    ImageRgb out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const Rgb center = img.at(x, y);
            double sum[3] = {0.0, 0.0, 0.0};
            double norm = 0.0;
            for (int dy = -radius; dy <= radius; ++dy) {
                const int sy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -radius; dx <= radius; ++dx) {
                    const Rgb p = img.at(std::clamp(x + dx, 0, w - 1), sy);
                    const int dr = p.r - center.r;
                    const int dg = p.g - center.g;
                    const int db = p.b - center.b;
                    const double weight = spatial[(dy + radius) * window + (dx + radius)] *
                                          range[dr * dr + dg * dg + db * db];
                    sum[0] += weight * p.r;
                    sum[1] += weight * p.g;
                    sum[2] += weight * p.b;
                    norm += weight;
                }
            }
            auto to_byte = [&](double v) {
                return static_cast<std::uint8_t>(std::clamp(std::round(v / norm), 0.0, 255.0));
            };
            out.set(x, y, {to_byte(sum[0]), to_byte(sum[1]), to_byte(sum[2])});
        }
    }
    return out;
}

}  // namespace rbvision
