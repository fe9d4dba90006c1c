#pragma once

#include <optional>
#include <string_view>

#include "rbvision/imaging.hpp"
#include "rbvision/simd/kernels.hpp"

namespace rbvision {

enum class FilterKind { Gaussian, Median, Bilateral };

std::string_view to_string(FilterKind kind);
FilterKind parse_filter_kind(std::string_view name);

inline constexpr int kDefaultMedianWindow = 15;
inline constexpr double kDefaultSigmaColor = 25.0;
inline constexpr int kMaxMedianWindow = 255;

/// Noise filter selection. Sigmas are only meaningful for the kinds that
/// use them; validate() rejects a spec that carries the wrong set.
struct FilterSpec {
    FilterKind kind = FilterKind::Median;
    int window = kDefaultMedianWindow;
    std::optional<double> sigma_space;  // gaussian, bilateral
    std::optional<double> sigma_color;  // bilateral

    /// Defaults: median 15; gaussian sigma = window/6; bilateral
    /// sigma_space = window/6, sigma_color = 25.
    static FilterSpec median(int window = kDefaultMedianWindow);
    static FilterSpec gaussian(int window, std::optional<double> sigma_space = std::nullopt);
    static FilterSpec bilateral(int window, std::optional<double> sigma_space = std::nullopt,
                                std::optional<double> sigma_color = std::nullopt);

    void validate() const;
};

/// Per-channel median over a window x window neighbourhood, borders
/// replicated. Constant time per pixel in the window size.
ImageRgb median_filter(const ImageRgb& img, int window);

/// Separable normalized Gaussian, borders replicated, rounded to nearest.
ImageRgb gaussian_filter(const ImageRgb& img, int window, double sigma_space);

/// Edge-preserving bilateral filter; colour distance is Euclidean in RGB.
ImageRgb bilateral_filter(const ImageRgb& img, int window, double sigma_space,
                          double sigma_color);

ImageRgb apply_filter(const ImageRgb& img, const FilterSpec& spec);

// Explicit-kernel overloads, used to check vector variants against scalar.
ImageRgb median_filter(const ImageRgb& img, int window, const simd::Kernels& kernels);
ImageRgb gaussian_filter(const ImageRgb& img, int window, double sigma_space,
                         const simd::Kernels& kernels);

}  // namespace rbvision
