#include <doctest.h>

#include <random>
#include <set>

#include "rbvision/error.hpp"
#include "rbvision/filtering.hpp"
#include "support/oracles.hpp"

using namespace rbvision;

namespace {

ImageRgb constant_image(int w, int h, Rgb c) {
    ImageRgb img(w, h);
    img.fill(c);
    return img;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an rbvision::Error");
    return ErrorKind::Io;
}

int max_channel_diff(const ImageRgb& a, const ImageRgb& b) {
    int worst = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(int(a.data()[i]) - int(b.data()[i])));
    }
    return worst;
}

}  // namespace

TEST_CASE("filters map constant images to themselves") {
    const ImageRgb img = constant_image(13, 9, {200, 17, 90});
    for (int w : {1, 3, 15, 31}) CHECK(median_filter(img, w) == img);
    CHECK(gaussian_filter(img, 5, 1.0) == img);
    CHECK(gaussian_filter(img, 15, 2.5) == img);
    CHECK(bilateral_filter(img, 5, 1.0, 25.0) == img);
}

TEST_CASE("median window 1 is the identity") {
    std::mt19937 rng(1);
    const ImageRgb img = oracle::random_image(rng, 11, 7);
    CHECK(median_filter(img, 1) == img);
}

TEST_CASE("median matches the brute-force sort oracle") {
    std::mt19937 rng(2);
    const ImageRgb img = oracle::random_image(rng, 7, 7);
    CHECK(median_filter(img, 3) == oracle::median(img, 3));
    // Windows larger than the image exercise repeated border replication.
    const ImageRgb tiny = oracle::random_image(rng, 4, 3);
    CHECK(median_filter(tiny, 9) == oracle::median(tiny, 9));
    const ImageRgb wide = oracle::random_image(rng, 40, 18);
    CHECK(median_filter(wide, 15) == oracle::median(wide, 15));
}

TEST_CASE("property: median output values come from the input neighbourhood") {
    std::mt19937 rng(3);
    const ImageRgb img = oracle::random_image(rng, 12, 10);
    const ImageRgb out = median_filter(img, 5);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            std::set<int> seen;
            for (int dy = -2; dy <= 2; ++dy)
                for (int dx = -2; dx <= 2; ++dx)
                    seen.insert(img.at(oracle::clampi(x + dx, 0, 11), oracle::clampi(y + dy, 0, 9)).g);
            REQUIRE(seen.contains(out.at(x, y).g));
        }
    }
}

TEST_CASE("filter parameters are validated") {
    const ImageRgb img(4, 4);
    CHECK(kind_of([&] { median_filter(img, 4); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { median_filter(img, 0); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { median_filter(img, -3); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { gaussian_filter(img, 3, 0.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { gaussian_filter(img, 2, 1.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { bilateral_filter(img, 3, 1.0, -1.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { median_filter(ImageRgb{}, 3); }) == ErrorKind::Parameter);

    FilterSpec median_with_sigma = FilterSpec::median(3);
    median_with_sigma.sigma_space = 1.0;
    CHECK(kind_of([&] { median_with_sigma.validate(); }) == ErrorKind::Parameter);
    FilterSpec bilateral_missing = FilterSpec::bilateral(5);
    bilateral_missing.sigma_color.reset();
    CHECK(kind_of([&] { bilateral_missing.validate(); }) == ErrorKind::Parameter);
}

TEST_CASE("filter defaults") {
    const FilterSpec g = FilterSpec::gaussian(15);
    CHECK(*g.sigma_space == doctest::Approx(2.5));
    const FilterSpec b = FilterSpec::bilateral(9);
    CHECK(*b.sigma_space == doctest::Approx(1.5));
    CHECK(*b.sigma_color == doctest::Approx(25.0));
    const FilterSpec m;
    CHECK(m.kind == FilterKind::Median);
    CHECK(m.window == 15);
}

TEST_CASE("gaussian impulse response is symmetric with the peak at the centre") {
    ImageRgb img(5, 5);
    img.set(2, 2, {255, 255, 255});
    const ImageRgb out = gaussian_filter(img, 3, 1.0);
    const int centre = out.at(2, 2).r;
    const int edge = out.at(2, 1).r;
    const int corner = out.at(1, 1).r;
    CHECK(centre > edge);
    CHECK(edge > corner);
    CHECK(corner > 0);
    for (auto [x, y] : {std::pair{1, 2}, std::pair{3, 2}, std::pair{2, 3}}) CHECK(out.at(x, y).r == edge);
    for (auto [x, y] : {std::pair{3, 1}, std::pair{1, 3}, std::pair{3, 3}}) CHECK(out.at(x, y).r == corner);
    CHECK(out.at(0, 0).r == 0);
}

TEST_CASE("gaussian matches dense 2D convolution within one level") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const ImageRgb img = oracle::random_image(rng, 19, 14);
        CHECK(max_channel_diff(gaussian_filter(img, 5, 1.2), oracle::gaussian(img, 5, 1.2)) <= 1);
        CHECK(max_channel_diff(gaussian_filter(img, 9, 3.0), oracle::gaussian(img, 9, 3.0)) <= 1);
    }
}

TEST_CASE("gaussian preserves mean intensity of an interior region") {
    std::mt19937 rng(5);
    // Smooth content keeps the rounding error unbiased.
    const ImageRgb img = oracle::random_image(rng, 60, 60);
    const ImageRgb out = gaussian_filter(img, 5, 1.0);
    double a = 0, b = 0;
    int n = 0;
    for (int y = 10; y < 50; ++y) {
        for (int x = 10; x < 50; ++x) {
            a += img.at(x, y).g;
            b += out.at(x, y).g;
            ++n;
        }
    }
    CHECK(std::abs(a - b) / n < 1.0);
}

TEST_CASE("bilateral with huge colour sigma approaches the gaussian") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        const ImageRgb img = oracle::random_image(rng, 16, 12);
        CHECK(max_channel_diff(bilateral_filter(img, 5, 1.5, 1e6), gaussian_filter(img, 5, 1.5)) <= 1);
    }
}

TEST_CASE("bilateral preserves a step edge") {
    ImageRgb img(20, 10);
    img.fill({40, 40, 40});
    for (int y = 0; y < 10; ++y)
        for (int x = 10; x < 20; ++x) img.set(x, y, {220, 220, 220});
    const ImageRgb out = bilateral_filter(img, 7, 2.0, 10.0);
    const int mid = (40 + 220) / 2;
    for (int y = 0; y < 10; ++y) {
        for (int x = 0; x < 20; ++x) {
            if (x < 10) {
                REQUIRE(out.at(x, y).r < mid);
            } else {
                REQUIRE(out.at(x, y).r > mid);
            }
        }
    }
    // A plain Gaussian of the same width blurs across the step.
    const ImageRgb blurred = gaussian_filter(img, 7, 2.0);
    CHECK(blurred.at(9, 5).r > 40 + 20);
}

TEST_CASE("property: filters keep dimensions") {
    std::mt19937 rng(7);
    const ImageRgb img = oracle::random_image(rng, 23, 6);
    for (const FilterSpec& spec : {FilterSpec::median(7), FilterSpec::gaussian(7), FilterSpec::bilateral(7)}) {
        const ImageRgb out = apply_filter(img, spec);
        CHECK(out.width() == 23);
        CHECK(out.height() == 6);
    }
}
