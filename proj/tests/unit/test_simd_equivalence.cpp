#include <doctest.h>

#include <random>
#include <vector>

#include "rbvision/filtering.hpp"
#include "rbvision/segmentation.hpp"
#include "rbvision/simd/kernels.hpp"
#include "support/oracles.hpp"

using namespace rbvision;

namespace {

// Runs body(vector_kernels) when the CPU has a vector variant.
template <typename Body>
void with_vector_kernels(Body body) {
    if (const simd::Kernels* k = simd::avx2_kernels()) {
        body(*k);
    } else {
        MESSAGE("no AVX2 variant on this machine; vector equivalence not exercised");
    }
}

}  // namespace

TEST_CASE("kernel table reports its instruction set") {
    CHECK(simd::scalar_kernels().isa == simd::Isa::Scalar);
    const auto& active = simd::active_kernels();
    MESSAGE("active kernels: " << simd::to_string(active.isa));
    if (const char* env = std::getenv("RBVISION_SIMD"); env && std::string(env) == "scalar") {
        CHECK(active.isa == simd::Isa::Scalar);
    }
}

TEST_CASE("equivalence: rgb_to_hsv kernel is bit-identical") {
    with_vector_kernels([](const simd::Kernels& vec) {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> byte(0, 255);
        for (std::size_t n : {1u, 7u, 8u, 9u, 17u, 333u, 4096u}) {
            std::vector<std::uint8_t> rgb(3 * n);
            for (auto& b : rgb) b = static_cast<std::uint8_t>(byte(rng));
            // Force ties and greys into the stream.
            if (n > 4) {
                rgb[0] = rgb[1] = rgb[2] = 77;
                rgb[3] = rgb[4] = 200;
                rgb[5] = 10;
            }
            std::vector<float> h1(n), s1(n), v1(n), h2(n), s2(n), v2(n);
            simd::scalar_kernels().rgb_to_hsv(rgb.data(), n, h1.data(), s1.data(), v1.data());
            vec.rgb_to_hsv(rgb.data(), n, h2.data(), s2.data(), v2.data());
            CHECK(h1 == h2);
            CHECK(s1 == s2);
            CHECK(v1 == v2);
        }
    });
}

TEST_CASE("equivalence: threshold kernel is bit-identical, wrapped and plain") {
    with_vector_kernels([](const simd::Kernels& vec) {
        std::mt19937 rng(12);
        std::uniform_real_distribution<float> hue(0.0f, 360.0f), unit(0.0f, 1.0f);
        const std::size_t n = 1001;
        std::vector<float> h(n), s(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = hue(rng);
            s[i] = unit(rng);
            v[i] = unit(rng);
        }
        h[0] = 350.0f;  // boundary values
        h[1] = 10.0f;
        s[2] = 0.5f;
        for (auto [lo, hi] : {std::pair{350.0f, 10.0f}, std::pair{200.0f, 260.0f}}) {
            std::vector<std::uint8_t> m1(n), m2(n);
            simd::scalar_kernels().threshold_hsv(h.data(), s.data(), v.data(), n, lo, hi, 0.5f,
                                                 0.3f, m1.data());
            vec.threshold_hsv(h.data(), s.data(), v.data(), n, lo, hi, 0.5f, 0.3f, m2.data());
            CHECK(m1 == m2);
        }
    });
}

TEST_CASE("equivalence: histogram and weighted-sum kernels are bit-identical") {
    with_vector_kernels([](const simd::Kernels& vec) {
        std::mt19937 rng(13);
        std::uniform_int_distribution<int> count(0, 300);
        for (std::size_t n : {16u, 256u, 21u}) {
            std::vector<std::uint16_t> acc(n), add(n), sub(n);
            for (std::size_t i = 0; i < n; ++i) {
                add[i] = static_cast<std::uint16_t>(count(rng));
                sub[i] = static_cast<std::uint16_t>(count(rng));
                acc[i] = static_cast<std::uint16_t>(count(rng) + 300);
            }
            auto acc2 = acc;
            simd::scalar_kernels().hist_add_sub(acc.data(), add.data(), sub.data(), n);
            vec.hist_add_sub(acc2.data(), add.data(), sub.data(), n);
            CHECK(acc == acc2);
        }

        std::uniform_real_distribution<float> val(0.0f, 255.0f);
        const std::size_t taps = 7, n = 203;
        std::vector<std::vector<float>> rows(taps, std::vector<float>(n));
        std::vector<const float*> ptrs;
        for (auto& r : rows) {
            for (auto& x : r) x = val(rng);
            ptrs.push_back(r.data());
        }
        const std::vector<float> w = {0.05f, 0.1f, 0.2f, 0.3f, 0.2f, 0.1f, 0.05f};
        std::vector<float> o1(n), o2(n);
        simd::scalar_kernels().weighted_sum_f32(ptrs.data(), w.data(), taps, n, o1.data());
        vec.weighted_sum_f32(ptrs.data(), w.data(), taps, n, o2.data());
        CHECK(o1 == o2);
    });
}

TEST_CASE("equivalence: whole-image operations agree across kernel sets") {
    with_vector_kernels([](const simd::Kernels& vec) {
        std::mt19937 rng(14);
        const auto& scalar = simd::scalar_kernels();
        for (auto [w, h] : {std::pair{9, 9}, std::pair{37, 23}, std::pair{64, 5}}) {
            const ImageRgb img = oracle::random_image(rng, w, h);
            CHECK(median_filter(img, 5, scalar) == median_filter(img, 5, vec));
            CHECK(median_filter(img, 15, scalar) == median_filter(img, 15, vec));
            CHECK(gaussian_filter(img, 7, 1.5, scalar) == gaussian_filter(img, 7, 1.5, vec));

            const ImageHsv a = rgb_to_hsv(img, scalar);
            const ImageHsv b = rgb_to_hsv(img, vec);
            CHECK(std::equal(a.hue().begin(), a.hue().end(), b.hue().begin()));
            CHECK(threshold_hsv(a, HsvRange::default_red(), scalar) ==
                  threshold_hsv(a, HsvRange::default_red(), vec));
        }
    });
}
