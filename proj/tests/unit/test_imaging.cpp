#include <doctest.h>
#include <png.h>

#include <cstring>
#include <fstream>
#include <random>

#include "rbvision/error.hpp"
#include "rbvision/imaging.hpp"
#include "support/oracles.hpp"

using namespace rbvision;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

void write_bytes(const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_png(const std::filesystem::path& p, int w, int h, png_uint_32 format,
               const std::vector<std::uint8_t>& data) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = w;
    image.height = h;
    image.format = format;
    REQUIRE(png_image_write_to_file(&image, p.c_str(), 0, data.data(), 0, nullptr) != 0);
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

}  // namespace

TEST_CASE("decode_ppm copies bytes exactly") {
    auto bytes = bytes_of("P6\n2 1\n255\n");
    for (int b : {255, 0, 0, 0, 0, 255}) bytes.push_back(static_cast<std::uint8_t>(b));
    const ImageRgb img = decode_ppm(bytes);
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(std::vector<std::uint8_t>(img.data().begin(), img.data().end()) ==
          std::vector<std::uint8_t>{255, 0, 0, 0, 0, 255});
}

TEST_CASE("decode_ppm accepts comments and mixed whitespace in the header") {
    auto bytes = bytes_of("P6 # made by hand\n1\t1 # w h\n255\n");
    for (int b : {1, 2, 3}) bytes.push_back(static_cast<std::uint8_t>(b));
    CHECK(decode_ppm(bytes).at(0, 0) == Rgb{1, 2, 3});
}

TEST_CASE("decode_ppm names the offending header field") {
    auto message_of = [](const std::string& text) {
        try {
            decode_ppm(bytes_of(text));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Format);
            return std::string(e.what());
        }
        FAIL("no error for " << text);
        return std::string();
    };
    CHECK(message_of("P6\n1 1\n65535\n......").find("maxval") != std::string::npos);
    CHECK(message_of("P3\n1 1\n255\n...").find("magic") != std::string::npos);
    CHECK(message_of("P6\nx 1\n255\n...").find("width") != std::string::npos);
    CHECK(message_of("P6\n1\n").find("height") != std::string::npos);
    CHECK(message_of("P6\n0 1\n255\n").find("width") != std::string::npos);
    CHECK(message_of("P6\n1 20000\n255\n").find("height") != std::string::npos);
    CHECK(message_of("P6\n2 2\n255\n.....").find("truncated") != std::string::npos);
}

TEST_CASE("save_image writes the minimal header") {
    oracle::TempDir dir("ppm");
    save_image(ImageRgb(1, 1), dir / "black.ppm");
    auto expected = bytes_of("P6\n1 1\n255\n");
    expected.insert(expected.end(), {0, 0, 0});
    CHECK(read_bytes(dir / "black.ppm") == expected);
}

TEST_CASE("save_image rejects an empty image and unwritable paths") {
    oracle::TempDir dir("ppm");
    CHECK(kind_of([&] { save_image(ImageRgb{}, dir / "empty.ppm"); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { save_image(ImageRgb(2, 2), dir / "no" / "such" / "dir.ppm"); }) ==
          ErrorKind::Io);
}

TEST_CASE("load_image reports missing files as I/O errors") {
    CHECK(kind_of([] { load_image("/nonexistent/rbvision.ppm"); }) == ErrorKind::Io);
}

TEST_CASE("image dimensions are bounded") {
    CHECK(kind_of([] { ImageRgb(0, 5); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { ImageRgb(kMaxImageDim + 1, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { ImageRgb(2, 2, std::vector<std::uint8_t>(5)); }) == ErrorKind::Parameter);
}

TEST_CASE("property: save then load is the identity on random rasters") {
    oracle::TempDir dir("roundtrip");
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 40);
    for (int trial = 0; trial < 25; ++trial) {
        const ImageRgb img = oracle::random_image(rng, dim(rng), dim(rng));
        const auto path = dir / "img.ppm";
        save_image(img, path);
        CHECK(load_image(path) == img);
    }
    // The canonical 16x16 case.
    const ImageRgb square = oracle::random_image(rng, 16, 16);
    save_image(square, dir / "sq.ppm");
    CHECK(read_bytes(dir / "sq.ppm") == encode_ppm(square));
    CHECK(load_image(dir / "sq.ppm") == square);
}

TEST_CASE("load_image reads 8-bit RGB and RGBA PNG, discarding alpha") {
    oracle::TempDir dir("png");
    const std::vector<std::uint8_t> rgb = {255, 0, 0, 0, 255, 0, 0, 0, 255, 10, 20, 30};
    write_png(dir / "rgb.png", 2, 2, PNG_FORMAT_RGB, rgb);
    const ImageRgb a = load_image(dir / "rgb.png");
    CHECK(a == ImageRgb(2, 2, rgb));

    const std::vector<std::uint8_t> rgba = {255, 0, 0, 255, 1, 2, 3, 255};
    write_png(dir / "rgba.png", 2, 1, PNG_FORMAT_RGBA, rgba);
    const ImageRgb b = load_image(dir / "rgba.png");
    CHECK(b == ImageRgb(2, 1, {255, 0, 0, 1, 2, 3}));
}

TEST_CASE("load_image rejects grayscale and 16-bit PNG") {
    oracle::TempDir dir("png");
    write_png(dir / "gray.png", 2, 1, PNG_FORMAT_GRAY, {0, 255});
    CHECK(kind_of([&] { load_image(dir / "gray.png"); }) == ErrorKind::Format);

    const std::vector<std::uint16_t> wide = {65535, 0, 0};
    std::vector<std::uint8_t> raw(reinterpret_cast<const std::uint8_t*>(wide.data()),
                                  reinterpret_cast<const std::uint8_t*>(wide.data()) + 6);
    write_png(dir / "deep.png", 1, 1, PNG_FORMAT_LINEAR_RGB, raw);
    try {
        load_image(dir / "deep.png");
        FAIL("16-bit PNG accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Format);
        CHECK(std::string(e.what()).find("bit depth") != std::string::npos);
    }
}

TEST_CASE("rgb_to_hsv on reference colours") {
    const ImageRgb img(3, 1, {255, 0, 0, 0, 0, 255, 128, 128, 128});
    const ImageHsv hsv = rgb_to_hsv(img);
    CHECK(hsv.at(0, 0).h == 0.0f);
    CHECK(hsv.at(0, 0).s == 1.0f);
    CHECK(hsv.at(0, 0).v == 1.0f);
    CHECK(hsv.at(1, 0).h == 240.0f);
    CHECK(hsv.at(1, 0).s == 1.0f);
    CHECK(hsv.at(1, 0).v == 1.0f);
    CHECK(hsv.at(2, 0).h == 0.0f);
    CHECK(hsv.at(2, 0).s == 0.0f);
    CHECK(hsv.at(2, 0).v == doctest::Approx(128.0 / 255.0).epsilon(1e-6));
}

TEST_CASE("rgb_to_hsv matches the double-precision oracle on random pixels") {
    std::mt19937 rng(7);
    const ImageRgb img = oracle::random_image(rng, 101, 37);
    const ImageHsv hsv = rgb_to_hsv(img);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const Rgb p = img.at(x, y);
            const auto want = oracle::hsv(p.r, p.g, p.b);
            const Hsv got = hsv.at(x, y);
            double dh = std::abs(got.h - want.h);
            dh = std::min(dh, 360.0 - dh);
            REQUIRE(dh <= 1e-4);
            REQUIRE(std::abs(got.s - want.s) <= 1e-6);
            REQUIRE(std::abs(got.v - want.v) <= 1e-6);
        }
    }
}

TEST_CASE("property: hsv ranges hold and achromatic pixels are unsaturated") {
    // Every colour on a coarse lattice plus all greys.
    std::vector<std::uint8_t> data;
    for (int r = 0; r < 256; r += 15)
        for (int g = 0; g < 256; g += 15)
            for (int b = 0; b < 256; b += 15) data.insert(data.end(), {std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)});
    for (int k = 0; k < 256; ++k) data.insert(data.end(), {std::uint8_t(k), std::uint8_t(k), std::uint8_t(k)});
    const int n = static_cast<int>(data.size() / 3);
    const ImageRgb img(n, 1, data);
    const ImageHsv hsv = rgb_to_hsv(img);
    for (int x = 0; x < n; ++x) {
        const Hsv p = hsv.at(x, 0);
        REQUIRE(p.h >= 0.0f);
        REQUIRE(p.h < 360.0f);
        REQUIRE(p.s >= 0.0f);
        REQUIRE(p.s <= 1.0f);
        REQUIRE(p.v >= 0.0f);
        REQUIRE(p.v <= 1.0f);
        const Rgb c = img.at(x, 0);
        if (c.r == c.g && c.g == c.b) {
            REQUIRE(p.s == 0.0f);
            REQUIRE(p.h == 0.0f);
        }
    }
}
