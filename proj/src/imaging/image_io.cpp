#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "rbvision/error.hpp"
#include "rbvision/imaging.hpp"

namespace rbvision {
namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

class PpmHeaderReader {
public:
    explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments, then reads a decimal field.
    long read_field(const char* name) {
        skip_separators();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            fail(ErrorKind::Format, std::string("PPM header: missing or non-numeric ") + name);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_++] - '0');
            if (value > 1'000'000) {
                fail(ErrorKind::Format, std::string("PPM header: ") + name + " out of range");
            }
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void read_raster_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            fail(ErrorKind::Format, "PPM header: maxval not followed by whitespace");
        }
        ++pos_;
    }

    std::size_t position() const noexcept { return pos_; }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) fail(ErrorKind::Io, "read failed for '" + path.string() + "'");
    return bytes;
}

ImageRgb decode_png(std::span<const std::uint8_t> bytes, const std::string& label) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
        fail(ErrorKind::Format, "PNG '" + label + "': " + image.message);
    }
    std::unique_ptr<png_image, void (*)(png_image*)> guard(&image, png_image_free);

    const auto fmt = image.format;
    if ((fmt & PNG_FORMAT_FLAG_COLORMAP) != 0) {
        fail(ErrorKind::Format, "PNG '" + label + "': color type is palette, need RGB/RGBA");
    }
    if ((fmt & PNG_FORMAT_FLAG_COLOR) == 0) {
        fail(ErrorKind::Format, "PNG '" + label + "': color type is grayscale, need RGB/RGBA");
    }
    if ((fmt & PNG_FORMAT_FLAG_LINEAR) != 0) {
        fail(ErrorKind::Format, "PNG '" + label + "': bit depth is 16, need 8");
    }
    if (image.width < 1 || image.height < 1 || image.width > kMaxImageDim ||
        image.height > kMaxImageDim) {
        fail(ErrorKind::Format, "PNG '" + label + "': width/height out of range");
    }

    image.format = PNG_FORMAT_RGB;
    std::vector<std::uint8_t> data(PNG_IMAGE_SIZE(image));
    if (png_image_finish_read(&image, nullptr, data.data(), 0, nullptr) == 0) {
        fail(ErrorKind::Format, "PNG '" + label + "': " + image.message);
    }
    return ImageRgb(static_cast<int>(image.width), static_cast<int>(image.height),
                    std::move(data));
}

}  // namespace

ImageRgb decode_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        fail(ErrorKind::Format, "PPM header: magic is not 'P6'");
    }
    PpmHeaderReader reader(bytes);
    const long width = reader.read_field("width");
    const long height = reader.read_field("height");
    const long maxval = reader.read_field("maxval");
    if (width < 1 || width > kMaxImageDim) {
        fail(ErrorKind::Format, "PPM header: width " + std::to_string(width) + " out of range");
    }
    if (height < 1 || height > kMaxImageDim) {
        fail(ErrorKind::Format, "PPM header: height " + std::to_string(height) + " out of range");
    }
    if (maxval != 255) {
        fail(ErrorKind::Format,
             "PPM header: unsupported maxval " + std::to_string(maxval) + " (need 255)");
    }
    reader.read_raster_separator();

    const std::size_t need = static_cast<std::size_t>(width) * height * 3;
    const std::size_t start = reader.position();
    if (bytes.size() - start < need) {
        fail(ErrorKind::Format, "PPM raster: truncated, have " +
                                    std::to_string(bytes.size() - start) + " of " +
                                    std::to_string(need) + " bytes");
    }
    return ImageRgb(static_cast<int>(width), static_cast<int>(height),
                    std::vector<std::uint8_t>(bytes.begin() + start,
                                              bytes.begin() + start + need));
}

std::vector<std::uint8_t> encode_ppm(const ImageRgb& img) {
    require_valid(img, "save_image");
    const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                               std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data().begin(), img.data().end());
    return out;
}

ImageRgb load_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    if (bytes.size() >= sizeof kPngSignature &&
        std::memcmp(bytes.data(), kPngSignature, sizeof kPngSignature) == 0) {
        return decode_png(bytes, path.string());
    }
    try {
        return decode_ppm(bytes);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " in '" + path.string() + "'");
    }
}

void save_image(const ImageRgb& img, const std::filesystem::path& path) {
    const auto bytes = encode_ppm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

}  // namespace rbvision
