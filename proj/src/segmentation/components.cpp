#include <algorithm>
#include <numeric>
#include <vector>

#include "rbvision/segmentation.hpp"

namespace rbvision {
namespace {

class DisjointSet {
public:
    std::uint32_t make() {
        parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
        return parent_.back();
    }
    std::uint32_t find(std::uint32_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
    }
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
};

// (m00 * m_pq - m_p * m_q) / m00 with an exact 128-bit numerator.
double central(std::int64_t m00, std::int64_t second, std::int64_t a, std::int64_t b) {
    const __int128 num = static_cast<__int128>(m00) * second - static_cast<__int128>(a) * b;
    return static_cast<double>(num) / static_cast<double>(m00);
}

}  // namespace

std::vector<Blob> connected_components(const ColorMask& mask) {
    const int w = mask.width();
    const int h = mask.height();
    constexpr std::uint32_t kNone = 0xFFFFFFFFu;
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(w) * h, kNone);
    DisjointSet sets;

    // First pass: provisional labels from the already-visited 8-neighbours
    // (W, NW, N, NE), recording equivalences.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.at(x, y)) continue;
            std::uint32_t label = kNone;
            auto visit = [&](int nx, int ny) {
                if (nx < 0 || nx >= w || ny < 0) return;
                const std::uint32_t n = labels[static_cast<std::size_t>(ny) * w + nx];
                if (n == kNone) return;
                if (label == kNone) {
                    label = n;
                } else {
                    sets.unite(label, n);
                }
            };
            visit(x - 1, y);
            visit(x - 1, y - 1);
            visit(x, y - 1);
            visit(x + 1, y - 1);
            if (label == kNone) label = sets.make();
            labels[static_cast<std::size_t>(y) * w + x] = label;
        }
    }

    std::vector<std::int32_t> slot(sets.size(), -1);
    std::vector<Blob> blobs;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::uint32_t label = labels[static_cast<std::size_t>(y) * w + x];
            if (label == kNone) continue;
            const std::uint32_t root = sets.find(label);
            if (slot[root] < 0) {
                slot[root] = static_cast<std::int32_t>(blobs.size());
                Blob b;
                b.bbox = {x, y, x, y};
                blobs.push_back(b);
            }
            Blob& b = blobs[slot[root]];
            ++b.pixel_count;
            b.m10 += x;
            b.m01 += y;
            b.m20 += static_cast<std::int64_t>(x) * x;
            b.m02 += static_cast<std::int64_t>(y) * y;
            b.m11 += static_cast<std::int64_t>(x) * y;
            b.bbox.min_x = std::min(b.bbox.min_x, x);
            b.bbox.max_x = std::max(b.bbox.max_x, x);
            b.bbox.min_y = std::min(b.bbox.min_y, y);
            b.bbox.max_y = std::max(b.bbox.max_y, y);
        }
    }

    for (Blob& b : blobs) {
        b.m00 = b.pixel_count;
        const double n = static_cast<double>(b.m00);
        b.centroid = {static_cast<double>(b.m10) / n, static_cast<double>(b.m01) / n};
        b.mu20 = central(b.m00, b.m20, b.m10, b.m10);
        b.mu02 = central(b.m00, b.m02, b.m01, b.m01);
        b.mu11 = central(b.m00, b.m11, b.m10, b.m01);
    }

    std::sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
        if (a.pixel_count != b.pixel_count) return a.pixel_count > b.pixel_count;
        if (a.bbox.min_y != b.bbox.min_y) return a.bbox.min_y < b.bbox.min_y;
        return a.bbox.min_x < b.bbox.min_x;
    });
    return blobs;
}

}  // namespace rbvision
