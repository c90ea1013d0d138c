#pragma once

#include <cstdint>
#include <vector>

#include "dermaug/errors.hpp"

namespace dermaug {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

/// 8-bit RGB raster, row-major, interleaved channels.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size = width * height * 3

    ImageBuffer() = default;
    ImageBuffer(int w, int h)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::size_t index(int x, int y) const {
        return (static_cast<std::size_t>(y) * width + x) * 3;
    }
    Rgb at(int x, int y) const {
        const auto i = index(x, y);
        return {pixels[i], pixels[i + 1], pixels[i + 2]};
    }
    void set(int x, int y, Rgb p) {
        const auto i = index(x, y);
        pixels[i] = p.r;
        pixels[i + 1] = p.g;
        pixels[i + 2] = p.b;
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    bool operator==(const ImageBuffer&) const = default;
};

/// Binary lesion mask aligned to an ImageBuffer (1 = lesion).
struct SegMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits; // size = width * height, values 0/1

    SegMask() = default;
    SegMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : bits) n += b != 0;
        return n;
    }
    bool operator==(const SegMask&) const = default;
};

inline void require_paired(const ImageBuffer& img, const SegMask& mask) {
    if (img.width != mask.width || img.height != mask.height)
        throw DimensionMismatch("mask dimensions do not match image dimensions");
}

} // namespace dermaug
