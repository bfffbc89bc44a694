#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace agelab {

/// Planar image, values in [0, 1], layout (channel, row, col).
struct Image {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    Image() = default;
    Image(int c, int h, int w) : channels(c), height(h), width(w), pixels(static_cast<std::size_t>(c) * h * w, 0.0) {}

    double& at(int c, int y, int x) { return pixels[(static_cast<std::size_t>(c) * height + y) * width + x]; }
    double at(int c, int y, int x) const { return pixels[(static_cast<std::size_t>(c) * height + y) * width + x]; }
    std::size_t size() const { return pixels.size(); }
};

/// Binary PGM (P5, grayscale) / PPM (P6, RGB), 8-bit. Lossless and
/// byte-stable, which the determinism checks rely on.
void write_pnm(const Image& img, const std::filesystem::path& path);
Image read_pnm(const std::filesystem::path& path);

/// Bilinear resize; the fixed preprocessing policy for model input.
Image resize_bilinear(const Image& img, int out_h, int out_w);

}  // namespace agelab
