#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace qpcam {

// Square grayscale image, row-major, intensities in [0, 1].
struct GrayImage {
    int side = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int side_, double fill = 0.0)
        : side(side_), pixels(static_cast<std::size_t>(side_) * side_, fill) {}

    double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * side + x]; }
    double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * side + x]; }
    std::size_t pixel_count() const { return pixels.size(); }
};

// Throws std::invalid_argument when side is not a positive power of two or a
// pixel falls outside [0, 1].
void validate_image(const GrayImage& img);

// Binary PGM (P5), 8-bit, intensity = round(pixel * 255).
void write_pgm(const GrayImage& img, const std::filesystem::path& path);
GrayImage read_pgm(const std::filesystem::path& path);

bool is_power_of_two(std::uint64_t v);
int int_log2(std::uint64_t v);

}  // namespace qpcam
