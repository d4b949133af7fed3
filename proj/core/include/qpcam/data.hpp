#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qpcam/actions.hpp"
#include "qpcam/image.hpp"

namespace qpcam::data {

// Raw dataset image prior to rescaling (EMNIST ships 28x28).
struct RawImage {
    int rows = 0;
    int cols = 0;
    std::vector<double> pixels;  // row-major, [0,1]
};

struct LabeledImage {
    GrayImage image;        // 16x16
    int private_label = 0;  // 0-9 digits, 10-35 uppercase letters
    int public_label = 0;   // 0 = number, 1 = letter
};

struct DatasetSplit {
    std::vector<LabeledImage> train;
    std::vector<LabeledImage> val;
    std::vector<LabeledImage> test;
    std::uint64_t seed = 0;
};

constexpr int kPrivateClasses = 36;
constexpr int kPublicClasses = 2;

struct IdxBadMagicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdxTruncatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdxCountMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// IDX readers (big-endian, magic 0x00000803 / 0x00000801).
std::vector<RawImage> load_idx_images(const std::filesystem::path& path);
std::vector<int> load_idx_labels(const std::filesystem::path& path);
std::vector<std::pair<RawImage, int>> load_idx(const std::filesystem::path& images_path,
                                               const std::filesystem::path& labels_path);

// IDX writers for fixtures and synthetic datasets.
void write_idx_images(const std::vector<RawImage>& images, const std::filesystem::path& path);
void write_idx_labels(const std::vector<int>& labels, const std::filesystem::path& path);

// Label -> ASCII table of the balanced character split (47 classes).
std::vector<int> builtin_balanced_mapping();
std::vector<int> load_balanced_mapping(const std::filesystem::path& path);

// 0-9 digits and 10-35 uppercase; lowercase classes map to nullopt.
std::optional<int> private_label_from_ascii(int ascii);
int public_label_of(int private_label);

// EMNIST raster quirk: source images are stored transposed.
RawImage transpose(const RawImage& raw);

// Bilinear resample of a 28x28 raw image to 16x16 (center-aligned taps).
GrayImage to_16x16(const RawImage& raw);

// Full ingestion: transpose, rescale, label-map; raw labels outside the
// 36 kept classes are dropped.
std::vector<LabeledImage> ingest(const std::vector<std::pair<RawImage, int>>& raw,
                                 const std::vector<int>& mapping);

// Class-balanced (within +-1), disjoint, seeded split.
DatasetSplit split_dataset(const std::vector<LabeledImage>& items, std::size_t train_n,
                           std::size_t val_n, std::size_t test_n, std::uint64_t seed);

// 4x4 Gaussian kernel (taps at offsets -1..2, center 0.5), clamp-to-edge.
GrayImage augment_gaussian_blur(const GrayImage& img, double sigma);

// Additive N(0, sigma^2) per pixel, clamped to [0,1].
GrayImage augment_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

// Uniformly random action set, compiled and run through the full
// encode -> gates -> measure -> decode pipeline.
GrayImage augment_quantum_random(const GrayImage& img, const actions::ActionCatalog& catalog,
                                 std::uint64_t seed);

// Procedurally rendered digit/letter glyphs in EMNIST-style IDX files
// (28x28, transposed raster); the offline stand-in for the real download.
void synthesize_glyph_idx(const std::filesystem::path& images_path,
                          const std::filesystem::path& labels_path, std::size_t count,
                          std::uint64_t seed);

// One 28x28 rendering of a private class (jittered scale/offset/intensity).
RawImage render_glyph(int private_label, std::uint64_t seed);

}  // namespace qpcam::data
