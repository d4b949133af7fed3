#pragma once

#include <cstdint>
#include <string_view>

namespace qpcam {

// Counter-based generator: every output is a pure function of (seed, counter),
// so streams are reproducible across platforms and independent of call sites.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double next_double();

    // Uniform in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n);

    // Standard normal via Box-Muller.
    double next_gaussian();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable sub-stream seed from a root seed, a tag, and an index.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

// FNV-1a over a byte range; used for content hashes in run manifests.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_str(std::string_view s);

}  // namespace qpcam
