#include "qpcam/image.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qpcam {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

int int_log2(std::uint64_t v) {
    int n = 0;
    while (v > 1) {
        v >>= 1;
        ++n;
    }
    return n;
}

void validate_image(const GrayImage& img) {
    if (img.side <= 0 || !is_power_of_two(static_cast<std::uint64_t>(img.side)))
        throw std::invalid_argument("image side must be a positive power of two, got " +
                                    std::to_string(img.side));
    if (img.pixels.size() != static_cast<std::size_t>(img.side) * img.side)
        throw std::invalid_argument("pixel count does not match side*side");
    for (double p : img.pixels)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("pixel intensity outside [0,1]: " + std::to_string(p));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    validate_image(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "P5\n" << img.side << " " << img.side << "\n255\n";
    for (double p : img.pixels) {
        const int v = static_cast<int>(std::lround(p * 255.0));
        out.put(static_cast<char>(v < 0 ? 0 : (v > 255 ? 255 : v)));
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

// Skips PNM whitespace and '#' comments.
int next_pnm_token(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF) throw std::runtime_error("unexpected end of PGM header");
    std::string tok;
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return std::stoi(tok);
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw std::runtime_error("not a binary PGM (P5): " + path.string());
    const int width = next_pnm_token(in);
    const int height = next_pnm_token(in);
    const int maxval = next_pnm_token(in);
    if (width != height) throw std::runtime_error("expected square image, got " +
                                                  std::to_string(width) + "x" + std::to_string(height));
    if (maxval != 255) throw std::runtime_error("expected maxval 255, got " + std::to_string(maxval));
    GrayImage img(width);
    std::vector<unsigned char> raw(img.pixel_count());
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw std::runtime_error("truncated PGM payload: " + path.string());
    for (std::size_t i = 0; i < raw.size(); ++i) img.pixels[i] = raw[i] / 255.0;
    validate_image(img);
    return img;
}

}  // namespace qpcam
