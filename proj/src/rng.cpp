#include "featbench/rng.hpp"

#include <cmath>
#include <numbers>

#include "featbench/errors.hpp"

namespace featbench {

double RngStream::next_gaussian() {
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t hash_bytes(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t combine_stream_id(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t p : parts) h = mix64(h ^ (p + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)));
    return h;
}

Matrix uniform_matrix(RngStream rng, std::size_t rows, std::size_t cols, double lo, double hi) {
    if (!(lo < hi)) throw InvalidRange("uniform_matrix: requires lo < hi");
    Matrix m(rows, cols);
    for (double& v : m.data()) v = rng.next_uniform(lo, hi);
    return m;
}

}  // namespace featbench
