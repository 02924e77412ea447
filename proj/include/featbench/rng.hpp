#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "featbench/matrix.hpp"

namespace featbench {

/// splitmix64 finalizer; also used to hash ad-hoc values into stream ids.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Splittable counter-style random stream. The output sequence is a pure
/// function of (seed, stream_id): integer arithmetic only, so identical on
/// every platform and independent of thread schedule. Copies replay the
/// stream from the point of the copy; derive substreams for parallel use.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id) {
        state_ = mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) + stream_id);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 usable bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Standard normal via Box-Muller (no state caching).
    double next_gaussian();

    /// Fisher-Yates index in [0, bound).
    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(next_double() * static_cast<double>(bound));
    }

    /// Deterministically derived independent stream.
    RngStream substream(std::uint64_t tag) const {
        return RngStream(seed_, mix64(stream_id_ ^ (0x9E3779B97F4A7C15ULL * (tag + 1))));
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
};

/// FNV-1a over bytes, for building stream ids from textual tags.
std::uint64_t hash_bytes(std::string_view bytes);

/// Order-sensitive combination of parts into one stream id.
std::uint64_t combine_stream_id(std::initializer_list<std::uint64_t> parts);

/// rows×cols matrix with i.i.d. entries in [lo, hi). The stream is taken by
/// value: the same (seed, stream_id, shape, range) always reproduces the
/// identical matrix. Throws InvalidRange when lo >= hi.
Matrix uniform_matrix(RngStream rng, std::size_t rows, std::size_t cols, double lo, double hi);

}  // namespace featbench
