#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dtk {

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);
std::string base64_encode(std::string_view data);
std::string rfc3339_utc_now();

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Keyed deterministic generator. Unlike the std distributions, every draw
// is pinned bit-for-bit across platforms, which the replay and mock-backend
// contracts rely on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n); n > 0
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

}  // namespace dtk
