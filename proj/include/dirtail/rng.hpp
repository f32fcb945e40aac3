#pragma once

#include <cstdint>

namespace dirtail {

// Counter-based random streams. Each stream is keyed by (seed, chunk, lane)
// and produces an independent sequence regardless of which thread consumes
// it, so estimates do not depend on the thread count.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t chunk, std::uint64_t lane)
        : key_(mix64(mix64(mix64(seed) ^ (chunk * 0xD6E8FEB86659FD93ull)) ^
                     (lane * 0xA3B195354A39B70Dull))) {}

    void jump_to(std::uint64_t counter) { ctr_ = counter; }

    std::uint64_t next_u64() { return mix64(key_ + 0x9E3779B97F4A7C15ull * ++ctr_); }

    // uniform in the open interval (0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

} // namespace dirtail
