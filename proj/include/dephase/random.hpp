#pragma once

#include <cstdint>
#include <random>

namespace dephase::numerics {

// Seeded generator with a platform-independent stream. mt19937_64 is fully
// specified by the standard; the double conversion is done here rather than
// through std::uniform_real_distribution, whose algorithm is unspecified.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace dephase::numerics
