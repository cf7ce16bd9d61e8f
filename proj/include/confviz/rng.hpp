#pragma once

#include <cstdint>
#include <random>

namespace confviz {

struct Seed {
    std::uint64_t value = 1;
};

// mt19937_64 is bit-specified by the standard; the distributions are not,
// so uniform doubles are derived from the raw 64-bit output here.
class SeededRng {
public:
    explicit SeededRng(Seed seed) : engine_(seed.value) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

// Resample budget for "generic position" draws.
inline constexpr int kMaxResamples = 64;

}  // namespace confviz
