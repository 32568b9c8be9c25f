#ifndef POWERFAM_RNG_HPP
#define POWERFAM_RNG_HPP

#include <cstdint>

namespace powerfam {
namespace rng {

// splitmix64 finalizer: bijective avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent substream seed from (master, stream, index).
// Used to key simulation replications so that parallel scheduling can
// never change which random numbers a given replication sees.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index)
{
    return mix64(mix64(mix64(master) ^ stream) ^ index);
}

// Counter-style splitmix64 stream. next_unit() yields doubles strictly
// inside (0,1): the 53-bit mantissa draw is offset by half an ulp so the
// endpoints 0 and 1 are unreachable (inverse-transform sampling needs an
// open interval).
class Stream
{
  public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_unit()
    {
        const double scale = 1.0 / 9007199254740992.0; // 2^-53
        return (static_cast<double>(next_u64() >> 11) + 0.5) * scale;
    }

  private:
    std::uint64_t state_;
};

} // namespace rng
} // namespace powerfam

#endif
