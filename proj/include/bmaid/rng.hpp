#pragma once

#include <cstdint>

namespace bmaid {

// Seedable pseudo-random stream with counter-derived initialization.
// Streams are cheap value types: construct one per Monte Carlo draw from
// (seed, stream id) so results do not depend on evaluation order or on
// how work is split across threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t next_u64() noexcept;

  // Strictly inside (0,1).
  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept;

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

// Stream-id layout guaranteeing disjoint ids across uses:
// | domain (16 bits) | model (8 bits) | draw index (40 bits) |.
constexpr std::uint64_t make_stream_id(std::uint64_t domain, std::uint64_t model,
                                       std::uint64_t index) noexcept {
  return (domain << 48) | ((model & 0xffULL) << 40) | (index & 0xffffffffffULL);
}

namespace stream_domain {
inline constexpr std::uint64_t kScenario = 0;
inline constexpr std::uint64_t kCalibration = 1;
inline constexpr std::uint64_t kEnsemble = 2;
inline constexpr std::uint64_t kPosteriorCurve = 3;
inline constexpr std::uint64_t kTest = 15;
}  // namespace stream_domain

}  // namespace bmaid
