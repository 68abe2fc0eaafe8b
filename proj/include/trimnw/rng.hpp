#pragma once

#include <cstdint>
#include <random>

namespace trimnw {

// deterministic stream-splittable generator: identical (seed, stream_id)
// reproduces identical draws on every platform. Simulation replication j uses
// stream_id = j; bootstrap resample b uses stream_id = b.
class seeded_rng {
 public:
  explicit seeded_rng(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  // uniform on [0, 1)
  double uniform01();

  // standard normal via Marsaglia's polar method (no trig calls)
  double normal();

  // unbiased uniform integer on [0, bound)
  std::uint64_t next_index(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace trimnw
