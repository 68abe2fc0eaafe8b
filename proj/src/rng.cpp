#include "trimnw/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trimnw {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream_id & 0xffffffffu),
      static_cast<std::uint32_t>(stream_id >> 32),
  };
  return std::mt19937_64(seq);
}

}  // namespace

seeded_rng::seeded_rng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

double seeded_rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double seeded_rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * f;
  has_cached_normal_ = true;
  return u * f;
}

std::uint64_t seeded_rng::next_index(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_index: bound must be positive");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace trimnw
