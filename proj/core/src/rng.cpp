#include "graphib/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "graphib/error.hpp"

namespace graphib {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::size_t Rng::uniform_index(std::size_t n) {
  require(n > 0, Errc::invalid_argument, "uniform_index: empty range");
  // Rejection sampling removes modulo bias.
  const std::uint64_t span = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw = next_u64();
  while (draw >= limit) draw = next_u64();
  return static_cast<std::size_t>(draw % span);
}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

std::string Rng::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << seed_ << ' ' << (has_spare_ ? 1 : 0) << ' ';
  out << std::hexfloat << spare_ << std::defaultfloat << ' ';
  out << engine_;
  return out.str();
}

Rng Rng::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::uint64_t seed = 0;
  int has_spare = 0;
  double spare = 0.0;
  in >> seed >> has_spare >> spare;
  Rng rng(seed);
  in >> rng.engine_;
  require(static_cast<bool>(in), Errc::parse, "Rng::deserialize: malformed state string");
  rng.has_spare_ = has_spare != 0;
  rng.spare_ = spare;
  return rng;
}

}  // namespace graphib
