#ifndef HYPERLAG_RNG_HPP
#define HYPERLAG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace hyperlag {

/// SplitMix64. Streams are split by hashing (seed, stream index), so stream k
/// yields the same numbers no matter which worker draws it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ 0x6a09e667f3bcc909ULL);
    const std::uint64_t a = mix.next();
    SplitMix64 mix2(a + 0x9e3779b97f4a7c15ULL * (index + 1));
    return SplitMix64(mix2.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1).
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Flat Dirichlet sample (uniform on the simplex) of dimension k.
  std::vector<double> dirichlet(std::size_t k) {
    std::vector<double> w(k);
    double total = 0;
    for (auto& x : w) total += (x = -std::log(uniform()));
    for (auto& x : w) x /= total;
    return w;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperlag

#endif  // HYPERLAG_RNG_HPP
