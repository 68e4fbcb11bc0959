#pragma once

#include <cstdint>

#include "stabkit/rational.hpp"

namespace stabkit {

// Deterministic splitmix64 stream; identical seeds give identical draws on
// every platform (no standard-library distributions are used anywhere).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin(unsigned percent = 50) { return below(100) < percent; }

  // Small random rational with |numerator| <= span and denominator <= den.
  mpq_class rat(long span = 8, long den = 4) {
    mpq_class q(range(-span, span), range(1, den));
    q.canonicalize();
    return q;
  }

  // Strictly positive small rational.
  mpq_class pos_rat(long span = 8, long den = 4) {
    mpq_class q(range(1, span), range(1, den));
    q.canonicalize();
    return q;
  }

  // Fork a distinct deterministic substream (for per-case seeds).
  Rng fork(std::uint64_t tag) {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace stabkit
