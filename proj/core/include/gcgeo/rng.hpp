#pragma once

#include "gcgeo/frame.hpp"

#include <cstdint>

namespace gcgeo {

// SplitMix64: same seed gives the same sequence on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97f4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

// Random data contract: integer parts in [-3,3], polynomial total degree <= 1
// (constants only in invariant mode).
Poly random_poly(SplitMix64& rng, const FrameAlgebra& frame, bool complex_ok = false);
Polyform random_form(SplitMix64& rng, const FrameAlgebra& frame, unsigned degree,
                     bool complex_ok = false);
VectorField random_vector(SplitMix64& rng, const FrameAlgebra& frame);

inline Poly random_poly(SplitMix64& rng, const FrameAlgebra& frame, bool complex_ok) {
  Poly p(frame.dim());
  p.add_term(std::vector<unsigned>(frame.dim(), 0), Scalar(Rational(rng.range(-3, 3))));
  for (unsigned i = 0; i < frame.dim(); ++i) {
    if (!frame.is_coordinate_generator(i + 1)) continue;
    long c = rng.range(-3, 3);
    if (c == 0) continue;
    std::vector<unsigned> e(frame.dim(), 0);
    e[i] = 1;
    p.add_term(e, Scalar(Rational(c)));
  }
  if (complex_ok && rng.range(0, 1) == 1) {
    Poly q = random_poly(rng, frame, false);
    p += q * Scalar::i();
  }
  return p;
}

inline Polyform random_form(SplitMix64& rng, const FrameAlgebra& frame, unsigned degree,
                            bool complex_ok) {
  Polyform f(frame.dim());
  if (degree > frame.dim()) return f;
  // A handful of random blades of the requested degree.
  unsigned count = 1 + static_cast<unsigned>(rng.range(0, 2));
  for (unsigned t = 0; t < count; ++t) {
    blade::Mask m = 0;
    while (blade::degree(m) < degree)
      m |= blade::Mask(1) << rng.range(0, frame.dim() - 1);
    f.add_term(m, random_poly(rng, frame, complex_ok));
  }
  return f;
}

inline VectorField random_vector(SplitMix64& rng, const FrameAlgebra& frame) {
  VectorField v(frame.dim());
  for (unsigned i = 0; i < frame.dim(); ++i) v[i] = random_poly(rng, frame);
  return v;
}

}  // namespace gcgeo
