#include "helpers.hpp"

using namespace gct;

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a = scalar_from_string("2/4");
  CHECK(to_string(a) == "1/2");
  Scalar b = scalar_from_string("1/3+2/5*i");
  CHECK(to_string(b) == "1/3+2/5*i");
  CHECK(to_string(b.conj()) == "1/3-2/5*i");
  CHECK(b * b.inverse() == Scalar(1));
  CHECK(to_string(scalar_from_string("-3*i")) == "-3*i");
  CHECK(scalar_from_string(to_string(b)) == b);
  CHECK(exact_sqrt(Rational(25, 16)).value() == Rational(5, 4));
  CHECK(!exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("poly arithmetic, derivative, evaluation") {
  unsigned n = 3;
  Poly p = x(n, 1) * x(n, 1) + x(n, 2) * c(n, 2) + c(n, 5);
  CHECK(p.total_degree() == 2);
  CHECK(p.derivative(0) == x(n, 1) * S(2));
  CHECK(p.derivative(2).is_zero());
  std::vector<Scalar> pt{S(2), S(3), S(0)};
  CHECK(p.eval(pt) == S(15));
  CHECK((p - p).is_zero());
}

TEST_CASE("wedge: basis products, repeated index, distributivity") {
  unsigned n = 4;
  // eps1 ^ eps2 = eps12
  CHECK(wedge(eps(n, {1}), eps(n, {2})) == eps(n, {1, 2}));
  // eps12 ^ eps12 = 0
  CHECK(wedge(eps(n, {1, 2}), eps(n, {1, 2})).is_zero());
  // (1 + eps12) ^ (1 + eps34) = 1 + eps12 + eps34 + eps1234
  Polyform lhs = wedge(Polyform::scalar(n, Scalar(1)) + eps(n, {1, 2}),
                       Polyform::scalar(n, Scalar(1)) + eps(n, {3, 4}));
  Polyform rhs = Polyform::scalar(n, Scalar(1)) + eps(n, {1, 2}) + eps(n, {3, 4}) +
                 eps(n, {1, 2, 3, 4});
  CHECK(lhs == rhs);
  // anticommutation of 1-forms
  CHECK(wedge(eps(n, {2}), eps(n, {1})) == -eps(n, {1, 2}));
}

TEST_CASE("wedge graded commutativity on random homogeneous forms") {
  FrameAlgebra frame = FrameAlgebra::coordinate(5);
  SplitMix64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    unsigned p = static_cast<unsigned>(rng.range(0, 3));
    unsigned q = static_cast<unsigned>(rng.range(0, 3));
    Polyform a = random_form(rng, frame, p, true);
    Polyform b = random_form(rng, frame, q, true);
    Polyform ab = wedge(a, b);
    Polyform ba = wedge(b, a);
    if ((p * q) % 2 == 1)
      CHECK(ab == -ba);
    else
      CHECK(ab == ba);
  }
}

TEST_CASE("contraction: degree -1 derivation") {
  unsigned n = 3;
  CHECK(contract(ev(n, 1), eps(n, {1, 2})) == eps(n, {2}));
  CHECK(contract(ev(n, 1), eps(n, {2, 3})).is_zero());
  CHECK(contract(ev(n, 1), eps(n, {1, 2, 3})) == eps(n, {2, 3}));

  FrameAlgebra frame = FrameAlgebra::coordinate(4);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    VectorField v = random_vector(rng, frame);
    Polyform a = random_form(rng, frame, static_cast<unsigned>(rng.range(0, 4)), true);
    Polyform b = random_form(rng, frame, static_cast<unsigned>(rng.range(0, 3)), true);
    // iota_v iota_v = 0
    CHECK(contract(v, contract(v, a)).is_zero());
    // graded derivation over the wedge for homogeneous a
    unsigned p = a.max_degree();
    Polyform lhs = contract(v, wedge(a, b));
    Polyform rhs = wedge(contract(v, a), b);
    Polyform second = wedge(a, contract(v, b));
    rhs += (p % 2 == 1) ? -second : second;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reversal signs and anti-automorphism") {
  unsigned n = 4;
  CHECK(eps(n, {1}).reversal() == eps(n, {1}));
  CHECK(eps(n, {1, 2}).reversal() == -eps(n, {1, 2}));
  CHECK(eps(n, {1, 2, 3}).reversal() == -eps(n, {1, 2, 3}));
  CHECK(eps(n, {1, 2, 3, 4}).reversal() == eps(n, {1, 2, 3, 4}));

  FrameAlgebra frame = FrameAlgebra::coordinate(4);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Polyform a = random_form(rng, frame, static_cast<unsigned>(rng.range(0, 4)), true);
    Polyform b = random_form(rng, frame, static_cast<unsigned>(rng.range(0, 4)), true);
    CHECK(wedge(a, b).reversal() == wedge(b.reversal(), a.reversal()));
  }
}

TEST_CASE("projection, parity, exponential") {
  unsigned n = 4;
  Polyform mixed = Polyform::scalar(n, Scalar(1)) + eps(n, {1, 2}) + eps(n, {1, 2, 3, 4});
  CHECK(mixed.project_degree(2) == eps(n, {1, 2}));
  CHECK(mixed.parity() == Parity::even);
  CHECK((mixed + eps(n, {1})).parity() == Parity::mixed);

  // e^{i omega} for omega = eps12 is even; alpha(e^{i w}) ^ e^{-i w} at degree 2.
  Polyform omega = eps(n, {1, 2});
  Polyform ew = exp(omega * Scalar::i());
  CHECK(ew.parity() == Parity::even);
  Polyform val = wedge(ew.reversal(), exp(omega * (-Scalar::i()))).project_degree(2);
  CHECK(val == omega * Si(-2));

  // Nilpotency: exponent terminates and exp(a)^-1 = exp(-a) for even a.
  FrameAlgebra frame = FrameAlgebra::coordinate(4);
  SplitMix64 rng(3);
  Polyform B = random_form(rng, frame, 2, true);
  CHECK(wedge(exp(B), exp(-B)) == Polyform::scalar(4, Scalar(1)));
}
