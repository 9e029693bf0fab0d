#include <random>

#include "doctest.h"
#include "mgk/error.hpp"
#include "mgk/random.hpp"
#include "mgk/ring.hpp"
#include "oracles.hpp"

using mgk::Monomial;
using mgk::RingElement;

namespace {

RingElement y(int rank, int var) { return RingElement::variable(rank, var); }

oracle::Poly to_poly(const RingElement& r) {
  oracle::Poly p;
  for (const auto& [mono, coeff] : r.terms()) {
    std::vector<int> vars(mono.vars().begin(), mono.vars().end());
    p[vars] = static_cast<long long>(coeff);
  }
  return p;
}

}  // namespace

TEST_CASE("monomials reject repeated variables") {
  CHECK_THROWS_AS(Monomial({1, 2, 1}), mgk::InvalidArgument);
  CHECK(Monomial({2, 1}).degree() == 2);
  CHECK_FALSE(Monomial::concat(Monomial{1, 2}, Monomial{3, 2}).has_value());
  CHECK(*Monomial::concat(Monomial{1}, Monomial{3}) == Monomial({1, 3}));
}

TEST_CASE("graded lexicographic order") {
  CHECK(Monomial{} < Monomial{3});
  CHECK(Monomial{3} < Monomial{1, 2});
  CHECK(Monomial{1, 2} < Monomial{2, 1});
}

TEST_CASE("addition") {
  CHECK((y(2, 1) + (-y(2, 1))).is_zero());
  CHECK((y(2, 1) * y(2, 2) + y(2, 2) * y(2, 1)).to_string() == "y1*y2 + y2*y1");
  CHECK((RingElement::one(2) + RingElement::zero(2)).is_one());
}

TEST_CASE("multiplication kills repeated indices") {
  CHECK((y(3, 1) * y(3, 1)).is_zero());
  const RingElement one = RingElement::one(3);
  CHECK(((one + y(3, 2)) * (one - y(3, 2))).is_one());
  const RingElement p = (one + y(3, 2)) * (one + y(3, 3)) * (one - y(3, 2)) * (one - y(3, 3));
  CHECK(p.to_string() == "1 + y2*y3 - y3*y2");
}

TEST_CASE("universe mismatch") {
  CHECK_THROWS_AS(y(2, 1) + y(3, 1), mgk::UniverseMismatch);
  CHECK_THROWS_AS(y(2, 1) * y(3, 1), mgk::UniverseMismatch);
  CHECK_THROWS_AS(RingElement::variable(2, 3), mgk::UniverseMismatch);
}

TEST_CASE("printing and parsing round trip") {
  const RingElement r = mgk::parse_ring_element("1 + y1*y2 - 3*y2*y1 + y3", 3);
  CHECK(r.to_string() == "1 + y3 + y1*y2 - 3*y2*y1");
  CHECK(mgk::parse_ring_element(r.to_string(), 3) == r);
  CHECK(mgk::parse_ring_element("0", 2).is_zero());
  CHECK(mgk::parse_ring_element("-y1", 2) == -y(2, 1));
  CHECK(mgk::parse_ring_element("y1*y1 + y2", 2).to_string() == "y2");
  CHECK_THROWS_AS(mgk::parse_ring_element("1 +", 2), mgk::ParseError);
  CHECK_THROWS_AS(mgk::parse_ring_element("y4", 2), mgk::Error);
}

TEST_CASE("truncation, projection and remapping") {
  const RingElement r = mgk::parse_ring_element("1 + y1 + y1*y2 + y2*y3*y1", 3);
  CHECK(r.truncated(1).to_string() == "1 + y1");
  CHECK(r.projected(2).to_string() == "1 + y1 + y1*y2");
  const std::vector<int> swap{2, 1, 0};
  CHECK(r.remapped(2, swap).to_string() == "1 + y2 + y2*y1");
  CHECK(r.min_positive_degree() == 1);
  CHECK(r.max_degree() == 3);
  CHECK_FALSE(RingElement::one(2).min_positive_degree().has_value());
}

TEST_CASE("coefficients are unbounded") {
  const RingElement big = RingElement::constant(1, mgk::Integer(1) << 200);
  CHECK((big * big).constant_term() == (mgk::Integer(1) << 400));
}

TEST_CASE("multiplication agrees with the naive oracle") {
  mgk::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int s = mgk::random_int(rng, 1, 5);
    const RingElement a = mgk::random_ring_element(rng, s, 5, 4, s);
    const RingElement b = mgk::random_ring_element(rng, s, 5, 4, s);
    CHECK(to_poly(a * b) == oracle::mul(to_poly(a), to_poly(b)));
    CHECK(to_poly(a + b) == oracle::add(to_poly(a), to_poly(b)));
    CHECK(RingElement::multiply_truncated(a, b, 2) == (a * b).truncated(2));
  }
}

TEST_CASE("ring axioms") {
  mgk::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int s = mgk::random_int(rng, 1, 5);
    const RingElement a = mgk::random_ring_element(rng, s, 4, 3, s);
    const RingElement b = mgk::random_ring_element(rng, s, 4, 3, s);
    const RingElement c = mgk::random_ring_element(rng, s, 4, 3, s);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(RingElement::one(s) * a == a);
  }
}
