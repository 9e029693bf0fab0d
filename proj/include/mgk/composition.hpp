#pragma once

// Link composition L-hat[target := Q]: the target component of L-hat is
// replaced by a link Q carried in its tubular neighbourhood. At the word level
// the target meridian becomes the wedge word of Q, and the core symbol of Q
// becomes the longitude of the replaced component.
//
// Index conventions for the ring maps below: component l_1 (the first
// non-target component) is deleted throughout. L-hat minus l_1 uses the
// alphabet (m_2, ..., m_k, m_{k+1}) with the target last, so r-inverse lands
// in R(y_2..y_k). The composed link minus l_1 uses (m_2, ..., m_k, z_2, ...,
// z_m, z_1), landing in R(y_2..y_k, z_2..z_m); the y's come first so that
// R(y_2..y_k) embeds as the first variables.

#include <cstdint>
#include <string>
#include <vector>

#include "mgk/error.hpp"
#include "mgk/integer.hpp"
#include "mgk/link.hpp"
#include "mgk/ring.hpp"

namespace mgk {

struct CompositionSpec {
  LinkModel hat_l;
  SolidTorusLink q;
  /// Component of hat_l that is replaced; -1 means the last one.
  int target = -1;

  CompositionSpec(LinkModel hat_l, SolidTorusLink q, int target = -1);

  int target_index() const;
  /// k: the number of components of hat_l that survive.
  int k() const { return hat_l.size() - 1; }
  /// m: the number of components of Q.
  int m() const { return q.size(); }
};

/// hat_l's non-target components (in order), then Q's components. Throws
/// InvalidArgument when a name of Q collides with a surviving name of hat_l.
LinkModel compose(const CompositionSpec& spec);

/// r-inverse of the wedge word, with component `deleted` of Q as the last
/// meridian; variables are the other components of Q in order.
RingElement wedge_ring_element(const SolidTorusLink& q, int deleted = 0);

/// lc: words over (m_2..m_k, m_{k+1}) to words over (m_2..m_k, z_2..z_m, z_1).
Word lc_substitute(const CompositionSpec& spec, const Word& word);

struct SigmaCase {
  std::string rho;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SigmaReport {
  RingElement wedge_r{0};
  std::vector<SigmaCase> cases;

  bool passed() const;
};

/// Checks r_inverse(lc(r_map(rho))) = rho * wedge_R on every generator y_i and
/// on `trials` random rho drawn from `seed`. Needs k >= 1.
SigmaReport verify_sigma(const CompositionSpec& spec, int trials, std::uint64_t seed);

struct Certificate {
  Integer a;
  Integer b;
  Integer c;

  bool multiplicative() const { return c == a * b; }
};

/// Top coefficients a, b, c of l_1 in L-hat, the wedge, and the composed link. Throws CertificateRefused
/// unless hat_l and Q-hat are almost homotopically trivial.
Certificate essentiality_certificate(const CompositionSpec& spec);

class CertificateRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace mgk
