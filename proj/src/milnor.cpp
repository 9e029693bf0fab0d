#include "mgk/milnor.hpp"

#include <sstream>

#include "mgk/error.hpp"

namespace mgk {

namespace {

void check_letters(const Word& word, int rank) {
  for (const auto& l : word.letters()) {
    if (l.gen < 0 || l.gen >= rank) {
      throw UnknownGenerator("generator index " + std::to_string(l.gen) +
                             " outside alphabet of size " + std::to_string(rank));
    }
  }
}

}  // namespace

RingElement magnus(const Word& word, int rank) { return magnus_truncated(word, rank, kMaxRingRank); }

RingElement magnus_truncated(const Word& word, int rank, int max_degree) {
  check_letters(word, rank);
  RingElement out = RingElement::one(rank);
  for (const auto& l : word.letters()) out.multiply_by_letter(l.gen + 1, l.power, max_degree);
  return out;
}

MilnorElement::MilnorElement(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRingRank) throw InvalidArgument("Milnor group rank out of range");
  for (int t = 1; t < rank; ++t) kernel_parts_.emplace_back(t);
}

const RingElement& MilnorElement::kernel_part(int t) const {
  if (t < 1 || t >= rank_) throw InvalidArgument("kernel level out of range");
  return kernel_parts_[t - 1];
}

bool MilnorElement::is_identity() const {
  if (exponent_ != 0) return false;
  for (const auto& rho : kernel_parts_) {
    if (!rho.is_zero()) return false;
  }
  return true;
}

Word MilnorElement::to_word() const {
  Word out;
  for (int t = rank_ - 1; t >= 1; --t) out *= r_map(kernel_parts_[t - 1]);
  if (rank_ >= 1) {
    // exponent is small in practice; guard against absurd words
    if (boost::multiprecision::abs(exponent_) > 1'000'000) {
      throw InvalidArgument("exponent too large to spell as a word");
    }
    out *= Word::generator(0).power(exponent_.convert_to<int>());
  }
  return out;
}

MilnorElement MilnorElement::operator*(const MilnorElement& other) const {
  if (rank_ != other.rank_) throw UniverseMismatch("Milnor group ranks differ");
  // (r(rho) g)(r(rho') g') = r(rho + magnus(g) rho') g g', level by level.
  MilnorElement out(rank_);
  out.exponent_ = exponent_ + other.exponent_;
  // tail_t: the element of M(F_t) given by levels below t of *this.
  for (int t = 1; t < rank_; ++t) {
    MilnorElement tail(t);
    tail.exponent_ = exponent_;
    for (int u = 1; u < t; ++u) tail.kernel_parts_[u - 1] = kernel_parts_[u - 1];
    const RingElement twist = magnus(tail.to_word(), t);
    out.kernel_parts_[t - 1] = kernel_parts_[t - 1] + twist * other.kernel_parts_[t - 1];
  }
  return out;
}

MilnorElement MilnorElement::inverse() const { return normal_form(to_word().inverse(), rank_); }

std::string MilnorElement::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int t = rank_ - 1; t >= 1; --t) out << kernel_parts_[t - 1].to_string() << "; ";
  out << exponent_ << "]";
  return out.str();
}

MilnorElement normal_form(const Word& word, int rank) {
  check_letters(word, rank);
  const Word reduced = word.freely_reduced();
  MilnorElement out(rank);
  // prefix[t-1] = magnus of the prefix read so far with m_{t+1}..m_rank erased,
  // in R(y_1..y_t). Reading m_{t+1}^e adds e * prefix[t-1] to rho_t.
  std::vector<RingElement> prefix;
  for (int t = 1; t < rank; ++t) prefix.push_back(RingElement::one(t));
  for (const auto& l : reduced.letters()) {
    const int j = l.gen + 1;
    if (j == 1) {
      out.exponent_ += l.power;
    } else if (l.power > 0) {
      out.kernel_parts_[j - 2] += prefix[j - 2];
    } else {
      out.kernel_parts_[j - 2] -= prefix[j - 2];
    }
    for (int t = j; t < rank; ++t) prefix[t - 1].multiply_by_letter(j, l.power);
  }
  return out;
}

bool milnor_equal(const Word& lhs, const Word& rhs, int rank) {
  return normal_form(lhs, rank) == normal_form(rhs, rank);
}

Word r_basis_word(const Monomial& mono, int s) {
  if (mono.max_var() > s) throw UniverseMismatch("monomial uses a variable above s");
  Word w = Word::generator(s);
  const auto vars = mono.vars();
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    w = Word::commutator(Word::generator(*it - 1), w);
  }
  return w;
}

Word r_map(const RingElement& rho) {
  const int s = rho.rank();
  Word out;
  for (const auto& [mono, coeff] : rho.terms()) {
    if (boost::multiprecision::abs(coeff) > 1'000'000) {
      throw InvalidArgument("coefficient too large to spell as a word");
    }
    out *= r_basis_word(mono, s).power(coeff.convert_to<int>());
  }
  return out;
}

RingElement r_inverse(const Word& word, int s) {
  const MilnorElement nf = normal_form(word, s + 1);
  if (s == 0) return RingElement::constant(0, nf.exponent());
  if (nf.exponent() != 0) throw NotInKernel("word does not lie in the kernel of m_{s+1} -> 1");
  for (int t = 1; t < s; ++t) {
    if (!nf.kernel_part(t).is_zero()) {
      throw NotInKernel("word does not lie in the kernel of m_{s+1} -> 1");
    }
  }
  return nf.kernel_part(s);
}

RingElement conjugation_action(const Word& g, const RingElement& rho) {
  if (g.generator_bound() > rho.rank()) {
    throw UniverseMismatch("acting word uses generators outside the ring's universe");
  }
  return magnus(g, rho.rank()) * rho;
}

std::optional<int> lcs_degree(const Word& word, std::optional<int> rank) {
  const int r = rank.value_or(word.generator_bound());
  // Truncation is a ring map, so a nonzero term found below the cap is exact.
  for (int cap = 1;; ++cap) {
    const int bounded = std::min(cap, r);
    const RingElement m = magnus_truncated(word, r, bounded);
    if (auto d = m.min_positive_degree()) return d;
    if (bounded >= r) return std::nullopt;
  }
}

std::uint64_t basis_rank(int s) {
  if (s < 0) throw InvalidArgument("negative rank");
  if (s > 20) throw InvalidArgument("basis rank overflows 64 bits for s > 20");
  std::uint64_t total = 0;
  std::uint64_t falling = 1;  // s!/(s-k)!
  for (int k = 0; k <= s; ++k) {
    total += falling;
    falling *= static_cast<std::uint64_t>(s - k);
  }
  return total;
}

}  // namespace mgk
