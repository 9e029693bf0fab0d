#include "mgk/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mgk/error.hpp"

namespace mgk {

namespace {

std::uint8_t checked_var(int var) {
  if (var < 1 || var > kMaxRingRank) {
    throw InvalidArgument("variable index " + std::to_string(var) + " outside 1.." +
                          std::to_string(kMaxRingRank));
  }
  return static_cast<std::uint8_t>(var);
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> vars)
    : Monomial(std::span<const int>(vars.begin(), vars.size())) {}

Monomial::Monomial(std::span<const int> vars) {
  vars_.reserve(vars.size());
  for (int v : vars) {
    const std::uint64_t bit = std::uint64_t{1} << (checked_var(v) - 1);
    if (support_ & bit) {
      throw InvalidArgument("monomial repeats variable " + std::to_string(v));
    }
    support_ |= bit;
    vars_.push_back(static_cast<std::uint8_t>(v));
  }
}

std::optional<Monomial> Monomial::concat(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.support_ & rhs.support_) return std::nullopt;
  Monomial out;
  out.vars_.reserve(lhs.vars_.size() + rhs.vars_.size());
  out.vars_ = lhs.vars_;
  out.vars_.insert(out.vars_.end(), rhs.vars_.begin(), rhs.vars_.end());
  out.support_ = lhs.support_ | rhs.support_;
  return out;
}

int Monomial::max_var() const {
  int best = 0;
  for (auto v : vars_) best = std::max(best, static_cast<int>(v));
  return best;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = vars_.size() <=> other.vars_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vars_.begin(), vars_.end(), other.vars_.begin(),
                                                other.vars_.end());
}

std::string default_variable_name(int var) { return "y" + std::to_string(var); }

RingElement::RingElement(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRingRank) {
    throw InvalidArgument("ring rank " + std::to_string(rank) + " outside 0.." +
                          std::to_string(kMaxRingRank));
  }
}

RingElement RingElement::constant(int rank, const Integer& value) {
  RingElement out(rank);
  out.add_term(Monomial{}, value);
  return out;
}

RingElement RingElement::variable(int rank, int var) { return monomial(rank, Monomial{var}); }

RingElement RingElement::monomial(int rank, const Monomial& mono, const Integer& coeff) {
  RingElement out(rank);
  if (mono.max_var() > rank) {
    throw UniverseMismatch("monomial uses a variable above rank " + std::to_string(rank));
  }
  out.add_term(mono, coeff);
  return out;
}

bool RingElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Integer RingElement::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Integer{0} : it->second;
}

std::optional<int> RingElement::min_positive_degree() const {
  for (const auto& [mono, coeff] : terms_) {
    if (!mono.empty()) return mono.degree();  // graded order: first hit is minimal
  }
  return std::nullopt;
}

int RingElement::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void RingElement::add_term(const Monomial& mono, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElement::check_same_rank(const RingElement& other) const {
  if (rank_ != other.rank_) {
    throw UniverseMismatch("ring ranks differ: " + std::to_string(rank_) + " vs " +
                           std::to_string(other.rank_));
  }
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_same_rank(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_same_rank(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs) {
  return RingElement::multiply_truncated(lhs, rhs, kMaxRingRank);
}

RingElement operator*(const Integer& scalar, const RingElement& rhs) {
  RingElement out(rhs.rank());
  if (scalar == 0) return out;
  for (const auto& [mono, coeff] : rhs.terms()) out.terms_.emplace(mono, scalar * coeff);
  return out;
}

RingElement RingElement::multiply_truncated(const RingElement& lhs, const RingElement& rhs,
                                            int max_degree) {
  lhs.check_same_rank(rhs);
  RingElement out(lhs.rank_);
  for (const auto& [ma, ca] : lhs.terms_) {
    if (ma.degree() > max_degree) break;
    for (const auto& [mb, cb] : rhs.terms_) {
      if (ma.degree() + mb.degree() > max_degree) break;
      if (ma.support() & mb.support()) continue;
      out.add_term(*Monomial::concat(ma, mb), ca * cb);
    }
  }
  return out;
}

void RingElement::multiply_by_letter(int var, int sign, int max_degree) {
  if (var < 1 || var > rank_) {
    throw UniverseMismatch("variable y" + std::to_string(var) + " outside rank " +
                           std::to_string(rank_));
  }
  const Monomial y{var};
  // u * (1 + sign*y) = u + sign * (u * y); collect first, the map is being read.
  std::vector<std::pair<Monomial, Integer>> extra;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.degree() + 1 > max_degree) break;
    if (mono.contains(var)) continue;
    extra.emplace_back(*Monomial::concat(mono, y), sign > 0 ? coeff : Integer(-coeff));
  }
  for (const auto& [mono, coeff] : extra) add_term(mono, coeff);
}

RingElement RingElement::truncated(int max_degree) const {
  RingElement out(rank_);
  for (const auto& [mono, coeff] : terms_) {
    if (mono.degree() > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), mono, coeff);
  }
  return out;
}

RingElement RingElement::projected(int new_rank) const {
  RingElement out(new_rank);
  const std::uint64_t allowed =
      new_rank >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << new_rank) - 1);
  for (const auto& [mono, coeff] : terms_) {
    if ((mono.support() & ~allowed) == 0) out.terms_.emplace_hint(out.terms_.end(), mono, coeff);
  }
  return out;
}

RingElement RingElement::remapped(int new_rank, std::span<const int> mapping) const {
  if (static_cast<int>(mapping.size()) < rank_) {
    throw UniverseMismatch("variable mapping shorter than ring rank");
  }
  RingElement out(new_rank);
  std::vector<int> vars;
  for (const auto& [mono, coeff] : terms_) {
    vars.clear();
    bool killed = false;
    for (auto v : mono.vars()) {
      const int target = mapping[v - 1];
      if (target == 0) {
        killed = true;
        break;
      }
      if (target > new_rank) throw UniverseMismatch("variable mapped above target rank");
      vars.push_back(target);
    }
    if (killed) continue;
    std::uint64_t seen = 0;
    bool repeated = false;
    for (int v : vars) {
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      repeated = repeated || (seen & bit);
      seen |= bit;
    }
    if (repeated) continue;
    out.add_term(Monomial(std::span<const int>(vars)), coeff);
  }
  return out;
}

std::string RingElement::to_string() const { return to_string({}); }

std::string RingElement::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    const Integer magnitude = negative ? Integer(-coeff) : coeff;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mono.empty() || magnitude != 1) {
      out << magnitude;
      need_star = true;
    }
    for (auto v : mono.vars()) {
      if (need_star) out << "*";
      out << (static_cast<std::size_t>(v) <= names.size() ? names[v - 1]
                                                          : default_variable_name(v));
      need_star = true;
    }
  }
  return out.str();
}

namespace {

class RingParser {
 public:
  RingParser(const std::string& text, int rank, std::span<const std::string> names)
      : text_(text), rank_(rank), names_(names) {}

  RingElement parse() {
    RingElement out(rank_);
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty ring element", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [mono, coeff] = parse_term();
      out.add_term(mono, sign * coeff);
    }
    return out;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Integer coeff = 1;
    std::vector<int> vars;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) throw ParseError("expected factor", pos_);
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        coeff *= Integer(text_.substr(start, pos_ - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          ++pos_;
        }
        const int var = resolve(text_.substr(start, pos_ - start), start);
        if (std::find(vars.begin(), vars.end(), var) != vars.end()) {
          coeff = 0;  // repeated index: the term lies in the killed ideal
        }
        vars.push_back(var);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (coeff == 0) return {Monomial{}, 0};
    return {Monomial(std::span<const int>(vars)), coeff};
  }

  int resolve(const std::string& name, std::size_t at) const {
    if (!names_.empty()) {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i) + 1;
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    if (name.size() < 2 || name[0] != 'y' ||
        !std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("unknown variable '" + name + "'", at);
    }
    const int var = std::stoi(name.substr(1));
    if (var < 1 || var > rank_) throw ParseError("variable '" + name + "' outside rank", at);
    return var;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  int rank_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(const std::string& text, int rank,
                               std::span<const std::string> names) {
  return RingParser(text, rank, names).parse();
}

}  // namespace mgk
