#include "mgk/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mgk/error.hpp"

namespace mgk {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

Alphabet Alphabet::numbered(const std::string& prefix, int count, int first) {
  Alphabet out;
  for (int i = 0; i < count; ++i) out.add(prefix + std::to_string(first + i));
  return out;
}

std::optional<int> Alphabet::find(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator("unknown generator '" + name + "'");
}

int Alphabet::add(const std::string& name) {
  if (name.empty()) throw InvalidArgument("empty generator name");
  if (lookup_.contains(name)) throw InvalidArgument("duplicate generator name '" + name + "'");
  const int index = size();
  names_.push_back(name);
  lookup_.emplace(name, index);
  return index;
}

Word Word::commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

int Word::generator_bound() const {
  int bound = 0;
  for (const auto& l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

bool Word::uses(int gen) const {
  return std::any_of(letters_.begin(), letters_.end(), [gen](const Letter& l) { return l.gen == gen; });
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

Word Word::freely_reduced() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word Word::erased(int gen) const {
  std::vector<Letter> out;
  std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out),
               [gen](const Letter& l) { return l.gen != gen; });
  return Word(std::move(out));
}

Word Word::substituted(int gen, const Word& replacement) const {
  const Word inverse_replacement = replacement.inverse();
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.gen != gen) {
      out.push_back(l);
      continue;
    }
    const auto& piece = l.power > 0 ? replacement.letters_ : inverse_replacement.letters_;
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return Word(std::move(out));
}

Word Word::renamed(std::span<const int> mapping) const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= mapping.size()) {
      throw UniverseMismatch("generator index outside renaming table");
    }
    if (mapping[l.gen] >= 0) out.push_back({mapping[l.gen], l.power});
  }
  return Word(std::move(out));
}

Word Word::mapped(std::span<const Word> images) const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size()) {
      throw UniverseMismatch("generator index outside substitution table");
    }
    const Word piece = l.power > 0 ? images[l.gen] : images[l.gen].inverse();
    out.insert(out.end(), piece.letters_.begin(), piece.letters_.end());
  }
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

WordExpr WordExpr::generator(std::string name) {
  WordExpr e;
  e.kind = Kind::Generator;
  e.name = std::move(name);
  return e;
}

WordExpr WordExpr::product(std::vector<WordExpr> parts) {
  if (parts.empty()) return identity();
  if (parts.size() == 1) return std::move(parts.front());
  WordExpr e;
  e.kind = Kind::Product;
  for (auto& p : parts) {
    if (p.kind == Kind::Product) {
      for (auto& q : p.parts) e.parts.push_back(std::move(q));
    } else if (p.kind != Kind::Identity) {
      e.parts.push_back(std::move(p));
    }
  }
  if (e.parts.empty()) return identity();
  if (e.parts.size() == 1) return std::move(e.parts.front());
  return e;
}

WordExpr WordExpr::commutator(WordExpr a, WordExpr b) {
  WordExpr e;
  e.kind = Kind::Commutator;
  e.parts.push_back(std::move(a));
  e.parts.push_back(std::move(b));
  return e;
}

WordExpr WordExpr::power(WordExpr base, int exponent) {
  if (exponent == 1) return base;
  WordExpr e;
  e.kind = Kind::Power;
  e.exponent = exponent;
  e.parts.push_back(std::move(base));
  return e;
}

namespace {

void collect_names(const WordExpr& e, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (e.kind == WordExpr::Kind::Generator) {
    if (seen.insert(e.name).second) out.push_back(e.name);
    return;
  }
  for (const auto& p : e.parts) collect_names(p, out, seen);
}

Word flatten_impl(const WordExpr& e, const Alphabet& alphabet) {
  switch (e.kind) {
    case WordExpr::Kind::Identity:
      return {};
    case WordExpr::Kind::Generator:
      return Word::generator(alphabet.index(e.name));
    case WordExpr::Kind::Product: {
      Word out;
      for (const auto& p : e.parts) out *= flatten_impl(p, alphabet);
      return out;
    }
    case WordExpr::Kind::Commutator:
      return Word::commutator(flatten_impl(e.parts[0], alphabet), flatten_impl(e.parts[1], alphabet));
    case WordExpr::Kind::Power:
      return flatten_impl(e.parts[0], alphabet).power(e.exponent);
  }
  return {};
}

std::string to_string_impl(const WordExpr& e) {
  switch (e.kind) {
    case WordExpr::Kind::Identity:
      return "1";
    case WordExpr::Kind::Generator:
      return e.name;
    case WordExpr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += ' ';
        out += to_string_impl(e.parts[i]);
      }
      return out;
    }
    case WordExpr::Kind::Commutator:
      return "[" + to_string_impl(e.parts[0]) + "," + to_string_impl(e.parts[1]) + "]";
    case WordExpr::Kind::Power: {
      const auto& base = e.parts[0];
      std::string inner = to_string_impl(base);
      if (base.kind == WordExpr::Kind::Product || base.kind == WordExpr::Kind::Power) {
        inner = "(" + inner + ")";
      }
      if (e.exponent == -1) return inner + "'";
      return inner + "^" + std::to_string(e.exponent);
    }
  }
  return {};
}

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  WordExpr parse() {
    WordExpr e = parse_product();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  WordExpr parse_product() {
    std::vector<WordExpr> factors;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      if (c == '*' || c == '.') {
        if (factors.empty()) throw ParseError("dangling product operator", pos_);
        ++pos_;
        continue;
      }
      if (c == ')' || c == ']' || c == ',') break;
      factors.push_back(parse_factor());
    }
    return WordExpr::product(std::move(factors));
  }

  WordExpr parse_factor() {
    WordExpr e = parse_atom();
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] == '\'') {
        ++pos_;
        e = WordExpr::power(std::move(e), -1);
      } else if (text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        e = WordExpr::power(std::move(e), parse_int());
      } else {
        break;
      }
    }
    return e;
  }

  WordExpr parse_atom() {
    skip_ws();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordExpr e = parse_product();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      WordExpr a = parse_product();
      expect(',');
      WordExpr b = parse_product();
      expect(']');
      return WordExpr::commutator(std::move(a), std::move(b));
    }
    if (c == '1') {
      const std::size_t start = pos_++;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("only the literal 1 may stand for the identity", start);
      }
      return WordExpr::identity();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return WordExpr::generator(text_.substr(start, pos_ - start));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  int parse_int() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer exponent", start);
    if (pos_ - digits > 6) throw ParseError("exponent too large", start);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> WordExpr::generator_names() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_names(*this, out, seen);
  return out;
}

Word WordExpr::flatten(const Alphabet& alphabet) const { return flatten_impl(*this, alphabet); }

Word WordExpr::flatten_extending(Alphabet& alphabet) const {
  for (const auto& n : generator_names()) {
    if (!alphabet.contains(n)) alphabet.add(n);
  }
  return flatten_impl(*this, alphabet);
}

std::string WordExpr::to_string() const { return to_string_impl(*this); }

WordExpr parse_word_expr(const std::string& text) { return WordParser(text).parse(); }

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  return parse_word_expr(text).flatten(alphabet);
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
  if (word.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : word.letters()) {
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(l.gen);
    if (l.power < 0) out << '\'';
  }
  return out.str();
}

Alphabet infer_alphabet(const std::vector<std::string>& names, int min_size) {
  std::string prefix;
  int max_number = 0;
  bool numbered = !names.empty();
  for (const auto& n : names) {
    const auto digit = std::find_if(n.begin(), n.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digit == n.begin() || digit == n.end() || *digit == '0') {
      numbered = false;
      break;
    }
    std::string p(n.begin(), digit);
    if (prefix.empty()) prefix = p;
    if (p != prefix) {
      numbered = false;
      break;
    }
    max_number = std::max(max_number, std::stoi(std::string(digit, n.end())));
  }
  if (numbered) return Alphabet::numbered(prefix, std::max(max_number, min_size));
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  return Alphabet(sorted);
}

}  // namespace mgk
