#pragma once

// Group words over a named alphabet, plus the textual word grammar:
//
//   product := factor*          (juxtaposition; '*' or '.' may separate factors)
//   factor  := atom ( "'" | "^" int )*
//   atom    := name | "1" | "(" product ")" | "[" product "," product "]"
//   name    := [A-Za-z_]+ [0-9]*
//
// so "m1m2" reads as m1 followed by m2. "'" inverts, [a,b] = a b a' b'.

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mgk {

/// Ordered list of distinct generator names; position is the generator index.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// "m1".."m<count>" (or another prefix).
  static Alphabet numbered(const std::string& prefix, int count, int first = 1);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int index) const { return names_.at(index); }
  std::optional<int> find(const std::string& name) const;
  /// Throws UnknownGenerator.
  int index(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  /// Appends a new name and returns its index; throws on duplicates.
  int add(const std::string& name);

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> lookup_;
};

/// A generator index raised to +1 or -1.
struct Letter {
  int gen = 0;
  int power = 1;

  Letter inverse() const { return {gen, -power}; }
  bool operator==(const Letter&) const = default;
};

/// Unreduced product of letters. Generator indices refer to an alphabet held
/// by the caller.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int gen, int power = 1) { return Word({Letter{gen, power}}); }
  static Word commutator(const Word& a, const Word& b);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// One past the largest generator index used (0 for the empty word).
  int generator_bound() const;
  bool uses(int gen) const;

  Word inverse() const;
  Word power(int n) const;
  Word freely_reduced() const;
  /// Deletes every occurrence of gen^{+-1} (the quotient setting gen = 1).
  Word erased(int gen) const;
  /// Replaces gen^{+-1} by replacement^{+-1}.
  Word substituted(int gen, const Word& replacement) const;
  /// Renames generator g to mapping[g]; entries of -1 erase the letter.
  Word renamed(std::span<const int> mapping) const;
  /// Replaces every letter g^{+-1} by images[g]^{+-1}.
  Word mapped(std::span<const Word> images) const;

  Word& operator*=(const Word& other);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Parsed word text that keeps commutator and power structure for printing.
struct WordExpr {
  enum class Kind { Identity, Generator, Product, Commutator, Power };

  Kind kind = Kind::Identity;
  std::string name;              // Generator
  std::vector<WordExpr> parts;   // Product: factors; Commutator: two; Power: one
  int exponent = 1;              // Power

  static WordExpr identity() { return {}; }
  static WordExpr generator(std::string name);
  static WordExpr product(std::vector<WordExpr> parts);
  static WordExpr commutator(WordExpr a, WordExpr b);
  static WordExpr power(WordExpr base, int exponent);

  /// Generator names in order of first appearance.
  std::vector<std::string> generator_names() const;
  /// Expands sugar into letters; names must be in the alphabet.
  Word flatten(const Alphabet& alphabet) const;
  /// Flattens, appending unseen names to the alphabet.
  Word flatten_extending(Alphabet& alphabet) const;
  std::string to_string() const;
};

WordExpr parse_word_expr(const std::string& text);
Word parse_word(const std::string& text, const Alphabet& alphabet);

/// Space-separated letters with ' for inverses; "1" for the empty word.
std::string format_word(const Word& word, const Alphabet& alphabet);

/// Alphabet for a set of names: when every name is <prefix><number> with a
/// shared prefix, returns prefix1..prefixMax (at least `min_size` entries);
/// otherwise the names in sorted order.
Alphabet infer_alphabet(const std::vector<std::string>& names, int min_size = 0);

}  // namespace mgk
