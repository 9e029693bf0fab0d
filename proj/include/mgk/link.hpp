#pragma once

// Links presented by longitude words in the meridians of the other
// components, and distinct-index mu-bar invariants read off their Magnus
// expansions.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "mgk/integer.hpp"
#include "mgk/milnor.hpp"
#include "mgk/word.hpp"

namespace mgk {

/// n components; component i has meridian generator i (named after the
/// component) and a longitude word avoiding its own meridian.
class LinkModel {
 public:
  LinkModel(Alphabet meridians, std::vector<Word> longitudes);
  /// Parses longitude texts against the component names.
  static LinkModel from_text(const std::vector<std::string>& names,
                             const std::vector<std::string>& longitudes);

  int size() const { return meridians_.size(); }
  const Alphabet& meridians() const { return meridians_; }
  const std::string& name(int i) const { return meridians_.name(i); }
  const Word& longitude(int i) const { return longitudes_.at(i); }
  const std::vector<Word>& longitudes() const { return longitudes_; }

  /// {"components": [...], "longitudes": {name: word}}.
  nlohmann::json to_json() const;

  bool operator==(const LinkModel& other) const = default;

 private:
  Alphabet meridians_;
  std::vector<Word> longitudes_;
};

/// A link Q in the solid torus, stored as Q-hat = Q plus the meridian curve
/// of the solid torus, viewed in S^3. The last component of `hat` is that
/// curve: its longitude is the wedge word (in the z's), and its meridian is
/// the core symbol, which marks the S^1 x {pt} direction in Q's longitudes.
class SolidTorusLink {
 public:
  SolidTorusLink(const std::vector<std::string>& names, const std::vector<Word>& longitudes,
                 const Word& wedge, const std::string& core_symbol = "lambda");
  /// Names index the alphabet names..., core_symbol.
  static SolidTorusLink from_text(const std::vector<std::string>& names,
                                  const std::vector<std::string>& longitudes,
                                  const std::string& wedge,
                                  const std::string& core_symbol = "lambda");

  /// Number of components of Q.
  int size() const { return hat_.size() - 1; }
  /// Alphabet z_1..z_m, core symbol.
  const Alphabet& alphabet() const { return hat_.meridians(); }
  int core_index() const { return size(); }
  const std::string& core_symbol() const { return hat_.name(core_index()); }
  const std::string& name(int i) const { return hat_.name(i); }
  const Word& longitude(int i) const { return hat_.longitude(i); }
  const Word& wedge() const { return hat_.longitude(core_index()); }
  /// Q-hat as a link in S^3.
  const LinkModel& hat() const { return hat_; }

  /// Adds "wedge" and "core" to the LinkModel JSON of Q.
  nlohmann::json to_json() const;

  bool operator==(const SolidTorusLink& other) const = default;

 private:
  explicit SolidTorusLink(LinkModel hat) : hat_(std::move(hat)) {}
  LinkModel hat_;
};

using AnyLink = std::variant<LinkModel, SolidTorusLink>;

/// Distinct component indices (i_1, ..., i_k, j), k >= 1, 0-based.
class MuIndex {
 public:
  explicit MuIndex(std::vector<int> indices);
  /// Comma-separated, 1-based: "2,3,1".
  static MuIndex parse(const std::string& text);

  const std::vector<int>& indices() const { return indices_; }
  int target() const { return indices_.back(); }
  std::string to_string() const;

 private:
  std::vector<int> indices_;
};

/// Coefficient of y_{i_1} ... y_{i_k} in magnus(longitude of j).
Integer mu_bar(const LinkModel& link, const MuIndex& index);

/// Component i removed; its meridian erased from the other longitudes.
LinkModel delete_component(const LinkModel& link, int i);

/// Every longitude is trivial in the free Milnor group on the other meridians,
/// and every proper sublink is trivial. One-component links are trivial.
bool is_homotopically_trivial(const LinkModel& link);

/// Every sublink with one component fewer is homotopically trivial. Requires
/// at least two components; for two components this always holds.
bool is_almost_trivial(const LinkModel& link);

/// Built-in models: unlink(n), hopf, borromean, whitehead_pattern (link
/// models); core, bing_double, hopf_in_ball (solid-torus links).
AnyLink catalog(const std::string& name);
std::vector<std::string> catalog_names();

AnyLink link_from_json(const nlohmann::json& doc);
nlohmann::json link_to_json(const AnyLink& link);

}  // namespace mgk
