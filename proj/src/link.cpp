#include "mgk/link.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "mgk/error.hpp"

namespace mgk {

namespace {

// Guard for the subset sweep in is_homotopically_trivial.
constexpr int kMaxSublinkComponents = 16;

std::vector<Word> parse_all(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

std::vector<std::string> with_core(std::vector<std::string> names, const std::string& core) {
  names.push_back(core);
  return names;
}

}  // namespace

LinkModel::LinkModel(Alphabet meridians, std::vector<Word> longitudes)
    : meridians_(std::move(meridians)), longitudes_(std::move(longitudes)) {
  if (meridians_.size() < 1) throw InvalidArgument("a link needs at least one component");
  if (static_cast<int>(longitudes_.size()) != meridians_.size()) {
    throw InvalidArgument("one longitude per component is required");
  }
  for (int i = 0; i < size(); ++i) {
    if (longitudes_[i].generator_bound() > size()) {
      throw UnknownGenerator("longitude of " + name(i) + " uses an unknown generator");
    }
    if (longitudes_[i].uses(i)) {
      throw InvalidArgument("longitude of " + name(i) + " uses its own meridian");
    }
  }
}

LinkModel LinkModel::from_text(const std::vector<std::string>& names,
                               const std::vector<std::string>& longitudes) {
  Alphabet alphabet(names);
  return LinkModel(alphabet, parse_all(longitudes, alphabet));
}

nlohmann::json LinkModel::to_json() const {
  nlohmann::json doc;
  doc["components"] = meridians_.names();
  nlohmann::json lon = nlohmann::json::object();
  for (int i = 0; i < size(); ++i) lon[name(i)] = format_word(longitudes_[i], meridians_);
  doc["longitudes"] = lon;
  return doc;
}

SolidTorusLink::SolidTorusLink(const std::vector<std::string>& names,
                               const std::vector<Word>& longitudes, const Word& wedge,
                               const std::string& core_symbol)
    : hat_([&] {
        if (names.empty()) throw InvalidArgument("a solid-torus link needs a component");
        if (longitudes.size() != names.size()) {
          throw InvalidArgument("one longitude per component is required");
        }
        Alphabet alphabet(with_core(names, core_symbol));
        std::vector<Word> all = longitudes;
        all.push_back(wedge);
        return LinkModel(std::move(alphabet), std::move(all));
      }()) {}

SolidTorusLink SolidTorusLink::from_text(const std::vector<std::string>& names,
                                         const std::vector<std::string>& longitudes,
                                         const std::string& wedge,
                                         const std::string& core_symbol) {
  const Alphabet alphabet(with_core(names, core_symbol));
  return SolidTorusLink(names, parse_all(longitudes, alphabet), parse_word(wedge, alphabet),
                        core_symbol);
}

nlohmann::json SolidTorusLink::to_json() const {
  nlohmann::json doc;
  std::vector<std::string> names;
  nlohmann::json lon = nlohmann::json::object();
  for (int i = 0; i < size(); ++i) {
    names.push_back(name(i));
    lon[name(i)] = format_word(longitude(i), alphabet());
  }
  doc["components"] = names;
  doc["longitudes"] = lon;
  doc["wedge"] = format_word(wedge(), alphabet());
  doc["core"] = core_symbol();
  return doc;
}

MuIndex::MuIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.size() < 2) throw InvalidArgument("a mu-bar index needs at least two entries");
  std::set<int> seen;
  for (int i : indices_) {
    if (i < 0) throw InvalidArgument("negative component index");
    if (!seen.insert(i).second) {
      throw InvalidArgument("repeated index " + std::to_string(i + 1) +
                            " (only distinct-index invariants are supported)");
    }
  }
}

MuIndex MuIndex::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a component number in '" + text + "'", 0);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ParseError("expected a component number in '" + text + "'", 0);
    }
    if (value < 1) throw InvalidArgument("component numbers start at 1");
    out.push_back(value - 1);
  }
  return MuIndex(std::move(out));
}

std::string MuIndex::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(indices_[k] + 1);
  }
  return out;
}

Integer mu_bar(const LinkModel& link, const MuIndex& index) {
  for (int i : index.indices()) {
    if (i >= link.size()) {
      throw InvalidArgument("unknown component " + std::to_string(i + 1) + " in index " +
                            index.to_string());
    }
  }
  const auto& idx = index.indices();
  std::vector<int> vars;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) vars.push_back(idx[k] + 1);
  const Monomial mono{std::span<const int>(vars)};
  const int degree = static_cast<int>(vars.size());
  return magnus_truncated(link.longitude(index.target()), link.size(), degree).coefficient(mono);
}

LinkModel delete_component(const LinkModel& link, int i) {
  if (i < 0 || i >= link.size()) throw InvalidArgument("no component " + std::to_string(i + 1));
  if (link.size() == 1) throw InvalidArgument("cannot delete the only component");
  std::vector<int> mapping(link.size());
  std::vector<std::string> names;
  for (int c = 0, next = 0; c < link.size(); ++c) {
    if (c == i) {
      mapping[c] = -1;
    } else {
      mapping[c] = next++;
      names.push_back(link.name(c));
    }
  }
  std::vector<Word> longitudes;
  for (int c = 0; c < link.size(); ++c) {
    if (c != i) longitudes.push_back(link.longitude(c).renamed(mapping));
  }
  return LinkModel(Alphabet(names), std::move(longitudes));
}

bool is_homotopically_trivial(const LinkModel& link) {
  const int n = link.size();
  if (n == 1) return true;
  if (n > kMaxSublinkComponents) {
    throw InvalidArgument("triviality check limited to " +
                          std::to_string(kMaxSublinkComponents) + " components");
  }
  // Sublink S is trivial iff each longitude, with meridians outside S erased,
  // is the identity in the free Milnor group; the subgroup on S is a retract,
  // so normal forms can be taken in M(F_n).
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      std::vector<Letter> kept;
      for (const auto& l : link.longitude(i).letters()) {
        if ((mask >> l.gen) & 1u) kept.push_back(l);
      }
      if (!normal_form(Word(std::move(kept)), n).is_identity()) return false;
    }
  }
  return true;
}

bool is_almost_trivial(const LinkModel& link) {
  if (link.size() < 2) throw InvalidArgument("almost-triviality needs at least two components");
  for (int i = 0; i < link.size(); ++i) {
    if (!is_homotopically_trivial(delete_component(link, i))) return false;
  }
  return true;
}

std::vector<std::string> catalog_names() {
  return {"unlink(n)", "hopf", "borromean", "whitehead_pattern", "core", "bing_double",
          "hopf_in_ball"};
}

AnyLink catalog(const std::string& name) {
  // Longitude words agree with the braid-closure Wirtinger computation in
  // tests/oracle (exactly in the free Milnor group, up to orientation).
  if (name == "hopf") return LinkModel::from_text({"m1", "m2"}, {"m2", "m1"});
  if (name == "borromean") {
    return LinkModel::from_text({"m1", "m2", "m3"}, {"[m2,m3]", "[m3,m1]", "[m1,m2]"});
  }
  if (name == "whitehead_pattern") {
    // [m2, m2^h] with the conjugator h in the deleted meridian erased.
    return LinkModel::from_text({"m1", "m2"}, {"[m2,m2]", "[m1,m1]"});
  }
  if (name == "core") return SolidTorusLink::from_text({"z1"}, {"lambda"}, "z1");
  if (name == "bing_double") {
    // Q-hat is the Borromean rings (z1, z2, wedge).
    return SolidTorusLink::from_text({"z1", "z2"}, {"[z2,lambda]", "[lambda,z1]"}, "[z1,z2]");
  }
  if (name == "hopf_in_ball") return SolidTorusLink::from_text({"z1", "z2"}, {"z2", "z1"}, "1");
  if (name.starts_with("unlink")) {
    int n = 2;
    const std::string rest = name.substr(6);
    if (!rest.empty()) {
      if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
        throw InvalidArgument("expected unlink(n), got '" + name + "'");
      }
      try {
        n = std::stoi(rest.substr(1, rest.size() - 2));
      } catch (const std::exception&) {
        throw InvalidArgument("expected unlink(n), got '" + name + "'");
      }
    }
    if (n < 1 || n > 64) throw InvalidArgument("unlink size must be 1..64");
    const Alphabet alphabet = Alphabet::numbered("m", n);
    return LinkModel(alphabet, std::vector<Word>(n));
  }
  throw InvalidArgument("unknown catalog link '" + name + "'");
}

AnyLink link_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("components") || !doc.contains("longitudes")) {
    throw InvalidArgument("link JSON needs \"components\" and \"longitudes\"");
  }
  std::vector<std::string> names;
  for (const auto& n : doc.at("components")) {
    if (!n.is_string()) throw InvalidArgument("component names must be strings");
    names.push_back(n.get<std::string>());
  }
  const auto& lon = doc.at("longitudes");
  if (!lon.is_object()) throw InvalidArgument("\"longitudes\" must be an object");
  std::vector<std::string> texts;
  for (const auto& n : names) {
    if (!lon.contains(n)) throw InvalidArgument("missing longitude for component '" + n + "'");
    texts.push_back(lon.at(n).get<std::string>());
  }
  for (const auto& [key, value] : lon.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw InvalidArgument("longitude given for unknown component '" + key + "'");
    }
  }
  if (doc.contains("wedge")) {
    const std::string core = doc.value("core", std::string("lambda"));
    return SolidTorusLink::from_text(names, texts, doc.at("wedge").get<std::string>(), core);
  }
  return LinkModel::from_text(names, texts);
}

nlohmann::json link_to_json(const AnyLink& link) {
  return std::visit([](const auto& l) { return l.to_json(); }, link);
}

}  // namespace mgk
