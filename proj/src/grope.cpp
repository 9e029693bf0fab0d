#include "mgk/grope.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mgk/error.hpp"

namespace mgk {

GropeTree GropeTree::surface(std::vector<GropePair> pairs) {
  if (pairs.empty()) throw InvalidArgument("a surface stage needs at least one pair");
  GropeTree t;
  t.pairs_ = std::move(pairs);
  return t;
}

int GropeTree::grope_class() const {
  if (is_leaf()) return 1;
  int best = -1;
  for (const auto& p : pairs_) {
    const int c = p.left.grope_class() + p.right.grope_class();
    if (best < 0 || c < best) best = c;
  }
  return best;
}

int GropeTree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& p : pairs_) n += p.left.leaf_count() + p.right.leaf_count();
  return n;
}

int GropeTree::vertex_count() const {
  int n = 1;
  for (const auto& p : pairs_) n += p.left.vertex_count() + p.right.vertex_count();
  return n;
}

bool GropeTree::all_genus_one() const {
  if (is_leaf()) return true;
  if (pairs_.size() != 1) return false;
  return pairs_[0].left.all_genus_one() && pairs_[0].right.all_genus_one();
}

std::string GropeTree::to_string() const {
  if (is_leaf()) return "*";
  std::string out = "(";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ' ';
    out += '{' + pairs_[i].left.to_string() + ' ' + pairs_[i].right.to_string() + '}';
  }
  return out + ")";
}

namespace {

struct CanonicalKey {
  int grope_class;
  std::string text;

  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const GropeTree& t) {
  if (t.is_leaf()) return {1, "*"};
  std::vector<std::pair<CanonicalKey, std::string>> pairs;
  for (const auto& p : t.pairs()) {
    CanonicalKey a = canonical_key(p.left);
    CanonicalKey b = canonical_key(p.right);
    if (b < a) std::swap(a, b);
    CanonicalKey pair_key{a.grope_class + b.grope_class, "{" + a.text + " " + b.text + "}"};
    pairs.emplace_back(pair_key, pair_key.text);
  }
  std::sort(pairs.begin(), pairs.end());
  std::string text = "(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) text += ' ';
    text += pairs[i].second;
  }
  return {t.grope_class(), text + ")"};
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) : text_(text) {}

  GropeTree parse() {
    GropeTree t = parse_grope();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

 private:
  GropeTree parse_grope() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of tree text", pos_);
    if (text_[pos_] == '*') {
      ++pos_;
      return GropeTree::leaf();
    }
    if (text_[pos_] != '(') throw ParseError("expected '*' or '('", pos_);
    const std::size_t open = pos_++;
    std::vector<GropePair> pairs;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) throw ParseError("unterminated surface", pos_);
      if (text_[pos_] == ')') {
        if (pairs.empty()) throw ParseError("surface with zero pairs", open);
        ++pos_;
        break;
      }
      if (text_[pos_] != '{') throw ParseError("expected '{' or ')'", pos_);
      ++pos_;
      GropeTree left = parse_grope();
      GropeTree right = parse_grope();
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != '}') throw ParseError("expected '}'", pos_);
      ++pos_;
      pairs.push_back({std::move(left), std::move(right)});
    }
    return GropeTree::surface(std::move(pairs));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void collect_tips(const GropeTree& t, std::vector<TipPath::Step>& prefix, std::vector<TipPath>& out) {
  if (t.is_leaf()) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < t.pairs().size(); ++i) {
    prefix.push_back({i, Side::Left});
    collect_tips(t.pairs()[i].left, prefix, out);
    prefix.back().side = Side::Right;
    collect_tips(t.pairs()[i].right, prefix, out);
    prefix.pop_back();
  }
}

WordExpr boundary_impl(const GropeTree& t, const std::vector<std::string>& names, std::size_t& next) {
  if (t.is_leaf()) return WordExpr::generator(names[next++]);
  std::vector<WordExpr> factors;
  for (const auto& p : t.pairs()) {
    WordExpr a = boundary_impl(p.left, names, next);
    WordExpr b = boundary_impl(p.right, names, next);
    factors.push_back(WordExpr::commutator(std::move(a), std::move(b)));
  }
  return WordExpr::product(std::move(factors));
}

// Path vertices from the bottom surface up to the tip's parent, with the
// partner subtree of the child traversed at each.
std::vector<const GropeTree*> partners_along(const GropeTree& body, const TipPath& tip) {
  if (tip.depth() == 0) throw InvalidArgument("tip path is empty");
  std::vector<const GropeTree*> partners;
  const GropeTree* node = &body;
  for (const auto& step : tip.steps()) {
    if (node->is_leaf() || step.pair >= node->pairs().size()) {
      throw InvalidArgument("tip path " + tip.to_string() + " leaves the tree");
    }
    const GropePair& pair = node->pairs()[step.pair];
    const bool left = step.side == Side::Left;
    partners.push_back(left ? &pair.right : &pair.left);
    node = left ? &pair.left : &pair.right;
  }
  if (!node->is_leaf()) {
    throw InvalidArgument("tip path " + tip.to_string() + " does not end at a leaf");
  }
  return partners;
}

const char* const kPairStyles[] = {"solid", "dashed", "dotted", "bold"};
const char* const kPairColors[] = {"black", "blue", "red", "darkgreen", "purple", "orange"};

void dot_nodes(const GropeTree& t, int id, int& next, std::ostringstream& out) {
  out << "  n" << id << " [shape=" << (t.is_leaf() ? "circle" : "point") << ", label=\"\"];\n";
  for (std::size_t i = 0; i < t.pairs().size(); ++i) {
    const auto& pair = t.pairs()[i];
    const std::string style = std::string("style=") + kPairStyles[i % 4] +
                              ", color=" + kPairColors[i % 6];
    const int a = next++;
    const int b = next++;
    out << "  n" << id << " -> n" << a << " [" << style << "];\n";
    out << "  n" << id << " -> n" << b << " [" << style << "];\n";
    dot_nodes(pair.left, a, next, out);
    dot_nodes(pair.right, b, next, out);
  }
}

}  // namespace

std::string GropeTree::canonical_string() const { return canonical_key(*this).text; }

ClosedGropeTree::ClosedGropeTree(GropeTree body) : body_(std::move(body)) {
  if (body_.is_leaf()) throw InvalidArgument("a closed grope tree needs a surface body");
}

TipPath TipPath::parse(const std::string& text) {
  std::vector<Step> steps;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return TipPath{};
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected pair index", pos);
    if (pos - start > 9) throw ParseError("pair index too large", start);
    const auto pair = static_cast<std::size_t>(std::stoul(text.substr(start, pos - start)));
    if (pos == text.size()) throw ParseError("expected side L or R", pos);
    const char side = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (side != 'L' && side != 'R') throw ParseError("expected side L or R", pos);
    ++pos;
    steps.push_back({pair, side == 'L' ? Side::Left : Side::Right});
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '/') throw ParseError("expected '/'", pos);
    ++pos;
  }
  return TipPath(std::move(steps));
}

std::string TipPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(steps_[i].pair) + (steps_[i].side == Side::Left ? "L" : "R");
  }
  return out;
}

GropeTree parse_tree(const std::string& text) { return TreeParser(text).parse(); }

ClosedGropeTree parse_closed_tree(const std::string& text) {
  GropeTree body = parse_tree(text);
  if (body.is_leaf()) throw InvalidArgument("a closed grope tree needs a surface body, got '*'");
  return ClosedGropeTree(std::move(body));
}

std::vector<TipPath> free_tips(const GropeTree& tree) {
  std::vector<TipPath> out;
  std::vector<TipPath::Step> prefix;
  collect_tips(tree, prefix, out);
  return out;
}

std::vector<TipPath> free_tips(const ClosedGropeTree& tree) { return free_tips(tree.body()); }

const GropeTree& subtree_at(const GropeTree& tree, const TipPath& path) {
  const GropeTree* node = &tree;
  for (const auto& step : path.steps()) {
    if (step.pair >= node->pairs().size()) {
      throw InvalidArgument("path " + path.to_string() + " leaves the tree");
    }
    const auto& pair = node->pairs()[step.pair];
    node = step.side == Side::Left ? &pair.left : &pair.right;
  }
  return *node;
}

WordExpr boundary_word(const GropeTree& tree, const std::vector<std::string>& tip_names) {
  const auto leaves = static_cast<std::size_t>(tree.leaf_count());
  if (tip_names.size() != leaves) {
    throw InvalidArgument("tree has " + std::to_string(leaves) + " tips but " +
                          std::to_string(tip_names.size()) + " names were given");
  }
  std::set<std::string> seen;
  for (const auto& n : tip_names) {
    if (n.empty()) throw InvalidArgument("empty tip name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate tip name '" + n + "'");
  }
  std::size_t next = 0;
  return boundary_impl(tree, tip_names, next);
}

ClosedGropeTree dual_tree(const ClosedGropeTree& tree, const TipPath& tip) {
  const auto partners = partners_along(tree.body(), tip);
  GropeTree current = GropeTree::leaf();  // what is left of the old root edge
  for (const GropeTree* partner : partners) {
    current = GropeTree::surface({GropePair{std::move(current), *partner}});
  }
  return ClosedGropeTree(std::move(current));
}

int dual_class(const ClosedGropeTree& tree, const TipPath& tip) {
  int total = 1;
  for (const GropeTree* partner : partners_along(tree.body(), tip)) total += partner->grope_class();
  return total;
}

std::string export_dot(const GropeTree& tree) {
  std::ostringstream out;
  out << "digraph grope {\n";
  int next = 1;
  dot_nodes(tree, 0, next, out);
  out << "}\n";
  return out.str();
}

std::string export_dot(const ClosedGropeTree& tree) {
  std::ostringstream out;
  out << "digraph closed_grope {\n";
  out << "  root [shape=square, label=\"\"];\n";
  out << "  root -> n0 [style=solid, color=gray];\n";
  int next = 1;
  dot_nodes(tree.body(), 0, next, out);
  out << "}\n";
  return out.str();
}

}  // namespace mgk
