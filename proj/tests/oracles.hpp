#pragma once

// Reference computations used by the tests. None of these call into the
// library's algorithms: they work on plain vectors and strings so that an
// error in the library cannot be mirrored here.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Polynomials in the square-free ring: monomial (list of 1-based variables)
// to coefficient.
using Poly = std::map<std::vector<int>, long long>;

inline bool squarefree(const std::vector<int>& m) {
  std::set<int> s(m.begin(), m.end());
  return s.size() == m.size();
}

inline Poly clean(Poly p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0 || !squarefree(it->first)) {
      it = p.erase(it);
    } else {
      ++it;
    }
  }
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      if (squarefree(m)) out[m] += ca * cb;
    }
  }
  return clean(out);
}

inline Poly add(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) a[m] += c;
  return clean(a);
}

// Letters: (1-based generator, +-1).
using Letters = std::vector<std::pair<int, int>>;

// Magnus expansion by subset enumeration: the coefficient of y_{g_1}..y_{g_k}
// sums, over increasing position sets whose letters carry those generators,
// the product of the letter signs. Exponential in the word length.
inline Poly magnus_by_subsets(const Letters& w) {
  Poly out;
  const std::size_t n = w.size();
  std::vector<int> mono;
  long long sign = 1;
  std::set<int> used;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out[mono] += sign;
    for (std::size_t i = from; i < n; ++i) {
      const auto [g, e] = w[i];
      if (used.count(g)) continue;
      used.insert(g);
      mono.push_back(g);
      sign *= e;
      self(self, i + 1);
      sign *= e;
      mono.pop_back();
      used.erase(g);
    }
  };
  rec(rec, 0);
  return clean(out);
}

inline std::string show(const Poly& p) {
  if (p.empty()) return "0";
  // Graded lexicographic, to match the library's printing.
  std::vector<std::pair<std::vector<int>, long long>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) mono += "*";
      mono += "y" + std::to_string(m[i]);
    }
    if (m.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// Coefficient of y_{p_1} ... y_{p_k} in the Magnus expansion of w: the signed
// count of increasing position sequences whose generators spell the pattern.
inline long long coefficient(const Letters& w, const std::vector<int>& pattern) {
  // ways[j]: signed count of ways to match the first j pattern entries so far.
  std::vector<long long> ways(pattern.size() + 1, 0);
  ways[0] = 1;
  for (const auto& [g, e] : w) {
    for (std::size_t j = pattern.size(); j > 0; --j) {
      if (pattern[j - 1] == g) ways[j] += e * ways[j - 1];
    }
  }
  return ways[pattern.size()];
}

// ---- grope trees ----------------------------------------------------------

struct Node {
  // Empty means a leaf; otherwise consecutive (left, right) pairs.
  std::vector<std::shared_ptr<Node>> kids;
};
using NodeP = std::shared_ptr<Node>;

inline NodeP parse_tree(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto rec = [&](auto&& self) -> NodeP {
    skip();
    auto n = std::make_shared<Node>();
    if (text.at(i) == '*') {
      ++i;
      return n;
    }
    ++i;  // '('
    skip();
    while (text.at(i) == '{') {
      ++i;
      n->kids.push_back(self(self));
      n->kids.push_back(self(self));
      skip();
      ++i;  // '}'
      skip();
    }
    ++i;  // ')'
    return n;
  };
  return rec(rec);
}

inline int klass(const NodeP& n) {
  if (n->kids.empty()) return 1;
  int best = 1 << 30;
  for (std::size_t p = 0; p < n->kids.size(); p += 2) {
    best = std::min(best, klass(n->kids[p]) + klass(n->kids[p + 1]));
  }
  return best;
}

// Canonical text of a rooted paired tree up to swapping pair members and
// permuting pairs.
inline std::string canon(const NodeP& n) {
  if (n->kids.empty()) return "*";
  std::vector<std::string> pairs;
  for (std::size_t p = 0; p < n->kids.size(); p += 2) {
    std::string a = canon(n->kids[p]);
    std::string b = canon(n->kids[p + 1]);
    if (b < a) std::swap(a, b);
    pairs.push_back("{" + a + " " + b + "}");
  }
  std::sort(pairs.begin(), pairs.end());
  std::string out = "(";
  for (const auto& p : pairs) out += p;
  return out + ")";
}

// Tip addresses as (kid index) sequences, depth first.
inline void tips(const NodeP& n, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  if (n->kids.empty()) {
    out.push_back(path);
    return;
  }
  for (std::size_t k = 0; k < n->kids.size(); ++k) {
    path.push_back(static_cast<int>(k));
    tips(n->kids[k], path, out);
    path.pop_back();
  }
}

inline std::string tip_text(const std::vector<int>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += "/";
    out += std::to_string(path[i] / 2) + (path[i] % 2 ? "R" : "L");
  }
  return out;
}

// Dual class straight from the definition: one plus the classes of the
// partners met on the way from the tip to the bottom stage.
inline int dual_class(const NodeP& root, const std::vector<int>& path) {
  int total = 1;
  NodeP cur = root;
  for (int k : path) {
    total += klass(cur->kids[k ^ 1]);
    cur = cur->kids[k];
  }
  return total;
}

// Genus-1 closed trees as unrooted graphs: every surface vertex has three
// neighbours (parent, left, right), the root vertex of the extra edge has one.
// Re-rooting at a leaf reads the graph from that leaf.
struct Graph {
  std::vector<std::vector<int>> adj;
};

inline int add_graph(const NodeP& n, Graph& g) {
  const int id = static_cast<int>(g.adj.size());
  g.adj.emplace_back();
  for (const auto& kid : n->kids) {
    const int c = add_graph(kid, g);
    g.adj[id].push_back(c);
    g.adj[c].push_back(id);
  }
  return id;
}

inline std::string canon_from(const Graph& g, int v, int from) {
  std::vector<std::string> kids;
  for (int w : g.adj[v]) {
    if (w != from) kids.push_back(canon_from(g, w, v));
  }
  if (kids.empty()) return "*";
  // Genus one: exactly one pair.
  if (kids[1] < kids[0]) std::swap(kids[0], kids[1]);
  return "({" + kids[0] + " " + kids[1] + "})";
}

// Canonical text of the genus-1 closed tree re-rooted at the leaf at `path`.
inline std::string reroot_genus_one(const NodeP& root, const std::vector<int>& path) {
  Graph g;
  g.adj.emplace_back();  // vertex 0: the root vertex of the extra edge
  const int body = add_graph(root, g);
  g.adj[0].push_back(body);
  g.adj[body].push_back(0);
  // Locate the leaf: vertices are numbered in preorder by add_graph.
  int v = body;
  NodeP cur = root;
  for (int k : path) {
    // add_graph lists a vertex's kids before its parent.
    v = g.adj[v][k];
    cur = cur->kids[k];
  }
  const int surface = g.adj[v][0];
  return canon_from(g, surface, v);
}

// ---- words ----------------------------------------------------------------

inline Letters random_letters(std::mt19937_64& rng, int rank, int max_len) {
  Letters w;
  const int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    w.push_back({static_cast<int>(rng() % rank) + 1, rng() % 2 ? 1 : -1});
  }
  return w;
}

inline Letters inverse(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
  return out;
}

inline Letters concat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Letters commutator(const Letters& a, const Letters& b) {
  return concat({a, b, inverse(a), inverse(b)});
}

inline std::string word_text(const Letters& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "m" + std::to_string(w[i].first) + (w[i].second < 0 ? "'" : "");
  }
  return out;
}

// A word equal to `w` in the free Milnor group, built by inserting Milnor
// relators [u m_i u', v m_i v'] and cancelling pairs x x' at random places.
inline Letters milnor_rewrite(std::mt19937_64& rng, const Letters& w, int rank, int insertions) {
  Letters out = w;
  for (int k = 0; k < insertions; ++k) {
    const std::size_t at = rng() % (out.size() + 1);
    Letters piece;
    if (rng() % 2) {
      const int i = static_cast<int>(rng() % rank) + 1;
      const Letters u = random_letters(rng, rank, 3);
      const Letters v = random_letters(rng, rank, 3);
      const Letters mi{{i, 1}};
      piece = commutator(concat({u, mi, inverse(u)}), concat({v, mi, inverse(v)}));
      if (rng() % 2) piece = inverse(piece);
    } else {
      const int g = static_cast<int>(rng() % rank) + 1;
      const int e = rng() % 2 ? 1 : -1;
      piece = {{g, e}, {g, -e}};
    }
    out.insert(out.begin() + static_cast<long>(at), piece.begin(), piece.end());
  }
  return out;
}

}  // namespace oracle
