// Acceptance run: one PASS/FAIL line per criterion. Library sweeps supply the
// bulk of the randomized checks; the oracles in oracles.hpp recompute the
// derived quantities independently.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "mgk/composition.hpp"
#include "mgk/grope.hpp"
#include "mgk/link.hpp"
#include "mgk/milnor.hpp"
#include "mgk/random.hpp"
#include "mgk/verify.hpp"
#include "oracles.hpp"

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

mgk::VerifyConfig config(int trials) { return {7, trials, 6}; }

void absorb(Outcome& out, const mgk::SweepResult& sweep) {
  for (const auto& c : sweep.cases) {
    if (!c.passed) out.fail(sweep.name + ": " + c.input + " -> " + c.actual);
  }
  out.detail += (out.detail.empty() ? "" : ", ") + sweep.name + " " +
                std::to_string(sweep.cases.size()) + " cases";
}

mgk::Word from_letters(const oracle::Letters& letters) {
  std::vector<mgk::Letter> out;
  for (auto [g, e] : letters) out.push_back({g - 1, e});
  return mgk::Word(std::move(out));
}

oracle::Letters to_letters(const mgk::Word& w) {
  oracle::Letters out;
  for (const auto& l : w.letters()) {
    const int sign = l.power < 0 ? -1 : 1;
    for (int i = 0; i < l.power * sign; ++i) out.push_back({l.gen + 1, sign});
  }
  return out;
}

// Fixture longitudes are plain letter lists: "m2 m3' m1".
oracle::Letters parse_letters(const std::string& text) {
  oracle::Letters out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    const bool inv = tok.back() == '\'';
    out.push_back({std::stoi(tok.substr(1, tok.size() - 1 - (inv ? 1 : 0))), inv ? -1 : 1});
  }
  return out;
}

oracle::Poly to_poly(const mgk::RingElement& r) {
  oracle::Poly p;
  for (const auto& [mono, coeff] : r.terms()) {
    p[std::vector<int>(mono.vars().begin(), mono.vars().end())] = static_cast<long long>(coeff);
  }
  return p;
}

Outcome ring_axioms() {
  Outcome out;
  absorb(out, mgk::sweep_ring(config(500)));
  std::mt19937_64 rng(101);
  mgk::Rng lib(103);
  for (int t = 0; t < 500; ++t) {
    const int s = 1 + static_cast<int>(rng() % 5);
    const auto letters = oracle::random_letters(rng, s, 12);
    if (mgk::magnus(from_letters(letters), s).to_string() !=
        oracle::show(oracle::magnus_by_subsets(letters))) {
      out.fail("magnus differs from subset enumeration on " + oracle::word_text(letters));
    }
    const auto a = mgk::random_ring_element(lib, s, 5, 4, s);
    const auto b = mgk::random_ring_element(lib, s, 5, 4, s);
    if (to_poly(a * b) != oracle::mul(to_poly(a), to_poly(b))) {
      out.fail("product differs from the naive oracle: " + a.to_string() + " * " + b.to_string());
    }
  }
  out.detail += ", 500 oracle expansions and products";
  return out;
}

Outcome milnor_relations() {
  Outcome out;
  absorb(out, mgk::sweep_milnor_relations(config(300)));
  std::mt19937_64 rng(107);
  for (int t = 0; t < 300; ++t) {
    const int s = 1 + static_cast<int>(rng() % 5);
    const auto base = oracle::random_letters(rng, s, 8);
    const auto other = oracle::milnor_rewrite(rng, base, s, 3);
    if (mgk::normal_form(from_letters(base), s) != mgk::normal_form(from_letters(other), s)) {
      out.fail("relator insertion changed the normal form of " + oracle::word_text(base));
    }
  }
  out.detail += ", 300 oracle rewrites";
  return out;
}

Outcome nilpotency() {
  Outcome out;
  absorb(out, mgk::sweep_nilpotency(config(100)));
  return out;
}

Outcome split_sequence() {
  Outcome out;
  absorb(out, mgk::sweep_split(config(200)));
  return out;
}

Outcome lcs_degree() {
  Outcome out;
  absorb(out, mgk::sweep_lcs(config(200)));
  mgk::Rng rng(109);
  for (int t = 0; t < 200; ++t) {
    const int k = mgk::random_int(rng, 1, 6);
    const auto tree = mgk::random_grope_tree(rng, k);
    if (oracle::klass(oracle::parse_tree(tree.to_string())) != k) {
      out.fail("generated tree " + tree.to_string() + " is not of class " + std::to_string(k));
    }
  }
  out.detail += ", 200 oracle classes";
  return out;
}

Outcome duality() {
  Outcome out;
  absorb(out, mgk::sweep_duality(config(300)));
  mgk::Rng rng(113);
  int genus_one = 0;
  for (int t = 0; t < 300; ++t) {
    const int k = mgk::random_int(rng, 2, 8);
    const mgk::ClosedGropeTree tree(mgk::random_grope_tree(rng, k));
    const auto root = oracle::parse_tree(tree.to_string());
    std::vector<int> path;
    std::vector<std::vector<int>> paths;
    oracle::tips(root, path, paths);
    const auto tips = mgk::free_tips(tree);
    if (tips.size() != paths.size()) {
      out.fail("tip count of " + tree.to_string());
      continue;
    }
    const bool g1 = tree.body().all_genus_one();
    genus_one += g1;
    for (std::size_t i = 0; i < tips.size(); ++i) {
      const int expected = oracle::dual_class(root, paths[i]);
      const auto dual = mgk::dual_tree(tree, tips[i]);
      if (mgk::dual_class(tree, tips[i]) != expected || expected < k) {
        out.fail("dual class at " + tips[i].to_string() + " of " + tree.to_string());
      }
      if (g1 && oracle::canon(oracle::parse_tree(dual.to_string())) !=
                    oracle::reroot_genus_one(root, paths[i])) {
        out.fail("genus-1 dual is not the re-rooting at " + tips[i].to_string() + " of " +
                 tree.to_string());
      }
    }
  }
  out.detail += ", 300 oracle trees (" + std::to_string(genus_one) + " genus 1)";
  return out;
}

Outcome sigma() {
  Outcome out;
  const auto borromean = std::get<mgk::LinkModel>(mgk::catalog("borromean"));
  for (const char* q : {"core", "bing_double"}) {
    const mgk::CompositionSpec spec(borromean, std::get<mgk::SolidTorusLink>(mgk::catalog(q)));
    const auto report = mgk::verify_sigma(spec, 100, 127);
    for (const auto& c : report.cases) {
      if (!c.passed) out.fail(std::string(q) + " rho=" + c.rho + ": " + c.actual);
    }
    out.detail += (out.detail.empty() ? "" : ", ") + std::string(q) + " " +
                  std::to_string(report.cases.size()) + " cases";
  }
  return out;
}

Outcome certificate() {
  Outcome out;
  const mgk::CompositionSpec spec(std::get<mgk::LinkModel>(mgk::catalog("borromean")),
                                  std::get<mgk::SolidTorusLink>(mgk::catalog("bing_double")));
  const auto cert = mgk::essentiality_certificate(spec);
  // Oracle: the same coefficients read off Magnus expansions. Borromean l1
  // over (m2, m3); the wedge over (z2, z1); composed l1 over (m2, z2, z1),
  // which are generators 2, 4, 3 of the composed link.
  const long long a = oracle::coefficient(to_letters(spec.hat_l.longitude(0)), {2, 3});
  const long long b = oracle::coefficient(to_letters(spec.q.wedge()), {2, 1});
  const long long c = oracle::coefficient(to_letters(mgk::compose(spec).longitude(0)), {2, 4, 3});
  if (cert.a != a || cert.b != b || cert.c != c) out.fail("certificate differs from the oracle");
  if (abs(cert.a) != 1 || abs(cert.b) != 1) out.fail("|a| or |b| is not 1");
  if (!cert.multiplicative() || cert.c == 0) out.fail("c is not a nonzero a*b");
  out.detail = "a=" + cert.a.str() + " b=" + cert.b.str() + " c=" + cert.c.str();

  const mgk::CompositionSpec ball(std::get<mgk::LinkModel>(mgk::catalog("unlink(1)")),
                                  std::get<mgk::SolidTorusLink>(mgk::catalog("hopf_in_ball")));
  const auto composed = mgk::compose(ball);
  const long long link = oracle::coefficient(to_letters(composed.longitude(0)), {2});
  if (!mgk::is_homotopically_trivial(ball.hat_l)) out.fail("single unknot not trivial");
  if (mgk::is_homotopically_trivial(composed) || link == 0) out.fail("composed link trivial");
  bool refused = false;
  try {
    mgk::essentiality_certificate(ball);
  } catch (const mgk::CertificateRefused&) {
    refused = true;
  }
  if (!refused) out.fail("certificate issued for a single-component ambient link");
  out.detail += "; unknot o hopf_in_ball essential (|lk|=" + std::to_string(std::abs(link)) +
                "), certificate refused";
  return out;
}

Outcome link_invariants() {
  Outcome out;
  std::ifstream in(MGK_FIXTURES "/wirtinger_fixtures.json");
  if (!in) {
    out.fail("fixtures missing");
    return out;
  }
  const auto fx = nlohmann::json::parse(in);
  auto longitude = [&](const char* link, const char* comp) {
    return parse_letters(fx[link]["longitudes"][comp].get<std::string>());
  };
  const long long hopf = oracle::coefficient(longitude("hopf", "m1"), {2});
  const long long borromean = oracle::coefficient(longitude("borromean", "m1"), {2, 3});
  if (std::abs(hopf) != 1 || fx["hopf"]["mu_abs"]["2,1"] != 1) out.fail("hopf fixture");
  if (std::abs(borromean) != 1 || fx["borromean"]["mu_abs"]["2,3,1"] != 1) {
    out.fail("borromean fixture");
  }
  auto lib_mu = [](const std::string& name, const std::string& index) {
    return mgk::Integer(abs(mgk::mu_bar(std::get<mgk::LinkModel>(mgk::catalog(name)),
                                        mgk::MuIndex::parse(index))));
  };
  if (lib_mu("hopf", "2,1") != std::abs(hopf)) out.fail("mu(hopf; 2,1)");
  if (lib_mu("borromean", "2,3,1") != std::abs(borromean)) out.fail("mu(borromean; 2,3,1)");
  for (const char* idx : {"1,2", "2,1", "1,2,3", "3,2,1", "2,4,1,3", "4,3,2,1"}) {
    if (lib_mu("unlink(4)", idx) != 0) out.fail(std::string("unlink mu ") + idx);
  }
  if (!mgk::is_homotopically_trivial(std::get<mgk::LinkModel>(mgk::catalog("whitehead_pattern")))) {
    out.fail("whitehead_pattern not trivial");
  }
  std::vector<std::string> names = fx["whitehead"]["components"];
  std::vector<std::string> texts;
  for (const auto& n : names) texts.push_back(fx["whitehead"]["longitudes"][n]);
  if (!mgk::is_homotopically_trivial(mgk::LinkModel::from_text(names, texts))) {
    out.fail("whitehead fixture not trivial");
  }
  out.detail = "|mu(hopf;2,1)|=" + std::to_string(std::abs(hopf)) +
               " |mu(borromean;2,3,1)|=" + std::to_string(std::abs(borromean)) +
               ", unlink zero, whitehead trivial";
  return out;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + MGK_CLI + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  const int status = pclose(pipe);
  return status == 0 ? text : "";
}

Outcome determinism() {
  Outcome out;
  const std::string first = run_cli("verify all --seed 7 --json");
  const std::string second = run_cli("verify all --seed 7 --json");
  if (first.empty()) out.fail("verify all did not exit cleanly");
  if (first != second) out.fail("reports differ");
  out.detail = std::to_string(first.size()) + " bytes, identical";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"ring and group axioms", ring_axioms},
      {"Milnor relations", milnor_relations},
      {"nilpotency", nilpotency},
      {"split exact sequence", split_sequence},
      {"boundary lcs degree", lcs_degree},
      {"grope duality", duality},
      {"sigma identity", sigma},
      {"composition certificate", certificate},
      {"link invariants", link_invariants},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.passed;
    std::printf("%s %2zu %s (%.2fs): %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
