#include "mgk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mgk/composition.hpp"
#include "mgk/error.hpp"
#include "mgk/grope.hpp"
#include "mgk/link.hpp"
#include "mgk/milnor.hpp"
#include "mgk/random.hpp"

namespace mgk {

namespace {

// Sweeps draw from independent streams derived from the seed and their name.
Rng stream(const VerifyConfig& config, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return Rng(config.seed ^ h);
}

int rank_cap(const VerifyConfig& config, int limit) { return std::min(limit, config.max_generators); }

std::string show(const Word& w, int rank) {
  return format_word(w, Alphabet::numbered("m", std::max(rank, w.generator_bound())));
}

VerifyCase check(std::string input, const std::string& expected, const std::string& actual) {
  return {std::move(input), expected, actual, expected == actual};
}

VerifyCase predicate(std::string input, bool ok, const std::string& detail = "") {
  return {std::move(input), "", ok ? (detail.empty() ? "holds" : detail) : "violated: " + detail,
          ok};
}

const LinkModel& as_link(const AnyLink& l) { return std::get<LinkModel>(l); }
const SolidTorusLink& as_pattern(const AnyLink& l) { return std::get<SolidTorusLink>(l); }

}  // namespace

int SweepResult::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const VerifyCase& c) { return !c.passed; }));
}

SweepResult sweep_ring(const VerifyConfig& config) {
  SweepResult out{"ring", {}};
  Rng rng = stream(config, out.name);
  const int cap = rank_cap(config, 5);
  for (int t = 0; t < config.trials; ++t) {
    const int s = random_int(rng, 1, cap);
    const RingElement a = random_ring_element(rng, s, 4, 3, s);
    const RingElement b = random_ring_element(rng, s, 4, 3, s);
    const RingElement c = random_ring_element(rng, s, 4, 3, s);
    const RingElement one = RingElement::one(s);
    const bool axioms = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                        (a + b) * c == a * c + b * c && one * a == a && a * one == a &&
                        a + b == b + a && a - a == RingElement::zero(s);
    out.cases.push_back(predicate("s=" + std::to_string(s) + " a=" + a.to_string() +
                                      " b=" + b.to_string() + " c=" + c.to_string(),
                                  axioms, "ring axioms"));

    const Word u = random_word(rng, s, 12);
    const Word v = random_word(rng, s, 12);
    const std::string words = "s=" + std::to_string(s) + " u=" + show(u, s) + " v=" + show(v, s);
    out.cases.push_back(
        check(words + " magnus(uv)", (magnus(u, s) * magnus(v, s)).to_string(),
              magnus(u * v, s).to_string()));
    const RingElement mu = magnus(u, s);
    out.cases.push_back(check(words + " magnus(u)magnus(u')", "1",
                              (mu * magnus(u.inverse(), s)).to_string()));
    out.cases.push_back(check(words + " constant term", "1", mu.constant_term().str()));
  }
  return out;
}

SweepResult sweep_milnor_relations(const VerifyConfig& config) {
  SweepResult out{"milnor_relations", {}};
  Rng rng = stream(config, out.name);
  const int cap = rank_cap(config, 5);
  for (int t = 0; t < config.trials; ++t) {
    const int s = random_int(rng, 1, cap);
    const int i = random_int(rng, 0, s - 1);
    const Word u = random_word(rng, s, 8);
    const Word v = random_word(rng, s, 8);
    const Word mi = Word::generator(i);
    const Word rel = Word::commutator(u * mi * u.inverse(), v * mi * v.inverse());
    const MilnorElement nf = normal_form(rel, s);
    out.cases.push_back(check("s=" + std::to_string(s) + " i=" + std::to_string(i + 1) +
                                  " u=" + show(u, s) + " v=" + show(v, s),
                              MilnorElement::identity(s).to_string(), nf.to_string()));
  }
  return out;
}

SweepResult sweep_nilpotency(const VerifyConfig& config) {
  SweepResult out{"nilpotency", {}};
  Rng rng = stream(config, out.name);
  const int cap = rank_cap(config, 5);
  for (int t = 0; t < config.trials; ++t) {
    const int s = random_int(rng, 1, cap);
    Word acc = random_word(rng, s, 4);
    std::string input = "s=" + std::to_string(s) + " w=" + show(acc, s);
    for (int j = 1; j <= s; ++j) {
      const Word w = random_word(rng, s, 4);
      input += "," + show(w, s);
      acc = Word::commutator(acc, w);
    }
    out.cases.push_back(check(std::move(input), MilnorElement::identity(s).to_string(),
                              normal_form(acc, s).to_string()));
  }
  return out;
}

SweepResult sweep_split(const VerifyConfig& config) {
  SweepResult out{"split", {}};
  Rng rng = stream(config, out.name);
  const int cap = rank_cap(config, 4);
  for (int t = 0; t < config.trials; ++t) {
    const int s = random_int(rng, 1, cap);
    const RingElement r1 = random_ring_element(rng, s, 3, 2, s);
    const RingElement r2 = random_ring_element(rng, s, 3, 2, s);
    const Word g = random_word(rng, s, 6);
    const std::string input = "s=" + std::to_string(s) + " rho1=" + r1.to_string() +
                              " rho2=" + r2.to_string() + " g=" + show(g, s);

    const Word w1 = r_map(r1);
    out.cases.push_back(check(input + " r_inverse(r(rho1))", r1.to_string(),
                              r_inverse(w1, s).to_string()));
    out.cases.push_back(predicate(input + " m_{s+1} erased",
                                  normal_form(w1.erased(s), s).is_identity(), "kernel"));
    out.cases.push_back(predicate(input + " r(rho1+rho2) = r(rho1)r(rho2)",
                                  milnor_equal(r_map(r1 + r2), w1 * r_map(r2), s + 1),
                                  "additive"));
    out.cases.push_back(predicate(input + " kernel commutes",
                                  milnor_equal(w1 * r_map(r2), r_map(r2) * w1, s + 1),
                                  "abelian"));
    out.cases.push_back(check(input + " g r(rho1) g'", conjugation_action(g, r1).to_string(),
                              r_inverse(g * w1 * g.inverse(), s).to_string()));
  }
  return out;
}

SweepResult sweep_lcs(const VerifyConfig& config) {
  SweepResult out{"lcs", {}};
  Rng rng = stream(config, out.name);
  for (int t = 0; t < config.trials; ++t) {
    const int k = random_int(rng, 1, 6);
    GropeTree tree = random_grope_tree(rng, k);
    while (tree.leaf_count() > 24) tree = random_grope_tree(rng, k);
    const int n = tree.leaf_count();
    const Alphabet names = Alphabet::numbered("m", n);
    const Word w = boundary_word(tree, names.names()).flatten(names);
    const auto degree = lcs_degree(w, n);
    out.cases.push_back(check(tree.to_string(), std::to_string(k),
                              degree ? std::to_string(*degree) : "inf"));
  }
  return out;
}

SweepResult sweep_duality(const VerifyConfig& config) {
  SweepResult out{"duality", {}};
  Rng rng = stream(config, out.name);
  for (int t = 0; t < config.trials; ++t) {
    const int k = random_int(rng, 2, 8);
    const ClosedGropeTree tree(random_grope_tree(rng, k));
    const auto tips = free_tips(tree);
    bool ok = static_cast<int>(tips.size()) == tree.body().leaf_count();
    std::string detail;
    int worst = -1;
    for (const auto& tip : tips) {
      const int dc = dual_class(tree, tip);
      const ClosedGropeTree dual = dual_tree(tree, tip);
      if (dc < k || dual.grope_class() != dc) {
        ok = false;
        detail = "tip " + tip.to_string() + " dual class " + std::to_string(dc);
      }
      worst = worst < 0 ? dc : std::min(worst, dc);
    }
    if (ok) detail = "r=" + std::to_string(tips.size()) + " min dual class " + std::to_string(worst);
    out.cases.push_back(predicate("class " + std::to_string(k) + " " + tree.to_string(), ok, detail));
  }
  return out;
}

SweepResult sweep_sigma(const VerifyConfig& config) {
  SweepResult out{"sigma", {}};
  const LinkModel borromean = as_link(catalog("borromean"));
  for (const std::string pattern : {"core", "bing_double"}) {
    const CompositionSpec spec(borromean, as_pattern(catalog(pattern)));
    Rng rng = stream(config, out.name + pattern);
    const SigmaReport report = verify_sigma(spec, config.trials, rng());
    for (const auto& c : report.cases) {
      out.cases.push_back({"borromean o " + pattern + " rho=" + c.rho, c.expected, c.actual,
                           c.passed});
    }
  }
  return out;
}

SweepResult sweep_certificate(const VerifyConfig& config) {
  (void)config;
  SweepResult out{"certificate", {}};
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"borromean", "bing_double"}, {"borromean", "core"}, {"hopf", "core"},
      {"hopf", "bing_double"},      {"unlink(3)", "bing_double"}};
  for (const auto& [l, q] : pairs) {
    const CompositionSpec spec(as_link(catalog(l)), as_pattern(catalog(q)));
    const Certificate cert = essentiality_certificate(spec);
    const std::string abc =
        "a=" + cert.a.str() + " b=" + cert.b.str() + " c=" + cert.c.str();
    out.cases.push_back({l + " o " + q, "c=a*b", abc, cert.multiplicative()});
  }

  // A Hopf link in a ball composed into a single unknot: essential result, but
  // the certificate has to be refused.
  const CompositionSpec split(as_link(catalog("unlink(1)")), as_pattern(catalog("hopf_in_ball")));
  const LinkModel composed = compose(split);
  const bool ambient_trivial = is_homotopically_trivial(split.hat_l);
  const bool composed_trivial = is_homotopically_trivial(composed);
  out.cases.push_back(predicate("unlink(1) o hopf_in_ball",
                                ambient_trivial && !composed_trivial,
                                "ambient trivial, composed essential"));
  bool refused = false;
  try {
    essentiality_certificate(split);
  } catch (const CertificateRefused&) {
    refused = true;
  }
  out.cases.push_back(predicate("certificate unlink(1) o hopf_in_ball", refused, "refused"));
  return out;
}

SweepResult sweep_links(const VerifyConfig& config) {
  (void)config;
  SweepResult out{"links", {}};
  auto mu = [](const std::string& name, const std::string& index) {
    return Integer(abs(mu_bar(as_link(catalog(name)), MuIndex::parse(index)))).str();
  };
  out.cases.push_back(check("|mu(hopf; 2,1)|", "1", mu("hopf", "2,1")));
  out.cases.push_back(check("|mu(hopf; 1,2)|", "1", mu("hopf", "1,2")));
  out.cases.push_back(check("|mu(borromean; 2,3,1)|", "1", mu("borromean", "2,3,1")));
  out.cases.push_back(check("|mu(borromean; 1,2)|", "0", mu("borromean", "1,2")));
  const LinkModel unlink = as_link(catalog("unlink(4)"));
  bool zero = true;
  std::vector<int> idx{0, 1, 2, 3};
  do {
    for (std::size_t len = 2; len <= idx.size(); ++len) {
      zero = zero && mu_bar(unlink, MuIndex({idx.begin(), idx.begin() + len})) == 0;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  out.cases.push_back(predicate("unlink(4) all mu", zero, "all zero"));
  out.cases.push_back(check("trivial whitehead_pattern", "true",
                            is_homotopically_trivial(as_link(catalog("whitehead_pattern")))
                                ? "true"
                                : "false"));
  out.cases.push_back(check("trivial hopf", "false",
                            is_homotopically_trivial(as_link(catalog("hopf"))) ? "true" : "false"));
  out.cases.push_back(check("almost-trivial borromean", "true",
                            is_almost_trivial(as_link(catalog("borromean"))) ? "true" : "false"));
  return out;
}

std::vector<std::string> sweep_names() {
  return {"all",   "ring",  "milnor_relations", "nilpotency", "split",
          "lcs",   "duality", "sigma",          "certificate", "links"};
}

nlohmann::json run_verify(const std::string& which, const VerifyConfig& config) {
  if (config.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (config.max_generators < 1) throw InvalidArgument("max_generators must be at least 1");
  const std::vector<std::pair<std::string, std::function<SweepResult(const VerifyConfig&)>>>
      sweeps{{"ring", sweep_ring},         {"milnor_relations", sweep_milnor_relations},
             {"nilpotency", sweep_nilpotency}, {"split", sweep_split},
             {"lcs", sweep_lcs},           {"duality", sweep_duality},
             {"sigma", sweep_sigma},       {"certificate", sweep_certificate},
             {"links", sweep_links}};

  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json per_sweep = nlohmann::json::object();
  int total = 0;
  int failed = 0;
  bool matched = false;
  for (const auto& [name, run] : sweeps) {
    if (which != "all" && which != name) continue;
    matched = true;
    const SweepResult result = run(config);
    int index = 0;
    for (const auto& c : result.cases) {
      nlohmann::json entry{{"sweep", name},
                           {"index", index++},
                           {"input", c.input},
                           {"actual", c.actual},
                           {"status", c.passed ? "pass" : "fail"}};
      if (!c.expected.empty()) entry["expected"] = c.expected;
      cases.push_back(std::move(entry));
    }
    const int f = result.failures();
    per_sweep[name] = {{"cases", result.cases.size()}, {"failed", f}};
    total += static_cast<int>(result.cases.size());
    failed += f;
  }
  if (!matched) throw InvalidArgument("unknown sweep '" + which + "'");

  return {{"command", "verify " + which},
          {"config",
           {{"seed", config.seed},
            {"trials", config.trials},
            {"max_generators", config.max_generators}}},
          {"cases", std::move(cases)},
          {"summary",
           {{"total", total},
            {"passed", total - failed},
            {"failed", failed},
            {"status", failed == 0 ? "pass" : "fail"},
            {"sweeps", std::move(per_sweep)}}}};
}

}  // namespace mgk
