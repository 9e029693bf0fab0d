#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mgk/composition.hpp"
#include "mgk/error.hpp"
#include "mgk/grope.hpp"
#include "mgk/link.hpp"
#include "mgk/milnor.hpp"
#include "mgk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultGuard = 8;

using mgk::AnyLink;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw mgk::InvalidArgument("empty name in '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int generator_guard() {
  if (const char* env = std::getenv("MGK_MAX_GENERATORS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw mgk::InvalidArgument(std::string("MGK_MAX_GENERATORS is not a number: ") + env);
    }
  }
  return kDefaultGuard;
}

AnyLink load_link(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    try {
      return mgk::catalog(arg);
    } catch (const mgk::InvalidArgument&) {
      throw mgk::InvalidArgument("'" + arg + "' is neither a file nor a catalog link");
    }
  }
  std::ifstream in(arg);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw mgk::InvalidArgument(arg + ": " + e.what());
  }
  return mgk::link_from_json(doc);
}

const mgk::LinkModel& need_link(const AnyLink& link, const std::string& arg) {
  if (const auto* l = std::get_if<mgk::LinkModel>(&link)) return *l;
  throw mgk::InvalidArgument(arg + " is a solid-torus link; a link in S^3 is needed");
}

const mgk::SolidTorusLink& need_pattern(const AnyLink& link, const std::string& arg) {
  if (const auto* q = std::get_if<mgk::SolidTorusLink>(&link)) return *q;
  throw mgk::InvalidArgument(arg + " has no wedge; a solid-torus link is needed");
}

// Either the plain link or Q-hat.
const mgk::LinkModel& any_as_link(const AnyLink& link) {
  if (const auto* q = std::get_if<mgk::SolidTorusLink>(&link)) return q->hat();
  return std::get<mgk::LinkModel>(link);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mgk::InvalidArgument("cannot write " + path);
  out << text;
}

struct WordInput {
  mgk::Alphabet alphabet;
  std::vector<mgk::Word> words;
};

WordInput read_words(const std::vector<std::string>& texts, int gens) {
  std::vector<mgk::WordExpr> exprs;
  std::vector<std::string> names;
  for (const auto& t : texts) {
    exprs.push_back(mgk::parse_word_expr(t));
    for (auto& n : exprs.back().generator_names()) names.push_back(n);
  }
  WordInput in{mgk::infer_alphabet(names, gens), {}};
  if (gens > 0 && in.alphabet.size() > gens) {
    throw mgk::UnknownGenerator("word uses " + std::to_string(in.alphabet.size()) +
                                " generators but --gens is " + std::to_string(gens));
  }
  for (const auto& e : exprs) in.words.push_back(e.flatten(in.alphabet));
  return in;
}

std::vector<std::string> variable_names(const mgk::Alphabet& alphabet, int rank) {
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i) {
    const std::string& n = alphabet.name(i);
    out.push_back(n.size() > 1 && n[0] == 'm' && std::isdigit(static_cast<unsigned char>(n[1]))
                      ? "y" + n.substr(1)
                      : "y_" + n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgk: grope trees, free Milnor groups, link composition"};
  app.require_subcommand(1);

  // grope
  auto* grope = app.add_subcommand("grope", "grope trees")->require_subcommand(1);
  std::string tree_text;
  std::string tip_names;
  bool closed_dot = false;
  bool json = false;
  auto* g_class = grope->add_subcommand("class", "class of a tree");
  g_class->add_option("tree", tree_text)->required();
  auto* g_tips = grope->add_subcommand("tips", "free tips of a closed tree");
  g_tips->add_option("tree", tree_text)->required();
  auto* g_duals = grope->add_subcommand("duals", "dual tree at every free tip");
  g_duals->add_option("tree", tree_text)->required();
  g_duals->add_flag("--json", json);
  auto* g_boundary = grope->add_subcommand("boundary", "boundary word");
  g_boundary->add_option("tree", tree_text)->required();
  g_boundary->add_option("--names", tip_names, "comma-separated tip names (default a1,a2,...)");
  auto* g_dot = grope->add_subcommand("dot", "Graphviz export");
  g_dot->add_option("tree", tree_text)->required();
  g_dot->add_flag("--closed", closed_dot, "draw the extra root edge");

  // milnor
  auto* milnor = app.add_subcommand("milnor", "free Milnor group")->require_subcommand(1);
  std::string word_text;
  std::string other_text;
  int gens = 0;
  auto add_words = [&](CLI::App* cmd, int count) {
    cmd->add_option("word", word_text)->required();
    if (count == 2) cmd->add_option("other", other_text)->required();
    cmd->add_option("--gens", gens, "number of generators (default: inferred)")
        ->check(CLI::PositiveNumber);
  };
  auto* m_expand = milnor->add_subcommand("expand", "Magnus expansion");
  add_words(m_expand, 1);
  auto* m_nf = milnor->add_subcommand("nf", "normal form");
  add_words(m_nf, 1);
  auto* m_equal = milnor->add_subcommand("equal", "word problem");
  add_words(m_equal, 2);
  auto* m_lcs = milnor->add_subcommand("lcs-degree", "lowest Magnus degree");
  add_words(m_lcs, 1);
  auto* m_rinv = milnor->add_subcommand("rinv", "r-inverse; the last generator is m_{s+1}");
  add_words(m_rinv, 1);

  // link
  auto* link = app.add_subcommand("link", "links by longitude words")->require_subcommand(1);
  std::string link_arg;
  std::string index_text;
  bool signed_mu = false;
  auto* l_show = link->add_subcommand("show", "print a link as JSON");
  l_show->add_option("link", link_arg)->required();
  auto* l_mu = link->add_subcommand("mu", "distinct-index mu-bar invariant (absolute value)");
  l_mu->add_option("link", link_arg)->required();
  l_mu->add_option("--index", index_text, "e.g. 2,3,1")->required();
  l_mu->add_flag("--signed", signed_mu, "print the signed coefficient");
  auto* l_trivial = link->add_subcommand("trivial", "homotopically trivial?");
  l_trivial->add_option("link", link_arg)->required();
  auto* l_almost = link->add_subcommand("almost-trivial", "almost homotopically trivial?");
  l_almost->add_option("link", link_arg)->required();

  // compose / certificate
  std::string q_arg;
  int target = 0;
  std::string out_path;
  auto* compose = app.add_subcommand("compose", "replace a component of L by the pattern Q");
  compose->add_option("L", link_arg)->required();
  compose->add_option("Q", q_arg)->required();
  compose->add_option("--target", target, "component of L to replace (1-based, default last)");
  compose->add_option("--out", out_path);
  auto* certificate = app.add_subcommand("certificate", "coefficients a, b, c with c = a*b");
  certificate->add_option("L", link_arg)->required();
  certificate->add_option("Q", q_arg)->required();
  certificate->add_option("--target", target, "component of L to replace (1-based, default last)");
  certificate->add_flag("--json", json);

  // verify
  mgk::VerifyConfig config;
  std::string sweep = "all";
  auto* verify = app.add_subcommand("verify", "randomized property sweeps");
  verify->add_option("sweep", sweep)->check(CLI::IsMember(mgk::sweep_names()));
  verify->add_option("--trials", config.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed);
  verify->add_option("--max-generators", config.max_generators)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json);
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ostringstream out;
    int status = kExitOk;

    if (grope->parsed()) {
      if (g_class->parsed()) {
        out << mgk::parse_tree(tree_text).grope_class() << '\n';
      } else if (g_tips->parsed()) {
        for (const auto& tip : mgk::free_tips(mgk::parse_closed_tree(tree_text))) {
          out << tip.to_string() << '\n';
        }
      } else if (g_duals->parsed()) {
        const auto tree = mgk::parse_closed_tree(tree_text);
        const int k = tree.grope_class();
        nlohmann::json duals = nlohmann::json::array();
        for (const auto& tip : mgk::free_tips(tree)) {
          const auto dual = mgk::dual_tree(tree, tip);
          const int dc = mgk::dual_class(tree, tip);
          if (dc < k) status = kExitCheckFailed;
          if (json) {
            duals.push_back({{"tip", tip.to_string()},
                             {"dual", dual.to_string()},
                             {"class", dc},
                             {"bound_holds", dc >= k}});
          } else {
            out << tip.to_string() << "  " << dual.to_string() << "  class " << dc
                << (dc >= k ? " >= " : " < ") << k << '\n';
          }
        }
        if (json) {
          out << nlohmann::json{{"tree", tree.to_string()}, {"class", k}, {"duals", duals}}.dump(2)
              << '\n';
        }
      } else if (g_boundary->parsed()) {
        const auto tree = mgk::parse_tree(tree_text);
        std::vector<std::string> names;
        if (tip_names.empty()) {
          names = mgk::Alphabet::numbered("a", tree.leaf_count()).names();
        } else {
          names = split_names(tip_names);
        }
        out << mgk::boundary_word(tree, names).to_string() << '\n';
      } else if (g_dot->parsed()) {
        if (closed_dot) {
          out << mgk::export_dot(mgk::parse_closed_tree(tree_text));
        } else {
          out << mgk::export_dot(mgk::parse_tree(tree_text));
        }
      }
    } else if (milnor->parsed()) {
      std::vector<std::string> texts{word_text};
      if (m_equal->parsed()) texts.push_back(other_text);
      const WordInput in = read_words(texts, gens);
      const int n = in.alphabet.size();
      const auto vars = variable_names(in.alphabet, n);
      if (m_expand->parsed()) {
        out << mgk::magnus(in.words[0], n).to_string(vars) << '\n';
      } else if (m_nf->parsed()) {
        const auto nf = mgk::normal_form(in.words[0], n);
        out << nf.to_string() << '\n' << mgk::format_word(nf.to_word(), in.alphabet) << '\n';
      } else if (m_equal->parsed()) {
        out << (mgk::milnor_equal(in.words[0], in.words[1], n) ? "equal" : "not equal") << '\n';
      } else if (m_lcs->parsed()) {
        const auto d = mgk::lcs_degree(in.words[0], n);
        out << (d ? std::to_string(*d) : "inf") << '\n';
      } else if (m_rinv->parsed()) {
        if (n < 1) throw mgk::InvalidArgument("rinv needs at least one generator");
        out << mgk::r_inverse(in.words[0], n - 1).to_string(
                   std::vector<std::string>(vars.begin(), vars.end() - 1))
            << '\n';
      }
    } else if (link->parsed()) {
      const AnyLink any = load_link(link_arg);
      if (l_show->parsed()) {
        out << mgk::link_to_json(any).dump(2) << '\n';
      } else if (l_mu->parsed()) {
        const auto value = mgk::mu_bar(any_as_link(any), mgk::MuIndex::parse(index_text));
        out << (signed_mu ? value : mgk::Integer(abs(value))).str() << '\n';
      } else if (l_trivial->parsed()) {
        out << (mgk::is_homotopically_trivial(any_as_link(any)) ? "true" : "false") << '\n';
      } else if (l_almost->parsed()) {
        out << (mgk::is_almost_trivial(any_as_link(any)) ? "true" : "false") << '\n';
      }
    } else if (compose->parsed() || certificate->parsed()) {
      const mgk::CompositionSpec spec(need_link(load_link(link_arg), link_arg),
                                      need_pattern(load_link(q_arg), q_arg), target - 1);
      if (compose->parsed()) {
        write_output(mgk::compose(spec).to_json().dump(2) + "\n", out_path);
      } else {
        const auto cert = mgk::essentiality_certificate(spec);
        if (!cert.multiplicative()) status = kExitCheckFailed;
        if (json) {
          out << nlohmann::json{{"a", cert.a.str()},
                                {"b", cert.b.str()},
                                {"c", cert.c.str()},
                                {"multiplicative", cert.multiplicative()}}
                     .dump(2)
              << '\n';
        } else {
          out << "a = " << cert.a << "\nb = " << cert.b << "\nc = " << cert.c << "\nc = a*b: "
              << (cert.multiplicative() ? "yes" : "no") << '\n';
        }
      }
    } else if (verify->parsed()) {
      const int guard = generator_guard();
      if (config.max_generators > guard) {
        throw mgk::InvalidArgument("--max-generators " + std::to_string(config.max_generators) +
                                   " exceeds the guard " + std::to_string(guard) +
                                   " (set MGK_MAX_GENERATORS to raise it)");
      }
      const nlohmann::json report = mgk::run_verify(sweep, config);
      if (report["summary"]["failed"].get<int>() > 0) status = kExitCheckFailed;
      if (json) {
        write_output(report.dump(2) + "\n", out_path);
      } else {
        std::ostringstream text;
        for (const auto& c : report["cases"]) {
          if (c["status"] == "fail") {
            text << "FAIL " << c["sweep"].get<std::string>() << " #" << c["index"] << ": "
                 << c["input"].get<std::string>() << "\n  expected "
                 << c.value("expected", std::string("-")) << "\n  actual   "
                 << c["actual"].get<std::string>() << '\n';
          }
        }
        for (const auto& [name, s] : report["summary"]["sweeps"].items()) {
          text << name << ": " << s["cases"] << " cases, " << s["failed"] << " failed\n";
        }
        text << "seed " << config.seed << ", " << report["summary"]["status"].get<std::string>()
             << '\n';
        write_output(text.str(), out_path);
      }
    }

    std::cout << out.str();
    return status;
  } catch (const mgk::NotInKernel& e) {
    std::cerr << "mgk: not in kernel: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const mgk::CertificateRefused& e) {
    std::cerr << "mgk: certificate refused: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const mgk::Error& e) {
    std::cerr << "mgk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "mgk: malformed link file: " << e.what() << '\n';
    return kExitUsage;
  }
}
