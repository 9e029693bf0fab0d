#include "mgk/composition.hpp"

#include <numeric>

#include "mgk/error.hpp"
#include "mgk/milnor.hpp"
#include "mgk/random.hpp"

namespace mgk {

namespace {

// Positions of hat_l's components other than the target, in order.
std::vector<int> survivors(const CompositionSpec& spec) {
  std::vector<int> out;
  for (int c = 0; c < spec.hat_l.size(); ++c) {
    if (c != spec.target_index()) out.push_back(c);
  }
  return out;
}

// Images of Q-hat's generators when z_j goes to generator z_index[j] and the
// core symbol goes to `core_image`.
std::vector<Word> q_images(const SolidTorusLink& q, const std::vector<int>& z_index,
                           const Word& core_image) {
  std::vector<Word> images;
  for (int j = 0; j < q.size(); ++j) images.push_back(Word::generator(z_index[j]));
  images.push_back(core_image);
  return images;
}

// Index of z_j in the alphabet (y_2..y_k, z_2..z_m, z_1).
std::vector<int> sigma_z_index(const CompositionSpec& spec) {
  const int k = spec.k();
  const int m = spec.m();
  std::vector<int> out(m);
  out[0] = k + m - 2;
  for (int j = 1; j < m; ++j) out[j] = k - 1 + (j - 1);
  return out;
}

// Names of the ring variables of R(y_2..y_k, z_2..z_m): the meridian names.
std::vector<std::string> sigma_names(const CompositionSpec& spec) {
  const auto alive = survivors(spec);
  std::vector<std::string> names;
  for (std::size_t i = 1; i < alive.size(); ++i) names.push_back(spec.hat_l.name(alive[i]));
  for (int j = 1; j < spec.m(); ++j) names.push_back(spec.q.name(j));
  return names;
}

void require_deletable(const CompositionSpec& spec) {
  if (spec.k() < 1) {
    throw InvalidArgument("the ambient link needs a component besides the replaced one");
  }
}

Monomial leading_monomial(int degree) {
  std::vector<int> vars(degree);
  std::iota(vars.begin(), vars.end(), 1);
  return Monomial{std::span<const int>(vars)};
}

}  // namespace

CompositionSpec::CompositionSpec(LinkModel hat_l_in, SolidTorusLink q_in, int target_in)
    : hat_l(std::move(hat_l_in)), q(std::move(q_in)), target(target_in) {
  if (target < -1 || target >= hat_l.size()) {
    throw InvalidArgument("target component " + std::to_string(target + 1) + " does not exist");
  }
}

int CompositionSpec::target_index() const { return target < 0 ? hat_l.size() - 1 : target; }

LinkModel compose(const CompositionSpec& spec) {
  const auto alive = survivors(spec);
  const int k = spec.k();
  const int t = spec.target_index();

  Alphabet alphabet;
  for (int c : alive) alphabet.add(spec.hat_l.name(c));
  std::vector<int> z_index;
  for (int j = 0; j < spec.m(); ++j) {
    if (alphabet.contains(spec.q.name(j))) {
      throw InvalidArgument("component name '" + spec.q.name(j) +
                            "' is used by both links; rename one of them");
    }
    z_index.push_back(alphabet.add(spec.q.name(j)));
  }

  auto z_images = q_images(spec.q, z_index, Word());
  const Word wedge = spec.q.wedge().mapped(z_images);

  std::vector<Word> hat_images(spec.hat_l.size());
  for (int i = 0; i < k; ++i) hat_images[alive[i]] = Word::generator(i);
  hat_images[t] = wedge;

  z_images.back() = spec.hat_l.longitude(t).mapped(hat_images);

  std::vector<Word> longitudes;
  for (int c : alive) longitudes.push_back(spec.hat_l.longitude(c).mapped(hat_images));
  for (int j = 0; j < spec.m(); ++j) longitudes.push_back(spec.q.longitude(j).mapped(z_images));
  return LinkModel(std::move(alphabet), std::move(longitudes));
}

RingElement wedge_ring_element(const SolidTorusLink& q, int deleted) {
  const int m = q.size();
  if (deleted < 0 || deleted >= m) {
    throw InvalidArgument("no component " + std::to_string(deleted + 1) + " in the pattern link");
  }
  std::vector<int> mapping(m + 1, -1);
  for (int j = 0, next = 0; j < m; ++j) mapping[j] = j == deleted ? m - 1 : next++;
  return r_inverse(q.wedge().renamed(mapping), m - 1);
}

Word lc_substitute(const CompositionSpec& spec, const Word& word) {
  require_deletable(spec);
  const int k = spec.k();
  const Word wedge = spec.q.wedge().mapped(q_images(spec.q, sigma_z_index(spec), Word()));
  std::vector<Word> images;
  for (int i = 0; i + 1 < k; ++i) images.push_back(Word::generator(i));
  images.push_back(wedge);
  return word.mapped(images);
}

bool SigmaReport::passed() const {
  for (const auto& c : cases) {
    if (!c.passed) return false;
  }
  return true;
}

SigmaReport verify_sigma(const CompositionSpec& spec, int trials, std::uint64_t seed) {
  require_deletable(spec);
  const int k = spec.k();
  const int m = spec.m();
  const int y_rank = k - 1;
  const int total = k - 1 + m - 1;

  SigmaReport report;
  report.wedge_r = wedge_ring_element(spec.q, 0);
  std::vector<int> z_vars(m - 1);
  std::iota(z_vars.begin(), z_vars.end(), k);
  const RingElement wedge_r = report.wedge_r.remapped(total, z_vars);

  const auto names = sigma_names(spec);
  const std::vector<std::string> y_names(names.begin(), names.begin() + y_rank);
  std::vector<int> y_vars(y_rank);
  std::iota(y_vars.begin(), y_vars.end(), 1);

  std::vector<RingElement> inputs{RingElement::one(y_rank)};
  for (int i = 1; i <= y_rank; ++i) inputs.push_back(RingElement::variable(y_rank, i));
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    inputs.push_back(random_ring_element(rng, y_rank, 3, 3, y_rank));
  }

  for (const auto& rho : inputs) {
    const RingElement expected = rho.remapped(total, y_vars) * wedge_r;
    const RingElement actual = r_inverse(lc_substitute(spec, r_map(rho)), total);
    report.cases.push_back({rho.to_string(y_names), expected.to_string(names),
                            actual.to_string(names), actual == expected});
  }
  return report;
}

Certificate essentiality_certificate(const CompositionSpec& spec) {
  if (spec.k() < 1) throw CertificateRefused("the ambient link needs at least two components");
  if (!is_almost_trivial(spec.hat_l)) {
    throw CertificateRefused("the ambient link is not almost homotopically trivial");
  }
  if (!is_almost_trivial(spec.q.hat())) {
    throw CertificateRefused("the pattern link with its wedge is not almost homotopically trivial");
  }
  const int k = spec.k();
  const int m = spec.m();
  const auto alive = survivors(spec);
  const int first = alive.front();

  // a: l_1 in L-hat over (m_2..m_k, m_{k+1}).
  std::vector<int> hat_map(spec.hat_l.size(), -1);
  for (int i = 1; i < k; ++i) hat_map[alive[i]] = i - 1;
  hat_map[spec.target_index()] = k - 1;
  const RingElement rho_a = r_inverse(spec.hat_l.longitude(first).renamed(hat_map), k - 1);

  const RingElement rho_b = wedge_ring_element(spec.q, 0);

  // c: l_1 in the composed link over (m_2..m_k, z_2..z_m, z_1).
  const LinkModel composed = compose(spec);
  std::vector<int> composed_map(composed.size(), -1);
  for (int i = 1; i < k; ++i) composed_map[i] = i - 1;
  const auto z_index = sigma_z_index(spec);
  for (int j = 0; j < m; ++j) composed_map[k + j] = z_index[j];
  const RingElement rho_c = r_inverse(composed.longitude(0).renamed(composed_map), k + m - 2);

  return {rho_a.coefficient(leading_monomial(k - 1)), rho_b.coefficient(leading_monomial(m - 1)),
          rho_c.coefficient(leading_monomial(k + m - 2))};
}

}  // namespace mgk
