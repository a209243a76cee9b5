#include "e6char/graded.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace e6char::graded {

namespace {

const DynkinDiagram& e6() {
  static const DynkinDiagram d = DynkinDiagram::e6();
  return d;
}

const std::vector<RootVec>& e6_roots() {
  static const std::vector<RootVec> roots = positive_roots(e6());
  return roots;
}

WeightVec six_to_weight(const Six& v) { return WeightVec(std::vector<Coord>(v.begin(), v.end())); }

template <std::size_t N>
std::string join(const std::array<Coord, N>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < N; ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace

std::string to_string(const Six& v) { return join(v); }
std::string to_string(const BElement& v) { return join(v); }

// ---------------------------------------------------------------------------
// lambda

LambdaE6::LambdaE6(const Six& m) : m_(m) {
  for (Coord c : m_)
    if (c < 0) throw InvalidInput("lambda coordinates must be nonnegative, got " + to_string(m));
}

LambdaE6 LambdaE6::from_weight(const WeightVec& w) {
  if (w.size() != 6) throw InvalidInput("E6 weights have six coordinates");
  Six m{};
  std::copy(w.coords.begin(), w.coords.end(), m.begin());
  return LambdaE6(m);
}

WeightVec LambdaE6::weight() const { return six_to_weight(m_); }

std::set<Node> LambdaE6::support() const {
  std::set<Node> s;
  for (Node i = 1; i <= 6; ++i)
    if (m_[i - 1] != 0) s.insert(i);
  return s;
}

std::vector<LambdaE6> lambda_sweep(Coord max_coord, bool trivalent_free_only) {
  std::vector<LambdaE6> out;
  Six m{};
  // Odometer over the box, last coordinate fastest.
  for (;;) {
    if (!trivalent_free_only || m[2] == 0) out.emplace_back(m);
    int k = 5;
    while (k >= 0) {
      if (trivalent_free_only && k == 2) {
        --k;
        continue;
      }
      if (m[k] < max_coord) {
        ++m[k];
        break;
      }
      m[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// wt, gr and the index polytope

const std::array<WeightVec, 6>& wt_directions() {
  static const std::array<WeightVec, 6> dirs = {
      WeightVec{0, 1, 0, 0, -1, 0},   // w2 - w5
      WeightVec{-1, 0, 0, 1, 0, 0},   // w4 - w1
      WeightVec{0, 1, 0, -1, 1, 0},   // w2 - w4 + w5
      WeightVec{1, -1, 0, 1, 0, 0},   // w1 - w2 + w4
      WeightVec{0, 1, -1, 1, 0, 0},   // w2 - w3 + w4
      WeightVec{0, 0, 0, 0, 0, 1},    // w6
  };
  return dirs;
}

WeightVec wt(const LambdaE6& lambda, const AElement& r) {
  WeightVec out = lambda.weight();
  const auto& dirs = wt_directions();
  for (int k = 0; k < 6; ++k) out -= r[k] * dirs[k];
  return out;
}

Coord gr(const AElement& r) {
  Coord s = 0;
  for (Coord c : r) s += c;
  return s;
}

std::pair<WeightVec, Coord> wt_gr(const LambdaE6& lambda, const AElement& r) { return {wt(lambda, r), gr(r)}; }

bool in_A(const LambdaE6& lambda, const AElement& r) {
  for (Coord c : r)
    if (c < 0) return false;
  const auto& m = lambda.m();
  return r[5] <= m[5] && r[2] <= m[4] && r[3] <= m[0] && r[0] + r[2] + r[4] <= m[1] && r[1] + r[3] + r[4] <= m[3];
}

std::vector<AElement> enumerate_A(const LambdaE6& lambda, const AFilter& filter) {
  const auto& m = lambda.m();
  std::vector<AElement> out;
  AElement r{};
  for (r[0] = 0; r[0] <= m[1]; ++r[0])
    for (r[1] = 0; r[1] <= m[3]; ++r[1])
      for (r[2] = 0; r[2] <= std::min(m[4], m[1] - r[0]); ++r[2])
        for (r[3] = 0; r[3] <= std::min(m[0], m[3] - r[1]); ++r[3])
          for (r[4] = 0; r[4] <= std::min(m[1] - r[0] - r[2], m[3] - r[1] - r[3]); ++r[4])
            for (r[5] = 0; r[5] <= m[5]; ++r[5]) {
              if (filter.degree && gr(r) != *filter.degree) continue;
              if (filter.weight && wt(lambda, r) != *filter.weight) continue;
              out.push_back(r);
            }
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Conjectural: return "conjectural";
    case Status::UpperBoundOnly: return "upper_bound_only";
  }
  return "?";
}

Status formula_status(const LambdaE6& lambda) {
  if (!lambda.trivalent_free()) return Status::UpperBoundOnly;
  const auto supp = lambda.support();
  if (!(supp.count(2) && supp.count(4))) return Status::Proved;
  const bool inside_246 = std::all_of(supp.begin(), supp.end(), [](Node i) { return i == 2 || i == 4 || i == 6; });
  return inside_246 ? Status::Proved : Status::Conjectural;
}

GradedDecomposition graded_char_M(const LambdaE6& lambda) {
  GradedDecomposition g;
  g.lambda = lambda;
  g.status = formula_status(lambda);
  std::map<Coord, WeightMap> counts;
  for (const auto& r : enumerate_A(lambda)) counts[gr(r)][wt(lambda, r)] += 1;
  for (auto& [deg, weights] : counts) {
    DecompositionList list;
    for (auto& [w, n] : weights) list.push_back({w, n});
    sort_dominance_desc(e6(), list);
    g.degrees.emplace(deg, std::move(list));
  }
  return g;
}

GradedExpansion expand_graded(const LambdaE6& lambda, bool with_weights) {
  GradedExpansion out;
  out.decomposition = graded_char_M(lambda);
  const auto& d = e6();
  Coord top = out.decomposition.degrees.empty() ? 0 : out.decomposition.degrees.rbegin()->first;
  out.dims.assign(top + 1, 0);
  for (const auto& [deg, list] : out.decomposition.degrees) {
    for (const auto& c : list) {
      out.dims[deg] += c.mult * weyl_dim(d, c.hw);
      if (with_weights) {
        auto& acc = out.dominant_weights[deg];
        for (const auto& [mu, k] : irr_character(d, c.hw).dominant_mults()) acc[mu] += c.mult * k;
      }
    }
  }
  out.total = 0;
  for (const auto& c : out.dims) out.total += c;
  return out;
}

std::string format_t_polynomial(const std::vector<BigInt>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << ' ';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Root sets

Coord r_min(const LambdaE6& lambda, const RootVec& alpha) {
  if (alpha.size() != 6) throw InvalidInput("E6 roots have six coordinates");
  Coord best = 0;
  for (Node i : lambda.support()) best = std::max(best, alpha.at_node(i));
  return best;
}

std::vector<RootVec> R_set(const LambdaE6& lambda, Coord r) {
  std::vector<RootVec> out;
  for (const auto& a : e6_roots())
    if (r_min(lambda, a) <= r) out.push_back(a);
  return out;
}

std::vector<RootVec> R_plus_one() {
  std::vector<RootVec> out;
  for (const auto& a : e6_roots())
    if (std::all_of(a.coords.begin(), a.coords.end(), [](Coord c) { return c <= 1; })) out.push_back(a);
  return out;
}

std::string to_string(PsiVerdict v) {
  switch (v) {
    case PsiVerdict::Empty: return "empty";
    case PsiVerdict::PsiOmega6: return "psi_omega6";
    case PsiVerdict::PsiOmega2: return "psi_omega2";
    case PsiVerdict::PsiOmega4: return "psi_omega4";
    case PsiVerdict::NotCovered: return "not_covered";
  }
  return "?";
}

std::vector<RootVec> psi_nu(const DynkinDiagram& d, const std::vector<Rational>& nu) {
  if (static_cast<int>(nu.size()) != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  const auto roots = positive_roots(d);
  // Simply laced with (alpha_i, alpha_i) = 2, so (alpha_i, omega_j) = delta_ij.
  std::vector<Rational> pairing;
  for (const auto& a : roots) {
    Rational p = 0;
    for (Node i = 1; i <= d.rank(); ++i) p += a.at_node(i) * nu[i - 1];
    pairing.push_back(p);
  }
  const Rational best = *std::max_element(pairing.begin(), pairing.end());
  std::vector<RootVec> out;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (pairing[k] == best) out.push_back(roots[k]);
  return out;
}

std::vector<RootVec> psi_nu(const DynkinDiagram& d, const WeightVec& nu) {
  return psi_nu(d, std::vector<Rational>(nu.coords.begin(), nu.coords.end()));
}

PsiClassification classify_psi(const LambdaE6& lambda) {
  if (!lambda.trivalent_free())
    throw InvalidInput("lambda " + to_string(lambda.m()) + " is outside the multiplicity-free regime (m3 != 0)");
  PsiClassification out;
  for (const auto& a : e6_roots())
    if (r_min(lambda, a) > 1) out.psi.push_back(a);
  if (out.psi.empty()) {
    out.verdict = PsiVerdict::Empty;
    return out;
  }
  const std::pair<Node, PsiVerdict> candidates[] = {
      {6, PsiVerdict::PsiOmega6}, {2, PsiVerdict::PsiOmega2}, {4, PsiVerdict::PsiOmega4}};
  static const std::map<Node, std::vector<RootVec>> fundamental_psi = [] {
    std::map<Node, std::vector<RootVec>> m;
    for (Node node : {2, 4, 6}) m[node] = psi_nu(e6(), WeightVec::unit(6, node));
    return m;
  }();
  for (auto [node, verdict] : candidates) {
    if (fundamental_psi.at(node) == out.psi) {
      out.verdict = verdict;
      return out;
    }
  }
  out.verdict = PsiVerdict::NotCovered;
  return out;
}

std::set<std::pair<WeightVec, Coord>> gamma_set(const DynkinDiagram& d, const WeightVec& lambda,
                                                const std::vector<RootVec>& psi, Coord r_max) {
  if (r_max < 0) throw InvalidInput("r_max must be nonnegative");
  std::vector<WeightVec> dirs;
  for (const auto& b : psi) dirs.push_back(root_to_weight(d, b));
  std::set<std::pair<WeightVec, Coord>> out;
  // Multisets from dirs[k..] added to mu, r elements used so far.
  auto walk = [&](auto&& self, std::size_t k, const WeightVec& mu, Coord r) -> void {
    out.emplace(mu, r);
    if (r == r_max) return;
    for (std::size_t i = k; i < dirs.size(); ++i) self(self, i, mu - dirs[i], r + 1);
  };
  walk(walk, 0, lambda, 0);
  return out;
}

// ---------------------------------------------------------------------------
// B(s)

Coord j0(const BElement& j) { return j[0] + j[1] - j[2] - j[3] - j[4]; }

bool valid_s(const LambdaE6& lambda, const Six& s) {
  if (s[0] != 0 || s[2] != 0 || s[4] != 0) return false;
  return s[1] >= 0 && s[1] <= lambda(2) && s[3] >= 0 && s[3] <= lambda(4) && s[5] >= 0 && s[5] <= lambda(6);
}

std::vector<Six> admissible_s(const LambdaE6& lambda) {
  std::vector<Six> out;
  for (Coord s2 = 0; s2 <= lambda(2); ++s2)
    for (Coord s4 = 0; s4 <= lambda(4); ++s4)
      for (Coord s6 = 0; s6 <= lambda(6); ++s6) out.push_back({0, s2, 0, s4, 0, s6});
  return out;
}

namespace {

void require_valid_s(const LambdaE6& lambda, const Six& s) {
  if (!valid_s(lambda, s))
    throw InvalidInput("s = " + to_string(s) + " must have s1 = s3 = s5 = 0, s2 <= m2, s4 <= m4, s6 <= m6");
}

// Inequalities shared by B(s) and its A-side relaxation.
bool common_bounds(const LambdaE6& lambda, const Six& s, const BElement& j) {
  return j[2] <= lambda(5) && j[3] <= lambda(1) && j[0] <= s[1] && j[1] <= s[3] && j0(j) >= 0 &&
         j[4] <= lambda(6) - s[5] && j[0] - j[2] - j[4] <= lambda(4) - s[3] &&
         j[1] - j[3] - j[4] <= lambda(2) - s[1];
}

}  // namespace

bool in_B(const LambdaE6& lambda, const Six& s, const BElement& j) {
  require_valid_s(lambda, s);
  for (Coord c : j)
    if (c < 0) return false;
  return j[2] <= j[0] && j[3] <= j[1] && common_bounds(lambda, s, j);
}

bool in_B_A(const LambdaE6& lambda, const Six& s, const BElement& j) {
  require_valid_s(lambda, s);
  // r6 = s6 + j5 >= 0 is needed alongside the listed bounds.
  return j[2] >= 0 && j[3] >= 0 && s[5] + j[4] >= 0 && common_bounds(lambda, s, j);
}

BSide b_side(const LambdaE6& lambda, const Six& s) {
  require_valid_s(lambda, s);
  BSide out;
  BElement j{};
  for (j[0] = 0; j[0] <= s[1]; ++j[0])
    for (j[1] = 0; j[1] <= s[3]; ++j[1])
      for (j[2] = 0; j[2] <= std::min(j[0], lambda(5)); ++j[2])
        for (j[3] = 0; j[3] <= std::min(j[1], lambda(1)); ++j[3])
          for (j[4] = 0; j[4] <= std::min(lambda(6) - s[5], j[0] + j[1] - j[2] - j[3]); ++j[4])
            if (in_B(lambda, s, j)) out.elements.push_back(j);
  return out;
}

AElement r_of_j(const Six& s, const BElement& j) {
  return {s[1] - j[0], s[3] - j[1], j[2], j[3], j0(j), s[5] + j[4]};
}

BElement j_of_r(const Six& s, const AElement& r) {
  if (gr(r) != s[1] + s[3] + s[5]) throw InvalidInput("r has degree different from s2 + s4 + s6");
  return {s[1] - r[0], s[3] - r[1], r[2], r[3], r[5] - s[5]};
}

Coord het(const BElement& j) { return 2 * (j[0] + j[1]) - (j[2] + j[3]); }

Witness witness_s_j(const LambdaE6& lambda, const AElement& r) {
  if (!in_A(lambda, r)) throw InvalidInput("r = " + to_string(r) + " is not in the index polytope of lambda");
  Witness w;
  w.s = {0, r[0] + r[2] + r[4], 0, r[1] + r[3], 0, r[5]};
  w.j = {r[2] + r[4], r[3], r[2], r[3], 0};
  return w;
}

}  // namespace e6char::graded
