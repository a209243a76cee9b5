// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "e6char/charalg.hpp"
#include "e6char/graded.hpp"
#include "e6char/lweight.hpp"
#include "e6char/rootsys.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace e6char;
using graded::LambdaE6;
using graded::Six;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = "first failure: " + what;
    }
  }
};

const DynkinDiagram& e6() {
  static const DynkinDiagram d = DynkinDiagram::e6();
  return d;
}

WeightVec weight(const fixtures::Vec6& v) { return WeightVec(std::vector<Coord>(v.begin(), v.end())); }
WeightVec weight(const Six& v) { return WeightVec(std::vector<Coord>(v.begin(), v.end())); }
RootVec root(const fixtures::Vec6& v) { return RootVec(std::vector<Coord>(v.begin(), v.end())); }

std::vector<WeightVec> box(int rank, Coord max_coord) {
  std::vector<WeightVec> out;
  std::vector<Coord> c(rank, 0);
  for (;;) {
    out.emplace_back(c);
    int k = rank - 1;
    while (k >= 0 && c[k] == max_coord) c[k--] = 0;
    if (k < 0) break;
    ++c[k];
  }
  return out;
}

// 1. Root data.
Outcome root_data() {
  Outcome o;
  const auto roots = positive_roots(e6());
  o.expect(roots.size() == 36, "36 positive roots");
  std::vector<RootVec> nonsimple;
  for (const auto& a : roots)
    if (height(a) > 1) nonsimple.push_back(a);
  std::set<RootVec> table;
  for (const auto& b : fixtures::kBeta) table.insert(root(b));
  o.expect(nonsimple.size() == 30 && std::set<RootVec>(nonsimple.begin(), nonsimple.end()) == table,
           "non-simple roots equal the beta table");
  for (int k = 1; k <= 30; ++k) o.expect(e6_beta_index(root(fixtures::kBeta[k - 1])) == k, "beta numbering");
  for (Node i = 1; i <= 6; ++i)
    o.expect(root_to_weight(e6(), RootVec::unit(6, i)) == weight(fixtures::kAlphaWeights[i - 1]),
             "weight table line alpha_" + std::to_string(i));
  for (const auto& [k, w] : fixtures::kBetaWeights)
    o.expect(root_to_weight(e6(), root(fixtures::kBeta[k - 1])) == weight(w), "weight table line beta_" + std::to_string(k));
  o.detail = o.ok ? "36 roots, 30 beta rows, 14 weight lines" : o.detail;
  return o;
}

// 2. Dimensions.
Outcome dimensions() {
  Outcome o;
  o.expect(weyl_dim(e6(), WeightVec::unit(6, 6)) == 78, "adjoint has dimension 78");
  std::ostringstream os;
  for (Node i : {1, 2, 5, 6}) {
    const WeightVec w = WeightVec::unit(6, i);
    const BigInt weyl = weyl_dim(e6(), w);
    const BigInt summed = irr_character(e6(), w).dim(e6());
    fixtures::Vec6 key{};
    key[i - 1] = 1;
    o.expect(weyl.str() == fixtures::kE6Dims.at(key), "Weyl dimension of w" + std::to_string(i));
    o.expect(summed == weyl, "Freudenthal sum for w" + std::to_string(i));
    os << "w" << i << "=" << summed << ' ';
  }
  if (o.ok) o.detail = os.str();
  return o;
}

// 3. KR graded characters.
Outcome kr_graded() {
  Outcome o;
  auto flip = [](Six v) { return Six{v[4], v[3], v[2], v[1], v[0], v[5]}; };
  auto check = [&](const Six& lambda, const std::map<Coord, Six>& expected) {
    const auto g = graded::graded_char_M(LambdaE6(lambda));
    bool ok = g.degrees.size() == expected.size();
    for (const auto& [t, hw] : expected) {
      auto it = g.degrees.find(t);
      ok = ok && it != g.degrees.end() && it->second.size() == 1 && it->second[0].hw == weight(hw) && it->second[0].mult == 1;
    }
    o.expect(ok, "graded character of M" + graded::to_string(lambda));
  };
  for (Coord m = 0; m <= 3; ++m) {
    check({m, 0, 0, 0, 0, 0}, {{0, {m, 0, 0, 0, 0, 0}}});
    check({0, 0, 0, 0, m, 0}, {{0, {0, 0, 0, 0, m, 0}}});
    std::map<Coord, Six> six, two, four;
    for (Coord r = 0; r <= m; ++r) {
      six[r] = {0, 0, 0, 0, 0, m - r};
      two[r] = {0, m - r, 0, 0, r, 0};
      four[r] = flip(two[r]);
    }
    check({0, 0, 0, 0, 0, m}, six);
    check({0, m, 0, 0, 0, 0}, two);
    check(flip({0, m, 0, 0, 0, 0}), four);
  }
  if (o.ok) o.detail = "m w1, m w5, m w6, m w2, m w4 for m <= 3";
  return o;
}

// 4. Multiplicity-free sweep.
Outcome multiplicity_free() {
  Outcome o;
  // wt is injective: its six directions have rank 6.
  std::vector<std::vector<Rational>> m;
  for (const auto& v : graded::wt_directions()) m.emplace_back(v.coords.begin(), v.coords.end());
  int rank = 0;
  for (int c = 0; c < 6 && rank < 6; ++c) {
    int p = rank;
    while (p < 6 && m[p][c] == 0) ++p;
    if (p == 6) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < 6; ++r)
      if (r != rank && m[r][c] != 0) {
        const Rational f = m[r][c] / m[rank][c];
        for (int k = 0; k < 6; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  o.expect(rank == 6, "wt has rank 6");

  const auto sweep = graded::lambda_sweep(2);
  o.expect(sweep.size() == 243, "243 weights in the sweep");
  std::size_t points = 0;
  for (const auto& lambda : sweep) {
    const auto A = oracle::brute_A(lambda);
    o.expect(A == graded::enumerate_A(lambda), "enumeration matches brute force");
    std::map<WeightVec, int> count;
    bool dominant = true;
    std::size_t zero_degree = 0;
    for (const auto& r : A) {
      const WeightVec w = graded::wt(lambda, r);
      dominant = dominant && is_dominant(w);
      ++count[w];
      if (graded::gr(r) == 0) ++zero_degree;
    }
    points += A.size();
    bool free = true;
    for (const auto& [w, n] : count) free = free && n <= 1;
    o.expect(free, "|A_mu| <= 1 at " + graded::to_string(lambda.m()));
    o.expect(dominant, "wt(r) dominant at " + graded::to_string(lambda.m()));
    o.expect(zero_degree == 1 && graded::in_A(lambda, Six{}), "A_0 = {0} at " + graded::to_string(lambda.m()));
  }
  if (o.ok) o.detail = "243 lambda, " + std::to_string(points) + " index points";
  return o;
}

// 5. Psi classification.
Outcome psi_classification() {
  Outcome o;
  std::map<graded::PsiVerdict, int> seen;
  for (const auto& lambda : graded::lambda_sweep(2)) {
    const auto supp = lambda.support();
    auto in = [&](std::initializer_list<Node> allowed) {
      for (Node i : supp)
        if (std::find(allowed.begin(), allowed.end(), i) == allowed.end()) return false;
      return true;
    };
    graded::PsiVerdict expected;
    if (supp.count(2) && supp.count(4))
      expected = graded::PsiVerdict::NotCovered;
    else if (in({1, 5}))
      expected = graded::PsiVerdict::Empty;
    else if (in({1, 5, 6}))
      expected = graded::PsiVerdict::PsiOmega6;
    else if (in({1, 2, 5, 6}))
      expected = graded::PsiVerdict::PsiOmega2;
    else
      expected = graded::PsiVerdict::PsiOmega4;
    const auto c = graded::classify_psi(lambda);
    o.expect(c.verdict == expected, "verdict at " + graded::to_string(lambda.m()));
    ++seen[c.verdict];
  }
  o.expect(seen.size() == 5, "all verdicts occur");
  std::vector<int> betas;
  for (const auto& a : graded::classify_psi(LambdaE6(Six{0, 1, 0, 0, 0, 0})).psi) betas.push_back(e6_beta_index(a));
  std::sort(betas.begin(), betas.end());
  o.expect(betas == std::vector<int>{24, 26, 28, 29, 30}, "Psi for supp {2}");
  if (o.ok) {
    std::ostringstream os;
    for (const auto& [v, n] : seen) os << graded::to_string(v) << ' ' << n << ' ';
    o.detail = os.str();
  }
  return o;
}

// 6. R-sets.
Outcome r_sets() {
  Outcome o;
  std::set<RootVec> expected;
  for (int k = 1; k <= 19; ++k) expected.insert(root(fixtures::kBeta[k - 1]));
  for (Node i = 1; i <= 6; ++i) expected.insert(RootVec::unit(6, i));
  const auto r1 = graded::R_plus_one();
  o.expect(r1.size() == 25 && std::set<RootVec>(r1.begin(), r1.end()) == expected, "R+_1 = R+ minus beta_20..30");
  for (const auto& lambda : graded::lambda_sweep(2, false)) {
    o.expect(graded::R_set(lambda, 3).size() == 36, "R_set(lambda, 3) = R+");
    if (lambda.trivalent_free()) o.expect(graded::R_set(lambda, 2).size() == 36, "R_set(lambda, 2) = R+ when m3 = 0");
    for (Coord r = 1; r <= 3; ++r) {
      const auto lo = graded::R_set(lambda, r - 1), hi = graded::R_set(lambda, r);
      const std::set<RootVec> his(hi.begin(), hi.end());
      bool sub = true;
      for (const auto& a : lo) sub = sub && his.count(a);
      o.expect(sub, "R_set monotone at " + graded::to_string(lambda.m()));
    }
  }
  if (o.ok) o.detail = "729 lambda, r = 0..3";
  return o;
}

// 7. A <-> B.
Outcome a_b_correspondence() {
  Outcome o;
  std::size_t b_total = 0, witnesses = 0;
  for (const auto& lambda : graded::lambda_sweep(2)) {
    const auto A = graded::enumerate_A(lambda);
    const std::set<Six> A_set(A.begin(), A.end());
    for (const auto& s : graded::admissible_s(lambda)) {
      const Coord S = s[1] + s[3] + s[5];
      const auto B = graded::b_side(lambda, s).elements;
      std::set<Six> image;
      bool ok = true;
      for (const auto& j : B) {
        const Six r = graded::r_of_j(s, j);
        ok = ok && graded::gr(r) == S && graded::in_B_A(lambda, s, j) && A_set.count(r);
        image.insert(r);
      }
      o.expect(ok && image.size() == B.size(), "B(s) injects into A at " + graded::to_string(lambda.m()));
      b_total += B.size();
    }
    for (const auto& r : A) {
      const auto w = graded::witness_s_j(lambda, r);
      o.expect(graded::valid_s(lambda, w.s) && graded::in_B(lambda, w.s, w.j) && graded::r_of_j(w.s, w.j) == r,
               "witness round trip");
      ++witnesses;
    }
  }
  if (o.ok) o.detail = std::to_string(b_total) + " B elements, " + std::to_string(witnesses) + " witnesses";
  return o;
}

// 8. Oracle equivalence.
Outcome oracles() {
  Outcome o;
  std::size_t kostant = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto d = DynkinDiagram::type_A(n);
    for (const auto& lambda : box(n, 3)) {
      const Character ch = irr_character(d, lambda);
      for (const auto& [mu, m] : ch.dominant_mults()) {
        o.expect(kostant_mult(d, lambda, mu) == m, "Kostant vs Freudenthal");
        ++kostant;
      }
    }
  }
  const auto a2 = DynkinDiagram::type_A(2);
  for (Coord m1 = 0; m1 <= 5; ++m1)
    for (Coord m2 = 0; m2 <= 5; ++m2) {
      const WeightVec lambda{m1, m2};
      const Character ch = irr_character(a2, lambda);
      for (Coord k1 = 0; k1 <= m1; ++k1)
        for (Coord k2 = 0; k2 <= m2; ++k2)
          o.expect(ch.mult(a2, lambda - k1 * WeightVec{2, -1} - k2 * WeightVec{-1, 2}) == std::min(k1, k2) + 1,
                   "sl3 closed form");
    }
  for (const auto& a : box(2, 2))
    for (const auto& b : box(2, 2))
      o.expect(oracle::as_map(tensor_decompose(a2, a, b)) == oracle::product_and_strip(a2, a, b), "A2 tensor product");
  const WeightVec w1 = WeightVec::unit(6, 1);
  o.expect(total_dim(e6(), tensor_decompose(e6(), w1, w1)) == 729, "27 x 27 = 729");
  if (o.ok) o.detail = std::to_string(kostant) + " Kostant points, sl3 box, 81 A2 pairs, E6 729";
  return o;
}

// 9. l-weights.
Outcome lweights() {
  Outcome o;
  for (Node i = 1; i <= 6; ++i)
    for (Coord m = 0; m <= 5; ++m) {
      const LWeight kr = kr_lweight(i, 1, m);
      bool ok = kr.exponents().size() == static_cast<std::size_t>(m);
      for (Coord j = 0; j < m; ++j) ok = ok && kr.exponent(i, 1 + m - 1 - 2 * j) == 1;
      o.expect(ok, "KR string positions");
    }
  for (Node i = 1; i <= 6; ++i)
    o.expect(wt_of_lweight(e6(), simple_lroot(e6(), i, 0)) == root_to_weight(e6(), RootVec::unit(6, i)),
             "simple l-root weight");
  const auto a2 = DynkinDiagram::type_A(2);
  for (int eps : {1, -1}) {
    const auto ma = min_aff_lweight(a2, WeightVec{1, 1}, eps, 0);
    o.expect(ma.centers.at(2) - ma.centers.at(1) == eps, "A2 (1,1) centers differ by epsilon");
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<Node> node(1, 6);
  std::uniform_int_distribution<Coord> pos(0, 7);
  std::uniform_int_distribution<int> size(0, 3);
  const Window window{0, 9};
  for (int t = 0; t < 300; ++t) {
    LRootMultiset planted;
    LWeight prod;
    for (int k = size(rng); k > 0; --k) {
      const Node i = node(rng);
      const Coord s = pos(rng);
      ++planted[{i, s}];
      prod *= simple_lroot(e6(), i, s);
    }
    const auto got = l_factorize(e6(), prod, window);
    o.expect(got && *got == planted, "planted multiset recovered");
  }
  if (o.ok) o.detail = "KR strings m <= 5, 6 l-roots, 300 planted factorizations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "root data", 1, root_data},
      {2, "dimensions", 30, dimensions},
      {3, "KR graded characters", 5, kr_graded},
      {4, "multiplicity-free sweep", 10, multiplicity_free},
      {5, "Psi classification", 1, psi_classification},
      {6, "R-sets", 1, r_sets},
      {7, "A <-> B correspondence", 60, a_b_correspondence},
      {8, "oracle equivalence", 60, oracles},
      {9, "l-weights", 5, lweights},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.checks
              << " checks, " << std::fixed << std::setprecision(3) << secs << " s of " << std::setprecision(0) << c.limit
              << " s";
    if (!in_time) std::cout << " [over time limit]";
    if (!o.detail.empty()) std::cout << "; " << o.detail;
    std::cout << '\n';
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 9 - failed << "/9)\n";
  return failed ? 1 : 0;
}
