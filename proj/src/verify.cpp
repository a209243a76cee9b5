#include "e6char/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "e6char/charalg.hpp"
#include "e6char/graded.hpp"
#include "e6char/lweight.hpp"

namespace e6char::verify {

void SuiteReport::expect(bool cond, std::string_view what) {
  ++checks;
  if (cond) return;
  ++failed;
  if (failures.size() < 20) failures.emplace_back(what);
}

namespace {

using graded::LambdaE6;
using graded::Six;

constexpr std::size_t kSeed = 20240611;

// alpha_1..alpha_6 then beta_23..beta_30 in fundamental-weight coordinates.
struct Table2Row {
  int beta;  // 0 for a simple root
  Node node;
  Six weight;
};
constexpr Table2Row kRootWeights[] = {
    {0, 1, {2, -1, 0, 0, 0, 0}},   {0, 2, {-1, 2, -1, 0, 0, 0}}, {0, 3, {0, -1, 2, -1, 0, -1}},
    {0, 4, {0, 0, -1, 2, -1, 0}},  {0, 5, {0, 0, 0, -1, 2, 0}},  {0, 6, {0, 0, -1, 0, 0, 2}},
    {23, 0, {1, -1, 1, -1, 1, 0}}, {24, 0, {0, 1, 0, 0, -1, 0}}, {25, 0, {-1, 0, 0, 1, 0, 0}},
    {26, 0, {0, 1, 0, -1, 1, 0}},  {27, 0, {1, -1, 0, 1, 0, 0}}, {28, 0, {0, 1, -1, 1, 0, 0}},
    {29, 0, {0, 0, 1, 0, 0, -1}},  {30, 0, {0, 0, 0, 0, 0, 1}},
};

WeightVec weight_of(const Six& v) { return WeightVec(std::vector<Coord>(v.begin(), v.end())); }

std::string str(const auto& v) {
  using e6char::to_string;
  using graded::to_string;
  return to_string(v);
}

std::string big(const BigInt& b) { return b.str(); }

// Rank of an integer matrix over the rationals.
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

DecompositionList product_and_strip(const DynkinDiagram& d, const WeightVec& a, const WeightVec& b) {
  const WeightMap ea = irr_character(d, a).expand(d);
  const WeightMap eb = irr_character(d, b).expand(d);
  WeightMap prod;
  for (const auto& [x, mx] : ea)
    for (const auto& [y, my] : eb) prod[x + y] += mx * my;
  return decompose(d, prod);
}

std::vector<WeightVec> dominant_box(int rank, Coord max_coord) {
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

bool same_list(const DecompositionList& a, const DecompositionList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].hw != b[k].hw || a[k].mult != b[k].mult) return false;
  return true;
}

// ---------------------------------------------------------------------------

void suite_roots(SuiteReport& rep) {
  const auto d = DynkinDiagram::e6();
  const auto roots = positive_roots(d);
  rep.expect(roots.size() == 36, "E6 has 36 positive roots, got " + std::to_string(roots.size()));

  std::set<RootVec> generated(roots.begin(), roots.end());
  std::set<RootVec> table;
  for (Node i = 1; i <= 6; ++i) table.insert(RootVec::unit(6, i));
  for (int k = 1; k <= 30; ++k) {
    const RootVec b = e6_beta(k);
    table.insert(b);
    rep.expect(e6_beta_index(b) == k, "beta index of " + str(b));
  }
  rep.expect(generated == table, "generated roots equal the unit vectors plus the beta table");

  std::size_t table2 = 0;
  for (const auto& row : kRootWeights) {
    const RootVec root = row.beta ? e6_beta(row.beta) : RootVec::unit(6, row.node);
    const bool ok = root_to_weight(d, root) == weight_of(row.weight);
    rep.expect(ok, "weight table line for " + str(root));
    table2 += ok;
  }

  for (const auto& a : roots) {
    const WeightVec w = root_to_weight(d, a);
    rep.expect(weight_to_root(d, w) == a, "root_to_weight inverts on " + str(a));
    for (Node i = 1; i <= 6; ++i) {
      RootVec img = a - w.at_node(i) * RootVec::unit(6, i);
      rep.expect(generated.count(img) || generated.count(-img), "s_" + std::to_string(i) + " maps " + str(a) + " to a root");
    }
    // Lower the height by simple reflections until a simple root is reached.
    RootVec cur = a;
    while (height(cur) > 1) {
      const WeightVec cw = root_to_weight(d, cur);
      Node i = 1;
      while (i <= 6 && cw.at_node(i) <= 0) ++i;
      if (i > 6) break;
      cur -= cw.at_node(i) * RootVec::unit(6, i);
    }
    rep.expect(height(cur) == 1, str(a) + " is conjugate to a simple root");
  }

  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<Coord> small(-3, 3);
  auto random_root_vec = [&] {
    RootVec v = RootVec::zero(6);
    for (int k = 0; k < 6; ++k) v.coords[k] = small(rng);
    return v;
  };
  for (int t = 0; t < 50; ++t) {
    const RootVec x = random_root_vec(), y = random_root_vec();
    rep.expect(root_to_weight(d, x + y) == root_to_weight(d, x) + root_to_weight(d, y), "root_to_weight is additive");
    rep.expect(weight_to_root(d, root_to_weight(d, x)) == x, "root_to_weight is invertible");
  }

  const WeightVec samples[] = {WeightVec{1, 0, 0, 0, 0, 0}, WeightVec{0, 1, 0, 0, 0, 0}, WeightVec{0, 0, 0, 0, 0, 1},
                               WeightVec{1, 0, 0, 0, 0, 1}, WeightVec{0, 1, 0, 1, 0, 0}};
  for (const auto& mu : samples) {
    const auto orbit = weyl_orbit(d, mu);
    rep.expect(BigInt(orbit.size()) == orbit_size(d, mu), "orbit size of " + str(mu));
    WeightVec sum = WeightVec::zero(6);
    Coord norms = 0;
    bool constant = true;
    for (const auto& w : orbit) {
      const WeightVec rep_w = dominant_representative(d, w);
      constant = constant && rep_w == mu && dominant_representative(d, rep_w) == rep_w;
      sum += w;
      norms += scaled_inner_product(d, w, w);
    }
    rep.expect(constant, "dominant_representative is idempotent and constant on the orbit of " + str(mu));
    rep.expect(sum.is_zero(), "orbit of " + str(mu) + " sums to zero");
    rep.expect(norms == static_cast<Coord>(orbit.size()) * scaled_inner_product(d, mu, mu), "orbit norms of " + str(mu));
  }

  std::vector<WeightVec> sample;
  std::uniform_int_distribution<int> bit(0, 1);
  for (int t = 0; t < 16; ++t) {
    WeightVec w{0, 2, 0, 0, 0, 1};
    for (Node i = 1; i <= 6; ++i)
      if (bit(rng)) w -= root_to_weight(d, RootVec::unit(6, i));
    sample.push_back(w);
  }
  bool order_ok = true;
  for (const auto& x : sample) {
    order_ok = order_ok && dominance_leq(d, x, x);
    for (const auto& y : sample) {
      if (x != y && dominance_leq(d, x, y) && dominance_leq(d, y, x)) order_ok = false;
      for (const auto& z : sample)
        if (dominance_leq(d, x, y) && dominance_leq(d, y, z) && !dominance_leq(d, x, z)) order_ok = false;
    }
  }
  rep.expect(order_ok, "dominance order is reflexive, antisymmetric and transitive on a sample");

  rep.notes.push_back(std::to_string(roots.size()) + " roots, beta and weight tables matched (" + std::to_string(table2) + "/" +
                      std::to_string(std::size(kRootWeights)) + " weight lines)");
}

void suite_characters(SuiteReport& rep) {
  const auto e6 = DynkinDiagram::e6();
  const std::pair<Node, int> expected[] = {{1, 27}, {2, 351}, {5, 27}, {6, 78}};
  for (auto [i, dim] : expected) {
    const WeightVec w = WeightVec::unit(6, i);
    const BigInt weyl = weyl_dim(e6, w);
    const BigInt summed = irr_character(e6, w).dim(e6);
    rep.expect(weyl == dim && summed == weyl,
               "dim V(w" + std::to_string(i) + "): Weyl " + big(weyl) + ", Freudenthal " + big(summed));
  }

  std::size_t kostant = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto d = DynkinDiagram::type_A(n);
    for (const auto& lambda : dominant_box(n, 3)) {
      const Character ch = irr_character(d, lambda);
      for (const auto& [mu, m] : ch.dominant_mults()) {
        rep.expect(kostant_mult(d, lambda, mu) == m, "Kostant vs Freudenthal in " + d.name() + " at " + str(lambda) + ", " + str(mu));
        ++kostant;
      }
    }
  }

  const auto a2 = DynkinDiagram::type_A(2);
  const WeightVec al1{2, -1}, al2{-1, 2};
  std::size_t sl3 = 0;
  for (Coord m1 = 0; m1 <= 5; ++m1)
    for (Coord m2 = 0; m2 <= 5; ++m2) {
      const WeightVec lambda{m1, m2};
      const Character ch = irr_character(a2, lambda);
      for (Coord k1 = 0; k1 <= m1; ++k1)
        for (Coord k2 = 0; k2 <= m2; ++k2) {
          const WeightVec mu = lambda - k1 * al1 - k2 * al2;
          rep.expect(ch.mult(a2, mu) == sl3_mult_closed(m1, m2, k1, k2),
                     "sl3 closed form at " + str(lambda) + " k=(" + std::to_string(k1) + "," + std::to_string(k2) + ")");
          ++sl3;
        }
    }

  for (const auto& lambda : dominant_box(2, 3)) {
    const auto back = decompose(a2, irr_character(a2, lambda).expand(a2));
    rep.expect(back.size() == 1 && back[0].hw == lambda && back[0].mult == 1, "decompose round trip at " + str(lambda));
  }
  for (Node i : {1, 6}) {
    const WeightVec w = WeightVec::unit(6, i);
    const auto back = decompose(e6, irr_character(e6, w).expand(e6));
    rep.expect(back.size() == 1 && back[0].hw == w && back[0].mult == 1, "decompose round trip at " + str(w));
  }
  bool threw = false;
  try {
    decompose(a2, WeightMap{{WeightVec{0, 0}, BigInt(-1)}});
  } catch (const NotACharacter&) {
    threw = true;
  }
  rep.expect(threw, "decompose rejects a negative multiplicity");

  std::size_t pairs = 0;
  const auto box2 = dominant_box(2, 2);
  for (const auto& a : box2)
    for (const auto& b : box2) {
      rep.expect(same_list(tensor_decompose(a2, a, b), product_and_strip(a2, a, b)),
                 "Brauer-Klimyk vs product-and-strip at " + str(a) + " x " + str(b));
      ++pairs;
    }
  const WeightVec w1 = WeightVec::unit(6, 1);
  const BigInt total = total_dim(e6, tensor_decompose(e6, w1, w1));
  rep.expect(total == 729, "dimension of V(w1) x V(w1) is " + big(total));

  rep.notes.push_back(std::to_string(kostant) + " Kostant comparisons, " + std::to_string(sl3) + " sl3 closed-form points, " +
                      std::to_string(pairs) + " A2 tensor pairs, E6 w1 x w1 = " + big(total));
}

void check_kr(SuiteReport& rep) {
  // Diagram automorphism of the E6 labeling: 1<->5, 2<->4.
  auto flip = [](Six v) { return Six{v[4], v[3], v[2], v[1], v[0], v[5]}; };
  for (Coord m = 0; m <= 3; ++m) {
    auto expect_kr = [&](const Six& lambda, auto&& term) {
      const auto g = graded::graded_char_M(LambdaE6(lambda));
      bool ok = true;
      Coord count = 0;
      for (Coord r = 0; r <= m; ++r) {
        auto t = term(r);
        if (!t) continue;
        ++count;
        auto it = g.degrees.find(r);
        ok = ok && it != g.degrees.end() && it->second.size() == 1 && it->second[0].hw == weight_of(*t) &&
             it->second[0].mult == 1;
      }
      ok = ok && static_cast<Coord>(g.degrees.size()) == count;
      rep.expect(ok, "graded character of M" + str(lambda));
    };
    using Opt = std::optional<Six>;
    expect_kr(Six{m, 0, 0, 0, 0, 0}, [&](Coord r) { return r == 0 ? Opt(Six{m, 0, 0, 0, 0, 0}) : Opt(); });
    expect_kr(Six{0, 0, 0, 0, m, 0}, [&](Coord r) { return r == 0 ? Opt(Six{0, 0, 0, 0, m, 0}) : Opt(); });
    expect_kr(Six{0, 0, 0, 0, 0, m}, [&](Coord r) { return Opt(Six{0, 0, 0, 0, 0, m - r}); });
    expect_kr(Six{0, m, 0, 0, 0, 0}, [&](Coord r) { return Opt(Six{0, m - r, 0, 0, r, 0}); });
    expect_kr(flip(Six{0, m, 0, 0, 0, 0}), [&](Coord r) { return Opt(flip(Six{0, m - r, 0, 0, r, 0})); });
  }
  const auto w2 = graded::expand_graded(LambdaE6(Six{0, 1, 0, 0, 0, 0}), false);
  rep.expect(graded::format_t_polynomial(w2.dims) == "351 + 27 t", "dimension polynomial of M(w2)");
  const auto w6 = graded::expand_graded(LambdaE6(Six{0, 0, 0, 0, 0, 1}), false);
  rep.expect(graded::format_t_polynomial(w6.dims) == "78 + t", "dimension polynomial of M(w6)");
}

void suite_multiplicity_free(SuiteReport& rep, Coord max_coord) {
  const auto e6 = DynkinDiagram::e6();
  const auto& dirs = graded::wt_directions();
  std::vector<std::vector<Rational>> matrix;
  for (const auto& v : dirs) matrix.emplace_back(v.coords.begin(), v.coords.end());
  rep.expect(rational_rank(matrix) == 6, "wt is injective (rank 6)");
  for (int k = 0; k < 5; ++k)
    rep.expect(dirs[k] == root_to_weight(e6, e6_beta(24 + k)), "wt direction " + std::to_string(k + 1) + " is beta_" + std::to_string(24 + k));
  rep.expect(dirs[5] == root_to_weight(e6, e6_beta(30)), "wt direction 6 is beta_30");

  const auto sweep = graded::lambda_sweep(max_coord);
  std::size_t members = 0;
  for (const auto& lambda : sweep) {
    const auto A = graded::enumerate_A(lambda);
    members += A.size();
    std::map<WeightVec, int> by_weight;
    bool dominant = true;
    std::size_t degree_zero = 0;
    for (const auto& r : A) {
      const WeightVec w = graded::wt(lambda, r);
      ++by_weight[w];
      dominant = dominant && is_dominant(w);
      if (graded::gr(r) == 0) ++degree_zero;
    }
    const bool free = std::all_of(by_weight.begin(), by_weight.end(), [](const auto& p) { return p.second <= 1; });
    rep.expect(free, "multiplicity free at " + str(lambda.m()));
    rep.expect(dominant, "wt(r) dominant at " + str(lambda.m()));
    rep.expect(degree_zero == 1 && graded::in_A(lambda, Six{}), "A_0 = {0} at " + str(lambda.m()));
    const auto g = graded::graded_char_M(lambda);
    auto it = g.degrees.find(0);
    rep.expect(it != g.degrees.end() && it->second.size() == 1 && it->second[0].hw == lambda.weight() &&
                   it->second[0].mult == 1,
               "degree 0 of M" + str(lambda.m()) + " is V(lambda)");
  }
  check_kr(rep);
  rep.notes.push_back(std::to_string(sweep.size()) + " lambda swept (m_i <= " + std::to_string(max_coord) + ", m3 = 0), " +
                      std::to_string(members) + " index-polytope points");
}

void suite_ab_bijection(SuiteReport& rep, Coord max_coord) {
  const auto sweep = graded::lambda_sweep(max_coord);
  std::size_t s_count = 0, b_count = 0, witnesses = 0;
  for (const auto& lambda : sweep) {
    const auto A = graded::enumerate_A(lambda);
    const std::set<Six> A_set(A.begin(), A.end());
    for (const auto& s : graded::admissible_s(lambda)) {
      ++s_count;
      const Coord S = s[1] + s[3] + s[5];
      const auto B = graded::b_side(lambda, s).elements;
      b_count += B.size();
      std::set<Six> image;
      bool ok = true;
      for (const auto& j : B) {
        const Six r = graded::r_of_j(s, j);
        ok = ok && graded::gr(r) == S && A_set.count(r) && graded::in_B_A(lambda, s, j) && graded::j_of_r(s, r) == j;
        image.insert(r);
      }
      ok = ok && image.size() == B.size();
      std::set<Six> expected_image;
      for (const auto& r : graded::enumerate_A(lambda, {std::nullopt, S}))
        if (graded::in_B(lambda, s, graded::j_of_r(s, r))) expected_image.insert(r);
      ok = ok && image == expected_image;
      // in_B_A is exactly membership of r_of_j in the index polytope.
      graded::BElement j{};
      for (j[0] = -1; j[0] <= 2 && ok; ++j[0])
        for (j[1] = -1; j[1] <= 2; ++j[1])
          for (j[2] = -1; j[2] <= 2; ++j[2])
            for (j[3] = -1; j[3] <= 2; ++j[3])
              for (j[4] = -1; j[4] <= 2; ++j[4])
                ok = ok && graded::in_B_A(lambda, s, j) == graded::in_A(lambda, graded::r_of_j(s, j));
      rep.expect(ok, "B(s) -> A at lambda " + str(lambda.m()) + ", s " + str(s));
    }
    for (const auto& r : A) {
      const auto w = graded::witness_s_j(lambda, r);
      rep.expect(graded::valid_s(lambda, w.s) && graded::in_B(lambda, w.s, w.j) && graded::r_of_j(w.s, w.j) == r,
                 "witness round trip at " + str(lambda.m()) + ", r " + str(r));
      ++witnesses;
    }
  }
  rep.notes.push_back(std::to_string(sweep.size()) + " lambda, " + std::to_string(s_count) + " s vectors, " +
                      std::to_string(b_count) + " B elements, " + std::to_string(witnesses) + " witnesses");
}

graded::PsiVerdict expected_verdict(const LambdaE6& lambda) {
  using graded::PsiVerdict;
  const auto supp = lambda.support();
  const bool has2 = supp.count(2), has4 = supp.count(4), has6 = supp.count(6);
  if (has2 && has4) return PsiVerdict::NotCovered;
  if (has2) return PsiVerdict::PsiOmega2;
  if (has4) return PsiVerdict::PsiOmega4;
  if (has6) return PsiVerdict::PsiOmega6;
  return PsiVerdict::Empty;
}

void suite_psi(SuiteReport& rep, Coord max_coord) {
  const auto e6 = DynkinDiagram::e6();
  const auto roots = positive_roots(e6);

  const auto sweep = graded::lambda_sweep(max_coord);
  std::map<graded::PsiVerdict, std::size_t> tally;
  std::set<std::vector<RootVec>> uncovered;
  for (const auto& lambda : sweep) {
    const auto c = graded::classify_psi(lambda);
    rep.expect(c.verdict == expected_verdict(lambda), "Psi verdict at " + str(lambda.m()) + ": " + graded::to_string(c.verdict));
    ++tally[c.verdict];
    if (c.verdict == graded::PsiVerdict::NotCovered) uncovered.insert(c.psi);
  }
  const auto w2 = graded::classify_psi(LambdaE6(Six{0, 1, 0, 0, 0, 0}));
  std::vector<int> betas;
  for (const auto& a : w2.psi) betas.push_back(e6_beta_index(a));
  rep.expect(betas == std::vector<int>{24, 26, 28, 29, 30}, "Psi for supp {2} is beta 24, 26, 28, 29, 30");

  // No weight in a box matches an uncovered Psi.
  std::size_t searched = 0;
  for (const auto& psi : uncovered) {
    bool found = false;
    for (const auto& nu : dominant_box(6, 4)) {
      WeightVec shifted = nu;
      for (auto& c : shifted.coords) c -= 2;
      if (graded::psi_nu(e6, shifted) == psi) found = true;
      ++searched;
    }
    rep.expect(!found, "uncovered Psi matches no nu in [-2,2]^6");
  }

  const Rational scales[] = {Rational(1, 2), Rational(3), Rational(7, 5)};
  for (Node i : {2, 4, 6}) {
    const auto base = graded::psi_nu(e6, WeightVec::unit(6, i));
    for (const auto& c : scales) {
      std::vector<Rational> nu(6, Rational(0));
      nu[i - 1] = c;
      rep.expect(graded::psi_nu(e6, nu) == base, "Psi_nu is scale invariant at w" + std::to_string(i));
    }
  }

  // R-sets.
  const auto r1 = graded::R_plus_one();
  std::set<RootVec> expected_r1(roots.begin(), roots.end());
  for (int k = 20; k <= 30; ++k) expected_r1.erase(e6_beta(k));
  rep.expect(r1.size() == 25 && std::set<RootVec>(r1.begin(), r1.end()) == expected_r1, "R+_1 is R+ minus beta 20..30");
  for (const auto& lambda : graded::lambda_sweep(max_coord, false)) {
    std::size_t prev = 0;
    bool monotone = true;
    for (Coord r = 0; r <= 3; ++r) {
      const auto R = graded::R_set(lambda, r);
      monotone = monotone && R.size() >= prev;
      const auto prev_set = r ? graded::R_set(lambda, r - 1) : std::vector<RootVec>{};
      for (const auto& a : prev_set) monotone = monotone && std::count(R.begin(), R.end(), a);
      prev = R.size();
    }
    rep.expect(monotone, "R_set monotone in r at " + str(lambda.m()));
    rep.expect(graded::R_set(lambda, 3).size() == 36, "R_set(lambda, 3) = R+ at " + str(lambda.m()));
    if (lambda.trivalent_free())
      rep.expect(graded::R_set(lambda, 2).size() == 36, "R_set(lambda, 2) = R+ at " + str(lambda.m()));
  }

  const WeightVec w2_weight = WeightVec::unit(6, 2);
  rep.expect(graded::gamma_set(e6, w2_weight, {}, 3) == std::set<std::pair<WeightVec, Coord>>{{w2_weight, 0}},
             "Gamma with empty Psi is {(lambda, 0)}");
  rep.expect(graded::gamma_set(e6, w2_weight, w2.psi, 1).size() == 6, "Gamma for w2 with r <= 1 has 6 pairs");

  std::ostringstream os;
  os << sweep.size() << " lambda classified (";
  bool first = true;
  for (const auto& [v, n] : tally) {
    os << (first ? "" : ", ") << graded::to_string(v) << ' ' << n;
    first = false;
  }
  os << "), " << searched << " nu searched for uncovered sets";
  rep.notes.push_back(os.str());
}

void suite_lweight(SuiteReport& rep) {
  const auto e6 = DynkinDiagram::e6();
  for (Node i = 1; i <= 6; ++i)
    for (Coord m = 0; m <= 5; ++m)
      for (Coord s0 : {-3, 0, 4}) {
        const LWeight kr = kr_lweight(i, s0, m);
        bool ok = kr.is_dominant() && kr.factor_count(i) == m && wt_of_lweight(e6, kr) == m * WeightVec::unit(6, i);
        for (Coord j = 0; j < m; ++j) ok = ok && kr.exponent(i, s0 + m - 1 - 2 * j) == 1;
        ok = ok && static_cast<Coord>(kr.exponents().size()) == m;
        rep.expect(ok, "KR string for node " + std::to_string(i) + ", m " + std::to_string(m));
      }
  for (Node i = 1; i <= 6; ++i)
    for (Coord s : {-2, 0, 5})
      rep.expect(wt_of_lweight(e6, simple_lroot(e6, i, s)) == root_to_weight(e6, RootVec::unit(6, i)),
                 "simple l-root " + std::to_string(i) + " has weight alpha_" + std::to_string(i));

  const auto a2 = DynkinDiagram::type_A(2);
  for (int eps : {1, -1}) {
    const auto ma = min_aff_lweight(a2, WeightVec{1, 1}, eps, 0);
    rep.expect(ma.centers.at(1) == 0 && ma.centers.at(2) == eps, "A2 (1,1) centers differ by epsilon");
  }

  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<Coord> coord(0, 2);
  std::size_t planted = 0;
  for (const auto* d : {&e6, &a2}) {
    std::uniform_int_distribution<Node> node(1, d->rank());
    std::uniform_int_distribution<Coord> spot(0, 7);
    std::uniform_int_distribution<int> size(0, 3);
    for (int t = 0; t < 200; ++t) {
      LRootMultiset want;
      LWeight prod;
      const int n = size(rng);
      for (int k = 0; k < n; ++k) {
        const Node i = node(rng);
        const Coord s = spot(rng);
        ++want[{i, s}];
        prod *= simple_lroot(*d, i, s);
      }
      const auto got = l_factorize(*d, prod, {0, 9});
      rep.expect(got && *got == want, "planted l-root multiset recovered in " + d->name());
      ++planted;
    }
    for (int t = 0; t < 50; ++t) {
      LWeight x, y;
      for (int k = 0; k < 4; ++k) {
        x *= LWeight::fundamental(node(rng), spot(rng), coord(rng) - 1);
        y *= LWeight::fundamental(node(rng), spot(rng), coord(rng) - 1);
      }
      rep.expect(wt_of_lweight(*d, x * y) == wt_of_lweight(*d, x) + wt_of_lweight(*d, y), "wt is a homomorphism");
    }
  }

  for (const auto& lambda : {Six{1, 0, 0, 0, 0, 0}, Six{0, 2, 1, 0, 0, 0}, Six{0, 1, 0, 0, 0, 1}, Six{3, 1, 0, 0, 0, 0}}) {
    const auto plus = min_aff_lweight(e6, weight_of(lambda), 1, 0);
    const auto minus = min_aff_lweight(e6, weight_of(lambda), -1, 0);
    bool ok = wt_of_lweight(e6, plus.lweight) == weight_of(lambda) &&
              wt_of_lweight(e6, minus.lweight) == weight_of(lambda);
    for (Node i = 1; i <= 6; ++i) ok = ok && plus.lweight.factor_count(i) == minus.lweight.factor_count(i);
    rep.expect(ok, "epsilon symmetry of minimal affinization data at " + str(lambda));
  }
  rep.notes.push_back(std::to_string(planted) + " planted factorizations recovered");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roots", "characters", "multiplicity_free", "ab_bijection", "psi", "lweight"};
  return names;
}

bool known_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  if (!known_suite(name)) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  if (opts.max_coord < 0) throw InvalidInput("--max-coord must be nonnegative");
  SuiteReport rep;
  rep.suite = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "roots") suite_roots(rep);
    else if (name == "characters") suite_characters(rep);
    else if (name == "multiplicity_free") suite_multiplicity_free(rep, opts.max_coord);
    else if (name == "ab_bijection") suite_ab_bijection(rep, opts.max_coord);
    else if (name == "psi") suite_psi(rep, opts.max_coord);
    else suite_lweight(rep);
  } catch (const std::exception& e) {
    rep.expect(false, std::string("unexpected exception: ") + e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace e6char::verify
