#pragma once

// Graded characters of the current-algebra modules M(lambda) for E6 and
// the root-set combinatorics that goes with them. All vectors here use the
// built-in E6 labeling (chain 1-2-3-4-5, node 6 attached to node 3).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "e6char/charalg.hpp"
#include "e6char/rootsys.hpp"

namespace e6char::graded {

using Six = std::array<Coord, 6>;

/// A dominant E6 weight m1 w1 + ... + m6 w6.
class LambdaE6 {
public:
  LambdaE6() = default;
  explicit LambdaE6(const Six& m);
  static LambdaE6 from_weight(const WeightVec& w);

  const Six& m() const { return m_; }
  /// m at a 1-based node label.
  Coord operator()(Node i) const { return m_.at(i - 1); }
  WeightVec weight() const;
  /// lambda(h_3) = 0: the trivalent node is outside the support.
  bool trivalent_free() const { return m_[2] == 0; }
  std::set<Node> support() const;

  friend auto operator<=>(const LambdaE6&, const LambdaE6&) = default;

private:
  Six m_{};
};

/// All lambda with 0 <= m_i <= max_coord, m_3 = 0 (when requested), in
/// lexicographic order.
std::vector<LambdaE6> lambda_sweep(Coord max_coord, bool trivalent_free_only = true);

using AElement = Six;

/// wt(r) = lambda - r1(w2-w5) - r2(w4-w1) - r3(w2-w4+w5) - r4(w1-w2+w4)
///         - r5(w2-w3+w4) - r6 w6.
WeightVec wt(const LambdaE6& lambda, const AElement& r);
Coord gr(const AElement& r);
std::pair<WeightVec, Coord> wt_gr(const LambdaE6& lambda, const AElement& r);

/// The six subtrahends of wt as weights, in order r1..r6.
const std::array<WeightVec, 6>& wt_directions();

bool in_A(const LambdaE6& lambda, const AElement& r);

struct AFilter {
  std::optional<WeightVec> weight;
  std::optional<Coord> degree;
};
/// Members of the index polytope in lexicographic order, optionally
/// restricted to a weight and/or a degree.
std::vector<AElement> enumerate_A(const LambdaE6& lambda, const AFilter& filter = {});

enum class Status { Proved, Conjectural, UpperBoundOnly };
std::string to_string(Status s);
Status formula_status(const LambdaE6& lambda);

struct GradedDecomposition {
  LambdaE6 lambda;
  Status status = Status::Proved;
  /// degree -> constituents V(wt(r)) with multiplicity |A_{mu,r}|.
  std::map<Coord, DecompositionList> degrees;
};
GradedDecomposition graded_char_M(const LambdaE6& lambda);

struct GradedExpansion {
  GradedDecomposition decomposition;
  /// degree -> dominant weight -> multiplicity in that graded piece.
  std::map<Coord, WeightMap> dominant_weights;
  /// Coefficients of the dimension polynomial, indexed by degree.
  std::vector<BigInt> dims;
  BigInt total;
};
GradedExpansion expand_graded(const LambdaE6& lambda, bool with_weights = true);

/// Renders a dimension polynomial as "351 + 27 t", "1 + t^2", ...
std::string format_t_polynomial(const std::vector<BigInt>& coeffs);

// ---------------------------------------------------------------------------
// Root sets

/// max over i in supp(lambda) of eps_i(alpha); 0 when the support is empty.
Coord r_min(const LambdaE6& lambda, const RootVec& alpha);
/// Positive roots with r_min <= r.
std::vector<RootVec> R_set(const LambdaE6& lambda, Coord r);
/// Positive roots whose simple-root coordinates are all <= 1.
std::vector<RootVec> R_plus_one();

enum class PsiVerdict { Empty, PsiOmega6, PsiOmega2, PsiOmega4, NotCovered };
std::string to_string(PsiVerdict v);

struct PsiClassification {
  std::vector<RootVec> psi;
  PsiVerdict verdict = PsiVerdict::Empty;
};
/// Psi^lambda = R^+ minus R_set(lambda, 1), compared against the argmax sets
/// Psi_nu for nu in {w6, w2, w4}. Requires m3 = 0.
PsiClassification classify_psi(const LambdaE6& lambda);

/// Roots maximizing (alpha, nu). nu may have rational coordinates.
std::vector<RootVec> psi_nu(const DynkinDiagram& d, const std::vector<Rational>& nu);
std::vector<RootVec> psi_nu(const DynkinDiagram& d, const WeightVec& nu);

/// All (mu, r), r <= r_max, with lambda - mu a sum of r elements of psi.
std::set<std::pair<WeightVec, Coord>> gamma_set(const DynkinDiagram& d, const WeightVec& lambda,
                                                const std::vector<RootVec>& psi, Coord r_max);

// ---------------------------------------------------------------------------
// The B(s) side

using BElement = std::array<Coord, 5>;

/// j0 = j1 + j2 - j3 - j4 - j5.
Coord j0(const BElement& j);

/// s = (0, s2, 0, s4, 0, s6) with s2 <= m2, s4 <= m4, s6 <= m6.
bool valid_s(const LambdaE6& lambda, const Six& s);
/// Admissible s vectors in lexicographic order.
std::vector<Six> admissible_s(const LambdaE6& lambda);

/// Membership in B(s).
bool in_B(const LambdaE6& lambda, const Six& s, const BElement& j);
/// The weaker inequalities equivalent to r_of_j(s, j) lying in A; j may be
/// any integer vector.
bool in_B_A(const LambdaE6& lambda, const Six& s, const BElement& j);

struct BSide {
  std::vector<BElement> elements;  ///< B(s), lexicographic
};
BSide b_side(const LambdaE6& lambda, const Six& s);

/// r_j = (s2 - j1, s4 - j2, j3, j4, j0, s6 + j5).
AElement r_of_j(const Six& s, const BElement& j);
/// Inverse of r_of_j on Z^6[s2+s4+s6].
BElement j_of_r(const Six& s, const AElement& r);
/// 2(j1 + j2) - (j3 + j4).
Coord het(const BElement& j);

struct Witness {
  Six s;
  BElement j;
};
/// s = (0, r1+r3+r5, 0, r2+r4, 0, r6), j = (r3+r5, r4, r3, r4, 0).
Witness witness_s_j(const LambdaE6& lambda, const AElement& r);

std::string to_string(const Six& v);
std::string to_string(const BElement& v);

}  // namespace e6char::graded
