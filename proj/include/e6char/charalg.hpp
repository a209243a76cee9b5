#pragma once

// Characters of finite-dimensional irreducible modules: Freudenthal's
// recursion, the Weyl dimension formula, Kostant's multiplicity formula as an
// independent oracle, and decompositions into irreducibles.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "e6char/rootsys.hpp"

namespace e6char {

/// Raised when an oracle is asked for input beyond its intended range.
class OracleOutOfRange : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a weight map is not the character of a module.
class NotACharacter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using WeightMap = std::map<WeightVec, BigInt>;

/// Character of V(lambda), stored as multiplicities of dominant weights
/// only. Expansion to every weight is a separate, explicit step.
class Character {
public:
  const WeightVec& highest_weight() const { return hw_; }
  /// Dominant weight -> multiplicity; every key is <= the highest weight.
  const WeightMap& dominant_mults() const& { return mults_; }
  WeightMap dominant_mults() && { return std::move(mults_); }

  /// Multiplicity of an arbitrary weight (read off its dominant representative).
  BigInt mult(const DynkinDiagram& d, const WeightVec& mu) const;
  /// Sum of multiplicity times orbit size.
  BigInt dim(const DynkinDiagram& d) const;
  /// Full weight map: every weight of V(lambda) with its multiplicity.
  WeightMap expand(const DynkinDiagram& d) const;

private:
  friend Character irr_character(const DynkinDiagram& d, const WeightVec& lambda);
  WeightVec hw_;
  WeightMap mults_;
};

struct Component {
  WeightVec hw;
  BigInt mult;
  friend bool operator==(const Component&, const Component&) = default;
};
/// Irreducible constituents, sorted so that higher weights in the dominance
/// order come first.
using DecompositionList = std::vector<Component>;

/// det(C) * height(lambda) where height is the sum of root coordinates; strictly
/// increasing along the dominance order.
Coord scaled_level(const DynkinDiagram& d, const WeightVec& mu);
void sort_dominance_desc(const DynkinDiagram& d, DecompositionList& list);

BigInt weyl_dim(const DynkinDiagram& d, const WeightVec& lambda);

Character irr_character(const DynkinDiagram& d, const WeightVec& lambda);

/// Kostant partition function: number of ways to write gamma as a sum of
/// positive roots.
BigInt kostant_partition(const DynkinDiagram& d, const RootVec& gamma);

/// sum_w (-1)^l(w) P(w(lambda+rho) - (mu+rho)). Rank is limited to 4.
BigInt kostant_mult(const DynkinDiagram& d, const WeightVec& lambda, const WeightVec& mu);

/// dim V(m1 w1 + m2 w2)_{lambda - k1 a1 - k2 a2} for sl3, valid for
/// 0 <= k1 <= m1, 0 <= k2 <= m2.
long long sl3_mult_closed(long long m1, long long m2, long long k1, long long k2);

/// Strips highest weights off a full weight map until nothing is left.
DecompositionList decompose(const DynkinDiagram& d, const WeightMap& full);

/// V(lambda1) (x) V(lambda2) by the Brauer-Klimyk rule.
DecompositionList tensor_decompose(const DynkinDiagram& d, const WeightVec& lambda1, const WeightVec& lambda2);

/// Sum of mult * weyl_dim over a decomposition.
BigInt total_dim(const DynkinDiagram& d, const DecompositionList& list);

}  // namespace e6char
