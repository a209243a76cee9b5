#pragma once

// The l-weight lattice restricted to spectral parameters in one coset q^Z:
// a product of fundamental l-weights omega_{i, q^s} is stored as its
// exponent map (i, s) -> n.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "e6char/rootsys.hpp"

namespace e6char {

class LWeight {
public:
  using Key = std::pair<Node, Coord>;  ///< (node, q-exponent)

  LWeight() = default;

  static LWeight fundamental(Node i, Coord s, Coord power = 1);

  const std::map<Key, Coord>& exponents() const { return exps_; }
  Coord exponent(Node i, Coord s) const;
  bool is_identity() const { return exps_.empty(); }
  bool is_dominant() const;
  /// Sum of exponents at node i.
  Coord factor_count(Node i) const;
  /// Smallest and largest q-exponent present; empty for the identity.
  std::optional<std::pair<Coord, Coord>> exponent_range() const;

  LWeight& operator*=(const LWeight& o);
  friend LWeight operator*(LWeight a, const LWeight& b) { return a *= b; }
  LWeight inverse() const;
  LWeight pow(Coord n) const;

  friend bool operator==(const LWeight&, const LWeight&) = default;

private:
  void add(const Key& k, Coord n);
  std::map<Key, Coord> exps_;
};

std::string to_string(const LWeight& lw);

/// omega_{i,a,m} with a = q^s0: factors at exponents s0+m-1, s0+m-3, ..., s0-m+1.
LWeight kr_lweight(Node i, Coord s0, Coord m);

/// alpha_{i,a} with a = q^s: +1 at (i, s) and (i, s+2), -1 at (j, s+1)
/// for each neighbour j.
LWeight simple_lroot(const DynkinDiagram& d, Node i, Coord s);

WeightVec wt_of_lweight(const DynkinDiagram& d, const LWeight& lw);

struct MinAffinization {
  std::vector<Node> path;       ///< closure of the support in path order
  std::map<Node, Coord> centers; ///< q-exponent of a_i along the path
  LWeight lweight;
};

/// Drinfeld data of a minimal affinization of V(lambda) when the connected
/// closure of supp(lambda) is of type A. epsilon is +1 or -1.
MinAffinization min_aff_lweight(const DynkinDiagram& d, const WeightVec& lambda, int epsilon, Coord base);

struct Window {
  Coord lo = 0;
  Coord hi = 0;
};

using LRootMultiset = std::map<LWeight::Key, Coord>;

/// Writes diff as a product of simple l-roots alpha_{i, q^s}, lo <= s <= hi,
/// with nonnegative exponents, or returns nothing when impossible.
/// Throws when the support of diff is not inside the window.
std::optional<LRootMultiset> l_factorize(const DynkinDiagram& d, const LWeight& diff, Window window);

/// mu <= lambda in the l-weight order, searching factorizations in the window.
bool l_dominance_leq(const DynkinDiagram& d, const LWeight& mu, const LWeight& lambda, Window window);

}  // namespace e6char
