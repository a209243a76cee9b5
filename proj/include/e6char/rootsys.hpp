#pragma once

// Root systems, weight lattices and Weyl-group orbits for simply-laced
// Dynkin diagrams. Nodes are addressed by 1-based labels; coordinate
// vectors are stored 0-based (entry i-1 belongs to node i).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace e6char {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Coord = std::int64_t;
using Node = int;

/// Raised for malformed or out-of-domain arguments.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer coordinate vector tagged with the basis it is written in.
template <class Basis>
struct LatticeVec {
  std::vector<Coord> coords;

  LatticeVec() = default;
  explicit LatticeVec(std::vector<Coord> c) : coords(std::move(c)) {}
  LatticeVec(std::initializer_list<Coord> c) : coords(c) {}

  static LatticeVec zero(int rank) { return LatticeVec(std::vector<Coord>(rank, 0)); }
  static LatticeVec unit(int rank, Node i) {
    auto v = zero(rank);
    v.coords.at(i - 1) = 1;
    return v;
  }

  int size() const { return static_cast<int>(coords.size()); }
  Coord operator[](int idx) const { return coords[idx]; }
  Coord& operator[](int idx) { return coords[idx]; }
  /// Coordinate at a 1-based node label.
  Coord at_node(Node i) const { return coords.at(i - 1); }

  bool is_zero() const {
    for (Coord c : coords)
      if (c != 0) return false;
    return true;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    check_len(o);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    check_len(o);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(Coord s, LatticeVec a) {
    for (Coord& c : a.coords) c *= s;
    return a;
  }
  friend LatticeVec operator-(LatticeVec a) { return Coord{-1} * std::move(a); }

  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;

private:
  void check_len(const LatticeVec& o) const {
    if (o.coords.size() != coords.size()) throw InvalidInput("coordinate vector length mismatch");
  }
};

struct SimpleRootBasis;
struct FundamentalWeightBasis;

/// Coordinates in the simple-root basis.
using RootVec = LatticeVec<SimpleRootBasis>;
/// Coordinates in the fundamental-weight basis (the values mu(h_i)).
using WeightVec = LatticeVec<FundamentalWeightBasis>;

std::string to_string(const std::vector<Coord>& v);
template <class B>
std::string to_string(const LatticeVec<B>& v) { return to_string(v.coords); }

/// A connected simply-laced Dynkin diagram of finite type.
///
/// The E6 preset uses the chain 1-2-3-4-5 with node 6 attached to node 3;
/// this is not the Bourbaki labeling (see e6_to_bourbaki).
class DynkinDiagram {
public:
  using Edge = std::pair<Node, Node>;

  /// Validates the graph: labels in 1..rank, no loops or repeated edges,
  /// connected, positive definite Cartan matrix.
  static DynkinDiagram from_edges(int rank, std::vector<Edge> edges, std::string name = "custom");

  static DynkinDiagram type_A(int n);
  static DynkinDiagram type_D(int n);
  static DynkinDiagram e6();

  /// Accepts "E6", "An", "Dn" (n >= 4) or an edge list such as "1-2,2-3,2-4".
  static DynkinDiagram parse(std::string_view text);

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Node i, Node j) const;
  const std::vector<Node>& neighbors(Node i) const { return neighbors_.at(i - 1); }

  /// c_ij = alpha_j(h_i).
  int cartan(Node i, Node j) const;
  Rational cartan_inverse(Node i, Node j) const { return inverse_[i - 1][j - 1]; }
  /// det(C) * C^{-1}, an integer matrix; scaled_inverse(i,j) / det() = (omega_i, omega_j).
  Coord scaled_inverse(Node i, Node j) const { return scaled_inverse_[i - 1][j - 1]; }
  Coord det() const { return det_; }

  /// Nodes of degree three (at most one for finite simply-laced types).
  std::optional<Node> trivalent_node() const;
  /// True when the diagram is a path (type A).
  bool is_path() const;
  /// True for the built-in E6 preset labeling.
  bool is_builtin_e6() const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.rank_ == b.rank_ && a.edges_ == b.edges_;
  }

private:
  DynkinDiagram() = default;

  int rank_ = 0;
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> neighbors_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<Coord>> scaled_inverse_;
  Coord det_ = 1;
};

/// All positive roots, generated as the reflection closure of the simple
/// roots. Sorted by (height, lexicographic coordinates).
std::vector<RootVec> positive_roots(const DynkinDiagram& d);

Coord height(const RootVec& alpha);

/// alpha_j = sum_i c_ij omega_i.
WeightVec root_to_weight(const DynkinDiagram& d, const RootVec& alpha);
/// Inverse of root_to_weight; empty when the weight is not in the root lattice.
std::optional<RootVec> weight_to_root(const DynkinDiagram& d, const WeightVec& mu);
std::vector<Rational> weight_to_root_rational(const DynkinDiagram& d, const WeightVec& mu);

/// W-invariant form with (alpha_i, alpha_i) = 2.
Rational inner_product(const DynkinDiagram& d, const WeightVec& x, const WeightVec& y);
/// det(C) * (x, y); exact integer.
Coord scaled_inner_product(const DynkinDiagram& d, const WeightVec& x, const WeightVec& y);

WeightVec rho(const DynkinDiagram& d);
bool is_dominant(const WeightVec& mu);

/// s_i(mu) = mu - mu(h_i) alpha_i.
WeightVec reflect(const DynkinDiagram& d, Node i, const WeightVec& mu);

std::set<WeightVec> weyl_orbit(const DynkinDiagram& d, const WeightVec& mu);

/// Order of the parabolic subgroup generated by the reflections of the
/// given nodes, from the type of each connected component.
BigInt weyl_group_order(const DynkinDiagram& d, const std::set<Node>& nodes);
inline BigInt weyl_group_order(const DynkinDiagram& d) {
  std::set<Node> all;
  for (Node i = 1; i <= d.rank(); ++i) all.insert(i);
  return weyl_group_order(d, all);
}
/// |W mu| = |W| / |W_J| with J the zero coordinates of the dominant representative.
BigInt orbit_size(const DynkinDiagram& d, const WeightVec& mu);

struct DominantReflection {
  WeightVec weight;
  int reflections = 0;  ///< number of simple reflections applied
  bool on_wall = false; ///< some coordinate of the result is zero
};
/// Reflects mu into the dominant chamber by repeatedly applying s_i with
/// mu(h_i) < 0. The reflection count has the parity of the Weyl element used.
DominantReflection dominant_reflection(const DynkinDiagram& d, WeightVec mu);
WeightVec dominant_representative(const DynkinDiagram& d, const WeightVec& mu);

/// mu <= lambda in the dominance order, i.e. lambda - mu in Q^+.
bool dominance_leq(const DynkinDiagram& d, const WeightVec& mu, const WeightVec& lambda);

/// A set of nodes. Classification flags are always recomputed from the diagram.
class Subdiagram {
public:
  Subdiagram() = default;
  explicit Subdiagram(std::set<Node> nodes) : nodes_(std::move(nodes)) {}

  const std::set<Node>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  bool contains(Node i) const { return nodes_.count(i) != 0; }
  std::size_t size() const { return nodes_.size(); }

  /// The empty subdiagram counts as connected.
  bool connected(const DynkinDiagram& d) const;
  /// Connected and a path.
  bool type_A(const DynkinDiagram& d) const;
  /// In a path diagram: connected. Otherwise: type A and still connected
  /// after removing the trivalent node.
  bool admissible(const DynkinDiagram& d) const;

  /// Nodes of a type A subdiagram in path order, starting at the endpoint
  /// with the smaller label.
  std::vector<Node> path_order(const DynkinDiagram& d) const;

  friend bool operator==(const Subdiagram&, const Subdiagram&) = default;

private:
  std::set<Node> nodes_;
};

std::string to_string(const Subdiagram& s);

/// Minimal connected subdiagram containing the given nodes.
Subdiagram connected_closure(const DynkinDiagram& d, const Subdiagram& s);

struct SupportAnalysis {
  Subdiagram support;
  Subdiagram closure;
  bool closure_is_type_A = false;
  bool admissible = false;
};
SupportAnalysis support_analysis(const DynkinDiagram& d, const WeightVec& mu);

// E6 helpers for the built-in labeling.

/// beta_1..beta_30: the naming of the non-simple positive roots of E6 used
/// in the output tables. Returns 0 for simple roots and non-roots.
int e6_beta_index(const RootVec& alpha);
RootVec e6_beta(int index);

/// Bourbaki label of a node of the built-in E6 diagram.
Node e6_to_bourbaki(Node node);
/// Converts coordinates given in Bourbaki node order into the built-in order.
WeightVec e6_weight_from_bourbaki(const WeightVec& bourbaki);

}  // namespace e6char
