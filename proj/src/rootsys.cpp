#include "e6char/rootsys.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace e6char {

std::string to_string(const std::vector<Coord>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// DynkinDiagram

DynkinDiagram DynkinDiagram::from_edges(int rank, std::vector<Edge> edges, std::string name) {
  if (rank < 1) throw InvalidInput("Dynkin diagram needs at least one node");
  DynkinDiagram d;
  d.rank_ = rank;
  d.name_ = std::move(name);
  d.neighbors_.assign(rank, {});

  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || a > rank || b < 1 || b > rank)
      throw InvalidInput("edge " + std::to_string(a) + "-" + std::to_string(b) + " has a node outside 1.." +
                         std::to_string(rank));
    if (a == b) throw InvalidInput("self-loop at node " + std::to_string(a));
    Edge e = std::minmax(a, b);
    if (!seen.insert(e).second)
      throw InvalidInput("repeated edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                         " (diagram must be simply laced)");
    d.neighbors_[a - 1].push_back(b);
    d.neighbors_[b - 1].push_back(a);
  }
  d.edges_.assign(seen.begin(), seen.end());
  for (auto& nb : d.neighbors_) std::sort(nb.begin(), nb.end());

  std::set<Node> all;
  for (Node i = 1; i <= rank; ++i) all.insert(i);
  if (!Subdiagram(all).connected(d)) throw InvalidInput("Dynkin diagram is not connected");

  // Gauss-Jordan on [C | I] without pivoting: all pivots positive iff C is
  // positive definite (leading principal minors), i.e. finite type.
  const int n = rank;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = d.cartan(i + 1, j + 1);
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    Rational piv = a[col][col];
    if (piv <= 0) throw InvalidInput("Cartan matrix is not positive definite (diagram not of finite type)");
    det *= piv;
    for (auto& x : a[col]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  if (boost::multiprecision::denominator(det) != 1) throw InvalidInput("non-integral Cartan determinant");
  d.det_ = static_cast<Coord>(boost::multiprecision::numerator(det));
  d.inverse_.assign(n, std::vector<Rational>(n));
  d.scaled_inverse_.assign(n, std::vector<Coord>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.inverse_[i][j] = a[i][n + j];
      Rational s = a[i][n + j] * d.det_;
      d.scaled_inverse_[i][j] = static_cast<Coord>(boost::multiprecision::numerator(s));
    }
  return d;
}

DynkinDiagram DynkinDiagram::type_A(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, std::move(e), "A" + std::to_string(n));
}

DynkinDiagram DynkinDiagram::type_D(int n) {
  if (n < 4) throw InvalidInput("type D needs rank >= 4");
  std::vector<Edge> e;
  for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 2, n);
  return from_edges(n, std::move(e), "D" + std::to_string(n));
}

DynkinDiagram DynkinDiagram::e6() {
  return from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, "E6");
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidInput("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty type text");
  if (text == "E6" || text == "e6") return e6();
  if (text.find('-') == std::string_view::npos) {
    char family = text.front();
    int n = parse_int(text.substr(1), "type rank");
    if (family == 'A' || family == 'a') {
      if (n < 1) throw InvalidInput("type A needs rank >= 1");
      return type_A(n);
    }
    if (family == 'D' || family == 'd') return type_D(n);
    throw InvalidInput("unknown type text '" + std::string(text) + "'");
  }
  std::vector<Edge> edges;
  int rank = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) throw InvalidInput("bad edge '" + std::string(item) + "'");
    int a = parse_int(item.substr(0, dash), "node");
    int b = parse_int(item.substr(dash + 1), "node");
    rank = std::max({rank, a, b});
    edges.emplace_back(a, b);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_edges(rank, std::move(edges));
}

bool DynkinDiagram::adjacent(Node i, Node j) const {
  const auto& nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

int DynkinDiagram::cartan(Node i, Node j) const {
  if (i == j) return 2;
  return adjacent(i, j) ? -1 : 0;
}

std::optional<Node> DynkinDiagram::trivalent_node() const {
  for (Node i = 1; i <= rank_; ++i)
    if (neighbors(i).size() >= 3) return i;
  return std::nullopt;
}

bool DynkinDiagram::is_path() const { return !trivalent_node().has_value(); }

bool DynkinDiagram::is_builtin_e6() const { return *this == e6(); }

// ---------------------------------------------------------------------------
// Roots and weights

Coord height(const RootVec& alpha) {
  Coord h = 0;
  for (Coord c : alpha.coords) h += c;
  return h;
}

std::vector<RootVec> positive_roots(const DynkinDiagram& d) {
  const int n = d.rank();
  std::set<RootVec> roots;
  std::deque<RootVec> queue;
  for (Node i = 1; i <= n; ++i) {
    auto a = RootVec::unit(n, i);
    roots.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    for (Node i = 1; i <= n; ++i) {
      Coord pairing = 0;
      for (Node j = 1; j <= n; ++j) pairing += d.cartan(i, j) * beta.at_node(j);
      if (pairing == 0) continue;
      RootVec image = beta;
      image[i - 1] -= pairing;
      if (roots.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<RootVec> pos;
  for (const auto& r : roots) {
    bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](Coord c) { return c >= 0; });
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    Coord ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  return pos;
}

WeightVec root_to_weight(const DynkinDiagram& d, const RootVec& alpha) {
  if (alpha.size() != d.rank()) throw InvalidInput("root length does not match diagram rank");
  WeightVec w = WeightVec::zero(d.rank());
  for (Node i = 1; i <= d.rank(); ++i)
    for (Node j = 1; j <= d.rank(); ++j) w[i - 1] += d.cartan(i, j) * alpha.at_node(j);
  return w;
}

std::vector<Rational> weight_to_root_rational(const DynkinDiagram& d, const WeightVec& mu) {
  if (mu.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  std::vector<Rational> out(d.rank());
  for (Node i = 1; i <= d.rank(); ++i)
    for (Node j = 1; j <= d.rank(); ++j) out[i - 1] += d.cartan_inverse(i, j) * mu.at_node(j);
  return out;
}

std::optional<RootVec> weight_to_root(const DynkinDiagram& d, const WeightVec& mu) {
  if (mu.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  RootVec r = RootVec::zero(d.rank());
  for (Node i = 1; i <= d.rank(); ++i) {
    Coord s = 0;
    for (Node j = 1; j <= d.rank(); ++j) s += d.scaled_inverse(i, j) * mu.at_node(j);
    if (s % d.det() != 0) return std::nullopt;
    r[i - 1] = s / d.det();
  }
  return r;
}

Coord scaled_inner_product(const DynkinDiagram& d, const WeightVec& x, const WeightVec& y) {
  if (x.size() != d.rank() || y.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  Coord s = 0;
  for (Node i = 1; i <= d.rank(); ++i)
    for (Node j = 1; j <= d.rank(); ++j) s += x.at_node(i) * d.scaled_inverse(i, j) * y.at_node(j);
  return s;
}

Rational inner_product(const DynkinDiagram& d, const WeightVec& x, const WeightVec& y) {
  return Rational(scaled_inner_product(d, x, y)) / d.det();
}

WeightVec rho(const DynkinDiagram& d) { return WeightVec(std::vector<Coord>(d.rank(), 1)); }

bool is_dominant(const WeightVec& mu) {
  return std::all_of(mu.coords.begin(), mu.coords.end(), [](Coord c) { return c >= 0; });
}

WeightVec reflect(const DynkinDiagram& d, Node i, const WeightVec& mu) {
  WeightVec out = mu;
  const Coord p = mu.at_node(i);
  if (p == 0) return out;
  out[i - 1] -= 2 * p;
  for (Node j : d.neighbors(i)) out[j - 1] += p;
  return out;
}

std::set<WeightVec> weyl_orbit(const DynkinDiagram& d, const WeightVec& mu) {
  std::set<WeightVec> orbit{mu};
  std::vector<WeightVec> stack{mu};
  while (!stack.empty()) {
    WeightVec cur = std::move(stack.back());
    stack.pop_back();
    for (Node i = 1; i <= d.rank(); ++i) {
      if (cur.at_node(i) == 0) continue;
      WeightVec next = reflect(d, i, cur);
      if (orbit.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return orbit;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Order of the Weyl group of a connected simply-laced diagram on `nodes`.
BigInt component_order(const DynkinDiagram& d, const std::set<Node>& nodes) {
  const int n = static_cast<int>(nodes.size());
  auto deg = [&](Node i) {
    int k = 0;
    for (Node j : d.neighbors(i))
      if (nodes.count(j)) ++k;
    return k;
  };
  Node branch = 0;
  for (Node i : nodes)
    if (deg(i) >= 3) branch = i;
  if (branch == 0) return factorial(n + 1);
  // Arm lengths from the branch node: (1,1,k) is D, (1,2,2|3|4) is E6/E7/E8.
  std::vector<int> arms;
  for (Node start : d.neighbors(branch)) {
    if (!nodes.count(start)) continue;
    int len = 0;
    Node prev = branch, cur = start;
    for (;;) {
      ++len;
      Node next = 0;
      for (Node j : d.neighbors(cur))
        if (j != prev && nodes.count(j)) next = j;
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return (BigInt(1) << (n - 1)) * factorial(n);
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return 51840;
    if (arms[2] == 3) return 2903040;
    if (arms[2] == 4) return BigInt(696729600);
  }
  throw InvalidInput("unsupported diagram component");
}

}  // namespace

BigInt weyl_group_order(const DynkinDiagram& d, const std::set<Node>& nodes) {
  BigInt order = 1;
  std::set<Node> left = nodes;
  while (!left.empty()) {
    std::set<Node> comp{*left.begin()};
    std::vector<Node> stack{*left.begin()};
    while (!stack.empty()) {
      Node i = stack.back();
      stack.pop_back();
      for (Node j : d.neighbors(i))
        if (left.count(j) && comp.insert(j).second) stack.push_back(j);
    }
    for (Node i : comp) left.erase(i);
    order *= component_order(d, comp);
  }
  return order;
}

BigInt orbit_size(const DynkinDiagram& d, const WeightVec& mu) {
  WeightVec dom = dominant_representative(d, mu);
  std::set<Node> stab;
  for (Node i = 1; i <= d.rank(); ++i)
    if (dom.at_node(i) == 0) stab.insert(i);
  return weyl_group_order(d) / weyl_group_order(d, stab);
}

DominantReflection dominant_reflection(const DynkinDiagram& d, WeightVec mu) {
  if (mu.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  DominantReflection res;
  for (;;) {
    Node neg = 0;
    for (Node i = 1; i <= d.rank(); ++i)
      if (mu.at_node(i) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) break;
    mu = reflect(d, neg, mu);
    ++res.reflections;
  }
  res.on_wall = std::any_of(mu.coords.begin(), mu.coords.end(), [](Coord c) { return c == 0; });
  res.weight = std::move(mu);
  return res;
}

WeightVec dominant_representative(const DynkinDiagram& d, const WeightVec& mu) {
  return dominant_reflection(d, mu).weight;
}

bool dominance_leq(const DynkinDiagram& d, const WeightVec& mu, const WeightVec& lambda) {
  auto diff = weight_to_root(d, lambda - mu);
  if (!diff) return false;
  return std::all_of(diff->coords.begin(), diff->coords.end(), [](Coord c) { return c >= 0; });
}

// ---------------------------------------------------------------------------
// Subdiagrams

namespace {

int induced_degree(const DynkinDiagram& d, const std::set<Node>& nodes, Node i) {
  int deg = 0;
  for (Node j : d.neighbors(i))
    if (nodes.count(j)) ++deg;
  return deg;
}

bool induced_connected(const DynkinDiagram& d, const std::set<Node>& nodes) {
  if (nodes.empty()) return true;
  std::set<Node> seen{*nodes.begin()};
  std::vector<Node> stack{*nodes.begin()};
  while (!stack.empty()) {
    Node i = stack.back();
    stack.pop_back();
    for (Node j : d.neighbors(i))
      if (nodes.count(j) && seen.insert(j).second) stack.push_back(j);
  }
  return seen.size() == nodes.size();
}

}  // namespace

bool Subdiagram::connected(const DynkinDiagram& d) const { return induced_connected(d, nodes_); }

bool Subdiagram::type_A(const DynkinDiagram& d) const {
  if (!connected(d)) return false;
  // Finite-type diagrams are trees, so a connected subgraph of maximal
  // degree two is a path.
  for (Node i : nodes_)
    if (induced_degree(d, nodes_, i) > 2) return false;
  return true;
}

bool Subdiagram::admissible(const DynkinDiagram& d) const {
  if (d.is_path()) return connected(d);
  if (!type_A(d)) return false;
  std::set<Node> rest = nodes_;
  rest.erase(*d.trivalent_node());
  return induced_connected(d, rest);
}

std::vector<Node> Subdiagram::path_order(const DynkinDiagram& d) const {
  if (!type_A(d)) throw InvalidInput("subdiagram " + to_string(*this) + " is not of type A");
  if (nodes_.empty()) return {};
  Node start = 0;
  for (Node i : nodes_)
    if (induced_degree(d, nodes_, i) <= 1) {
      start = i;
      break;
    }
  std::vector<Node> order{start};
  Node prev = 0, cur = start;
  while (order.size() < nodes_.size()) {
    for (Node j : d.neighbors(cur))
      if (j != prev && nodes_.count(j)) {
        prev = cur;
        cur = j;
        break;
      }
    order.push_back(cur);
  }
  return order;
}

std::string to_string(const Subdiagram& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Node i : s.nodes()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

Subdiagram connected_closure(const DynkinDiagram& d, const Subdiagram& s) {
  if (s.empty()) return s;
  std::set<Node> nodes;
  for (Node i = 1; i <= d.rank(); ++i) nodes.insert(i);
  // Prune leaves outside s until none remain; in a tree what is left is the
  // union of the paths joining the nodes of s.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = nodes.begin(); it != nodes.end();) {
      if (!s.contains(*it) && induced_degree(d, nodes, *it) <= 1) {
        it = nodes.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return Subdiagram(std::move(nodes));
}

SupportAnalysis support_analysis(const DynkinDiagram& d, const WeightVec& mu) {
  if (mu.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  SupportAnalysis out;
  std::set<Node> supp;
  for (Node i = 1; i <= d.rank(); ++i)
    if (mu.at_node(i) != 0) supp.insert(i);
  out.support = Subdiagram(std::move(supp));
  out.closure = connected_closure(d, out.support);
  out.closure_is_type_A = out.closure.type_A(d);
  out.admissible = out.closure.admissible(d);
  return out;
}

// ---------------------------------------------------------------------------
// E6 naming

namespace {

// beta_1 .. beta_30 in simple-root coordinates (labeling 1-2-3-4-5, 6 on 3).
constexpr std::array<std::array<int, 6>, 30> kE6Beta = {{
    {1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 1},
    {1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 1, 0, 0, 1}, {0, 0, 1, 1, 0, 1}, {0, 1, 1, 1, 0, 0},
    {1, 1, 1, 0, 0, 1}, {0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {0, 1, 2, 1, 0, 1},
    {1, 1, 2, 1, 0, 1}, {0, 1, 2, 1, 1, 1}, {1, 1, 2, 1, 1, 1}, {1, 2, 2, 1, 0, 1}, {0, 1, 2, 2, 1, 1},
    {1, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 1, 1}, {1, 2, 2, 2, 1, 1}, {1, 2, 3, 2, 1, 1}, {1, 2, 3, 2, 1, 2},
}};

}  // namespace

RootVec e6_beta(int index) {
  if (index < 1 || index > 30) throw InvalidInput("beta index must lie in 1..30");
  const auto& row = kE6Beta[index - 1];
  return RootVec(std::vector<Coord>(row.begin(), row.end()));
}

int e6_beta_index(const RootVec& alpha) {
  if (alpha.size() != 6) return 0;
  for (int k = 0; k < 30; ++k) {
    bool eq = true;
    for (int i = 0; i < 6; ++i)
      if (kE6Beta[k][i] != alpha[i]) eq = false;
    if (eq) return k + 1;
  }
  return 0;
}

Node e6_to_bourbaki(Node node) {
  static constexpr std::array<Node, 6> map = {1, 3, 4, 5, 6, 2};
  if (node < 1 || node > 6) throw InvalidInput("E6 node label must lie in 1..6");
  return map[node - 1];
}

WeightVec e6_weight_from_bourbaki(const WeightVec& bourbaki) {
  if (bourbaki.size() != 6) throw InvalidInput("E6 weights have six coordinates");
  WeightVec out = WeightVec::zero(6);
  for (Node p = 1; p <= 6; ++p) out[p - 1] = bourbaki.at_node(e6_to_bourbaki(p));
  return out;
}

}  // namespace e6char
