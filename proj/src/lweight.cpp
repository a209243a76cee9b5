#include "e6char/lweight.hpp"

#include <sstream>

namespace e6char {

void LWeight::add(const Key& k, Coord n) {
  if (n == 0) return;
  auto [it, fresh] = exps_.emplace(k, n);
  if (!fresh) {
    it->second += n;
    if (it->second == 0) exps_.erase(it);
  }
}

LWeight LWeight::fundamental(Node i, Coord s, Coord power) {
  LWeight w;
  w.add({i, s}, power);
  return w;
}

Coord LWeight::exponent(Node i, Coord s) const {
  auto it = exps_.find({i, s});
  return it == exps_.end() ? 0 : it->second;
}

bool LWeight::is_dominant() const {
  for (const auto& [k, n] : exps_)
    if (n < 0) return false;
  return true;
}

Coord LWeight::factor_count(Node i) const {
  Coord total = 0;
  for (const auto& [k, n] : exps_)
    if (k.first == i) total += n;
  return total;
}

std::optional<std::pair<Coord, Coord>> LWeight::exponent_range() const {
  if (exps_.empty()) return std::nullopt;
  Coord lo = exps_.begin()->first.second, hi = lo;
  for (const auto& [k, n] : exps_) {
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  return std::make_pair(lo, hi);
}

LWeight& LWeight::operator*=(const LWeight& o) {
  for (const auto& [k, n] : o.exps_) add(k, n);
  return *this;
}

LWeight LWeight::inverse() const { return pow(-1); }

LWeight LWeight::pow(Coord n) const {
  LWeight out;
  for (const auto& [k, e] : exps_) out.add(k, e * n);
  return out;
}

std::string to_string(const LWeight& lw) {
  if (lw.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : lw.exponents()) {
    if (!first) os << ' ';
    first = false;
    os << "w[" << k.first << ",q^" << k.second << ']';
    if (n != 1) os << '^' << n;
  }
  return os.str();
}

LWeight kr_lweight(Node i, Coord s0, Coord m) {
  if (m < 0) throw InvalidInput("KR string length must be nonnegative");
  LWeight out;
  for (Coord j = 0; j < m; ++j) out *= LWeight::fundamental(i, s0 + m - 1 - 2 * j);
  return out;
}

LWeight simple_lroot(const DynkinDiagram& d, Node i, Coord s) {
  if (i < 1 || i > d.rank()) throw InvalidInput("node label out of range");
  // omega_{i, aq, 2} times omega_{j, aq, 1}^{-1} for each neighbour j.
  LWeight out = kr_lweight(i, s + 1, 2);
  for (Node j : d.neighbors(i)) out *= kr_lweight(j, s + 1, 1).inverse();
  return out;
}

WeightVec wt_of_lweight(const DynkinDiagram& d, const LWeight& lw) {
  WeightVec w = WeightVec::zero(d.rank());
  for (const auto& [k, n] : lw.exponents()) {
    if (k.first < 1 || k.first > d.rank()) throw InvalidInput("l-weight uses a node outside the diagram");
    w[k.first - 1] += n;
  }
  return w;
}

MinAffinization min_aff_lweight(const DynkinDiagram& d, const WeightVec& lambda, int epsilon, Coord base) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be +1 or -1");
  if (lambda.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  if (!is_dominant(lambda)) throw InvalidInput("highest weight " + to_string(lambda) + " is not dominant");
  const auto supp = support_analysis(d, lambda);
  if (!supp.closure_is_type_A)
    throw InvalidInput("connected closure " + to_string(supp.closure) +
                       " of the support is not of type A; there is no unique minimal affinization class");

  MinAffinization out;
  out.path = supp.closure.path_order(d);
  Coord center = base;
  for (std::size_t t = 0; t < out.path.size(); ++t) {
    const Node i = out.path[t];
    if (t > 0) {
      const Node prev = out.path[t - 1];
      center += epsilon * (lambda.at_node(prev) + lambda.at_node(i) - 1);
    }
    out.centers[i] = center;
    out.lweight *= kr_lweight(i, center, lambda.at_node(i));
  }
  return out;
}

std::optional<LRootMultiset> l_factorize(const DynkinDiagram& d, const LWeight& diff, Window window) {
  if (window.lo > window.hi) throw InvalidInput("empty window");
  if (auto range = diff.exponent_range(); range && (range->first < window.lo || range->second > window.hi))
    throw InvalidInput("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                       "] does not contain the q-exponent support of the l-weight");
  if (!dominance_leq(d, WeightVec::zero(d.rank()), wt_of_lweight(d, diff))) return std::nullopt;

  // The highest q-exponent T of a product of simple l-roots comes only from
  // the +1 entries (i, s+2) of the roots with s = T - 2, so the exponents at
  // level T are exactly their multiplicities. Peel level by level.
  LRootMultiset roots;
  LWeight rest = diff;
  while (!rest.is_identity()) {
    const Coord top = rest.exponent_range()->second;
    const Coord s = top - 2;
    std::vector<std::pair<Node, Coord>> level;
    for (const auto& [k, n] : rest.exponents())
      if (k.second == top) level.emplace_back(k.first, n);
    for (auto [i, n] : level) {
      if (n < 0 || s < window.lo) return std::nullopt;
      roots[{i, s}] += n;
      rest *= simple_lroot(d, i, s).pow(-n);
    }
  }
  return roots;
}

bool l_dominance_leq(const DynkinDiagram& d, const LWeight& mu, const LWeight& lambda, Window window) {
  return l_factorize(d, lambda * mu.inverse(), window).has_value();
}

}  // namespace e6char
