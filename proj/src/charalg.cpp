#include "e6char/charalg.hpp"

#include <algorithm>
#include <deque>

namespace e6char {

namespace {

void require_dominant(const DynkinDiagram& d, const WeightVec& lambda) {
  if (lambda.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
  if (!is_dominant(lambda)) throw InvalidInput("highest weight " + to_string(lambda) + " is not dominant");
}

std::vector<WeightVec> positive_roots_as_weights(const DynkinDiagram& d) {
  std::vector<WeightVec> out;
  for (const auto& a : positive_roots(d)) out.push_back(root_to_weight(d, a));
  return out;
}

}  // namespace

Coord scaled_level(const DynkinDiagram& d, const WeightVec& mu) {
  Coord s = 0;
  for (Node i = 1; i <= d.rank(); ++i)
    for (Node j = 1; j <= d.rank(); ++j) s += d.scaled_inverse(i, j) * mu.at_node(j);
  return s;
}

void sort_dominance_desc(const DynkinDiagram& d, DecompositionList& list) {
  std::sort(list.begin(), list.end(), [&](const Component& a, const Component& b) {
    Coord la = scaled_level(d, a.hw), lb = scaled_level(d, b.hw);
    if (la != lb) return la > lb;
    return a.hw > b.hw;
  });
}

BigInt weyl_dim(const DynkinDiagram& d, const WeightVec& lambda) {
  require_dominant(d, lambda);
  // (lambda+rho, alpha) = sum_i (lambda_i + 1) eps_i(alpha), (rho, alpha) = height.
  BigInt num = 1, den = 1;
  for (const auto& a : positive_roots(d)) {
    Coord p = 0;
    for (Node i = 1; i <= d.rank(); ++i) p += (lambda.at_node(i) + 1) * a.at_node(i);
    num *= p;
    den *= height(a);
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Freudenthal

Character irr_character(const DynkinDiagram& d, const WeightVec& lambda) {
  require_dominant(d, lambda);
  const auto roots = positive_roots_as_weights(d);

  // Dominant weights below lambda; adjacent ones in the dominance order differ
  // by a positive root, so closing under subtraction of positive roots while
  // staying dominant reaches all of them.
  std::set<WeightVec> dominant{lambda};
  std::deque<WeightVec> queue{lambda};
  while (!queue.empty()) {
    WeightVec mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : roots) {
      WeightVec nu = mu - a;
      if (is_dominant(nu) && dominant.insert(nu).second) queue.push_back(std::move(nu));
    }
  }

  std::vector<WeightVec> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const WeightVec& a, const WeightVec& b) {
    Coord la = scaled_level(d, a), lb = scaled_level(d, b);
    if (la != lb) return la > lb;
    return a > b;
  });

  Character ch;
  ch.hw_ = lambda;
  const WeightVec r = rho(d);
  const WeightVec lr = lambda + r;
  const Coord top = scaled_inner_product(d, lr, lr);

  for (const auto& mu : order) {
    if (mu == lambda) {
      ch.mults_[mu] = 1;
      continue;
    }
    BigInt sum = 0;
    for (const auto& a : roots) {
      WeightVec nu = mu + a;
      for (;;) {
        auto it = ch.mults_.find(dominant_representative(d, nu));
        if (it == ch.mults_.end()) break;
        sum += it->second * scaled_inner_product(d, nu, a);
        nu += a;
      }
    }
    const WeightVec mr = mu + r;
    const Coord gap = top - scaled_inner_product(d, mr, mr);
    BigInt m = 2 * sum / gap;
    if (m * gap != 2 * sum) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    if (m != 0) ch.mults_[mu] = m;
  }
  return ch;
}

BigInt Character::mult(const DynkinDiagram& d, const WeightVec& mu) const {
  auto it = mults_.find(dominant_representative(d, mu));
  return it == mults_.end() ? BigInt(0) : it->second;
}

BigInt Character::dim(const DynkinDiagram& d) const {
  BigInt total = 0;
  for (const auto& [mu, m] : mults_) total += m * orbit_size(d, mu);
  return total;
}

WeightMap Character::expand(const DynkinDiagram& d) const {
  WeightMap full;
  for (const auto& [mu, m] : mults_)
    for (const auto& w : weyl_orbit(d, mu)) full[w] = m;
  return full;
}

// ---------------------------------------------------------------------------
// Kostant

namespace {

// Memoized Kostant partition function; one instance per top-level call.
class PartitionCounter {
public:
  explicit PartitionCounter(const DynkinDiagram& d) : roots_(positive_roots(d)) {}

  BigInt operator()(const RootVec& gamma) {
    if (std::any_of(gamma.coords.begin(), gamma.coords.end(), [](Coord c) { return c < 0; })) return 0;
    return count(gamma, 0);
  }

private:
  // Ways to write g using roots_[k..].
  BigInt count(const RootVec& g, std::size_t k) {
    if (g.is_zero()) return 1;
    if (k == roots_.size()) return 0;
    auto key = std::make_pair(g, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    RootVec rest = g;
    for (;;) {
      total += count(rest, k + 1);
      rest -= roots_[k];
      if (std::any_of(rest.coords.begin(), rest.coords.end(), [](Coord c) { return c < 0; })) break;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<RootVec> roots_;
  std::map<std::pair<RootVec, std::size_t>, BigInt> memo_;
};

}  // namespace

BigInt kostant_partition(const DynkinDiagram& d, const RootVec& gamma) {
  if (gamma.size() != d.rank()) throw InvalidInput("root length does not match diagram rank");
  return PartitionCounter(d)(gamma);
}

BigInt kostant_mult(const DynkinDiagram& d, const WeightVec& lambda, const WeightVec& mu) {
  if (d.rank() > 4) throw OracleOutOfRange("oracle out of range: Kostant multiplicity is limited to rank <= 4");
  require_dominant(d, lambda);
  if (mu.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");

  // lambda+rho is regular, so its orbit is in bijection with W and the parity
  // of any reflection path to an orbit point is the parity of l(w).
  const WeightVec r = rho(d);
  const WeightVec start = lambda + r;
  std::map<WeightVec, int> sign{{start, 1}};
  std::deque<WeightVec> queue{start};
  while (!queue.empty()) {
    WeightVec cur = std::move(queue.front());
    queue.pop_front();
    for (Node i = 1; i <= d.rank(); ++i) {
      WeightVec next = reflect(d, i, cur);
      if (sign.emplace(next, -sign[cur]).second) queue.push_back(std::move(next));
    }
  }

  const WeightVec target = mu + r;
  PartitionCounter partitions(d);
  BigInt total = 0;
  for (const auto& [w, s] : sign) {
    auto gamma = weight_to_root(d, w - target);
    if (!gamma) continue;
    BigInt p = partitions(*gamma);
    total += s > 0 ? p : BigInt(-p);
  }
  return total;
}

long long sl3_mult_closed(long long m1, long long m2, long long k1, long long k2) {
  if (m1 < 0 || m2 < 0 || k1 < 0 || k2 < 0 || k1 > m1 || k2 > m2)
    throw InvalidInput("sl3 closed form requires 0 <= k1 <= m1 and 0 <= k2 <= m2");
  return std::min(k1, k2) + 1;
}

// ---------------------------------------------------------------------------
// Decompositions

DecompositionList decompose(const DynkinDiagram& d, const WeightMap& full) {
  WeightMap rest;
  for (const auto& [w, m] : full) {
    if (w.size() != d.rank()) throw InvalidInput("weight length does not match diagram rank");
    if (m < 0) throw NotACharacter("negative multiplicity at " + to_string(w));
    if (m != 0) rest.emplace(w, m);
  }
  DecompositionList out;
  while (!rest.empty()) {
    auto top = std::max_element(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
      Coord la = scaled_level(d, a.first), lb = scaled_level(d, b.first);
      if (la != lb) return la < lb;
      return a.first < b.first;
    });
    const WeightVec hw = top->first;
    const BigInt m = top->second;
    if (m < 0) throw NotACharacter("stripping left a negative multiplicity at " + to_string(hw));
    if (!is_dominant(hw)) throw NotACharacter("highest remaining weight " + to_string(hw) + " is not dominant");
    for (const auto& [w, k] : irr_character(d, hw).expand(d)) {
      BigInt& slot = rest[w];
      slot -= m * k;
      if (slot == 0) rest.erase(w);
    }
    out.push_back({hw, m});
  }
  sort_dominance_desc(d, out);
  return out;
}

DecompositionList tensor_decompose(const DynkinDiagram& d, const WeightVec& lambda1, const WeightVec& lambda2) {
  require_dominant(d, lambda1);
  require_dominant(d, lambda2);
  // Expand the smaller factor.
  const bool swap = weyl_dim(d, lambda1) > weyl_dim(d, lambda2);
  const WeightVec& small = swap ? lambda2 : lambda1;
  const WeightVec& big = swap ? lambda1 : lambda2;

  const WeightVec r = rho(d);
  WeightMap acc;
  for (const auto& [mu, m] : irr_character(d, small).expand(d)) {
    auto refl = dominant_reflection(d, big + mu + r);
    if (refl.on_wall) continue;
    BigInt& slot = acc[refl.weight - r];
    if (refl.reflections % 2 == 0)
      slot += m;
    else
      slot -= m;
  }
  DecompositionList out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("Brauer-Klimyk produced a negative multiplicity");
    if (m != 0) out.push_back({w, m});
  }
  sort_dominance_desc(d, out);
  return out;
}

BigInt total_dim(const DynkinDiagram& d, const DecompositionList& list) {
  BigInt total = 0;
  for (const auto& c : list) total += c.mult * weyl_dim(d, c.hw);
  return total;
}

}  // namespace e6char
