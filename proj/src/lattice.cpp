#include "sublat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat {

std::string ClassifyResult::tag_name() const {
  switch (tag) {
    case Tag::chain:
      return "chain";
    case Tag::multi_chain: {
      std::ostringstream os;
      os << "multi_chain(";
      for (std::size_t i = 0; i < chain_lengths.size(); ++i)
        os << (i ? "," : "") << chain_lengths[i];
      os << ")";
      return os.str();
    }
    case Tag::medial: {
      std::ostringstream os;
      os << "medial(" << medial_n << ")";
      return os.str();
    }
    case Tag::diamond:
      return "diamond";
    case Tag::double_triangle:
      return "double_triangle";
    case Tag::other:
      return "other";
  }
  return "other";
}

OrderRelation::OrderRelation(std::size_t n, std::vector<bool> relation)
    : n_(n), leq_(std::move(relation)) {
  if (leq_.size() != n_ * n_)
    throw precondition_error("order matrix size mismatch");
  for (std::size_t i = 0; i < n_; ++i)
    if (!leq(i, i)) throw precondition_error("order not reflexive");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        throw precondition_error("order not antisymmetric");
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (leq(j, k) && !leq(i, k))
          throw precondition_error("order not transitive");
    }
}

OrderRelation OrderRelation::chain(std::size_t nontrivial) {
  std::size_t n = nontrivial + 2;
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = true;
  return OrderRelation(n, std::move(leq));
}

OrderRelation OrderRelation::multi_chain(
    const std::vector<std::size_t>& lengths) {
  std::size_t total = 0;
  for (std::size_t q : lengths) {
    if (q == 0) throw precondition_error("multi_chain with an empty chain");
    total += q;
  }
  std::size_t n = total + 2;
  // node 0 = bottom, then the chains in order, node n-1 = top
  std::vector<bool> leq(n * n, false);
  auto set = [&](std::size_t i, std::size_t j) { leq[i * n + j] = true; };
  for (std::size_t i = 0; i < n; ++i) set(i, i);
  for (std::size_t i = 0; i < n; ++i) {
    set(0, i);
    set(i, n - 1);
  }
  std::size_t base = 1;
  for (std::size_t q : lengths) {
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = a; b < q; ++b) set(base + a, base + b);
    base += q;
  }
  return OrderRelation(n, std::move(leq));
}

std::size_t OrderRelation::bottom() const {
  for (std::size_t i = 0; i < n_; ++i) {
    bool min = true;
    for (std::size_t j = 0; j < n_ && min; ++j) min = leq(i, j);
    if (min) return i;
  }
  throw precondition_error("order has no bottom element");
}

std::size_t OrderRelation::top() const {
  for (std::size_t i = 0; i < n_; ++i) {
    bool max = true;
    for (std::size_t j = 0; j < n_ && max; ++j) max = leq(j, i);
    if (max) return i;
  }
  throw precondition_error("order has no top element");
}

std::vector<std::pair<std::size_t, std::size_t>> OrderRelation::hasse_edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!lt(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n_ && covering; ++k)
        if (lt(i, k) && lt(k, j)) covering = false;
      if (covering) edges.emplace_back(i, j);
    }
  return edges;
}

std::vector<std::vector<std::size_t>> OrderRelation::automorphisms() const {
  // Profile (below-count, above-count) prunes before the DFS; images are
  // tried in increasing order so the output ordering is deterministic.
  std::vector<std::pair<std::size_t, std::size_t>> profile(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t below = 0, above = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (leq(j, i)) ++below;
      if (leq(i, j)) ++above;
    }
    profile[i] = {below, above};
  }
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> image(n_, n_);
  std::vector<bool> used(n_, false);
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n_) {
      result.push_back(image);
      return;
    }
    for (std::size_t cand = 0; cand < n_; ++cand) {
      if (used[cand] || profile[cand] != profile[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (leq(i, j) == leq(cand, image[j])) &&
             (leq(j, i) == leq(image[j], cand));
      if (!ok) continue;
      used[cand] = true;
      image[i] = cand;
      self(self, i + 1);
      used[cand] = false;
    }
  };
  dfs(dfs, 0);
  // the identity image vector is lexicographically least, so sorting
  // already places it first
  std::sort(result.begin(), result.end());
  return result;
}

ClassifyResult OrderRelation::classify() const {
  ClassifyResult res;
  std::size_t bot = bottom(), topn = top();
  std::vector<std::size_t> mid;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != bot && i != topn) mid.push_back(i);

  auto comparable = [&](std::size_t a, std::size_t b) {
    return leq(a, b) || leq(b, a);
  };

  bool total = true;
  for (std::size_t a = 0; a < mid.size() && total; ++a)
    for (std::size_t b = a + 1; b < mid.size() && total; ++b)
      total = comparable(mid[a], mid[b]);
  if (total) {
    res.tag = ClassifyResult::Tag::chain;
    res.is_chain = true;
    if (!mid.empty()) res.chain_lengths = {mid.size()};
    return res;
  }

  // comparability components of the non-trivial elements
  std::vector<std::size_t> comp(mid.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto root = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t a = 0; a < mid.size(); ++a)
    for (std::size_t b = a + 1; b < mid.size(); ++b)
      if (comparable(mid[a], mid[b])) comp[root(a)] = root(b);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < mid.size(); ++a)
    groups[root(a)].push_back(mid[a]);

  for (const auto& [_, members] : groups)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!comparable(members[a], members[b])) {
          res.tag = ClassifyResult::Tag::other;
          return res;  // a component that is not itself a chain
        }

  for (const auto& [_, members] : groups)
    res.chain_lengths.push_back(members.size());
  std::sort(res.chain_lengths.rbegin(), res.chain_lengths.rend());

  bool medial = std::all_of(res.chain_lengths.begin(), res.chain_lengths.end(),
                            [](std::size_t q) { return q == 1; });
  if (!medial) {
    res.tag = ClassifyResult::Tag::multi_chain;
    return res;
  }
  res.medial_n = res.chain_lengths.size();
  res.tag = res.medial_n == 2   ? ClassifyResult::Tag::diamond
            : res.medial_n == 3 ? ClassifyResult::Tag::double_triangle
                                : ClassifyResult::Tag::medial;
  return res;
}

namespace {

std::vector<Subspace> canonical_sorted(std::size_t ambient,
                                       std::vector<Subspace> nodes) {
  nodes.push_back(Subspace::zero(ambient));
  nodes.push_back(Subspace::full(ambient));
  std::sort(nodes.begin(), nodes.end(), [](const Subspace& a, const Subspace& b) {
    return Subspace::order_cmp(a, b) < 0;
  });
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

OrderRelation containment_order(const std::vector<Subspace>& nodes) {
  std::size_t n = nodes.size();
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i * n + j] = nodes[j].contains(nodes[i]);
  return OrderRelation(n, std::move(leq));
}

}  // namespace

SubspaceLattice::SubspaceLattice(std::size_t ambient,
                                 std::vector<Subspace> nodes)
    : ambient_(ambient),
      nodes_(std::move(nodes)),
      order_(containment_order(nodes_)) {}

SubspaceLattice SubspaceLattice::from_nodes(std::size_t ambient,
                                            std::vector<Subspace> nodes) {
  for (const auto& s : nodes)
    if (s.ambient() != ambient)
      throw precondition_error("node ambient mismatch");
  SubspaceLattice l(ambient, canonical_sorted(ambient, std::move(nodes)));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (!l.find(l.node(i).meet(l.node(j))))
        throw precondition_error("family is not meet closed");
      if (!l.find(l.node(i).join(l.node(j))))
        throw precondition_error("family is not join closed");
    }
  return l;
}

SubspaceLattice SubspaceLattice::closure(std::size_t ambient,
                                         const std::vector<Subspace>& generators,
                                         std::size_t cap) {
  for (const auto& s : generators)
    if (s.ambient() != ambient)
      throw precondition_error("generator ambient mismatch");
  std::vector<Subspace> items = canonical_sorted(ambient, generators);
  auto member = [&](const Subspace& s) {
    return std::any_of(items.begin(), items.end(),
                       [&](const Subspace& t) { return t == s; });
  };
  auto add = [&](const Subspace& s) {
    if (member(s)) return;
    if (items.size() + 1 > cap) throw cap_exceeded_error(cap);
    items.push_back(s);
  };
  for (std::size_t k = 1; k < items.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      add(items[j].meet(items[k]));
      add(items[j].join(items[k]));
    }
  std::sort(items.begin(), items.end(), [](const Subspace& a, const Subspace& b) {
    return Subspace::order_cmp(a, b) < 0;
  });
  return SubspaceLattice(ambient, std::move(items));
}

std::optional<std::size_t> SubspaceLattice::find(const Subspace& s) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == s) return i;
  return std::nullopt;
}

SubspaceLattice SubspaceLattice::dual() const {
  std::vector<Subspace> duals;
  duals.reserve(nodes_.size());
  for (const auto& s : nodes_) duals.push_back(s.annihilator());
  std::sort(duals.begin(), duals.end(), [](const Subspace& a, const Subspace& b) {
    return Subspace::order_cmp(a, b) < 0;
  });
  return SubspaceLattice(ambient_, std::move(duals));
}

}  // namespace sublat
