#include "etmod/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace etmod {

FusionResult controls_fusion(const PLocalContext& ctx, const Subgroup& H) {
  const FiniteGroup& G = *ctx.G;
  if (!set_subset(ctx.S.idx, H.idx))
    fail(ErrorKind::SylowNotContained, "H does not contain the Sylow subgroup");
  FusionResult res;
  if (H.idx.size() == G.order()) {  // g = g * 1
    res.controls = true;
    return res;
  }
  std::vector<Subgroup> subs = nontrivial_subgroups(G, ctx.S, ctx.p);
  for (const Subgroup& Q : subs) {
    Subgroup C = centralizer(G, Q.idx);
    std::vector<char> in_hc(G.order(), 0);
    for (Idx h : H.idx)
      for (Idx c : C.idx) in_hc[G.mult(h, c)] = 1;
    for (Idx g = 0; g < G.order(); ++g) {
      bool maps_in = true;
      for (Idx q : Q.idx)
        if (!ctx.S.contains(G.conj(q, g))) { maps_in = false; break; }
      if (!maps_in) continue;
      if (!in_hc[g]) {
        res.controls = false;
        res.violation = FusionViolation{
            Q, g,
            "no h in H, c in C_G(Q) gives g = hc; the product set H*C_G(Q) "
            "(order " +
                std::to_string(product_set(G, H.idx, C.idx).size()) +
                ") was exhausted"};
        return res;
      }
    }
  }
  res.controls = true;
  return res;
}

CoreResult strongly_embedded_core(const PLocalContext& ctx) {
  const FiniteGroup& G = *ctx.G;
  std::vector<Subgroup> subs = nontrivial_subgroups(G, ctx.S, ctx.p);
  IdxVec acc;
  Subgroup core = trivial_subgroup(G);
  for (const Subgroup& Q : subs) {
    Subgroup NQ = normalizer(G, Q);
    acc = set_union(acc, NQ.idx);
    core = subgroup_generated(G, acc);
    acc = core.idx;
    if (core.idx.size() == G.order()) break;
  }
  return CoreResult{core, core.idx.size() != G.order()};
}

bool is_strongly_p_embedded(const FiniteGroup& G, const Subgroup& H,
                            std::uint64_t p) {
  if (H.idx.size() % p != 0) return false;
  for (Idx g = 0; g < G.order(); ++g) {
    if (H.contains(g)) continue;
    Subgroup Hg = conjugate_subgroup(G, H, g);
    if (set_intersect(H.idx, Hg.idx).size() % p == 0) return false;
  }
  return true;
}

PosetOrbitComponents orbit_poset_components(const FiniteGroup& G,
                                            std::uint64_t p) {
  PosetOrbitComponents out;
  IdxVec order_p;
  for (Idx g = 0; g < G.order(); ++g)
    if (G.element_order(g) == p) order_p.push_back(g);
  // All elementary abelian subgroups, grown rank by rank; keep rank >= 2.
  std::set<IdxVec> all_ea;
  std::set<IdxVec> level;
  for (Idx g : order_p) level.insert(subgroup_generated(G, {g}).idx);
  while (!level.empty()) {
    std::set<IdxVec> next;
    for (const IdxVec& e : level) {
      for (Idx h : order_p) {
        if (set_contains(e, h)) continue;
        bool comm = true;
        for (Idx x : e)
          if (!G.commutes(h, x)) { comm = false; break; }
        if (!comm) continue;
        IdxVec seed = e;
        seed.push_back(h);
        next.insert(subgroup_generated(G, seed).idx);
      }
    }
    for (const IdxVec& e : next) all_ea.insert(e);
    level = std::move(next);
  }
  // Group into conjugation orbits.
  std::vector<std::vector<IdxVec>> orbits;
  std::set<IdxVec> assigned;
  for (const IdxVec& e : all_ea) {
    if (assigned.count(e)) continue;
    std::set<IdxVec> orb;
    Subgroup E{&G, e};
    for (Idx g = 0; g < G.order(); ++g)
      orb.insert(conjugate_subgroup(G, E, g).idx);
    orbits.emplace_back(orb.begin(), orb.end());
    for (const IdxVec& o : orbits.back()) assigned.insert(o);
  }
  out.orbit_count = orbits.size();
  // Union-find over orbits; edge when members are comparable.
  std::vector<std::size_t> parent(orbits.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
    return a;
  };
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      bool linked = false;
      for (const IdxVec& a : orbits[i]) {
        for (const IdxVec& b : orbits[j])
          if (set_subset(a, b) || set_subset(b, a)) { linked = true; break; }
        if (linked) break;
      }
      if (linked) parent[find(i)] = find(j);
    }
  std::map<std::size_t, IdxVec> comp_rep;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::size_t r = find(i);
    const IdxVec& rep = orbits[i].front();
    auto it = comp_rep.find(r);
    if (it == comp_rep.end() || rep < it->second) comp_rep[r] = rep;
  }
  out.component_count = comp_rep.size();
  for (auto& [root, rep] : comp_rep)
    out.representatives.push_back(Subgroup{&G, rep});
  return out;
}

}  // namespace etmod
