#include "etmod/subgroups.hpp"

#include <algorithm>
#include <set>

namespace etmod {

bool is_p_element(const FiniteGroup& G, Idx g, std::uint64_t p) {
  std::uint64_t o = G.element_order(g);
  while (o % p == 0) o /= p;
  return o == 1;
}

PLocalContext p_local_context(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::BadParameters, "p must be prime");
  if (G.order() % p != 0)
    fail(ErrorKind::PrimeNotDividing,
         "prime " + std::to_string(p) + " does not divide the group order");
  PLocalContext ctx;
  ctx.G = &G;
  ctx.p = p;
  ctx.S = sylow_p(G, p);
  ctx.N = normalizer(G, ctx.S);
  return ctx;
}

Subgroup sylow_p(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::BadParameters, "p must be prime");
  if (G.order() % p != 0)
    fail(ErrorKind::PrimeNotDividing,
         "prime " + std::to_string(p) + " does not divide the group order");
  return sylow_in(G, full_subgroup(G), p);
}

Subgroup sylow_in(const FiniteGroup& G, const Subgroup& H, std::uint64_t p) {
  const std::uint64_t target = p_part(H.idx.size(), p);
  Subgroup P = trivial_subgroup(G);
  if (target == 1) return P;
  // Whole subgroup already a p-group: nothing to search.
  if (target == H.idx.size()) return H;
  while (P.idx.size() < target) {
    Subgroup N = normalizer_in(G, H, P);
    Idx next = 0;
    bool found = false;
    for (Idx g : N.idx) {
      if (P.contains(g)) continue;
      if (is_p_element(G, g, p)) { next = g; found = true; break; }
    }
    if (!found)
      fail(ErrorKind::Internal, "Sylow growth stalled");  // cannot happen
    IdxVec seed = P.idx;
    seed.push_back(next);
    P = subgroup_generated(G, seed);
  }
  return P;
}

Subgroup omega1(const FiniteGroup& G, const Subgroup& P, std::uint64_t p) {
  if (p_part(P.idx.size(), p) != P.idx.size())
    fail(ErrorKind::NotPGroup, "omega1 requires a p-group");
  IdxVec seed;
  for (Idx g : P.idx)
    if (G.element_order(g) <= p) seed.push_back(g);
  return subgroup_generated(G, seed);
}

Subgroup center(const FiniteGroup& G, const Subgroup& H) {
  return centralizer_in(G, H, H.idx);
}

Subgroup frattini_subgroup(const FiniteGroup& G, const Subgroup& P,
                           std::uint64_t p) {
  Subgroup D = derived_subgroup(G, P);
  IdxVec seed = D.idx;
  for (Idx g : P.idx) seed.push_back(G.pow(g, p));
  return subgroup_generated(G, seed);
}

Subgroup o_pprime_residual(const FiniteGroup& G, const Subgroup& H,
                           std::uint64_t p) {
  IdxVec seed;
  for (Idx g : H.idx)
    if (is_p_element(G, g, p)) seed.push_back(g);
  Subgroup R = subgroup_generated(G, seed);
  if (!is_normal_in(G, R, H))
    fail(ErrorKind::Internal, "p-residual not normal");
  if ((H.idx.size() / R.idx.size()) % p == 0)
    fail(ErrorKind::Internal, "p-residual index divisible by p");
  return R;
}

Subgroup o_pprime_core(const FiniteGroup& G, const Subgroup& H,
                       std::uint64_t p) {
  // The product of all normal p'-subgroups; an element contributes exactly
  // when the normal closure of its class is a p'-group.
  IdxVec seed;
  Subgroup acc = trivial_subgroup(G);
  for (Idx g : H.idx) {
    if (G.element_order(g) % p == 0) continue;
    if (acc.contains(g)) continue;
    IdxVec cls;
    for (Idx h : H.idx) cls.push_back(G.conj(g, h));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    Subgroup ncl = subgroup_generated(G, cls);
    if (ncl.idx.size() % p != 0) {
      seed.insert(seed.end(), ncl.idx.begin(), ncl.idx.end());
      acc = subgroup_generated(G, seed);
    }
  }
  if (!is_normal_in(G, acc, H) || acc.idx.size() % p == 0)
    fail(ErrorKind::Internal, "p'-core computation broken");
  return acc;
}

bool is_p_nilpotent(const FiniteGroup& G, std::uint64_t p) {
  Subgroup core = o_pprime_core(G, full_subgroup(G), p);
  return core.idx.size() * p_part(G.order(), p) == G.order();
}

const char* p_group_kind_name(PGroupKind k) {
  switch (k) {
    case PGroupKind::Cyclic: return "cyclic";
    case PGroupKind::GeneralizedQuaternion: return "generalized-quaternion";
    case PGroupKind::Semidihedral: return "semidihedral";
    case PGroupKind::Other: return "other";
  }
  return "other";
}

PGroupClass classify_p_group(const FiniteGroup& G, const Subgroup& P,
                             std::uint64_t p) {
  const std::size_t n = P.idx.size();
  if (p_part(n, p) != n) fail(ErrorKind::NotPGroup, "not a p-group");
  PGroupClass out;
  for (Idx g : P.idx)
    if (G.element_order(g) == n) {
      out.kind = PGroupKind::Cyclic;
      out.witness = subgroup_generated(G, {g});
      out.has_witness = true;
      return out;
    }
  if (p == 2 && n >= 8) {
    IdxVec involutions;
    for (Idx g : P.idx)
      if (G.element_order(g) == 2) involutions.push_back(g);
    if (involutions.size() == 1) {
      // Noncyclic 2-group with a unique involution.
      out.kind = PGroupKind::GeneralizedQuaternion;
      out.witness = subgroup_generated(G, involutions);
      out.has_witness = true;
      return out;
    }
    if (n >= 16) {
      // <r,s | r^(n/2) = s^2 = 1, s r s = r^(n/4 - 1)>
      const std::uint64_t half = n / 2, e = n / 4 - 1;
      for (Idx r : P.idx) {
        if (G.element_order(r) != half) continue;
        for (Idx s : P.idx) {
          if (G.element_order(s) != 2) continue;
          if (G.conj(r, s) != G.pow(r, e)) continue;
          Subgroup W = subgroup_generated(G, {r, s});
          if (W.idx.size() == n) {
            out.kind = PGroupKind::Semidihedral;
            out.witness = W;
            out.has_witness = true;
            return out;
          }
        }
      }
    }
  }
  out.kind = PGroupKind::Other;
  return out;
}

std::vector<Subgroup> nontrivial_subgroups(const FiniteGroup& G,
                                           const Subgroup& P, std::uint64_t p,
                                           std::size_t cap) {
  if (P.idx.size() > cap)
    fail(ErrorKind::CapExceeded, "subgroup enumeration cap exceeded");
  if (p_part(P.idx.size(), p) != P.idx.size())
    fail(ErrorKind::NotPGroup, "subgroup enumeration requires a p-group");
  // Level-wise: every subgroup of order p^(k+1) is <H, g> for a maximal
  // (hence normal) subgroup H of it and g in the normalizer of H whose coset
  // has order p. This enumerates each level completely.
  std::set<IdxVec> seen;
  std::vector<IdxVec> level{trivial_subgroup(G).idx};
  std::vector<Subgroup> out;
  while (!level.empty()) {
    std::set<IdxVec> next;
    for (const IdxVec& h : level) {
      Subgroup H{&G, h};
      Subgroup N = normalizer_in(G, P, H);
      for (Idx g : N.idx) {
        if (H.contains(g)) continue;
        if (!H.contains(G.pow(g, p))) continue;
        IdxVec k;
        k.reserve(h.size() * p);
        Idx gi = 0;  // g^i
        for (std::uint64_t i = 0; i < p; ++i) {
          for (Idx e : h) k.push_back(G.mult(e, gi));
          gi = G.mult(gi, g);
        }
        std::sort(k.begin(), k.end());
        next.insert(std::move(k));
      }
    }
    level.assign(next.begin(), next.end());
    for (const IdxVec& k : level) {
      if (seen.insert(k).second) out.push_back(Subgroup{&G, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
    return a.idx < b.idx;
  });
  return out;
}

}  // namespace etmod
