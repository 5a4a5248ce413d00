#include "etmod/rho.hpp"

#include <algorithm>
#include <map>

namespace etmod {

Subgroup rho1(const PLocalContext& ctx, const Subgroup& P) {
  if (P.is_trivial()) fail(ErrorKind::TrivialP, "rho1 needs a nontrivial P");
  const FiniteGroup& G = *ctx.G;
  Subgroup NP = normalizer(G, P);
  Subgroup SP = sylow_in(G, NP, ctx.p);
  Subgroup D = derived_subgroup(G, NP);
  // S_P * N' is a subgroup since N' is normal in N_G(P).
  return subgroup_from_indices(G, product_set(G, SP.idx, D.idx));
}

RhoSeries rho_infinity(const PLocalContext& ctx, bool restrict_to_omega1) {
  const FiniteGroup& G = *ctx.G;
  std::vector<Subgroup> all = nontrivial_subgroups(G, ctx.S, ctx.p);
  std::vector<Subgroup> qrange;
  if (restrict_to_omega1) {
    Subgroup E = omega1(G, ctx.S, ctx.p);
    for (const Subgroup& Q : all)
      if (set_subset(Q.idx, E.idx)) qrange.push_back(Q);
  } else {
    qrange = all;
  }
  // Entries are maintained for the generating range plus S itself; the
  // recursion never needs more to reach rho^inf(S).
  std::vector<Subgroup> domain = qrange;
  bool has_s = false;
  for (const Subgroup& Q : domain)
    if (Q == ctx.S) { has_s = true; break; }
  if (!has_s) domain.push_back(ctx.S);
  const std::size_t nd = domain.size();
  std::size_t s_pos = nd;
  for (std::size_t i = 0; i < nd; ++i)
    if (domain[i] == ctx.S) s_pos = i;
  std::vector<Subgroup> normalizers;
  normalizers.reserve(nd);
  for (const Subgroup& P : domain) normalizers.push_back(normalizer(G, P));
  std::vector<IdxVec> cur;
  cur.reserve(nd);
  for (const Subgroup& P : domain) cur.push_back(rho1(ctx, P).idx);
  RhoSeries series;
  series.base = ctx.S;
  series.levels.push_back(Subgroup{&G, cur[s_pos]});
  std::size_t pass = 0;
  for (;;) {
    ++pass;
    std::vector<IdxVec> next(nd);
    for (std::size_t i = 0; i < nd; ++i) {
      IdxVec acc;
      for (std::size_t qi = 0; qi < qrange.size(); ++qi) {
        // position of qrange[qi] in domain is qi by construction
        acc = set_union(acc, set_intersect(normalizers[i].idx, cur[qi]));
      }
      next[i] = subgroup_generated(G, acc).idx;
      if (!set_subset(cur[i], next[i]))
        fail(ErrorKind::Internal, "rho series not ascending");
    }
    bool changed = false;
    for (std::size_t i = 0; i < nd; ++i)
      if (next[i] != cur[i]) { changed = true; break; }
    series.levels.push_back(Subgroup{&G, next[s_pos]});
    cur = std::move(next);
    if (!changed) {
      series.stabilized_at = pass;
      break;
    }
    if (pass > G.order())
      fail(ErrorKind::CapExceeded, "rho iteration budget exhausted");
  }
  // verification pass
  {
    std::vector<IdxVec> verify(nd);
    for (std::size_t i = 0; i < nd; ++i) {
      IdxVec acc;
      for (std::size_t qi = 0; qi < qrange.size(); ++qi)
        acc = set_union(acc, set_intersect(normalizers[i].idx, cur[qi]));
      verify[i] = subgroup_generated(G, acc).idx;
      if (verify[i] != cur[i])
        fail(ErrorKind::Internal, "rho stabilization not confirmed");
    }
  }
  return series;
}

bool verify_chain_witness(const PLocalContext& ctx, const ChainWitness& w) {
  const FiniteGroup& G = *ctx.G;
  if (w.subgroups.size() != w.elements.size()) return false;
  if (w.subgroups.empty()) return w.product == G.identity();
  // Q_0 <= Q_1 and Q_0^(g_1...g_i) <= Q_(i+1)
  if (!set_subset(w.q0.idx, w.subgroups.front().idx)) return false;
  Idx acc = G.identity();
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    acc = G.mult(acc, w.elements[i]);
    if (i + 1 < w.subgroups.size()) {
      Subgroup conj = conjugate_subgroup(G, w.q0, G.inv(acc));
      // right conjugation: Q0^(g1...gi) = acc^-1 Q0 acc
      if (!set_subset(conj.idx, w.subgroups[i + 1].idx)) return false;
    }
  }
  return acc == w.product && ctx.N.contains(w.product);
}

PiOneResult pi1_chain_subgroup(const PLocalContext& ctx) {
  const FiniteGroup& G = *ctx.G;
  PiOneResult out;
  out.N = ctx.N;
  std::vector<Subgroup> subs = nontrivial_subgroups(G, ctx.S, ctx.p);
  const std::size_t ns = subs.size();
  std::map<IdxVec, std::size_t> sub_id;
  for (std::size_t i = 0; i < ns; ++i) sub_id[subs[i].idx] = i;
  // O^{p'}(N_G(Q)) and the union U(D) over overgroups Q >= D.
  std::vector<IdxVec> op_residual(ns);
  for (std::size_t i = 0; i < ns; ++i)
    op_residual[i] =
        o_pprime_residual(G, normalizer(G, subs[i]), ctx.p).idx;
  std::vector<IdxVec> ext(ns);  // U(D)
  for (std::size_t i = 0; i < ns; ++i) {
    IdxVec acc;
    for (std::size_t j = 0; j < ns; ++j)
      if (set_subset(subs[i].idx, subs[j].idx))
        acc = set_union(acc, op_residual[j]);
    ext[i] = std::move(acc);
  }
  struct Back {
    Idx prev;
    Idx gen;
    std::size_t via;  // subgroup id of Q_(i+1)
  };
  IdxVec collected;  // generators of R found so far, in N
  std::vector<char> collected_mask(G.order(), 0);
  Subgroup Racc = trivial_subgroup(G);
  std::vector<std::pair<Idx, ChainWitness>> kept;
  for (std::size_t q0 = 0; q0 < ns; ++q0) {
    // Reachability fixpoint: states are products w with Q0^w tracked
    // implicitly; extensions multiply by O^{p'}(N_G(Q')) for Q' >= Q0^w.
    std::vector<Idx> state_of(G.order(), static_cast<Idx>(-1));
    std::vector<Back> back(G.order());
    std::vector<Idx> queue{G.identity()};
    state_of[G.identity()] = 0;
    std::vector<IdxVec> m_members{ {G.identity()} };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Idx w = queue[qi];
      // D = Q0^w = w^-1 Q0 w under right conjugation of the chain diagram;
      // the theorem's condition tracks Q0^(g1...gi) with exponent notation
      // Q^g = g^-1 Q g.
      Subgroup D = conjugate_subgroup(G, subs[q0], G.inv(w));
      auto it = sub_id.find(D.idx);
      if (it == sub_id.end())
        fail(ErrorKind::Internal, "chain conjugate escaped the Sylow subgroup");
      for (Idx g : ext[it->second]) {
        Idx wg = G.mult(w, g);
        if (state_of[wg] != static_cast<Idx>(-1)) continue;
        state_of[wg] = 1;
        back[wg] = Back{w, g, it->second};
        queue.push_back(wg);
      }
    }
    const std::size_t before = collected.size();
    for (Idx w : queue) {
      if (!ctx.N.contains(w) || collected_mask[w]) continue;
      collected_mask[w] = 1;
      collected.push_back(w);
      // reconstruct one witness chain for this generator
      ChainWitness cw;
      cw.q0 = subs[q0];
      cw.product = w;
      std::vector<std::pair<Idx, std::size_t>> rev;
      Idx cur = w;
      while (cur != G.identity()) {
        rev.push_back({back[cur].gen, back[cur].via});
        cur = back[cur].prev;
      }
      std::reverse(rev.begin(), rev.end());
      for (auto& [g, via] : rev) {
        cw.elements.push_back(g);
        cw.subgroups.push_back(subs[via]);
      }
      kept.push_back({w, std::move(cw)});
    }
    if (collected.size() != before) {
      std::sort(collected.begin(), collected.end());
      Racc = subgroup_generated(G, collected);
      if (Racc.idx == ctx.N.idx) break;  // R <= N always; no room to grow
    }
  }
  out.R = Racc;
  out.r_normal_in_n = is_normal_in(G, out.R, ctx.N);
  for (auto& [g, cw] : kept) out.witnesses.push_back(std::move(cw));
  if (out.r_normal_in_n) {
    out.quotient_order = ctx.N.idx.size() / out.R.idx.size();
    Subgroup ND = derived_subgroup(G, ctx.N);
    Subgroup NdR = subgroup_generated(G, set_union(ND.idx, out.R.idx));
    out.abelianization = abelian_invariants(QuotientGroup(G, ctx.N, NdR));
  }
  return out;
}

ClosedFormCentral pi1_closed_form_central(const PLocalContext& ctx) {
  const FiniteGroup& G = *ctx.G;
  ClosedFormCentral out;
  Subgroup E = omega1(G, ctx.S, ctx.p);
  Subgroup ZS = center(G, ctx.S);
  out.omega1_central = set_subset(E.idx, ZS.idx);
  out.normalizer_controls = controls_fusion(ctx, ctx.N).controls;
  std::vector<Subgroup> subs = nontrivial_subgroups(G, ctx.S, ctx.p);
  IdxVec acc;
  for (const Subgroup& Q : subs) {
    if (!set_subset(Q.idx, E.idx)) continue;
    Subgroup res = o_pprime_residual(G, normalizer(G, Q), ctx.p);
    acc = set_union(acc, set_intersect(ctx.N.idx, res.idx));
  }
  out.R = subgroup_generated(G, acc);
  return out;
}

Subgroup j_subgroup(const PLocalContext& ctx) {
  const FiniteGroup& G = *ctx.G;
  Subgroup E = omega1(G, ctx.S, ctx.p);
  std::vector<Subgroup> subs = nontrivial_subgroups(G, ctx.S, ctx.p);
  IdxVec acc;
  for (const Subgroup& Q : subs) {
    if (!set_subset(Q.idx, E.idx)) continue;
    Subgroup NQ = normalizer(G, Q);
    Subgroup D = derived_subgroup(G, NQ);
    IdxVec snq = product_set(G, ctx.S.idx, D.idx);
    acc = set_union(acc, set_intersect(ctx.N.idx, snq));
  }
  return subgroup_generated(G, acc);
}

SplitMetacyclicPiOne pi1_closed_form_split_metacyclic(
    const PLocalContext& ctx, const RecognitionResult& rec) {
  const FiniteGroup& G = *ctx.G;
  if (ctx.p == 2 || rec.kind != SylowShape::Metacyclic || !rec.params.split())
    fail(ErrorKind::NotSplitMetacyclic,
         "requires an odd prime and a split metacyclic Sylow subgroup");
  CoreResult core = strongly_embedded_core(ctx);
  if (core.proper)
    fail(ErrorKind::StronglyEmbeddedProper,
         "G has a proper strongly p-embedded subgroup");
  SplitMetacyclicPiOne out;
  Subgroup E = omega1(G, ctx.S, ctx.p);
  Subgroup ZS = center(G, ctx.S);
  if (set_subset(E.idx, ZS.idx)) {
    out.case_tag = 1;
    out.R = pi1_closed_form_central(ctx).R;
    return out;
  }
  out.case_tag = 2;
  Subgroup Z = Subgroup{&G, set_intersect(E.idx, ZS.idx)};
  if (Z.idx.size() != ctx.p)
    fail(ErrorKind::Internal, "E ∩ Z(S) does not have order p");
  // the p noncentral order-p subgroups of E
  std::vector<Subgroup> noncentral;
  for (Idx g : E.idx) {
    if (G.element_order(g) != ctx.p) continue;
    Subgroup C = subgroup_generated(G, {g});
    if (C.idx == Z.idx) continue;
    if (std::find_if(noncentral.begin(), noncentral.end(),
                     [&](const Subgroup& X) { return X.idx == C.idx; }) ==
        noncentral.end())
      noncentral.push_back(C);
  }
  std::sort(noncentral.begin(), noncentral.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.idx < b.idx; });
  if (noncentral.size() != ctx.p)
    fail(ErrorKind::Internal, "expected exactly p noncentral subgroups of E");
  IdxVec part1 = set_intersect(
      ctx.N.idx, o_pprime_residual(G, normalizer(G, Z), ctx.p).idx);
  Subgroup opNE = o_pprime_residual(G, normalizer(G, E), ctx.p);
  IdxVec r_idx;
  for (std::size_t choice = 0; choice < noncentral.size(); ++choice) {
    const Subgroup& Q = noncentral[choice];
    Subgroup CQ = centralizer(G, Q.idx);
    IdxVec A = set_intersect(opNE.idx, CQ.idx);
    IdxVec B = o_pprime_residual(G, CQ, ctx.p).idx;
    IdxVec hht = product_set(G, product_set(G, A, B), ctx.S.idx);
    IdxVec part2 = set_intersect(ctx.N.idx, hht);
    Subgroup R = subgroup_generated(G, set_union(part1, part2));
    if (choice == 0) {
      r_idx = R.idx;
    } else if (R.idx != r_idx) {
      // all noncentral Q are S-conjugate, so the result cannot depend on it
      fail(ErrorKind::Internal, "R depends on the choice of noncentral Q");
    }
  }
  out.R = Subgroup{&G, r_idx};
  return out;
}

}  // namespace etmod
