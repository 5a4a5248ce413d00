#include "etmod/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace etmod {

void FieldSpec::validate() const {
  if (!is_prime(p)) fail(ErrorKind::BadFieldSpec, "characteristic not prime");
  if (mode == Mode::Finite) {
    if (q < 2) fail(ErrorKind::BadFieldSpec, "field size must be at least 2");
    std::uint64_t t = q;
    while (t % p == 0) t /= p;
    if (t != 1)
      fail(ErrorKind::BadFieldSpec, "field size must be a power of p");
  }
}

namespace {

std::uint64_t strip_p(std::uint64_t d, std::uint64_t p) {
  while (d % p == 0) d /= p;
  return d;
}

}  // namespace

HomGroupDescriptor hom_to_units(const std::vector<std::uint64_t>& invariants,
                                const FieldSpec& field) {
  field.validate();
  for (std::size_t i = 0; i + 1 < invariants.size(); ++i)
    if (invariants[i + 1] % invariants[i] != 0)
      fail(ErrorKind::BadParameters, "invariants must form a divisor chain");
  HomGroupDescriptor out;
  for (std::uint64_t d : invariants) {
    std::uint64_t e = field.mode == FieldSpec::Mode::AlgebraicallyClosed
                          ? strip_p(d, field.p)
                          : std::gcd(d, field.q - 1);
    if (e > 1) out.invariants.push_back(e);
  }
  std::sort(out.invariants.begin(), out.invariants.end());
  for (std::uint64_t d : out.invariants) out.order *= d;
  return out;
}

std::uint64_t CyclicCharacter::value(Idx ambient_element) const {
  auto it = std::lower_bound(domain.idx.begin(), domain.idx.end(),
                             ambient_element);
  if (it == domain.idx.end() || *it != ambient_element)
    fail(ErrorKind::ForeignElement, "element outside character domain");
  return values[static_cast<std::size_t>(it - domain.idx.begin())];
}

bool CyclicCharacter::is_trivial() const {
  return std::all_of(values.begin(), values.end(),
                     [](std::uint64_t v) { return v == 0; });
}

namespace {

// Basis of a finite abelian group: per prime, repeatedly split off a maximal
// order element; a subgroup maximal with trivial intersection against it is
// a complement.
struct BasisElement {
  Idx element;  // index within the abstract group
  std::uint64_t order;
};

std::vector<BasisElement> abelian_basis(const AbstractGroup& A) {
  std::vector<BasisElement> basis;
  if (A.size == 1) return basis;
  std::vector<std::uint64_t> ords(A.size);
  for (Idx a = 0; a < A.size; ++a) ords[a] = A.element_order(a);
  auto gen_with = [&](const IdxVec& gens) {
    std::vector<char> in(A.size, 0);
    in[A.id] = 1;
    IdxVec mem{A.id};
    std::vector<Idx> queue{A.id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (Idx g : gens) {
        Idx t = A.mul(queue[qi], g);
        if (!in[t]) { in[t] = 1; mem.push_back(t); queue.push_back(t); }
      }
    std::sort(mem.begin(), mem.end());
    return mem;
  };
  for (auto [p, e] : factorize(A.size)) {
    (void)e;
    IdxVec comp;  // the p-primary component
    for (Idx a = 0; a < A.size; ++a)
      if (p_part(ords[a], p) == ords[a]) comp.push_back(a);
    // peel off cyclic summands
    IdxVec remaining = comp;
    while (remaining.size() > 1) {
      Idx g = remaining[0];
      for (Idx a : remaining)
        if (ords[a] > ords[g]) g = a;
      basis.push_back({g, ords[g]});
      IdxVec gsub = gen_with({g});
      IdxVec csub{A.id};
      for (Idx a : remaining) {
        if (set_contains(csub, a)) continue;
        IdxVec cand = csub;
        cand.push_back(a);
        IdxVec span = gen_with(cand);
        if (set_intersect(span, gsub).size() == 1) csub = span;
      }
      if (csub.size() * gsub.size() != remaining.size())
        fail(ErrorKind::Internal, "abelian basis complement failed");
      remaining = csub;
    }
  }
  return basis;
}

}  // namespace

std::vector<CyclicCharacter> characters_vanishing_on(
    const FiniteGroup& G, const Subgroup& domain, const Subgroup& K,
    const FieldSpec& field, std::optional<std::uint64_t> modulus_override) {
  field.validate();
  if (!set_subset(K.idx, domain.idx) || !is_normal_in(G, K, domain))
    fail(ErrorKind::NotNormal, "kernel subgroup not normal in domain");
  // characters through domain/K factor through domain/(K * domain')
  Subgroup D = derived_subgroup(G, domain);
  Subgroup M = subgroup_generated(G, set_union(K.idx, D.idx));
  QuotientGroup A(G, domain, M);
  std::vector<std::uint64_t> invs = abelian_invariants(A);
  std::uint64_t expo = invs.empty() ? 1 : strip_p(invs.back(), field.p);
  std::uint64_t d;
  if (modulus_override) {
    d = *modulus_override;
  } else {
    d = field.mode == FieldSpec::Mode::AlgebraicallyClosed
            ? expo
            : std::gcd(expo, field.q - 1);
  }
  if (d == 0) d = 1;
  AbstractGroup Aab = as_abstract(A);
  std::vector<BasisElement> basis = abelian_basis(Aab);
  // coordinates of every element of A in the basis
  const std::size_t k = basis.size();
  std::vector<std::vector<std::uint64_t>> coords(
      A.order(), std::vector<std::uint64_t>(k, 0));
  {
    std::vector<std::uint64_t> tup(k, 0);
    std::vector<char> seen(A.order(), 0);
    std::size_t count = 0;
    std::function<void(std::size_t, Idx)> rec = [&](std::size_t i, Idx acc) {
      if (i == k) {
        if (seen[acc]) fail(ErrorKind::Internal, "basis not independent");
        seen[acc] = 1;
        coords[acc] = tup;
        ++count;
        return;
      }
      Idx cur = acc;
      for (std::uint64_t t = 0; t < basis[i].order; ++t) {
        tup[i] = t;
        rec(i + 1, cur);
        cur = Aab.mul(cur, basis[i].element);
      }
      tup[i] = 0;
    };
    rec(0, Aab.id);
    if (count != A.order())
      fail(ErrorKind::Internal, "basis does not span");
  }
  // enumerate value tuples: basis element of order o maps into the d-cycle
  // through multiples of d/gcd(o,d)
  std::vector<std::uint64_t> choice_count(k);
  for (std::size_t i = 0; i < k; ++i)
    choice_count[i] = std::gcd(basis[i].order, d);
  std::vector<CyclicCharacter> out;
  std::vector<std::uint64_t> pick(k, 0);
  for (;;) {
    CyclicCharacter chi;
    chi.G = &G;
    chi.domain = domain;
    chi.modulus = d;
    chi.values.resize(domain.idx.size());
    for (std::size_t pos = 0; pos < domain.idx.size(); ++pos) {
      Idx coset = A.coset_of(domain.idx[pos]);
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < k; ++i)
        v = (v + coords[coset][i] % d * (pick[i] * (d / choice_count[i]) % d)) % d;
      chi.values[pos] = v;
    }
    out.push_back(std::move(chi));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++pick[i] < choice_count[i]) break;
      pick[i] = 0;
    }
    if (i == k) break;
  }
  // exhaustive homomorphism-law check
  for (const CyclicCharacter& chi : out)
    for (std::size_t a = 0; a < domain.idx.size(); ++a)
      for (std::size_t b = 0; b < domain.idx.size(); ++b) {
        Idx gh = G.mult(domain.idx[a], domain.idx[b]);
        if (chi.value(gh) != (chi.values[a] + chi.values[b]) % d)
          fail(ErrorKind::Internal, "character violates the homomorphism law");
      }
  return out;
}

KGroupResult k_group(const PLocalContext& ctx, const FieldSpec& field) {
  const FiniteGroup& G = *ctx.G;
  KGroupResult out;
  out.J = j_subgroup(ctx);
  QuotientGroup NJ(G, ctx.N, out.J);
  out.nj_order = NJ.order();
  out.nj_invariants = abelian_invariants(NJ);
  out.K = hom_to_units(out.nj_invariants, field);
  return out;
}

WeakHomHypotheses weak_hom_hypotheses(const PLocalContext& ctx) {
  WeakHomHypotheses hyp;
  const FiniteGroup& G = *ctx.G;
  Subgroup E = omega1(G, ctx.S, ctx.p);
  hyp.omega1_central = set_subset(E.idx, center(G, ctx.S).idx);
  hyp.normalizer_controls = controls_fusion(ctx, ctx.N).controls;
  hyp.rho2 = rho_infinity(ctx).rho2();
  return hyp;
}

WeakHomTable build_weak_hom(const PLocalContext& ctx,
                            const WeakHomHypotheses& hyp,
                            const CyclicCharacter& chi) {
  const FiniteGroup& G = *ctx.G;
  if (!hyp.omega1_central || !hyp.normalizer_controls)
    fail(ErrorKind::HypothesisFailed,
         "weak hom construction needs Omega1(S) central and fusion control");
  if (!(chi.domain == ctx.N))
    fail(ErrorKind::BadParameters, "character must live on N_G(S)");
  for (Idx r : hyp.rho2.idx)
    if (chi.value(r) != 0)
      fail(ErrorKind::BadParameters, "character does not kill rho^2(S)");
  const std::uint64_t d = chi.modulus;
  WeakHomTable theta;
  theta.G = &G;
  theta.modulus = d;
  theta.values.assign(G.order(), 0);
  FieldSpec dummy = FieldSpec::closed(ctx.p);
  // psi_Q cache keyed by Q's element set
  std::map<IdxVec, std::pair<Subgroup, CyclicCharacter>> psi_cache;
  auto psi_for = [&](const Subgroup& Q)
      -> std::pair<Subgroup, CyclicCharacter>& {
    auto it = psi_cache.find(Q.idx);
    if (it != psi_cache.end()) return it->second;
    Subgroup CQ = centralizer(G, Q.idx);
    if (!set_subset(ctx.S.idx, CQ.idx))
      fail(ErrorKind::Internal, "S does not centralize Q <= Omega1(S)");
    Subgroup CQd = derived_subgroup(G, CQ);
    Subgroup SCd = subgroup_generated(G, set_union(ctx.S.idx, CQd.idx));
    std::vector<CyclicCharacter> cands =
        characters_vanishing_on(G, CQ, SCd, dummy, d);
    IdxVec common = set_intersect(ctx.N.idx, CQ.idx);
    const CyclicCharacter* match = nullptr;
    std::size_t matches = 0;
    for (const CyclicCharacter& psi : cands) {
      bool ok = true;
      for (Idx e : common)
        if (psi.value(e) != chi.value(e)) { ok = false; break; }
      if (ok) { ++matches; match = &psi; }
    }
    if (matches != 1)
      fail(ErrorKind::Internal,
           "expected exactly one extension psi_Q, found " +
               std::to_string(matches));
    return psi_cache.emplace(Q.idx, std::make_pair(CQ, *match)).first->second;
  };
  for (Idx g = 0; g < G.order(); ++g) {
    Subgroup Sg = conjugate_subgroup(G, ctx.S, g);
    IdxVec inter = set_intersect(ctx.S.idx, Sg.idx);
    if (inter.size() == 1) {
      theta.values[g] = 0;
      continue;
    }
    Subgroup T{&G, inter};
    Subgroup Q = omega1(G, T, ctx.p);
    auto& [CQ, psi] = psi_for(Q);
    // factor g = c n with c in C_G(Q), n in N; deterministic first hit, and
    // a second factorization (when one exists) must give the same value
    bool have = false;
    std::uint64_t val = 0;
    int found = 0;
    for (Idx c : CQ.idx) {
      Idx n = G.mult(G.inv(c), g);
      if (!ctx.N.contains(n)) continue;
      std::uint64_t v = (psi.value(c) + chi.value(n)) % d;
      if (!have) {
        val = v;
        have = true;
      } else if (v != val) {
        fail(ErrorKind::Internal, "theta depends on the factorization g = cn");
      }
      if (++found == 2) break;
    }
    if (!have)
      fail(ErrorKind::NoFactorization,
           "no factorization g = c n; fusion control must be broken");
    theta.values[g] = val;
  }
  return theta;
}

WeakHomCheck verify_weak_hom(const PLocalContext& ctx,
                             const WeakHomTable& theta) {
  const FiniteGroup& G = *ctx.G;
  WeakHomCheck out;
  if (theta.values.size() != G.order())
    fail(ErrorKind::BadParameters, "table not total on G");
  const std::size_t words = (G.order() + 63) / 64;
  std::vector<std::uint64_t> masks(G.order() * words, 0);
  for (Idx g = 0; g < G.order(); ++g) {
    std::uint64_t* m = &masks[g * words];
    for (Idx s : ctx.S.idx) {
      Idx t = G.conj(s, g);  // g s g^-1 in S^g; record S ∩ S^g
      if (ctx.S.contains(t)) m[t / 64] |= 1ull << (t % 64);
    }
  }
  auto inter_nontrivial = [&](Idx a, Idx b) {
    const std::uint64_t* ma = &masks[a * words];
    const std::uint64_t* mb = &masks[b * words];
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = ma[w] & mb[w];
      if (w == 0) v &= ~1ull;  // drop the identity bit
      if (v) return true;
    }
    return false;
  };
  for (Idx g : ctx.S.idx)
    if (theta.values[g] != 0) {
      out.violation = WeakHomViolation{1, g, 0};
      return out;
    }
  for (Idx g = 0; g < G.order(); ++g) {
    const std::uint64_t* m = &masks[g * words];
    bool trivial = true;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = m[w];
      if (w == 0) v &= ~1ull;
      if (v) { trivial = false; break; }
    }
    if (trivial && theta.values[g] != 0) {
      out.violation = WeakHomViolation{1, g, 0};
      return out;
    }
  }
  for (Idx g = 0; g < G.order(); ++g)
    for (Idx h = 0; h < G.order(); ++h) {
      Idx gh = G.mult(g, h);
      if (!inter_nontrivial(g, gh)) continue;
      if (theta.values[gh] !=
          (theta.values[g] + theta.values[h]) % theta.modulus) {
        out.violation = WeakHomViolation{2, g, h};
        return out;
      }
    }
  out.ok = true;
  return out;
}

}  // namespace etmod
