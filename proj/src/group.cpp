#include "etmod/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace etmod {

IdxVec set_union(const IdxVec& a, const IdxVec& b) {
  IdxVec out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

IdxVec set_intersect(const IdxVec& a, const IdxVec& b) {
  IdxVec out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool set_contains(const IdxVec& a, Idx x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool set_subset(const IdxVec& a, const IdxVec& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) { n /= p; q *= p; }
  return q;
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

void check_generators(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree > 65535)
    fail(ErrorKind::MalformedPermutation, "degree exceeds 65535");
  for (const auto& g : gens) {
    if (g.degree() != degree)
      fail(ErrorKind::MalformedPermutation, "generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (seen[g[i]])
        fail(ErrorKind::MalformedPermutation, "generator is not a bijection");
      seen[g[i]] = true;
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::closure(std::size_t degree,
                                 std::vector<Permutation> gens,
                                 std::string name, std::size_t cap) {
  check_generators(degree, gens);
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::vector<Permutation> frontier = elems;
  while (!frontier.empty()) {
    std::vector<Permutation> cand;
    cand.reserve(frontier.size() * gens.size());
    for (const auto& f : frontier)
      for (const auto& g : gens) cand.push_back(f * g);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Permutation> fresh;
    std::set_difference(cand.begin(), cand.end(), elems.begin(), elems.end(),
                        std::back_inserter(fresh));
    if (elems.size() + fresh.size() > cap)
      fail(ErrorKind::CapExceeded,
           "closure exceeds element cap " + std::to_string(cap));
    if (fresh.empty()) break;
    std::vector<Permutation> merged;
    merged.reserve(elems.size() + fresh.size());
    std::merge(elems.begin(), elems.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged));
    elems = std::move(merged);
    frontier = std::move(fresh);
  }
  FiniteGroup G;
  G.degree_ = degree;
  G.name_ = std::move(name);
  G.elems_ = std::move(elems);
  G.gens_ = std::move(gens);
  G.build_caches(cap);
  return G;
}

FiniteGroup FiniteGroup::from_elements(std::size_t degree,
                                       std::vector<Permutation> elements,
                                       std::vector<Permutation> gens,
                                       std::string name, std::size_t cap) {
  check_generators(degree, gens);
  if (elements.size() > cap)
    fail(ErrorKind::CapExceeded, "element list exceeds cap");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty() || !elements.front().is_identity())
    fail(ErrorKind::Internal, "element list lacks the identity");
  FiniteGroup G;
  G.degree_ = degree;
  G.name_ = std::move(name);
  G.elems_ = std::move(elements);
  G.gens_ = std::move(gens);
  G.build_caches(cap);
  // Spot-check closure when no table was built (the table build itself
  // verifies closure exhaustively).
  if (G.table_.empty()) {
    const std::size_t step = std::max<std::size_t>(1, G.order() / 64);
    for (std::size_t i = 0; i < G.order(); i += step)
      for (const auto& g : G.gens_)
        if (!G.find(G.elems_[i] * g))
          fail(ErrorKind::Internal, "element list not closed");
  }
  return G;
}

void FiniteGroup::build_caches(std::size_t cap) {
  const std::size_t n = elems_.size();
  if (n > cap) fail(ErrorKind::CapExceeded, "group exceeds element cap");
  for (const auto& g : gens_)
    if (!find(g))
      fail(ErrorKind::Internal, "generator outside element list");
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) orders_[i] = elems_[i].order();
  inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = find(elems_[i].inverse());
    if (!j) fail(ErrorKind::Internal, "element list not inverse-closed");
    inv_[i] = *j;
  }
  if (n <= kTableCap && n > 0) {
    // Cayley-graph construction: the right-multiplication column of b*g is
    // the column of g composed with the column of b, so one BFS over the
    // generators fills the whole table in O(n^2) index operations.
    table_.assign(n * n, 0);
    std::vector<std::vector<std::uint16_t>> gcol(gens_.size());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      gcol[k].resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        auto j = find(elems_[a] * gens_[k]);
        if (!j) fail(ErrorKind::Internal, "element list not closed");
        gcol[k][a] = static_cast<std::uint16_t>(*j);
      }
    }
    std::vector<char> done(n, 0);
    // column of the identity
    for (std::size_t a = 0; a < n; ++a)
      table_[a * n + 0] = static_cast<std::uint16_t>(a);
    done[0] = 1;
    std::vector<Idx> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Idx b = queue[qi];
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        Idx bg = gcol[k][b];
        if (done[bg]) continue;
        done[bg] = 1;
        for (std::size_t a = 0; a < n; ++a)
          table_[a * n + bg] = gcol[k][table_[a * n + b]];
        queue.push_back(bg);
      }
    }
    if (std::find(done.begin(), done.end(), 0) != done.end())
      fail(ErrorKind::Internal, "generators do not generate the element list");
  } else if (!gens_.empty()) {
    // Check generation by BFS over indices.
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<Idx> queue{0};
    IdxVec gidx;
    for (const auto& g : gens_) gidx.push_back(*find(g));
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (Idx gi : gidx) {
        auto j = find(elems_[queue[qi]] * elems_[gi]);
        if (!j) fail(ErrorKind::Internal, "element list not closed");
        if (!seen[*j]) { seen[*j] = 1; queue.push_back(*j); }
      }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      fail(ErrorKind::Internal, "generators do not generate the element list");
  }
}

IdxVec FiniteGroup::generator_indices() const {
  IdxVec out;
  for (const auto& g : gens_) out.push_back(index_of(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Idx> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return std::nullopt;
  return static_cast<Idx>(it - elems_.begin());
}

Idx FiniteGroup::index_of(const Permutation& p) const {
  auto i = find(p);
  if (!i) fail(ErrorKind::ForeignElement, "element not in group");
  return *i;
}

bool FiniteGroup::commutes(Idx a, Idx b) const {
  if (!table_.empty()) return mult(a, b) == mult(b, a);
  const auto& pa = elems_[a].images();
  const auto& pb = elems_[b].images();
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pb[pa[i]] != pa[pb[i]]) return false;
  return true;
}

Idx FiniteGroup::pow(Idx a, std::uint64_t e) const {
  std::uint64_t ord = orders_[a];
  e %= ord;
  Idx acc = 0;
  Idx base = a;
  while (e > 0) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {0}}; }

Subgroup full_subgroup(const FiniteGroup& G) {
  IdxVec all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{&G, std::move(all)};
}

Subgroup subgroup_from_indices(const FiniteGroup& G, IdxVec idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty() || idx.front() != 0)
    fail(ErrorKind::Internal, "subgroup lacks the identity");
  if (!idx.empty() && idx.back() >= G.order())
    fail(ErrorKind::ForeignElement, "index outside ambient group");
  if (G.order() % idx.size() != 0)
    fail(ErrorKind::Internal, "Lagrange violation");
  for (Idx a : idx)
    if (!set_contains(idx, G.inv(a)))
      fail(ErrorKind::Internal, "subgroup not inverse-closed");
  const std::size_t budget = 1u << 20;
  if (idx.size() * idx.size() <= budget) {
    for (Idx a : idx)
      for (Idx b : idx)
        if (!set_contains(idx, G.mult(a, b)))
          fail(ErrorKind::Internal, "subgroup not closed");
  } else {
    const std::size_t step = std::max<std::size_t>(1, idx.size() / 256);
    for (std::size_t i = 0; i < idx.size(); i += step)
      for (std::size_t j = 0; j < idx.size(); j += step)
        if (!set_contains(idx, G.mult(idx[i], idx[j])))
          fail(ErrorKind::Internal, "subgroup not closed");
  }
  return Subgroup{&G, std::move(idx)};
}

Subgroup subgroup_generated(const FiniteGroup& G, const IdxVec& seed) {
  for (Idx s : seed)
    if (s >= G.order())
      fail(ErrorKind::ForeignElement, "seed element outside group");
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  IdxVec members{0};
  // Incremental closure: seed elements already absorbed cost nothing, so the
  // worklist restarts only when a genuinely new generator arrives.
  IdxVec gens;
  for (Idx s : seed) {
    if (in[s]) continue;
    gens.push_back(s);
    in[s] = 1;
    members.push_back(s);
    std::vector<Idx> queue(members);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (Idx g : gens) {
        Idx t = G.mult(queue[qi], g);
        if (!in[t]) {
          in[t] = 1;
          members.push_back(t);
          queue.push_back(t);
        }
      }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&G, std::move(members)};
}

Subgroup subgroup_generated_perms(const FiniteGroup& G,
                                  const std::vector<Permutation>& seed) {
  IdxVec idx;
  for (const auto& p : seed) idx.push_back(G.index_of(p));
  return subgroup_generated(G, idx);
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, Idx g) {
  IdxVec out;
  out.reserve(H.idx.size());
  for (Idx h : H.idx) out.push_back(G.conj(h, g));
  std::sort(out.begin(), out.end());
  return Subgroup{&G, std::move(out)};
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  return normalizer_in(G, full_subgroup(G), H);
}

Subgroup normalizer_in(const FiniteGroup& G, const Subgroup& ambient,
                       const Subgroup& H) {
  IdxVec out;
  for (Idx g : ambient.idx) {
    bool ok = true;
    for (Idx h : H.idx)
      if (!H.contains(G.conj(h, g))) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return Subgroup{&G, std::move(out)};
}

Subgroup centralizer(const FiniteGroup& G, const IdxVec& xs) {
  return centralizer_in(G, full_subgroup(G), xs);
}

Subgroup centralizer_in(const FiniteGroup& G, const Subgroup& ambient,
                        const IdxVec& xs) {
  IdxVec out;
  for (Idx g : ambient.idx) {
    bool ok = true;
    for (Idx x : xs)
      if (!G.commutes(g, x)) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return Subgroup{&G, std::move(out)};
}

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) {
  IdxVec comms;
  for (Idx a : H.idx)
    for (Idx b : H.idx) {
      Idx c = G.mult(G.mult(a, b), G.mult(G.inv(a), G.inv(b)));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(G, comms);
}

bool is_normal_in(const FiniteGroup& G, const Subgroup& N, const Subgroup& H) {
  for (Idx g : H.idx)
    for (Idx n : N.idx)
      if (!N.contains(G.conj(n, g))) return false;
  return true;
}

IdxVec product_set(const FiniteGroup& G, const IdxVec& A, const IdxVec& B) {
  std::vector<char> in(G.order(), 0);
  IdxVec out;
  for (Idx a : A)
    for (Idx b : B) {
      Idx t = G.mult(a, b);
      if (!in[t]) { in[t] = 1; out.push_back(t); }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientGroup::QuotientGroup(const FiniteGroup& G, const Subgroup& H,
                             const Subgroup& N)
    : parent_(&G), grp_(H), nrm_(N) {
  if (!set_subset(N.idx, H.idx))
    fail(ErrorKind::NotNormal, "normal subgroup not contained in group");
  if (!is_normal_in(G, N, H))
    fail(ErrorKind::NotNormal, "subgroup is not normal");
  const std::size_t hn = H.idx.size();
  coset_of_.assign(hn, static_cast<Idx>(-1));
  auto pos_of = [&](Idx e) {
    auto it = std::lower_bound(H.idx.begin(), H.idx.end(), e);
    return static_cast<std::size_t>(it - H.idx.begin());
  };
  for (std::size_t i = 0; i < hn; ++i) {
    if (coset_of_[i] != static_cast<Idx>(-1)) continue;
    Idx c = static_cast<Idx>(reps_.size());
    reps_.push_back(H.idx[i]);  // least index in the coset, since i ascends
    for (Idx n : nrm_.idx) {
      Idx e = G.mult(n, H.idx[i]);  // coset N*h
      coset_of_[pos_of(e)] = c;
    }
  }
  const std::size_t c = reps_.size();
  if (c * nrm_.idx.size() != hn)
    fail(ErrorKind::Internal, "coset partition size mismatch");
  table_.resize(c * c);
  inv_.resize(c);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      table_[a * c + b] = coset_of_[pos_of(G.mult(reps_[a], reps_[b]))];
  for (std::size_t a = 0; a < c; ++a)
    inv_[a] = coset_of_[pos_of(G.inv(reps_[a]))];
}

std::uint64_t QuotientGroup::element_order(Idx a) const {
  std::uint64_t ord = 1;
  Idx t = a;
  while (t != 0) {
    t = mult(t, a);
    ++ord;
  }
  return ord;
}

Idx QuotientGroup::coset_of(Idx parent_element) const {
  auto it =
      std::lower_bound(grp_.idx.begin(), grp_.idx.end(), parent_element);
  if (it == grp_.idx.end() || *it != parent_element)
    fail(ErrorKind::ForeignElement, "element not in quotient domain");
  return coset_of_[static_cast<std::size_t>(it - grp_.idx.begin())];
}

FiniteGroup QuotientGroup::to_group(std::string name) const {
  const std::size_t c = order();
  std::vector<Permutation> elems;
  elems.reserve(c);
  for (std::size_t b = 0; b < c; ++b) {
    std::vector<std::uint16_t> img(c);
    for (std::size_t a = 0; a < c; ++a)
      img[a] = static_cast<std::uint16_t>(table_[a * c + b]);
    elems.push_back(Permutation(std::move(img)));
  }
  std::vector<Permutation> gens = elems;  // whole list generates
  return FiniteGroup::from_elements(c, std::move(elems), std::move(gens),
                                    std::move(name));
}

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N) {
  return QuotientGroup(G, full_subgroup(G), N);
}

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& H,
                       const Subgroup& N) {
  return QuotientGroup(G, H, N);
}

// ---------------------------------------------------------------------------
// Abstract view + abelian invariants

Idx AbstractGroup::inverse(Idx a) const {
  Idx t = a, prev = id;
  while (t != id) { prev = t; t = mul(t, a); }
  return a == id ? id : prev;
}

std::uint64_t AbstractGroup::element_order(Idx a) const {
  std::uint64_t ord = 1;
  Idx t = a;
  while (t != id) { t = mul(t, a); ++ord; }
  return ord;
}

Idx AbstractGroup::pow(Idx a, std::uint64_t e) const {
  Idx acc = id, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

AbstractGroup as_abstract(const FiniteGroup& G) {
  return AbstractGroup{G.order(),
                       [&G](Idx a, Idx b) { return G.mult(a, b); }, 0};
}

AbstractGroup as_abstract(const QuotientGroup& Q) {
  return AbstractGroup{Q.order(),
                       [&Q](Idx a, Idx b) { return Q.mult(a, b); }, 0};
}

AbstractGroup as_abstract(const FiniteGroup& G, const Subgroup& H) {
  const Subgroup* Hp = &H;
  const FiniteGroup* Gp = &G;
  return AbstractGroup{
      H.idx.size(),
      [Gp, Hp](Idx a, Idx b) {
        Idx t = Gp->mult(Hp->idx[a], Hp->idx[b]);
        auto it = std::lower_bound(Hp->idx.begin(), Hp->idx.end(), t);
        return static_cast<Idx>(it - Hp->idx.begin());
      },
      0};
}

std::vector<std::uint64_t> abelian_invariants(const AbstractGroup& A) {
  const std::size_t n = A.size;
  if (n == 0) fail(ErrorKind::Internal, "empty group");
  for (Idx a = 0; a < n; ++a)
    for (Idx b = static_cast<Idx>(a + 1); b < n; ++b)
      if (A.mul(a, b) != A.mul(b, a))
        fail(ErrorKind::NotAbelian, "group is not abelian");
  if (n == 1) return {};
  std::vector<std::uint64_t> ords(n);
  for (Idx a = 0; a < n; ++a) ords[a] = A.element_order(a);
  // Per prime, recover the partition (e1 >= e2 >= ...) from the counts of
  // elements of order dividing p^k.
  std::vector<std::vector<unsigned>> primary;  // exponent lists, descending
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    std::vector<std::uint64_t> s;  // s[k] = log_p #{a : ord(a) | p^k}
    s.push_back(0);
    for (unsigned k = 1;; ++k) {
      std::uint64_t pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      std::uint64_t cnt = 0;
      for (Idx a = 0; a < n; ++a)
        if (pk % ords[a] == 0) ++cnt;
      std::uint64_t lg = 0, t = cnt;
      while (t > 1) { t /= p; ++lg; }
      s.push_back(lg);
      if (cnt == p_part(n, p)) break;
    }
    std::vector<unsigned> exps;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::uint64_t mult_k = s[k] - s[k - 1];  // #{i : e_i >= k}
      while (exps.size() < mult_k) exps.push_back(0);
      for (std::uint64_t i = 0; i < mult_k; ++i) ++exps[i];
    }
    std::sort(exps.rbegin(), exps.rend());
    primary.push_back(exps);
    primes.push_back(p);
  }
  std::size_t rank = 0;
  for (const auto& e : primary) rank = std::max(rank, e.size());
  std::vector<std::uint64_t> inv(rank, 1);  // inv[0] largest
  for (std::size_t pi = 0; pi < primary.size(); ++pi)
    for (std::size_t i = 0; i < primary[pi].size(); ++i) {
      std::uint64_t q = 1;
      for (unsigned k = 0; k < primary[pi][i]; ++k) q *= primes[pi];
      inv[i] *= q;
    }
  std::reverse(inv.begin(), inv.end());  // ascending, d1 | d2 | ...
  std::uint64_t prod = 1;
  for (auto d : inv) prod *= d;
  if (prod != n) fail(ErrorKind::Internal, "invariant factor product mismatch");
  return inv;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G) {
  return abelian_invariants(as_abstract(G));
}

std::vector<std::uint64_t> abelian_invariants(const QuotientGroup& Q) {
  return abelian_invariants(as_abstract(Q));
}

std::vector<std::uint64_t> abelianization_invariants(const FiniteGroup& G,
                                                     const Subgroup& H) {
  Subgroup D = derived_subgroup(G, H);
  QuotientGroup Q(G, H, D);
  return abelian_invariants(Q);
}

FiniteGroup as_group(const FiniteGroup& G, const Subgroup& H,
                     std::string name) {
  std::vector<Permutation> elems;
  elems.reserve(H.idx.size());
  for (Idx i : H.idx) elems.push_back(G.element(i));
  std::vector<Permutation> gens = elems;
  return FiniteGroup::from_elements(G.degree(), std::move(elems),
                                    std::move(gens), std::move(name));
}

}  // namespace etmod
