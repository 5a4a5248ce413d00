#include "etmod/metacyclic.hpp"

#include <algorithm>
#include <set>

#include "etmod/fusion.hpp"

namespace etmod {

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  b %= mod;
  while (e > 0) {
    if (e & 1) acc = acc * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return acc;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t mod) {
  // extended euclid; a must be a unit
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(mod), newr = static_cast<long long>(a % mod);
  while (newr != 0) {
    long long qt = r / newr;
    std::swap(t, newt); newt -= qt * t;
    std::swap(r, newr); newr -= qt * r;
  }
  if (r != 1) fail(ErrorKind::Internal, "modinv of non-unit");
  long long m = static_cast<long long>(mod);
  return static_cast<std::uint64_t>(((t % m) + m) % m);
}

}  // namespace

std::uint64_t MetacyclicParams::pm() const { return ipow(p, m); }
std::uint64_t MetacyclicParams::pn() const { return ipow(p, n); }

void MetacyclicParams::validate() const {
  if (!is_prime(p) || p == 2)
    fail(ErrorKind::BadParameters, "p must be an odd prime");
  if (m < 1 || n < 1 || l < 1 || q < 1)
    fail(ErrorKind::BadParameters, "exponents must be positive");
  if (l > m || q > m)
    fail(ErrorKind::BadParameters, "constraint l, q <= m violated");
  if (m > l + n)
    fail(ErrorKind::BadParameters, "constraint m <= l + n violated");
  if (modpow(1 + ipow(p, l), pn(), pm()) != 1)
    fail(ErrorKind::BadParameters,
         "congruence (1+p^l)^(p^n) = 1 mod p^m violated");
  if (q + l < m)
    fail(ErrorKind::BadParameters, "congruence p^(q+l) = 0 mod p^m violated");
}

NFArith::NFArith(const MetacyclicParams& P) : P_(P) {
  P_.validate();
  pm_ = P_.pm();
  pn_ = P_.pn();
  pq_ = ipow(P_.p, P_.q);
  cpow_.resize(pn_);
  const std::uint64_t r = (1 + ipow(P_.p, P_.l)) % pm_;
  cpow_[0] = 1 % pm_;
  for (std::uint64_t j = 1; j < pn_; ++j) cpow_[j] = cpow_[j - 1] * r % pm_;
}

NF NFArith::mult(NF a, NF b) const {
  // x^i y^j * x^s y^t = x^(i + s*(1+p^l)^j) y^(j+t), folding y^(p^n) = x^(p^q)
  // (a central element) back into the x exponent.
  std::uint64_t jt = a.second + b.second;
  std::uint64_t carry = jt / pn_;
  std::uint64_t i = (a.first + b.first * cpow_[a.second] + carry * pq_) % pm_;
  return {i, jt % pn_};
}

NF NFArith::inverse(NF a) const {
  std::uint64_t bj = (pn_ - a.second) % pn_;
  std::uint64_t carry = (a.second + bj) / pn_;
  // solve i + bi*cpow[j] + carry*p^q = 0 mod p^m
  std::uint64_t bi =
      (pm_ - (a.first + carry * pq_) % pm_) % pm_ * modinv(cpow_[a.second], pm_) % pm_;
  return {bi, bj};
}

NF NFArith::pow(NF a, std::uint64_t e) const {
  NF acc{0, 0}, base = a;
  while (e > 0) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
    e >>= 1;
  }
  return acc;
}

NF MetacyclicGroup::nf_of(Idx element) const {
  // Right-regular realization: the image of point 0 encodes the element.
  std::uint64_t pt = group.element(element)[0];
  return {pt % params.pm(), pt / params.pm()};
}

Idx MetacyclicGroup::element_of(NF w) const {
  std::uint64_t pt = w.first % params.pm() + params.pm() * (w.second % params.pn());
  // Elements are lex-sorted, and in a regular realization they are already
  // ordered (and distinguished) by the image of point 0.
  const auto& els = group.elements();
  auto it = std::lower_bound(
      els.begin(), els.end(), pt,
      [](const Permutation& e, std::uint64_t v) { return e[0] < v; });
  if (it == els.end() || (*it)[0] != pt)
    fail(ErrorKind::Internal, "normal form lookup failed");
  return static_cast<Idx>(it - els.begin());
}

MetacyclicGroup construct_metacyclic(const MetacyclicParams& P,
                                     std::string name) {
  P.validate();
  NFArith nf(P);
  const std::uint64_t pm = P.pm(), pn = P.pn(), order = pm * pn;
  if (order > FiniteGroup::kDefaultCap)
    fail(ErrorKind::CapExceeded, "metacyclic group exceeds element cap");
  auto encode = [pm](NF w) {
    return static_cast<std::uint16_t>(w.first + pm * w.second);
  };
  auto realize = [&](NF g) {
    std::vector<std::uint16_t> img(order);
    for (std::uint64_t t = 0; t < pn; ++t)
      for (std::uint64_t s = 0; s < pm; ++s)
        img[s + pm * t] = encode(nf.mult({s, t}, g));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> elems;
  elems.reserve(order);
  for (std::uint64_t j = 0; j < pn; ++j)
    for (std::uint64_t i = 0; i < pm; ++i) elems.push_back(realize({i, j}));
  Permutation px = realize({1, 0});
  Permutation py = realize({0, 1});
  if (name.empty())
    name = "mc(" + std::to_string(P.p) + "," + std::to_string(P.m) + "," +
           std::to_string(P.n) + "," + std::to_string(P.l) + "," +
           std::to_string(P.q) + ")";
  FiniteGroup G = FiniteGroup::from_elements(order, std::move(elems), {px, py},
                                             std::move(name));
  MetacyclicGroup M{std::move(G), P, 0, 0};
  M.x = M.group.index_of(px);
  M.y = M.group.index_of(py);
  // Relation verification on the realization.
  if (M.group.order() != order)
    fail(ErrorKind::Internal, "metacyclic realization has wrong order");
  if (M.group.pow(M.x, pm) != M.group.identity() ||
      M.group.element_order(M.x) != pm)
    fail(ErrorKind::Internal, "x relation failed");
  if (M.group.pow(M.y, pn) != M.group.pow(M.x, ipow(P.p, P.q)))
    fail(ErrorKind::Internal, "power relation failed");
  if (M.group.conj(M.x, M.y) != M.group.pow(M.x, 1 + ipow(P.p, P.l)))
    fail(ErrorKind::Internal, "conjugation relation failed");
  return M;
}

std::pair<std::uint64_t, std::uint64_t> power_rule(std::uint64_t a,
                                                   std::uint64_t c,
                                                   std::uint64_t alpha,
                                                   const MetacyclicParams& P) {
  if (!P.split()) fail(ErrorKind::NotSplit, "power rule requires q = m");
  const std::uint64_t pm = P.pm(), pn = P.pn();
  const std::uint64_t r = modpow(1 + ipow(P.p, P.l), c, pm);
  std::uint64_t sum = 0, term = 1;
  for (std::uint64_t i = 0; i < alpha; ++i) {
    sum = (sum + term) % pm;
    term = term * r % pm;
  }
  return {a % pm * sum % pm, alpha % pn * (c % pn) % pn};
}

MetacyclicStructure structural_data(const FiniteGroup& G, const Subgroup& S,
                                    Idx x, Idx y, const MetacyclicParams& P) {
  const std::uint64_t p = P.p;
  MetacyclicStructure out;
  // closed forms
  Idx zx = G.pow(x, ipow(p, P.m - P.l));
  Idx zy = G.pow(y, ipow(p, P.m - P.l));
  Subgroup Zc = subgroup_generated(G, {zx, zy});
  Idx e1 = G.pow(x, ipow(p, P.m - 1));
  Idx e2 = G.mult(G.pow(x, P.pm() - ipow(p, P.q - 1)), G.pow(y, ipow(p, P.n - 1)));
  Subgroup Ec = subgroup_generated(G, {e1, e2});
  // scans
  Subgroup Zs = centralizer_in(G, S, {x, y});
  Subgroup Es = omega1(G, S, p);
  if (!(Zc == Zs))
    fail(ErrorKind::FormulaMismatch, "center closed form disagrees with scan");
  if (!(Ec == Es))
    fail(ErrorKind::FormulaMismatch, "omega1 closed form disagrees with scan");
  Subgroup CSEs = centralizer_in(G, S, {e1, e2});
  out.Z = Zs;
  out.E = Es;
  out.CSE = CSEs;
  out.e_central = set_subset(Es.idx, Zs.idx);
  bool z_cyclic = false;
  for (Idx g : Zs.idx)
    if (G.element_order(g) == Zs.idx.size()) { z_cyclic = true; break; }
  out.z_cyclic = z_cyclic;
  // C_S(E) closed form: S when E is central, else index-p subgroup generated
  // by (x^p, y) in the split case and (x, y^p) in the nonsplit case.
  Subgroup CSEc = out.e_central
                      ? S
                      : (P.split()
                             ? subgroup_generated(G, {G.pow(x, p), y})
                             : subgroup_generated(G, {x, G.pow(y, p)}));
  if (!(CSEc == CSEs))
    fail(ErrorKind::FormulaMismatch, "C_S(E) closed form disagrees with scan");
  if (P.canonical()) {
    bool noncentral_predicted =
        P.split() ? (P.m == P.n + P.l) : (P.q + P.l == P.m);
    if (noncentral_predicted == out.e_central ||
        out.z_cyclic != noncentral_predicted)
      fail(ErrorKind::FormulaMismatch,
           "centrality criterion disagrees with scan");
  }
  return out;
}

MetacyclicStructure structural_data(const MetacyclicGroup& M) {
  return structural_data(M.group, full_subgroup(M.group), M.x, M.y, M.params);
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

unsigned log_p(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n > 1) { n /= p; ++e; }
  return e;
}

struct Candidate {
  MetacyclicParams P;
  Idx x, y;
  // split first, then canonical nonsplit shape, then least parameters and
  // generators
  std::array<std::uint64_t, 8> key() const {
    return {P.split() ? 0ull : 1ull, P.canonical() ? 0ull : 1ull, P.m, P.n,
            P.l,       P.q,           x,   y};
  }
};

}  // namespace

RecognitionResult recognize_metacyclic(const FiniteGroup& G, const Subgroup& P,
                                       std::uint64_t p, std::size_t cap) {
  RecognitionResult res;
  const std::size_t n = P.idx.size();
  if (p_part(n, p) != n) fail(ErrorKind::NotPGroup, "not a p-group");
  if (n > cap) fail(ErrorKind::CapExceeded, "recognition cap exceeded");
  for (Idx g : P.idx)
    if (G.element_order(g) == n) {
      res.kind = SylowShape::Cyclic;
      res.x = g;
      return res;
    }
  if (n == 1) {
    res.kind = SylowShape::Cyclic;
    return res;
  }
  // cyclic subgroups, deduplicated
  std::set<IdxVec> cyclic;
  for (Idx g : P.idx) cyclic.insert(subgroup_generated(G, {g}).idx);
  std::vector<Candidate> cands;
  for (const IdxVec& cv : cyclic) {
    if (cv.size() == 1 || cv.size() == n) continue;
    Subgroup C{&G, cv};
    if (!is_normal_in(G, C, P)) continue;
    QuotientGroup Q(G, P, C);
    const std::uint64_t qn = Q.order();
    bool qcyc = false;
    for (Idx c = 0; c < qn; ++c)
      if (Q.element_order(c) == qn) { qcyc = true; break; }
    if (!qcyc) continue;
    const unsigned em = log_p(cv.size(), p);
    const unsigned en = log_p(qn, p);
    const std::uint64_t pm = ipow(p, em), pn = ipow(p, en);
    // canonical generator of C
    Idx x0 = 0;
    for (Idx c : cv)
      if (G.element_order(c) == cv.size()) { x0 = c; break; }
    for (Idx y0 : P.idx) {
      if (Q.element_order(Q.coset_of(y0)) != qn) continue;
      // conjugation exponent
      Idx t = G.conj(x0, y0);
      std::uint64_t e = 0;
      {
        Idx cur = 0;
        bool okdl = false;
        for (std::uint64_t k = 0; k < cv.size(); ++k) {
          if (cur == t) { e = k; okdl = true; break; }
          cur = G.mult(cur, x0);
        }
        if (!okdl) continue;
      }
      unsigned el;
      Idx yhat = y0;
      if (e == 1) {
        el = em;  // abelian pair
      } else {
        el = valuation(e - 1, p);
        if (el == 0 || el >= em) continue;
        // replace y by a power so the exponent becomes exactly 1 + p^el
        const std::uint64_t target = (1 + ipow(p, el)) % pm;
        std::uint64_t cur = e, j = 1;
        bool okj = false;
        for (; j <= pm; ++j) {
          if (cur == target) { okj = true; break; }
          cur = cur * e % pm;
        }
        if (!okj || j % p == 0) continue;
        yhat = G.pow(y0, j);
      }
      // power relation
      Idx wv = G.pow(yhat, pn);
      std::uint64_t s = 0;
      {
        Idx cur = 0;
        bool okdl = false;
        for (std::uint64_t k = 0; k < cv.size(); ++k) {
          if (cur == wv) { s = k; okdl = true; break; }
          cur = G.mult(cur, x0);
        }
        if (!okdl) continue;
      }
      unsigned eq;
      Idx xhat = x0;
      if (s == 0) {
        eq = em;
      } else {
        eq = valuation(s, p);
        if (eq == 0 || eq > em) continue;
        xhat = G.pow(x0, s / ipow(p, eq));
        if (G.element_order(xhat) != pm) continue;
      }
      MetacyclicParams MP{p, em, en, el, eq};
      if (el > em || eq > em || em > el + en || eq + el < em) continue;
      if (modpow(1 + ipow(p, el), pn, pm) != 1) continue;
      // final relation check
      if (G.conj(xhat, yhat) != G.pow(xhat, 1 + ipow(p, el))) continue;
      if (G.pow(yhat, pn) != G.pow(xhat, ipow(p, eq))) continue;
      cands.push_back(Candidate{MP, xhat, yhat});
    }
  }
  if (cands.empty()) {
    res.kind = SylowShape::NotMetacyclic;
    return res;
  }
  const Candidate* best = &cands[0];
  for (const auto& c : cands)
    if (c.key() < best->key()) best = &c;
  res.kind = SylowShape::Metacyclic;
  res.params = best->P;
  res.x = best->x;
  res.y = best->y;
  return res;
}

// ---------------------------------------------------------------------------
// Automorphism search

namespace {

// Normal-form table over S: position i + p^m * j holds the element index of
// x^i y^j; plus the inverse map.
struct NFTable {
  std::uint64_t pm, pn;
  std::vector<Idx> elt;                 // (i,j) -> ambient element index
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nf_by_pos;  // S pos -> (i,j)
};

NFTable build_nf_table(const FiniteGroup& G, const Subgroup& S, Idx x, Idx y,
                       const MetacyclicParams& P) {
  NFTable T;
  T.pm = P.pm();
  T.pn = P.pn();
  T.elt.assign(T.pm * T.pn, 0);
  T.nf_by_pos.assign(S.idx.size(), {0, 0});
  Idx ypow = 0;
  for (std::uint64_t j = 0; j < T.pn; ++j) {
    Idx cur = ypow;  // walk x^i y^j = x * (x^(i-1) y^j)
    for (std::uint64_t i = 0; i < T.pm; ++i) {
      T.elt[i + T.pm * j] = cur;
      auto it = std::lower_bound(S.idx.begin(), S.idx.end(), cur);
      if (it == S.idx.end() || *it != cur)
        fail(ErrorKind::Internal, "normal form escapes subgroup");
      T.nf_by_pos[static_cast<std::size_t>(it - S.idx.begin())] = {i, j};
      cur = G.mult(x, cur);  // x^(i+1) y^j
    }
    ypow = G.mult(ypow, y);
  }
  return T;
}

}  // namespace

AutActionData aut_action(const FiniteGroup& G, const Subgroup& S, Idx x, Idx y,
                         const MetacyclicParams& P, Idx x_image, Idx y_image) {
  NFTable T = build_nf_table(G, S, x, y, P);
  auto decode = [&](Idx e) {
    auto it = std::lower_bound(S.idx.begin(), S.idx.end(), e);
    if (it == S.idx.end() || *it != e)
      fail(ErrorKind::ForeignElement, "image outside subgroup");
    return T.nf_by_pos[static_cast<std::size_t>(it - S.idx.begin())];
  };
  auto xi = decode(x_image);
  auto yi = decode(y_image);
  return AutActionData{xi.first, yi.first, xi.second, yi.second};
}

bool aut_shape_ok(const MetacyclicParams& P, const AutActionData& A) {
  const std::uint64_t p = P.p;
  const std::uint64_t det =
      (A.a % p * (A.d % p) % p + p * p - A.b % p * (A.c % p) % p) % p;
  if (det == 0) return false;
  if (P.l < P.m) {
    if (P.n > P.l) {
      if (A.c % ipow(p, P.n - P.l) != 0) return false;
      if (A.d % p != 1 || A.a % p == 0) return false;
    } else {
      if (P.m > P.n && A.b % ipow(p, P.m - P.n) != 0) return false;
      if (A.d % p != 1 || A.a % p == 0) return false;
    }
  } else {
    // abelian: only the order-preservation congruences apply
    if (P.n > P.m && A.c % ipow(p, P.n - P.m) != 0) return false;
    if (P.m > P.n && A.b % ipow(p, P.m - P.n) != 0) return false;
  }
  return true;
}

AutSearchResult pprime_automorphism(const FiniteGroup& S, Idx x, Idx y,
                                    const MetacyclicParams& P,
                                    std::size_t cap) {
  AutSearchResult res;
  if (S.order() > cap)
    fail(ErrorKind::CapExceeded, "automorphism search cap exceeded");
  const std::uint64_t p = P.p;
  const std::uint64_t ordx = S.element_order(x), ordy = S.element_order(y);
  const std::uint64_t conj_exp = 1 + ipow(p, P.l);
  const std::uint64_t pq = ipow(p, P.q);
  Subgroup full = full_subgroup(S);
  Subgroup Phi = frattini_subgroup(S, full, p);
  QuotientGroup Frat(S, full, Phi);
  IdxVec xs, ys;
  for (Idx g = 0; g < S.order(); ++g) {
    if (S.element_order(g) == ordx) xs.push_back(g);
    if (S.element_order(g) == ordy) ys.push_back(g);
  }
  // generator columns for the word propagation
  std::vector<Idx> found_map;
  for (Idx fx : xs) {
    Idx fx_pow_conj = S.pow(fx, conj_exp);
    Idx fx_pow_q = S.pow(fx, pq);
    for (Idx fy : ys) {
      if (S.conj(fx, fy) != fx_pow_conj) continue;
      if (S.pow(fy, P.pn()) != fx_pow_q) continue;
      ++res.searched;
      // surjectivity via the Frattini quotient
      {
        AbstractGroup FQ = as_abstract(Frat);
        Idx ca = Frat.coset_of(fx), cb = Frat.coset_of(fy);
        std::vector<char> in(FQ.size, 0);
        in[0] = 1;
        std::vector<Idx> mem{0};
        for (std::size_t qi = 0; qi < mem.size(); ++qi) {
          for (Idx g : {ca, cb}) {
            Idx t = FQ.mul(mem[qi], g);
            if (!in[t]) { in[t] = 1; mem.push_back(t); }
          }
        }
        if (mem.size() != FQ.size) continue;
      }
      // The relations define the group, so a relation-preserving surjection
      // is an automorphism; build it by word propagation.
      std::vector<Idx> map(S.order(), static_cast<Idx>(-1));
      map[0] = 0;
      std::vector<Idx> queue{0};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Idx e = queue[qi];
        for (int k = 0; k < 2; ++k) {
          Idx eg = S.mult(e, k == 0 ? x : y);
          if (map[eg] == static_cast<Idx>(-1)) {
            map[eg] = S.mult(map[e], k == 0 ? fx : fy);
            queue.push_back(eg);
          }
        }
      }
      std::vector<char> hit(S.order(), 0);
      bool bij = true;
      for (Idx v : map) {
        if (v == static_cast<Idx>(-1) || hit[v]) { bij = false; break; }
        hit[v] = 1;
      }
      if (!bij) continue;
      std::vector<std::uint16_t> img(map.begin(), map.end());
      std::uint64_t ord = Permutation(std::move(img)).order();
      if (ord > 1 && ord % p != 0) {
        res.found = true;
        res.x_image = fx;
        res.y_image = fy;
        res.aut_order = ord;
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Local table

LocalSubgroupTable local_table(const PLocalContext& ctx, Idx x, Idx y,
                               const MetacyclicParams& P) {
  const FiniteGroup& G = *ctx.G;
  const std::uint64_t p = ctx.p;
  if (!P.split() || P.m != P.n + P.l || p == 2)
    fail(ErrorKind::HypothesisFailed,
         "local table requires split S with E noncentral, p odd");
  auto core = strongly_embedded_core(ctx);
  if (core.proper)
    fail(ErrorKind::StronglyEmbeddedProper,
         "local table requires G with no proper strongly p-embedded subgroup");
  LocalSubgroupTable T;
  T.z = G.pow(x, ipow(p, P.m - 1));
  T.u = G.pow(y, ipow(p, P.n - 1));
  T.E = subgroup_generated(G, {T.z, T.u});
  T.Z = subgroup_generated(G, {T.z});
  if (T.E.order() != p * p || T.Z.order() != p)
    fail(ErrorKind::Internal, "E or Z has unexpected order");
  T.SE = centralizer_in(G, ctx.S, {T.z, T.u});
  Subgroup cse_closed = subgroup_generated(G, {G.pow(x, p), y});
  if (!(cse_closed == T.SE))
    fail(ErrorKind::FormulaMismatch, "C_S(E) closed form disagrees");
  for (std::uint64_t j = 0; j < p; ++j)
    T.Q.push_back(subgroup_generated(G, {G.mult(T.u, G.pow(T.z, j))}));
  for (std::uint64_t j = 0; j < p; ++j) {
    Subgroup conj = conjugate_subgroup(G, T.Q[j], x);
    if (!(conj == T.Q[(j + 1) % p]))
      fail(ErrorKind::FormulaMismatch, "x does not cycle the Q_j");
  }
  // w: a preimage of a generator of N/SC_G(S)
  Subgroup CGS = centralizer_in(G, full_subgroup(G), {x, y});
  Subgroup SC = subgroup_generated(G, set_union(ctx.S.idx, CGS.idx));
  QuotientGroup outq(G, ctx.N, SC);
  T.w = G.identity();
  if (outq.order() > 1) {
    for (Idx g : ctx.N.idx)
      if (outq.element_order(outq.coset_of(g)) == outq.order()) {
        T.w = g;
        break;
      }
    if ((ctx.p - 1) % outq.order() != 0)
      fail(ErrorKind::FormulaMismatch, "outer part not of order dividing p-1");
  }
  if (!(subgroup_generated(G, set_union(SC.idx, {T.w})) == ctx.N))
    fail(ErrorKind::FormulaMismatch, "N_G(S) != S C_G(S) <w>");
  // action of w on z and u
  AutActionData act = aut_action(G, ctx.S, x, y, P, G.conj(x, T.w),
                                 G.conj(y, T.w));
  if (act.b % ipow(p, P.l) != 0 || act.c % ipow(p, P.n > P.l ? P.n - P.l : 0) != 0 ||
      act.d != 1)
    fail(ErrorKind::FormulaMismatch, "w action violates the constraint shape");
  if (G.conj(T.z, T.w) != G.pow(T.z, act.a) || G.conj(T.u, T.w) != T.u)
    fail(ErrorKind::FormulaMismatch, "w action on z, u unexpected");
  // normalizers and centralizers
  T.NE = normalizer(G, T.E);
  T.NZ = normalizer(G, T.Z);
  T.CZ = centralizer(G, T.Z.idx);
  T.CE = centralizer(G, T.E.idx);
  for (std::uint64_t j = 0; j < p; ++j) {
    T.NQ.push_back(normalizer(G, T.Q[j]));
    T.CQ.push_back(centralizer(G, T.Q[j].idx));
  }
  // the table of containments
  if (!(T.NE == subgroup_generated(G, set_union(set_union(T.CE.idx, ctx.S.idx),
                                                {T.w}))))
    fail(ErrorKind::FormulaMismatch, "N_G(E) != C_G(E) S <w>");
  if (!(T.NZ == subgroup_generated(G, set_union(T.CZ.idx, {T.w}))))
    fail(ErrorKind::FormulaMismatch, "N_G(Z) != C_G(Z) <w>");
  for (std::uint64_t j = 0; j < p; ++j)
    if (!(T.NQ[j] == T.CQ[j]))
      fail(ErrorKind::FormulaMismatch, "N_G(Q_j) != C_G(Q_j)");
  Subgroup lower = subgroup_generated(
      G, set_union(set_union(T.SE.idx, CGS.idx), {T.w}));
  if (!set_subset(lower.idx, T.CQ[0].idx))
    fail(ErrorKind::FormulaMismatch, "S_E C_G(S) <w> not inside C_G(Q_0)");
  return T;
}

FiniteGroup extend_by_automorphism(const MetacyclicGroup& M, NF x_image,
                                   NF y_image, std::string name) {
  const MetacyclicParams& P = M.params;
  NFArith nf(P);
  // relation preservation
  if (nf.pow(x_image, P.pm()) != NF{0, 0})
    fail(ErrorKind::BadParameters, "x image violates x^(p^m) = 1");
  if (nf.pow(y_image, P.pn()) != nf.pow(x_image, ipow(P.p, P.q)))
    fail(ErrorKind::BadParameters, "y image violates the power relation");
  NF lhs = nf.mult(nf.mult(y_image, x_image), nf.inverse(y_image));
  if (lhs != nf.pow(x_image, 1 + ipow(P.p, P.l)))
    fail(ErrorKind::BadParameters, "images violate the conjugation relation");
  const std::uint64_t pm = P.pm(), order = P.group_order();
  std::vector<std::uint16_t> img(order);
  for (std::uint64_t j = 0; j < P.pn(); ++j)
    for (std::uint64_t i = 0; i < pm; ++i) {
      NF w = nf.mult(nf.pow(x_image, i), nf.pow(y_image, j));
      img[i + pm * j] = static_cast<std::uint16_t>(w.first + pm * w.second);
    }
  Permutation phi(std::move(img));
  const std::uint64_t expected = M.group.order() * phi.order();
  std::vector<Permutation> gens = M.group.generators();
  gens.push_back(phi);
  FiniteGroup G = FiniteGroup::closure(M.group.degree(), gens, std::move(name));
  // the point map of a nontrivial automorphism fixes only the identity point
  // among right multiplications, so the extension is split of this order
  if (G.order() != expected)
    fail(ErrorKind::Internal, "extension order mismatch");
  return G;
}

}  // namespace etmod
