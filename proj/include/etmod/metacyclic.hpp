#pragma once

#include <cstdint>
#include <utility>

#include "etmod/group.hpp"
#include "etmod/subgroups.hpp"

namespace etmod {

// Exponent pair (i, j) for a word x^i y^j.
using NF = std::pair<std::uint64_t, std::uint64_t>;

// Parameters of <x,y | x^(p^m) = 1, y^(p^n) = x^(p^q), y x y^-1 = x^(1+p^l)>,
// p odd. split means q = m (the power relation collapses to y^(p^n) = 1);
// l = m exactly for the abelian members.
struct MetacyclicParams {
  std::uint64_t p = 3;
  unsigned m = 1, n = 1, l = 1, q = 1;

  bool split() const { return q == m; }
  bool abelian() const { return l == m; }
  // The canonical constraint shape: split, or q < m with l < q < n. Every
  // genuinely nonsplit group admits generators realizing the latter, so the
  // validation grid ranges over exactly these tuples.
  bool canonical() const {
    return split() || (q < m && l < q && q < n);
  }
  std::uint64_t pm() const;
  std::uint64_t pn() const;
  std::uint64_t group_order() const { return pm() * pn(); }

  void validate() const;  // BadParameters with the violated constraint
};

// Normal-form arithmetic on exponent pairs, independent of any permutation
// realization. Used both to build the regular realization and as the oracle
// side of the power-rule tests.
class NFArith {
public:
  explicit NFArith(const MetacyclicParams& P);

  const MetacyclicParams& params() const { return P_; }
  std::uint64_t conj_pow(std::uint64_t j) const { return cpow_[j]; }

  NF mult(NF a, NF b) const;
  NF inverse(NF a) const;
  NF pow(NF a, std::uint64_t e) const;

private:
  MetacyclicParams P_;
  std::uint64_t pm_, pn_, pq_;
  std::vector<std::uint64_t> cpow_;  // (1+p^l)^j mod p^m
};

struct MetacyclicGroup {
  FiniteGroup group;
  MetacyclicParams params;
  Idx x = 0, y = 0;

  NF nf_of(Idx element) const;   // decode via the regular realization
  Idx element_of(NF w) const;
};

// Right-regular realization on p^(m+n) points; relations and order are
// verified after construction.
MetacyclicGroup construct_metacyclic(const MetacyclicParams& P,
                                     std::string name = std::string());

// (x^a y^c)^alpha = x^A y^C for split presentations. NotSplit otherwise.
std::pair<std::uint64_t, std::uint64_t> power_rule(std::uint64_t a,
                                                   std::uint64_t c,
                                                   std::uint64_t alpha,
                                                   const MetacyclicParams& P);

struct MetacyclicStructure {
  Subgroup Z;    // center
  Subgroup E;    // omega1
  Subgroup CSE;  // C_S(E)
  bool e_central = false;
  bool z_cyclic = false;
};

// Computes Z(S), E = Omega1(S), C_S(E) both from the closed forms and by
// element scans, and insists they agree (FormulaMismatch otherwise). For
// canonical parameter tuples the centrality criterion is also checked:
// E noncentral iff Z(S) cyclic iff m = n+l (split) / q+l = m (nonsplit).
MetacyclicStructure structural_data(const FiniteGroup& G, const Subgroup& S,
                                    Idx x, Idx y, const MetacyclicParams& P);
MetacyclicStructure structural_data(const MetacyclicGroup& M);

enum class SylowShape { Cyclic, Metacyclic, NotMetacyclic };

struct RecognitionResult {
  SylowShape kind = SylowShape::NotMetacyclic;
  MetacyclicParams params;  // meaningful for kind == Metacyclic
  Idx x = 0, y = 0;         // ambient element indices realizing the relations
};

// Searches the cyclic normal subgroups with cyclic quotient and derives a
// normalized presentation. Split presentations are preferred, then smaller
// m, then canonical nonsplit shape, then least generator indices. Cyclic
// groups are reported as their own kind, never forced into n = 0.
RecognitionResult recognize_metacyclic(const FiniteGroup& G, const Subgroup& P,
                                       std::uint64_t p,
                                       std::size_t cap = 2048);

struct AutSearchResult {
  bool found = false;
  Idx x_image = 0, y_image = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t searched = 0;  // relation-satisfying generator pairs seen
};

inline constexpr std::size_t kAutSearchCap = 243;

// Brute-force search over generator-image pairs for an automorphism of order
// coprime to p (and > 1). Exhaustive, so a negative answer is a proof.
AutSearchResult pprime_automorphism(const FiniteGroup& S, Idx x, Idx y,
                                    const MetacyclicParams& P,
                                    std::size_t cap = kAutSearchCap);

// phi(x) = x^a y^c, phi(y) = x^b y^d for an automorphism given by images.
struct AutActionData {
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
};

AutActionData aut_action(const FiniteGroup& G, const Subgroup& S, Idx x, Idx y,
                         const MetacyclicParams& P, Idx x_image, Idx y_image);

// The shape constraints on the Frattini-quotient matrix of any automorphism:
// n > l forces c = 0 mod p^(n-l) and d = 1 mod p; n <= l < m forces
// b = 0 mod p^(m-n) and d = 1 mod p; l = m = n only demands invertibility.
bool aut_shape_ok(const MetacyclicParams& P, const AutActionData& A);

struct LocalSubgroupTable {
  Subgroup E, Z, SE;           // SE = C_S(E)
  Idx z = 0, u = 0;            // z = x^(p^(m-1)), u = y^(p^(n-1))
  std::vector<Subgroup> Q;     // Q_j = <u z^j>, conjugation by x cycles them
  Idx w = 0;                   // p'-part representative of N_G(S)
  Subgroup NE, NZ, CZ, CE;
  std::vector<Subgroup> NQ, CQ;
};

// The p-local normalizer table for split S with E noncentral and G with no
// proper strongly p-embedded subgroup; checks the stated containments and
// the action of w on z and u.
LocalSubgroupTable local_table(const PLocalContext& ctx, Idx x, Idx y,
                               const MetacyclicParams& P);

// S ⋊ <phi> realized on the points of the regular realization of S, phi
// given by generator images in normal form; the automorphism must preserve
// the relations.
FiniteGroup extend_by_automorphism(const MetacyclicGroup& M, NF x_image,
                                   NF y_image, std::string name);

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t mod);

}  // namespace etmod
