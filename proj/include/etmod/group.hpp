#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etmod/perm.hpp"

namespace etmod {

using Idx = std::uint32_t;
// Element index sets are kept sorted ascending; equality of subgroups is
// equality of these vectors.
using IdxVec = std::vector<Idx>;

IdxVec set_union(const IdxVec& a, const IdxVec& b);
IdxVec set_intersect(const IdxVec& a, const IdxVec& b);
bool set_contains(const IdxVec& a, Idx x);
bool set_subset(const IdxVec& a, const IdxVec& b);  // a subset of b

// Fully enumerated permutation group. Elements live in canonical order
// (lexicographic on image sequences), which puts the identity at index 0.
// All caches are built at construction; instances are immutable afterwards,
// so concurrent reads are safe.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultCap = 20000;
  // A flat multiplication table is built for groups up to this order.
  static constexpr std::size_t kTableCap = 2048;

  static FiniteGroup closure(std::size_t degree, std::vector<Permutation> gens,
                             std::string name = std::string(),
                             std::size_t cap = kDefaultCap);

  // Constructions that already know the full element list (regular
  // realizations and the like). The list is canonicalized and then the same
  // caches are built; table construction doubles as a closure check.
  static FiniteGroup from_elements(std::size_t degree,
                                   std::vector<Permutation> elements,
                                   std::vector<Permutation> gens,
                                   std::string name = std::string(),
                                   std::size_t cap = kDefaultCap);

  std::size_t order() const { return elems_.size(); }
  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const Permutation& element(Idx i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  IdxVec generator_indices() const;

  Idx identity() const { return 0; }
  std::optional<Idx> find(const Permutation& p) const;
  Idx index_of(const Permutation& p) const;  // ForeignElement if absent

  Idx mult(Idx a, Idx b) const {
    return table_.empty() ? index_of(elems_[a] * elems_[b])
                          : table_[a * order() + b];
  }
  Idx inv(Idx a) const { return inv_[a]; }
  // g x g^{-1}
  Idx conj(Idx x, Idx g) const { return mult(mult(g, x), inv_[g]); }
  Idx pow(Idx a, std::uint64_t e) const;
  std::uint64_t element_order(Idx i) const { return orders_[i]; }
  bool has_table() const { return !table_.empty(); }
  // Allocation-free a*b == b*a test; the workhorse of centralizer scans.
  bool commutes(Idx a, Idx b) const;

private:
  FiniteGroup() = default;
  void build_caches(std::size_t cap);

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> elems_;
  std::vector<Permutation> gens_;
  std::vector<Idx> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint16_t> table_;  // row-major, order <= kTableCap only
};

// A subgroup of an ambient FiniteGroup, as a sorted element index set.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  IdxVec idx;

  std::size_t order() const { return idx.size(); }
  bool contains(Idx i) const { return set_contains(idx, i); }
  bool operator==(const Subgroup& o) const {
    return parent == o.parent && idx == o.idx;
  }
  bool is_trivial() const { return idx.size() == 1; }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);

// Validates that `idx` (sorted) really is a subgroup: identity, inverses,
// closure, Lagrange. Closure checking is exhaustive up to a work budget and
// sampled beyond it.
Subgroup subgroup_from_indices(const FiniteGroup& G, IdxVec idx);

// Smallest subgroup containing the seed.
Subgroup subgroup_generated(const FiniteGroup& G, const IdxVec& seed);
Subgroup subgroup_generated_perms(const FiniteGroup& G,
                                  const std::vector<Permutation>& seed);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup normalizer_in(const FiniteGroup& G, const Subgroup& ambient,
                       const Subgroup& H);
Subgroup centralizer(const FiniteGroup& G, const IdxVec& xs);
Subgroup centralizer_in(const FiniteGroup& G, const Subgroup& ambient,
                        const IdxVec& xs);
Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, Idx g);
bool is_normal_in(const FiniteGroup& G, const Subgroup& N, const Subgroup& H);

// {a*b : a in A, b in B} as a sorted index set.
IdxVec product_set(const FiniteGroup& G, const IdxVec& A, const IdxVec& B);

// Cosets of N in H with the induced multiplication table. N must be normal
// in H. Coset 0 is N itself; representatives are the least element index of
// each coset.
class QuotientGroup {
public:
  QuotientGroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& N);

  std::size_t order() const { return reps_.size(); }
  Idx identity() const { return 0; }
  Idx mult(Idx a, Idx b) const { return table_[a * order() + b]; }
  Idx inv(Idx a) const { return inv_[a]; }
  std::uint64_t element_order(Idx a) const;
  Idx coset_of(Idx parent_element) const;
  Idx rep(Idx coset) const { return reps_[coset]; }
  const Subgroup& group() const { return grp_; }
  const Subgroup& normal() const { return nrm_; }
  const FiniteGroup& parent() const { return *parent_; }

  // Faithful realization as a permutation group via right multiplication on
  // the cosets.
  FiniteGroup to_group(std::string name = std::string()) const;

private:
  const FiniteGroup* parent_;
  Subgroup grp_, nrm_;
  std::vector<Idx> reps_;      // coset -> least parent element index
  std::vector<Idx> coset_of_;  // position in grp_.idx -> coset
  std::vector<Idx> table_;
  std::vector<Idx> inv_;
};

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N);
QuotientGroup quotient(const FiniteGroup& G, const Subgroup& H,
                       const Subgroup& N);

// Minimal multiplication-structure view, for code that treats FiniteGroup,
// QuotientGroup and ad-hoc groups uniformly.
struct AbstractGroup {
  std::size_t size = 0;
  std::function<Idx(Idx, Idx)> mul;
  Idx id = 0;

  Idx inverse(Idx a) const;
  std::uint64_t element_order(Idx a) const;
  Idx pow(Idx a, std::uint64_t e) const;
};

AbstractGroup as_abstract(const FiniteGroup& G);
AbstractGroup as_abstract(const QuotientGroup& Q);
AbstractGroup as_abstract(const FiniteGroup& G, const Subgroup& H);

// Invariant factor decomposition d1 | d2 | ... with product |A|; empty for
// the trivial group. NotAbelian if the input is not abelian.
std::vector<std::uint64_t> abelian_invariants(const AbstractGroup& A);
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G);
std::vector<std::uint64_t> abelian_invariants(const QuotientGroup& Q);

// Invariants of H/[H,H] viewed inside G.
std::vector<std::uint64_t> abelianization_invariants(const FiniteGroup& G,
                                                     const Subgroup& H);

// Standalone FiniteGroup carrying the same permutations as H.
FiniteGroup as_group(const FiniteGroup& G, const Subgroup& H,
                     std::string name = std::string());

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace etmod
