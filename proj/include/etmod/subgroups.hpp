#pragma once

#include <cstdint>

#include "etmod/group.hpp"

namespace etmod {

// The p-local data every analysis starts from: a deterministic Sylow
// p-subgroup and its normalizer.
struct PLocalContext {
  const FiniteGroup* G = nullptr;
  std::uint64_t p = 0;
  Subgroup S;
  Subgroup N;  // N_G(S)
};

PLocalContext p_local_context(const FiniteGroup& G, std::uint64_t p);

bool is_p_element(const FiniteGroup& G, Idx g, std::uint64_t p);

// Deterministic Sylow p-subgroup by greedy normalizer growth; the element
// adjoined at each step is the least p-element outside the current subgroup.
Subgroup sylow_p(const FiniteGroup& G, std::uint64_t p);
Subgroup sylow_in(const FiniteGroup& G, const Subgroup& H, std::uint64_t p);

// Subgroup generated by the elements of order dividing p. NotPGroup unless
// P is a p-group.
Subgroup omega1(const FiniteGroup& G, const Subgroup& P, std::uint64_t p);

Subgroup center(const FiniteGroup& G, const Subgroup& H);

// Derived subgroup times p-th powers (the p-group Frattini form).
Subgroup frattini_subgroup(const FiniteGroup& G, const Subgroup& P,
                           std::uint64_t p);

// O^{p'}(H): generated by the p-elements; normal of p'-index.
Subgroup o_pprime_residual(const FiniteGroup& G, const Subgroup& H,
                           std::uint64_t p);

// O_{p'}(H): the largest normal p'-subgroup.
Subgroup o_pprime_core(const FiniteGroup& G, const Subgroup& H,
                       std::uint64_t p);

bool is_p_nilpotent(const FiniteGroup& G, std::uint64_t p);

enum class PGroupKind { Cyclic, GeneralizedQuaternion, Semidihedral, Other };

const char* p_group_kind_name(PGroupKind k);

struct PGroupClass {
  PGroupKind kind = PGroupKind::Other;
  // Defining evidence: the generator's subgroup for cyclic, the unique
  // involution's subgroup for quaternion, the dihedral-type pair's span for
  // semidihedral.
  Subgroup witness;
  bool has_witness = false;
};

PGroupClass classify_p_group(const FiniteGroup& G, const Subgroup& P,
                             std::uint64_t p);

inline constexpr std::size_t kSubgroupEnumCap = 729;

// All nontrivial subgroups of the p-group P, canonically ordered (by order,
// then lexicographically on element index sets). Includes P itself.
std::vector<Subgroup> nontrivial_subgroups(const FiniteGroup& G,
                                           const Subgroup& P, std::uint64_t p,
                                           std::size_t cap = kSubgroupEnumCap);

}  // namespace etmod
