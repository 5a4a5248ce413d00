#pragma once

#include <optional>
#include <string>

#include "etmod/subgroups.hpp"

namespace etmod {

struct FusionViolation {
  Subgroup Q;  // least offending subgroup in canonical order
  Idx g = 0;   // conjugates Q into S but lies outside H*C_G(Q)
  std::string explanation;
};

struct FusionResult {
  bool controls = false;
  std::optional<FusionViolation> violation;
};

// Whether H >= S controls p-fusion: every g with gQg^-1 <= S factors as
// g = h c with h in H and c in C_G(Q). Exhaustive over all nontrivial
// Q <= S and all g; the factorization test is membership in the product
// set H * C_G(Q), which is exactly equality of conjugation maps on Q.
FusionResult controls_fusion(const PLocalContext& ctx, const Subgroup& H);

struct CoreResult {
  Subgroup core;  // G0 = <N_G(Q) : 1 < Q <= S>
  bool proper = false;
};

CoreResult strongly_embedded_core(const PLocalContext& ctx);

bool is_strongly_p_embedded(const FiniteGroup& G, const Subgroup& H,
                            std::uint64_t p);

struct PosetOrbitComponents {
  std::size_t orbit_count = 0;
  std::size_t component_count = 0;
  std::vector<Subgroup> representatives;  // one per component
};

// Connected components of the orbit poset of noncyclic elementary abelian
// p-subgroups, linked by containment up to conjugation.
PosetOrbitComponents orbit_poset_components(const FiniteGroup& G,
                                            std::uint64_t p);

}  // namespace etmod
