#pragma once

#include <optional>

#include "etmod/rho.hpp"
#include "etmod/subgroups.hpp"

namespace etmod {

// The field k only enters through the torsion available in k^x, so it is
// never materialized: characters take values in Z/d for a suitable d.
struct FieldSpec {
  enum class Mode { AlgebraicallyClosed, Finite };
  Mode mode = Mode::AlgebraicallyClosed;
  std::uint64_t p = 2;
  std::uint64_t q = 0;  // field size, finite mode only

  static FieldSpec closed(std::uint64_t p) {
    return FieldSpec{Mode::AlgebraicallyClosed, p, 0};
  }
  static FieldSpec finite(std::uint64_t p, std::uint64_t q) {
    return FieldSpec{Mode::Finite, p, q};
  }
  void validate() const;  // BadFieldSpec
};

struct HomGroupDescriptor {
  std::vector<std::uint64_t> invariants;  // d1 | d2 | ...
  std::uint64_t order = 1;
};

// Hom(A, k^x) for an abelian A given by its invariant factors: strip p-parts
// in the algebraically closed case, gcd with q-1 in the finite case.
HomGroupDescriptor hom_to_units(const std::vector<std::uint64_t>& invariants,
                                const FieldSpec& field);

// A homomorphism from a subgroup of G into Z/modulus; the homomorphism law
// is checked exhaustively at construction.
struct CyclicCharacter {
  const FiniteGroup* G = nullptr;
  Subgroup domain;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> values;  // parallel to domain.idx

  std::uint64_t value(Idx ambient_element) const;
  bool is_trivial() const;
};

// All homomorphisms domain -> Z/d killing K, where d is the exponent of the
// p'-part of (domain/K)^ab (capped by q-1 for finite fields), or the given
// override. Deterministic order with the trivial character first.
std::vector<CyclicCharacter> characters_vanishing_on(
    const FiniteGroup& G, const Subgroup& domain, const Subgroup& K,
    const FieldSpec& field,
    std::optional<std::uint64_t> modulus_override = std::nullopt);

struct KGroupResult {
  HomGroupDescriptor K;
  Subgroup J;
  std::vector<std::uint64_t> nj_invariants;  // invariants of N/J
  std::uint64_t nj_order = 1;
};

// K(G) = Hom(N/J, k^x) with J from the closed form.
KGroupResult k_group(const PLocalContext& ctx, const FieldSpec& field);

struct WeakHomTable {
  const FiniteGroup* G = nullptr;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> values;  // indexed by element
};

struct WeakHomHypotheses {
  bool omega1_central = false;
  bool normalizer_controls = false;
  Subgroup rho2;  // rho^2(S)
};

WeakHomHypotheses weak_hom_hypotheses(const PLocalContext& ctx);

// Extends a character chi of N with rho^2(S) <= ker(chi) to a weak
// S-homomorphism theta of G: theta(g) = psi_Q(c) + chi(n) for g = c n,
// c in C_G(Q), n in N, Q = Omega1(S ∩ gSg^-1). The extension psi_Q is the
// unique character of C_G(Q) killing S*C_G(Q)' that agrees with chi on
// N ∩ C_G(Q); uniqueness and independence of the factorization are checked.
WeakHomTable build_weak_hom(const PLocalContext& ctx,
                            const WeakHomHypotheses& hyp,
                            const CyclicCharacter& chi);

struct WeakHomViolation {
  int axiom = 0;  // 1 or 2
  Idx g = 0, h = 0;
};

struct WeakHomCheck {
  bool ok = false;
  std::optional<WeakHomViolation> violation;
};

// Exhaustive check of both weak-homomorphism axioms: vanishing on S and on
// trivial-intersection elements, and multiplicativity on every pair with
// nontrivial triple intersection. First violation in canonical order.
WeakHomCheck verify_weak_hom(const PLocalContext& ctx,
                             const WeakHomTable& theta);

}  // namespace etmod
