#pragma once

#include <optional>

#include "etmod/fusion.hpp"
#include "etmod/metacyclic.hpp"
#include "etmod/subgroups.hpp"

namespace etmod {

// rho^1(P) = S_P * N_G(P)' for S_P a Sylow p-subgroup of N_G(P).
Subgroup rho1(const PLocalContext& ctx, const Subgroup& P);

struct RhoSeries {
  Subgroup base;                 // S
  std::vector<Subgroup> levels;  // rho^1(S), rho^2(S), ... (stabilized tail)
  std::size_t stabilized_at = 0; // first pass after which nothing moved

  const Subgroup& limit() const { return levels.back(); }
  const Subgroup& rho2() const { return levels.size() > 1 ? levels[1] : levels[0]; }
};

// Simultaneous (Jacobi) iteration of rho^(i+1)(P) = <N_G(P) ∩ rho^i(Q)> over
// all nontrivial P <= S until a full pass changes nothing, plus one
// verification pass. With restrict_to_omega1 the generating Q range over the
// nontrivial subgroups of Omega1(S) only.
RhoSeries rho_infinity(const PLocalContext& ctx,
                       bool restrict_to_omega1 = false);

// One link of a conjugation chain: Q_0^(g_1...g_i) <= Q_(i+1) throughout.
struct ChainWitness {
  Subgroup q0;
  std::vector<Subgroup> subgroups;  // Q_1, ..., Q_n
  std::vector<Idx> elements;        // g_1, ..., g_n (in chain order)
  Idx product = 0;
};

bool verify_chain_witness(const PLocalContext& ctx, const ChainWitness& w);

struct PiOneResult {
  Subgroup R;
  Subgroup N;
  bool r_normal_in_n = false;
  std::uint64_t quotient_order = 0;
  std::vector<std::uint64_t> abelianization;  // invariants of (N/R)^ab
  std::vector<ChainWitness> witnesses;        // one per generator retained
};

// The subgroup R of N_G(S) generated by all admissible chain products,
// computed per starting subgroup Q_0 as a monotone reachability fixpoint,
// with pi_1 = N/R data attached.
PiOneResult pi1_chain_subgroup(const PLocalContext& ctx);

struct ClosedFormCentral {
  Subgroup R;  // <N ∩ O^{p'}(N_G(Q)) : 1 < Q <= Omega1(S)>
  bool omega1_central = false;
  bool normalizer_controls = false;

  bool applicable() const { return omega1_central && normalizer_controls; }
};

// The closed form valid when Omega1(S) <= Z(S) and N_G(S) controls fusion;
// both hypotheses are checked and reported, never assumed.
ClosedFormCentral pi1_closed_form_central(const PLocalContext& ctx);

// J = <N ∩ S*N_G(Q)' : 1 < Q <= Omega1(S)>; always contains N' so N/J is
// the abelianization of N/R under the closed-form hypotheses.
Subgroup j_subgroup(const PLocalContext& ctx);

struct SplitMetacyclicPiOne {
  Subgroup R;
  int case_tag = 0;  // 1: E <= Z(S), 2: E noncentral
};

// The split-metacyclic closed form; case (2) builds R from N ∩ O^{p'}(N_G(Z))
// together with the elements of N expressible as h h' t with
// h in O^{p'}(N_G(E)) ∩ C_G(Q), h' in O^{p'}(C_G(Q)), t in S, for Q a
// noncentral order-p subgroup of E. Independence of the choice of Q is
// verified across all p of them.
SplitMetacyclicPiOne pi1_closed_form_split_metacyclic(
    const PLocalContext& ctx, const RecognitionResult& rec);

}  // namespace etmod
