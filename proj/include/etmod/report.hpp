#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "etmod/builtin.hpp"
#include "etmod/characters.hpp"
#include "etmod/fusion.hpp"
#include "etmod/metacyclic.hpp"
#include "etmod/rho.hpp"

namespace etmod {

using Json = nlohmann::ordered_json;

// Group file schema: UTF-8 JSON with fields
//   degree     integer
//   generators list of integer lists, each a permutation of 0..degree-1
//   name       optional string
// Out-of-range or duplicate images are rejected.
FiniteGroup parse_group(const std::string& text);
FiniteGroup load_group(const std::string& path);
std::string emit_group(const FiniteGroup& G);

struct AnalysisOptions {
  FieldSpec field = FieldSpec::closed(2);
  bool include_element_table = true;
  std::size_t witness_cap = 8;  // witnesses serialized per report
};

struct AnalysisReport {
  std::string name;
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  FieldSpec field;

  // strongly embedded core
  bool core_proper = false;
  std::uint64_t core_order = 0;
  bool core_certified = false;  // is_strongly_p_embedded verified
  // when the core is proper the pi1/K analysis below is the transported
  // analysis of the core
  bool transported = false;

  // sylow
  std::uint64_t sylow_order = 0;
  PGroupKind sylow_kind = PGroupKind::Other;
  SylowShape sylow_shape = SylowShape::NotMetacyclic;
  MetacyclicParams sylow_params;  // meaningful when shape == Metacyclic
  bool e_central = false;

  // fusion
  bool normalizer_controls = false;

  // poset (computed on the group itself, transport or not)
  std::size_t orbit_count = 0;
  std::size_t torsion_free_rank = 0;

  // pi1 data
  std::uint64_t n_order = 0, r_order = 0, quotient_order = 0;
  bool r_normal = false;
  std::vector<std::uint64_t> pi1_abelianization;
  std::size_t witness_count = 0;
  bool closed_form_applicable = false;
  bool closed_form_agrees = true;   // meaningful when applicable
  int prop41_case = 0;              // 0: not applicable
  bool prop41_agrees = true;

  // rho-side consistency
  bool ct_consistent = false;          // p' parts N/R vs N/rho^inf
  bool restriction_consistent = false; // full vs Omega1-restricted rho^inf
  bool j_identity = true;              // J = N' R when closed form applies

  // K(G)
  std::vector<std::uint64_t> k_invariants;
  std::uint64_t k_order = 1;
  std::vector<std::uint64_t> nj_invariants;

  // weak homs
  std::size_t weak_hom_count = 0;
  bool weak_homs_verified = true;
  bool weak_homs_injective = true;

  // structure summary
  bool p_nilpotent = false;
  std::string torsion_note;

  bool mismatch = false;  // any oracle disagreement; must never happen

  std::shared_ptr<AnalysisReport> core_analysis;  // when core_proper
  Json doc;  // full structured document
};

AnalysisReport analyze(const FiniteGroup& G, std::uint64_t p,
                       const AnalysisOptions& opts);

struct BatteryItem {
  std::string name;
  std::uint64_t p = 0;
  bool ok = false;
  std::string error;  // nonempty on failure
  std::shared_ptr<AnalysisReport> report;
};

struct BatteryResult {
  std::vector<BatteryItem> items;
  bool all_ok = false;
  bool any_mismatch = false;
  Json matrix;  // pass/fail matrix
};

// Built-in suites: "default" (the analysis battery) and "metacyclic-grid"
// (the closed-form-vs-scan validation grid). UnknownSuite otherwise.
BatteryResult run_battery(const std::string& suite, const FieldSpec& field);

std::vector<std::string> battery_suites();

struct GridCheck {
  MetacyclicParams params;
  bool ok = false;
  std::string detail;
};

// All canonical tuples with p in primes and m+n <= max_mn, structurally
// validated (closed forms against scans plus the centrality criterion).
std::vector<GridCheck> metacyclic_grid(const std::vector<std::uint64_t>& primes,
                                       unsigned max_mn);
std::vector<MetacyclicParams> grid_tuples(const std::vector<std::uint64_t>& primes,
                                          unsigned max_mn);

}  // namespace etmod
