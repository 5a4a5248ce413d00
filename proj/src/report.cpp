#include "etmod/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace etmod {

FiniteGroup parse_group(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "document must be an object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    fail(ErrorKind::ParseError, "field 'degree' missing or not an integer");
  long long degree = doc["degree"].get<long long>();
  if (degree < 0 || degree > 65535)
    fail(ErrorKind::ParseError, "degree out of range");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail(ErrorKind::ParseError, "field 'generators' missing or not a list");
  std::vector<Permutation> gens;
  std::size_t k = 0;
  for (const auto& g : doc["generators"]) {
    ++k;
    if (!g.is_array())
      fail(ErrorKind::ParseError,
           "generator " + std::to_string(k) + " is not a list");
    std::vector<long long> images;
    for (const auto& v : g) {
      if (!v.is_number_integer())
        fail(ErrorKind::ParseError,
             "generator " + std::to_string(k) + " has a non-integer image");
      images.push_back(v.get<long long>());
    }
    if (images.size() != static_cast<std::size_t>(degree))
      fail(ErrorKind::ParseError,
           "generator " + std::to_string(k) + " has length " +
               std::to_string(images.size()) + ", expected degree " +
               std::to_string(degree));
    gens.push_back(Permutation::from_images(images));
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      fail(ErrorKind::ParseError, "field 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return FiniteGroup::closure(static_cast<std::size_t>(degree),
                              std::move(gens), std::move(name));
}

FiniteGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str());
}

std::string emit_group(const FiniteGroup& G) {
  Json doc;
  doc["degree"] = G.degree();
  Json gens = Json::array();
  for (const Permutation& g : G.generators()) {
    Json img = Json::array();
    for (std::size_t i = 0; i < g.degree(); ++i) img.push_back(g[i]);
    gens.push_back(img);
  }
  doc["generators"] = gens;
  if (!G.name().empty()) doc["name"] = G.name();
  return doc.dump(2) + "\n";
}

namespace {

Json idx_json(const IdxVec& v) {
  Json a = Json::array();
  for (Idx i : v) a.push_back(i);
  return a;
}

Json invariants_json(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (std::uint64_t d : v) a.push_back(d);
  return a;
}

Json field_json(const FieldSpec& f) {
  Json j;
  if (f.mode == FieldSpec::Mode::AlgebraicallyClosed) {
    j["mode"] = "closed";
    j["characteristic"] = f.p;
  } else {
    j["mode"] = "finite";
    j["characteristic"] = f.p;
    j["q"] = f.q;
  }
  return j;
}

std::vector<std::uint64_t> pprime_invariants(
    const std::vector<std::uint64_t>& inv, std::uint64_t p) {
  return hom_to_units(inv, FieldSpec::closed(p)).invariants;
}

}  // namespace

AnalysisReport analyze(const FiniteGroup& G, std::uint64_t p,
                       const AnalysisOptions& opts) {
  opts.field.validate();
  AnalysisReport rep;
  rep.name = G.name();
  rep.p = p;
  rep.order = G.order();
  rep.field = opts.field;
  PLocalContext ctx = p_local_context(G, p);
  rep.sylow_order = ctx.S.idx.size();
  rep.n_order = ctx.N.idx.size();

  PGroupClass cls = classify_p_group(G, ctx.S, p);
  rep.sylow_kind = cls.kind;
  RecognitionResult rec = recognize_metacyclic(G, ctx.S, p);
  rep.sylow_shape = rec.kind;
  if (rec.kind == SylowShape::Metacyclic) {
    rep.sylow_params = rec.params;
    MetacyclicStructure structure =
        structural_data(G, ctx.S, rec.x, rec.y, rec.params);
    rep.e_central = structure.e_central;
  } else {
    Subgroup E = omega1(G, ctx.S, p);
    rep.e_central = set_subset(E.idx, center(G, ctx.S).idx);
  }

  FusionResult fus = controls_fusion(ctx, ctx.N);
  rep.normalizer_controls = fus.controls;

  PosetOrbitComponents poset = orbit_poset_components(G, p);
  rep.orbit_count = poset.orbit_count;
  rep.torsion_free_rank = poset.component_count;

  CoreResult core = strongly_embedded_core(ctx);
  rep.core_proper = core.proper;
  rep.core_order = core.core.idx.size();

  rep.p_nilpotent = is_p_nilpotent(G, p);

  Json pi1_doc, rho_doc, k_doc, char_doc;
  if (core.proper) {
    rep.core_certified = is_strongly_p_embedded(G, core.core, p);
    if (!rep.core_certified) rep.mismatch = true;
    FiniteGroup core_group =
        as_group(G, core.core, G.name().empty() ? "core" : G.name() + "|core");
    AnalysisOptions inner_opts = opts;
    inner_opts.include_element_table = false;
    auto inner = std::make_shared<AnalysisReport>(
        analyze(core_group, p, inner_opts));
    rep.transported = true;
    rep.core_analysis = inner;
    // transported invariants
    rep.r_order = inner->r_order;
    rep.quotient_order = inner->quotient_order;
    rep.r_normal = inner->r_normal;
    rep.pi1_abelianization = inner->pi1_abelianization;
    rep.witness_count = inner->witness_count;
    rep.closed_form_applicable = inner->closed_form_applicable;
    rep.closed_form_agrees = inner->closed_form_agrees;
    rep.prop41_case = inner->prop41_case;
    rep.prop41_agrees = inner->prop41_agrees;
    rep.ct_consistent = inner->ct_consistent;
    rep.restriction_consistent = inner->restriction_consistent;
    rep.j_identity = inner->j_identity;
    rep.k_invariants = inner->k_invariants;
    rep.k_order = inner->k_order;
    rep.nj_invariants = inner->nj_invariants;
    rep.weak_hom_count = inner->weak_hom_count;
    rep.weak_homs_verified = inner->weak_homs_verified;
    rep.weak_homs_injective = inner->weak_homs_injective;
    if (inner->mismatch) rep.mismatch = true;
    // the restriction to the core is an isomorphism, so the ranks agree
    if (inner->torsion_free_rank != rep.torsion_free_rank) rep.mismatch = true;
  } else {
    RhoSeries rho_full = rho_infinity(ctx, false);
    RhoSeries rho_restr = rho_infinity(ctx, true);
    rep.restriction_consistent = rho_full.limit() == rho_restr.limit();

    PiOneResult pi1 = pi1_chain_subgroup(ctx);
    rep.r_order = pi1.R.idx.size();
    rep.quotient_order = pi1.quotient_order;
    rep.r_normal = pi1.r_normal_in_n;
    rep.pi1_abelianization = pi1.abelianization;
    rep.witness_count = pi1.witnesses.size();
    if (!pi1.r_normal_in_n) rep.mismatch = true;

    ClosedFormCentral closed = pi1_closed_form_central(ctx);
    rep.closed_form_applicable = closed.applicable();
    if (closed.applicable()) {
      rep.closed_form_agrees = closed.R == pi1.R;
      if (!rep.closed_form_agrees) rep.mismatch = true;
    }

    KGroupResult kg = k_group(ctx, opts.field);
    rep.k_invariants = kg.K.invariants;
    rep.k_order = kg.K.order;
    rep.nj_invariants = kg.nj_invariants;
    if (closed.applicable()) {
      Subgroup ND = derived_subgroup(G, ctx.N);
      IdxVec ndr = product_set(G, ND.idx, pi1.R.idx);
      rep.j_identity = ndr == kg.J.idx;
      if (!rep.j_identity) rep.mismatch = true;
    }

    // Carlson-Thevenaz consistency: p'-part of (N/R)^ab vs (N/rho^inf)^ab
    {
      Subgroup ND = derived_subgroup(G, ctx.N);
      Subgroup M2 = subgroup_generated(
          G, set_union(rho_full.limit().idx, ND.idx));
      bool ok = is_normal_in(G, M2, ctx.N);
      if (ok) {
        auto inv_rho = abelian_invariants(QuotientGroup(G, ctx.N, M2));
        ok = pprime_invariants(inv_rho, p) ==
             pprime_invariants(rep.pi1_abelianization, p);
      }
      rep.ct_consistent = ok;
      if (!ok) rep.mismatch = true;
    }

    // split metacyclic closed form
    if (p != 2 && rec.kind == SylowShape::Metacyclic && rec.params.split()) {
      SplitMetacyclicPiOne sm = pi1_closed_form_split_metacyclic(ctx, rec);
      rep.prop41_case = sm.case_tag;
      rep.prop41_agrees = sm.R == pi1.R;
      if (!rep.prop41_agrees) rep.mismatch = true;
    }

    // nonsplit nonabelian metacyclic: G must be p-nilpotent, and the torsion
    // equals Hom of the p'-abelianization of G
    if (p != 2 && rec.kind == SylowShape::Metacyclic && !rec.params.split() &&
        !rec.params.abelian()) {
      if (!rep.p_nilpotent) rep.mismatch = true;
      auto g_ab = abelianization_invariants(G, full_subgroup(G));
      if (pprime_invariants(g_ab, p) !=
          pprime_invariants(rep.pi1_abelianization, p))
        rep.mismatch = true;
    }

    // weak homomorphisms for every character of N/rho^2(S)
    if (rep.closed_form_applicable) {
      WeakHomHypotheses hyp;
      hyp.omega1_central = closed.omega1_central;
      hyp.normalizer_controls = closed.normalizer_controls;
      hyp.rho2 = rho_full.rho2();
      auto chars = characters_vanishing_on(G, ctx.N, hyp.rho2, opts.field);
      rep.weak_hom_count = chars.size();
      std::vector<std::vector<std::uint64_t>> tables;
      char_doc["tables"] = Json::array();
      for (const CyclicCharacter& chi : chars) {
        WeakHomTable theta = build_weak_hom(ctx, hyp, chi);
        WeakHomCheck chk = verify_weak_hom(ctx, theta);
        if (!chk.ok) rep.weak_homs_verified = false;
        tables.push_back(theta.values);
        Json t;
        t["modulus"] = theta.modulus;
        t["values"] = invariants_json(theta.values);
        char_doc["tables"].push_back(t);
      }
      for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = i + 1; j < tables.size(); ++j)
          if (tables[i] == tables[j]) rep.weak_homs_injective = false;
      if (!rep.weak_homs_verified || !rep.weak_homs_injective)
        rep.mismatch = true;
    }

    pi1_doc["R"] = idx_json(pi1.R.idx);
    pi1_doc["N"] = idx_json(ctx.N.idx);
    Json wits = Json::array();
    for (std::size_t i = 0; i < pi1.witnesses.size() && i < opts.witness_cap;
         ++i) {
      const ChainWitness& w = pi1.witnesses[i];
      Json jw;
      jw["product"] = w.product;
      jw["q0"] = idx_json(w.q0.idx);
      Json chain = Json::array();
      for (const Subgroup& s : w.subgroups) chain.push_back(idx_json(s.idx));
      jw["subgroups"] = chain;
      jw["elements"] = idx_json(IdxVec(w.elements.begin(), w.elements.end()));
      wits.push_back(jw);
    }
    pi1_doc["witness_sample"] = wits;
    rho_doc["stabilized_at"] = rho_full.stabilized_at;
    rho_doc["limit"] = idx_json(rho_full.limit().idx);
    k_doc["J"] = idx_json(kg.J.idx);
  }

  // torsion summary
  std::ostringstream torsion;
  if (rep.sylow_kind == PGroupKind::Cyclic && rep.sylow_order >= 3) {
    Subgroup E = omega1(G, ctx.S, p);
    Subgroup NE = normalizer(G, E);
    auto kne = hom_to_units(abelianization_invariants(G, NE), opts.field);
    torsion << "finite torsion: T restricts isomorphically to N_G(E) "
               "(order "
            << NE.idx.size()
            << "), an extension of the infinite cyclic syzygy class group by "
               "Hom(N_G(E), k^x) with invariants "
            << invariants_json(kne.invariants).dump()
            << "; the extension class is not computed";
  } else if (rep.sylow_kind == PGroupKind::GeneralizedQuaternion ||
             rep.sylow_kind == PGroupKind::Semidihedral) {
    torsion << "torsion part not computed: the Sylow subgroup itself carries "
               "torsion (kind "
            << p_group_kind_name(rep.sylow_kind) << ")";
  } else {
    torsion << "torsion = K(G) with invariants "
            << invariants_json(rep.k_invariants).dump();
  }
  rep.torsion_note = torsion.str();

  // document
  Json doc;
  doc["group"] = Json{{"name", rep.name},
                      {"order", rep.order},
                      {"degree", G.degree()}};
  doc["prime"] = p;
  doc["field"] = field_json(opts.field);
  Json syl;
  syl["order"] = rep.sylow_order;
  syl["class_kind"] = p_group_kind_name(rep.sylow_kind);
  if (rec.kind == SylowShape::Metacyclic) {
    syl["metacyclic"] = Json{{"p", rec.params.p}, {"m", rec.params.m},
                             {"n", rec.params.n}, {"l", rec.params.l},
                             {"q", rec.params.q},
                             {"split", rec.params.split()}};
  } else if (rec.kind == SylowShape::Cyclic) {
    syl["metacyclic"] = "cyclic";
  } else {
    syl["metacyclic"] = nullptr;
  }
  syl["e_central"] = rep.e_central;
  syl["S"] = idx_json(ctx.S.idx);
  doc["sylow"] = syl;
  Json fj;
  fj["normalizer_controls"] = rep.normalizer_controls;
  if (fus.violation) {
    fj["violation"] = Json{{"Q", idx_json(fus.violation->Q.idx)},
                           {"g", fus.violation->g},
                           {"explanation", fus.violation->explanation}};
  }
  fj["core"] = Json{{"order", rep.core_order},
                    {"proper", rep.core_proper},
                    {"certified_strongly_embedded", rep.core_certified},
                    {"indices", idx_json(core.core.idx)}};
  doc["fusion"] = fj;
  Json pj;
  pj["orbit_count"] = rep.orbit_count;
  pj["component_count"] = rep.torsion_free_rank;
  Json reps = Json::array();
  for (const Subgroup& r : poset.representatives) reps.push_back(idx_json(r.idx));
  pj["representatives"] = reps;
  doc["poset"] = pj;
  pi1_doc["n_order"] = rep.n_order;
  pi1_doc["r_order"] = rep.r_order;
  pi1_doc["quotient_order"] = rep.quotient_order;
  pi1_doc["r_normal"] = rep.r_normal;
  pi1_doc["abelianization"] = invariants_json(rep.pi1_abelianization);
  pi1_doc["witness_count"] = rep.witness_count;
  pi1_doc["closed_form"] = Json{{"applicable", rep.closed_form_applicable},
                                {"agrees", rep.closed_form_agrees}};
  pi1_doc["split_metacyclic_form"] =
      Json{{"case", rep.prop41_case}, {"agrees", rep.prop41_agrees}};
  doc["pi1"] = pi1_doc;
  rho_doc["restriction_consistent"] = rep.restriction_consistent;
  rho_doc["carlson_thevenaz_consistent"] = rep.ct_consistent;
  doc["rho"] = rho_doc;
  k_doc["invariants"] = invariants_json(rep.k_invariants);
  k_doc["order"] = rep.k_order;
  k_doc["nj_invariants"] = invariants_json(rep.nj_invariants);
  doc["k_group"] = k_doc;
  char_doc["weak_hom_count"] = rep.weak_hom_count;
  char_doc["verified"] = rep.weak_homs_verified;
  char_doc["injective"] = rep.weak_homs_injective;
  doc["characters"] = char_doc;
  doc["structure"] = Json{{"torsion_free_rank", rep.torsion_free_rank},
                          {"torsion", rep.torsion_note},
                          {"p_nilpotent", rep.p_nilpotent}};
  if (rep.transported) {
    doc["transported"] =
        Json{{"from_core", true},
             {"note", "analysis rerun on the strongly p-embedded core; "
                      "restriction is an isomorphism"},
             {"core_analysis", rep.core_analysis->doc}};
  } else {
    doc["transported"] = Json{{"from_core", false}};
  }
  doc["mismatch"] = rep.mismatch;
  if (opts.include_element_table) {
    Json tbl = Json::array();
    for (const Permutation& e : G.elements()) {
      Json img = Json::array();
      for (std::size_t i = 0; i < e.degree(); ++i) img.push_back(e[i]);
      tbl.push_back(img);
    }
    doc["element_table"] = tbl;
  }
  rep.doc = doc;
  return rep;
}

// ---------------------------------------------------------------------------
// battery

std::vector<std::string> battery_suites() {
  return {"default", "metacyclic-grid"};
}

std::vector<MetacyclicParams> grid_tuples(
    const std::vector<std::uint64_t>& primes, unsigned max_mn) {
  std::vector<MetacyclicParams> tuples;
  for (std::uint64_t p : primes)
    for (unsigned m = 1; m <= max_mn; ++m)
      for (unsigned n = 1; m + n <= max_mn; ++n) {
        std::uint64_t order = 1;
        for (unsigned i = 0; i < m + n; ++i) order *= p;
        if (order > FiniteGroup::kDefaultCap) continue;
        for (unsigned l = 1; l <= m; ++l) {
          if (m > l + n) continue;
          tuples.push_back(MetacyclicParams{p, m, n, l, m});  // split
          for (unsigned q = l + 1; q < m && q < n; ++q) {
            if (q + l < m) continue;
            tuples.push_back(MetacyclicParams{p, m, n, l, q});  // nonsplit
          }
        }
      }
  return tuples;
}

std::vector<GridCheck> metacyclic_grid(const std::vector<std::uint64_t>& primes,
                                       unsigned max_mn) {
  std::vector<GridCheck> out;
  for (const MetacyclicParams& P : grid_tuples(primes, max_mn)) {
    GridCheck c;
    c.params = P;
    try {
      MetacyclicGroup M = construct_metacyclic(P);
      MetacyclicStructure st = structural_data(M);
      c.ok = true;
      c.detail = std::string("|Z|=") + std::to_string(st.Z.order()) +
                 " |E|=" + std::to_string(st.E.order()) +
                 " |C_S(E)|=" + std::to_string(st.CSE.order()) +
                 (st.e_central ? " E central" : " E noncentral");
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(c);
  }
  return out;
}

namespace {

struct BatterySpec {
  std::string name;
  std::uint64_t p;
  FiniteGroup (*make)();
};

FiniteGroup make_s3() { return builtin::symmetric3(); }
FiniteGroup make_c3c3() { return builtin::c3c3(); }
FiniteGroup make_a4() { return builtin::alternating4(); }
FiniteGroup make_a5() { return builtin::alternating5(); }
FiniteGroup make_s4() { return builtin::symmetric4(); }
FiniteGroup make_sl23() { return builtin::sl2_3(); }
FiniteGroup make_m27() { return builtin::m27().group; }
FiniteGroup make_m27c2() { return builtin::m27_with_inverter(); }
FiniteGroup make_mc81() { return builtin::mc81_presented_nonsplit().group; }
FiniteGroup make_mc81c2() { return builtin::mc81_times_c2(); }
FiniteGroup make_mc243c2() { return builtin::mc243_with_inverter(); }
FiniteGroup make_mc729() { return builtin::mc729_nonsplit().group; }
FiniteGroup make_mc729c2() { return builtin::mc729_times_c2(); }
FiniteGroup make_c3c3inv() { return builtin::c3c3_inverter(); }

const BatterySpec kDefaultBattery[] = {
    {"S3", 3, make_s3},
    {"C3xC3", 3, make_c3c3},
    {"A4", 2, make_a4},
    {"A5", 2, make_a5},
    {"S4", 2, make_s4},
    {"SL(2,3)", 3, make_sl23},
    {"M27", 3, make_m27},
    {"M27:2", 3, make_m27c2},
    {"mc81", 3, make_mc81},
    {"mc81xC2", 3, make_mc81c2},
    {"mc243:2", 3, make_mc243c2},
    {"mc729", 3, make_mc729},
    {"mc729xC2", 3, make_mc729c2},
    {"C3xC3:inv", 3, make_c3c3inv},
};

}  // namespace

BatteryResult run_battery(const std::string& suite, const FieldSpec& field) {
  BatteryResult out;
  out.matrix = Json::array();
  if (suite == "default") {
    bool all = true, any_mismatch = false;
    for (const BatterySpec& spec : kDefaultBattery) {
      BatteryItem item;
      item.name = spec.name;
      item.p = spec.p;
      Json row;
      row["name"] = spec.name;
      row["p"] = spec.p;
      try {
        FiniteGroup G = spec.make();
        AnalysisOptions opts;
        opts.field = field;
        opts.field.p = spec.p;
        opts.include_element_table = false;
        auto rep = std::make_shared<AnalysisReport>(analyze(G, spec.p, opts));
        item.report = rep;
        item.ok = !rep->mismatch;
        any_mismatch = any_mismatch || rep->mismatch;
        row["ok"] = item.ok;
        row["mismatch"] = rep->mismatch;
        row["order"] = rep->order;
        row["sylow_order"] = rep->sylow_order;
        row["sylow_kind"] = p_group_kind_name(rep->sylow_kind);
        row["controls"] = rep->normalizer_controls;
        row["rank"] = rep->torsion_free_rank;
        row["pi1_quotient"] = rep->quotient_order;
        row["k_invariants"] = invariants_json(rep->k_invariants);
        row["p_nilpotent"] = rep->p_nilpotent;
      } catch (const std::exception& e) {
        item.ok = false;
        item.error = e.what();
        row["ok"] = false;
        row["error"] = e.what();
        all = false;
      }
      all = all && item.ok;
      out.matrix.push_back(row);
      out.items.push_back(std::move(item));
    }
    out.all_ok = all;
    out.any_mismatch = any_mismatch;
    return out;
  }
  if (suite == "metacyclic-grid") {
    bool all = true;
    for (const GridCheck& c : metacyclic_grid({3, 5}, 6)) {
      BatteryItem item;
      item.name = "mc(" + std::to_string(c.params.p) + "," +
                  std::to_string(c.params.m) + "," + std::to_string(c.params.n) +
                  "," + std::to_string(c.params.l) + "," +
                  std::to_string(c.params.q) + ")";
      item.p = c.params.p;
      item.ok = c.ok;
      if (!c.ok) item.error = c.detail;
      Json row;
      row["name"] = item.name;
      row["ok"] = c.ok;
      row["detail"] = c.detail;
      out.matrix.push_back(row);
      out.items.push_back(std::move(item));
      all = all && c.ok;
    }
    out.all_ok = all;
    out.any_mismatch = !all;
    return out;
  }
  fail(ErrorKind::UnknownSuite, "unknown suite '" + suite +
                                    "'; available: default, metacyclic-grid");
}

}  // namespace etmod
