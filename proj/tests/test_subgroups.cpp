#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "etmod/builtin.hpp"
#include "etmod/subgroups.hpp"

using namespace etmod;

TEST_CASE("sylow subgroups") {
  FiniteGroup c6 = builtin::cyclic(6);
  CHECK(sylow_p(c6, 3).order() == 3);
  CHECK(sylow_p(c6, 2).order() == 2);
  CHECK_THROWS_AS(sylow_p(c6, 5), Error);

  FiniteGroup a4 = builtin::alternating4();
  Subgroup s = sylow_p(a4, 2);
  CHECK(s.order() == 4);  // the normal Klein four subgroup
  for (Idx g : s.idx) CHECK(a4.element_order(g) <= 2);

  FiniteGroup s4 = builtin::symmetric4();
  Subgroup d8 = sylow_p(s4, 2);
  CHECK(d8.order() == 8);
  // deterministic: repeated computation gives the same subgroup
  CHECK(sylow_p(s4, 2) == d8);
}

TEST_CASE("every p-element lies in a conjugate of the chosen Sylow") {
  for (auto [G, p] : {std::pair<FiniteGroup, std::uint64_t>{builtin::symmetric4(), 2},
                      {builtin::alternating5(), 2},
                      {builtin::sl2_3(), 3}}) {
    Subgroup S = sylow_p(G, p);
    std::set<IdxVec> conjugates;
    for (Idx g = 0; g < G.order(); ++g)
      conjugates.insert(conjugate_subgroup(G, S, g).idx);
    for (Idx g = 0; g < G.order(); ++g) {
      if (!is_p_element(G, g, p) || g == G.identity()) continue;
      bool covered = false;
      for (const IdxVec& c : conjugates)
        if (set_contains(c, g)) { covered = true; break; }
      CHECK(covered);
    }
  }
}

TEST_CASE("omega1") {
  FiniteGroup c9 = builtin::cyclic(9);
  CHECK(omega1(c9, full_subgroup(c9), 3).order() == 3);
  FiniteGroup v4 = builtin::klein_four();
  CHECK(omega1(v4, full_subgroup(v4), 2).order() == 4);
  MetacyclicGroup m27 = builtin::m27();
  Subgroup e = omega1(m27.group, full_subgroup(m27.group), 3);
  CHECK(e.order() == 9);
  // E = <x^3, y> per the split closed form
  Subgroup expected = subgroup_generated(
      m27.group, {m27.group.pow(m27.x, 3), m27.y});
  CHECK(e == expected);
  FiniteGroup s3 = builtin::symmetric3();
  CHECK_THROWS_AS(omega1(s3, full_subgroup(s3), 3), Error);
}

TEST_CASE("center and frattini subgroup") {
  FiniteGroup v4 = builtin::klein_four();
  CHECK(center(v4, full_subgroup(v4)).order() == 4);
  CHECK(frattini_subgroup(v4, full_subgroup(v4), 2).order() == 1);
  MetacyclicGroup m27 = builtin::m27();
  Subgroup z = center(m27.group, full_subgroup(m27.group));
  Subgroup x3 = subgroup_generated(m27.group, {m27.group.pow(m27.x, 3)});
  CHECK(z == x3);
  CHECK(frattini_subgroup(m27.group, full_subgroup(m27.group), 3) == x3);
}

TEST_CASE("p-residual and p'-core") {
  FiniteGroup s3 = builtin::symmetric3();
  CHECK(o_pprime_residual(s3, full_subgroup(s3), 3).order() == 3);
  FiniteGroup a4 = builtin::alternating4();
  Subgroup r = o_pprime_residual(a4, full_subgroup(a4), 2);
  CHECK(r.order() == 4);
  CHECK(is_normal_in(a4, r, full_subgroup(a4)));
  // p-groups are their own residual
  MetacyclicGroup m27 = builtin::m27();
  CHECK(o_pprime_residual(m27.group, full_subgroup(m27.group), 3).order() == 27);

  CHECK(o_pprime_core(m27.group, full_subgroup(m27.group), 3).order() == 1);
  CHECK(is_p_nilpotent(m27.group, 3));
  CHECK(o_pprime_core(s3, full_subgroup(s3), 2).order() == 3);
  CHECK(is_p_nilpotent(s3, 2));
  CHECK(o_pprime_core(a4, full_subgroup(a4), 2).order() == 1);
  CHECK(!is_p_nilpotent(a4, 2));
}

TEST_CASE("p-group classification") {
  FiniteGroup c9 = builtin::cyclic(9);
  CHECK(classify_p_group(c9, full_subgroup(c9), 3).kind == PGroupKind::Cyclic);
  FiniteGroup q8 = builtin::quaternion8();
  PGroupClass q = classify_p_group(q8, full_subgroup(q8), 2);
  CHECK(q.kind == PGroupKind::GeneralizedQuaternion);
  REQUIRE(q.has_witness);
  CHECK(q.witness.order() == 2);  // the unique involution
  FiniteGroup sd16 = builtin::semidihedral16();
  CHECK(classify_p_group(sd16, full_subgroup(sd16), 2).kind ==
        PGroupKind::Semidihedral);
  MetacyclicGroup m27 = builtin::m27();
  CHECK(classify_p_group(m27.group, full_subgroup(m27.group), 3).kind ==
        PGroupKind::Other);
  FiniteGroup s4 = builtin::symmetric4();
  Subgroup d8 = sylow_p(s4, 2);
  CHECK(classify_p_group(s4, d8, 2).kind == PGroupKind::Other);
  CHECK_THROWS_AS(classify_p_group(s4, full_subgroup(s4), 2), Error);
}

TEST_CASE("subgroup enumeration") {
  FiniteGroup c3 = builtin::cyclic(3);
  auto subs = nontrivial_subgroups(c3, full_subgroup(c3), 3);
  CHECK(subs.size() == 1);
  FiniteGroup c3c3 = builtin::c3c3();
  CHECK(nontrivial_subgroups(c3c3, full_subgroup(c3c3), 3).size() == 5);

  // pairwise-generation oracle on M27: every subgroup of a metacyclic group
  // is 2-generated, so spans of element pairs find all of them
  MetacyclicGroup m27 = builtin::m27();
  auto enumerated = nontrivial_subgroups(m27.group, full_subgroup(m27.group), 3);
  std::set<IdxVec> pairwise;
  for (Idx a = 0; a < m27.group.order(); ++a)
    for (Idx b = a; b < m27.group.order(); ++b) {
      Subgroup s = subgroup_generated(m27.group, {a, b});
      if (s.order() > 1) pairwise.insert(s.idx);
    }
  std::set<IdxVec> level;
  for (const Subgroup& s : enumerated) level.insert(s.idx);
  CHECK(level == pairwise);

  CHECK_THROWS_AS(
      nontrivial_subgroups(m27.group, full_subgroup(m27.group), 3, 10), Error);
}

TEST_CASE("characteristic subgroup stability under normalizer conjugation") {
  FiniteGroup s4 = builtin::symmetric4();
  Subgroup d8 = sylow_p(s4, 2);
  Subgroup e = omega1(s4, d8, 2);
  Subgroup z = center(s4, d8);
  Subgroup n = normalizer(s4, d8);
  for (Idx g : n.idx) {
    CHECK(conjugate_subgroup(s4, e, g) == e);
    CHECK(conjugate_subgroup(s4, z, g) == z);
  }
}

TEST_CASE("metacyclic omega1 has rank 2, and central E bounds the class") {
  for (MetacyclicParams P : {MetacyclicParams{3, 2, 1, 1, 2},
                             MetacyclicParams{3, 2, 2, 1, 2},
                             MetacyclicParams{3, 3, 2, 1, 3},
                             MetacyclicParams{5, 2, 1, 1, 2}}) {
    MetacyclicGroup M = construct_metacyclic(P);
    Subgroup e = omega1(M.group, full_subgroup(M.group), P.p);
    CHECK(e.order() == P.p * P.p);
    for (Idx g : e.idx) CHECK(M.group.element_order(g) <= P.p);
    Subgroup z = center(M.group, full_subgroup(M.group));
    if (set_subset(e.idx, z.idx)) {
      // nilpotency class at most 2: [[S,S],S] = 1
      Subgroup d = derived_subgroup(M.group, full_subgroup(M.group));
      IdxVec comms;
      for (Idx a : d.idx)
        for (Idx b = 0; b < M.group.order(); ++b)
          comms.push_back(M.group.mult(
              M.group.mult(a, b),
              M.group.mult(M.group.inv(a), M.group.inv(b))));
      std::sort(comms.begin(), comms.end());
      comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
      CHECK(comms == IdxVec{M.group.identity()});
    }
  }
}
