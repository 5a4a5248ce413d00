#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etmod/builtin.hpp"
#include "etmod/metacyclic.hpp"
#include "etmod/subgroups.hpp"

using namespace etmod;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((MetacyclicParams{2, 2, 1, 1, 2}.validate()), Error);  // p even
  CHECK_THROWS_AS((MetacyclicParams{3, 2, 1, 3, 2}.validate()), Error);  // l > m
  CHECK_THROWS_AS((MetacyclicParams{3, 3, 1, 1, 3}.validate()), Error);  // m > l+n
  CHECK_THROWS_AS((MetacyclicParams{3, 3, 2, 1, 1}.validate()), Error);  // q+l < m
  CHECK_NOTHROW((MetacyclicParams{3, 2, 1, 1, 2}.validate()));
  CHECK_NOTHROW((MetacyclicParams{3, 2, 2, 1, 1}.validate()));
  CHECK((MetacyclicParams{3, 2, 1, 1, 2}.split()));
  CHECK(!(MetacyclicParams{3, 2, 2, 1, 1}.split()));
  // the (3,2,2,1,1) tuple is not of the canonical nonsplit shape l < q < n
  CHECK(!(MetacyclicParams{3, 2, 2, 1, 1}.canonical()));
  CHECK((MetacyclicParams{3, 3, 3, 1, 2}.canonical()));
}

TEST_CASE("construction and relations") {
  // (3,1,1,1,1): abelian of order 9 since l = m
  MetacyclicGroup ab = construct_metacyclic({3, 1, 1, 1, 1});
  CHECK(ab.group.order() == 9);
  CHECK(abelian_invariants(ab.group) == std::vector<std::uint64_t>{3, 3});

  MetacyclicGroup m27 = builtin::m27();
  CHECK(m27.group.order() == 27);
  CHECK(m27.group.element_order(m27.x) == 9);
  CHECK(m27.group.element_order(m27.y) == 3);
  CHECK(m27.group.conj(m27.x, m27.y) == m27.group.pow(m27.x, 4));
  // exponent 9
  std::uint64_t expo = 1;
  for (Idx g = 0; g < m27.group.order(); ++g)
    expo = std::max<std::uint64_t>(expo, m27.group.element_order(g));
  CHECK(expo == 9);

  // nonsplit presentation (3,2,2,1,1): y^9 = x^3, order 81
  MetacyclicGroup mc81 = builtin::mc81_presented_nonsplit();
  CHECK(mc81.group.order() == 81);
  CHECK(mc81.group.pow(mc81.y, 9) == mc81.group.pow(mc81.x, 3));
  CHECK(mc81.group.conj(mc81.x, mc81.y) == mc81.group.pow(mc81.x, 4));
}

TEST_CASE("power rule") {
  MetacyclicParams P{3, 2, 1, 1, 2};
  auto [a1, c1] = power_rule(5, 2, 1, P);
  CHECK(a1 == 5);
  CHECK(c1 == 2);
  auto [a2, c2] = power_rule(4, 0, 5, P);
  CHECK(a2 == (4 * 5) % 9);
  CHECK(c2 == 0);
  // M27: (x y)^3 = x^3
  auto [a3, c3] = power_rule(1, 1, 3, P);
  CHECK(a3 == 3);
  CHECK(c3 == 0);
  CHECK_THROWS_AS(power_rule(1, 1, 2, MetacyclicParams{3, 2, 2, 1, 1}), Error);

  // exhaustive agreement with direct multiplication on M27
  MetacyclicGroup m27 = builtin::m27();
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t c = 0; c < 3; ++c) {
      Idx w = m27.group.mult(m27.group.pow(m27.x, a), m27.group.pow(m27.y, c));
      for (std::uint64_t al = 1; al <= 27; ++al) {
        auto [A, C] = power_rule(a, c, al, P);
        Idx direct = m27.group.pow(w, al);
        Idx closed = m27.group.mult(m27.group.pow(m27.x, A),
                                    m27.group.pow(m27.y, C));
        CHECK(direct == closed);
      }
    }

  // the truncated-sum congruence behind the rule
  for (std::uint64_t l = 1; l <= 2; ++l)
    for (std::uint64_t c = 0; c < 9; ++c)
      for (std::uint64_t al = 1; al < 30; ++al) {
        std::uint64_t p2l = 1;
        for (std::uint64_t i = 0; i < 2 * l; ++i) p2l *= 3;
        std::uint64_t pl = 1;
        for (std::uint64_t i = 0; i < l; ++i) pl *= 3;
        std::uint64_t sum = 0, term = 1,
                      r = modpow(1 + pl, c, p2l);
        for (std::uint64_t i = 0; i < al; ++i) {
          sum = (sum + term) % p2l;
          term = term * r % p2l;
        }
        std::uint64_t rhs =
            (al + al * (al - 1) / 2 % p2l * c % p2l * pl) % p2l;
        CHECK(sum == rhs % p2l);
      }
}

TEST_CASE("randomized power rule on larger grid groups") {
  std::mt19937 rng(20240811);
  for (MetacyclicParams P : {MetacyclicParams{3, 3, 2, 1, 3},
                             MetacyclicParams{5, 2, 2, 1, 2}}) {
    MetacyclicGroup M = construct_metacyclic(P);
    std::uniform_int_distribution<std::uint64_t> da(0, P.pm() - 1),
        dc(0, P.pn() - 1), dal(1, M.group.order());
    for (int i = 0; i < 500; ++i) {
      std::uint64_t a = da(rng), c = dc(rng), al = dal(rng);
      auto [A, C] = power_rule(a, c, al, P);
      Idx w = M.group.mult(M.group.pow(M.x, a), M.group.pow(M.y, c));
      CHECK(M.group.pow(w, al) ==
            M.group.mult(M.group.pow(M.x, A), M.group.pow(M.y, C)));
    }
  }
}

TEST_CASE("structural data: M27") {
  MetacyclicGroup m27 = builtin::m27();
  MetacyclicStructure st = structural_data(m27);
  Subgroup x3 = subgroup_generated(m27.group, {m27.group.pow(m27.x, 3)});
  CHECK(st.Z == x3);
  CHECK(st.E == subgroup_generated(m27.group, {m27.group.pow(m27.x, 3), m27.y}));
  CHECK(st.CSE ==
        subgroup_generated(m27.group, {m27.group.pow(m27.x, 3), m27.y}));
  CHECK(st.CSE.order() * 3 == m27.group.order());  // index 3
  CHECK(!st.e_central);  // m = n + l
  CHECK(st.z_cyclic);
}

TEST_CASE("structural data: nonsplit presentations") {
  // (3,2,2,1,1): E = <x^3, x^-1 y^3> elementary abelian of order 9
  MetacyclicGroup M = builtin::mc81_presented_nonsplit();
  MetacyclicStructure st = structural_data(M);
  CHECK(st.E.order() == 9);
  for (Idx g : st.E.idx) CHECK(M.group.element_order(g) <= 3);
  CHECK(!st.e_central);
  CHECK(st.z_cyclic);
  CHECK(st.Z.order() == 9);  // <y^3> cyclic of order 9

  // canonical nonsplit (3,3,3,1,2): E noncentral with q+l = m, yet m != n+l
  MetacyclicGroup N = builtin::mc729_nonsplit();
  MetacyclicStructure st2 = structural_data(N);
  CHECK(!st2.e_central);
  CHECK(st2.z_cyclic);
  CHECK(N.params.m != N.params.n + N.params.l);
  CHECK(N.params.q + N.params.l == N.params.m);

  // abelian case: E central, C_S(E) = S
  MetacyclicGroup A = construct_metacyclic({3, 2, 2, 2, 2});
  MetacyclicStructure st3 = structural_data(A);
  CHECK(st3.e_central);
  CHECK(st3.CSE.order() == A.group.order());
}

TEST_CASE("recognition: basics") {
  FiniteGroup c9 = builtin::cyclic(9);
  auto rc = recognize_metacyclic(c9, full_subgroup(c9), 3);
  CHECK(rc.kind == SylowShape::Cyclic);

  FiniteGroup c3c3 = builtin::c3c3();
  auto re = recognize_metacyclic(c3c3, full_subgroup(c3c3), 3);
  REQUIRE(re.kind == SylowShape::Metacyclic);
  CHECK(re.params.m == 1);
  CHECK(re.params.n == 1);
  CHECK(re.params.l == 1);
  CHECK(re.params.split());

  // the extraspecial exponent-3 group is not metacyclic
  FiniteGroup es = builtin::extraspecial27();
  CHECK(recognize_metacyclic(es, full_subgroup(es), 3).kind ==
        SylowShape::NotMetacyclic);

  MetacyclicGroup m27 = builtin::m27();
  auto rm = recognize_metacyclic(m27.group, full_subgroup(m27.group), 3);
  REQUIRE(rm.kind == SylowShape::Metacyclic);
  CHECK(rm.params.m == 2);
  CHECK(rm.params.n == 1);
  CHECK(rm.params.l == 1);
  CHECK(rm.params.split());
  // recognized generators satisfy the relations
  CHECK(m27.group.conj(rm.x, rm.y) == m27.group.pow(rm.x, 4));
}

TEST_CASE("recognition: the (3,2,2,1,1) group is split") {
  // y^3 is central and (x y^-3)^3 = 1, so S = <y> : <x y^-3> splits; the
  // canonical presentation found must therefore be split with m = 3.
  MetacyclicGroup M = builtin::mc81_presented_nonsplit();
  auto r = recognize_metacyclic(M.group, full_subgroup(M.group), 3);
  REQUIRE(r.kind == SylowShape::Metacyclic);
  CHECK(r.params.split());
  CHECK(r.params.m == 3);
  CHECK(r.params.n == 1);
  CHECK(r.params.l == 2);
  CHECK(M.group.element_order(r.x) == 27);
  CHECK(M.group.element_order(r.y) == 3);
}

TEST_CASE("recognition: the (3,3,3,1,2) group is genuinely nonsplit") {
  MetacyclicGroup M = builtin::mc729_nonsplit();
  auto r =
      recognize_metacyclic(M.group, full_subgroup(M.group), 3, M.group.order());
  REQUIRE(r.kind == SylowShape::Metacyclic);
  CHECK(!r.params.split());
  // Dietz shape for nonsplit canonical presentations
  CHECK(r.params.q < r.params.m);
  CHECK(r.params.l < r.params.q);
  CHECK(r.params.q < r.params.n);
}

TEST_CASE("subquotients of metacyclic groups are metacyclic") {
  MetacyclicGroup M = builtin::mc243();
  auto subs = nontrivial_subgroups(M.group, full_subgroup(M.group), 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  for (int i = 0; i < 12; ++i) {
    const Subgroup& H = subs[pick(rng)];
    auto r = recognize_metacyclic(M.group, H, 3);
    CHECK(r.kind != SylowShape::NotMetacyclic);
    if (is_normal_in(M.group, H, full_subgroup(M.group))) {
      FiniteGroup Q = quotient(M.group, H).to_group();
      auto rq = recognize_metacyclic(Q, full_subgroup(Q), 3);
      CHECK(rq.kind != SylowShape::NotMetacyclic);
    }
  }
}

TEST_CASE("p'-automorphism search") {
  // elementary abelian of order 9 admits one (any involution in GL2(3))
  MetacyclicGroup ab = construct_metacyclic({3, 1, 1, 1, 1});
  auto r1 = pprime_automorphism(ab.group, ab.x, ab.y, ab.params);
  CHECK(r1.found);
  CHECK(r1.aut_order % 3 != 0);

  // M27: x -> x^-1, y -> y works
  MetacyclicGroup m27 = builtin::m27();
  auto r2 = pprime_automorphism(m27.group, m27.x, m27.y, m27.params);
  CHECK(r2.found);

  // the (3,2,2,1,1) group is split, so it admits one too
  MetacyclicGroup mc81 = builtin::mc81_presented_nonsplit();
  auto r3 = pprime_automorphism(mc81.group, mc81.x, mc81.y, mc81.params, 81);
  CHECK(r3.found);
  CHECK(r3.aut_order == 2);

  // cap enforcement
  MetacyclicGroup big = builtin::mc729_nonsplit();
  CHECK_THROWS_AS(pprime_automorphism(big.group, big.x, big.y, big.params),
                  Error);
}

TEST_CASE("automorphism shape constraints") {
  // every p'-witness found must have the constrained Frattini matrix shape
  for (MetacyclicParams P : {MetacyclicParams{3, 2, 1, 1, 2},
                             MetacyclicParams{3, 1, 2, 1, 1},
                             MetacyclicParams{3, 2, 2, 1, 2},
                             MetacyclicParams{5, 2, 1, 1, 2}}) {
    MetacyclicGroup M = construct_metacyclic(P);
    auto r = pprime_automorphism(M.group, M.x, M.y, M.params, 729);
    if (!r.found) continue;
    AutActionData act = aut_action(M.group, full_subgroup(M.group), M.x, M.y,
                                   P, r.x_image, r.y_image);
    CHECK(aut_shape_ok(P, act));
  }
}

TEST_CASE("local table on M27 with inverter") {
  FiniteGroup G = builtin::m27_with_inverter();
  CHECK(G.order() == 54);
  PLocalContext ctx = p_local_context(G, 3);
  CHECK(ctx.S.order() == 27);
  auto rec = recognize_metacyclic(G, ctx.S, 3);
  REQUIRE(rec.kind == SylowShape::Metacyclic);
  REQUIRE(rec.params.split());
  LocalSubgroupTable T = local_table(ctx, rec.x, rec.y, rec.params);
  CHECK(T.E.order() == 9);
  CHECK(T.Z.order() == 3);
  CHECK(T.Q.size() == 3);
  // N_G(Z) = G, C_G(Z) = M27
  CHECK(T.NZ.order() == 54);
  CHECK(T.CZ.order() == 27);
  // N_G(Q_0) = C_G(Q_0) of order 18
  CHECK(T.NQ[0].order() == 18);
  CHECK(T.CQ[0].order() == 18);
  CHECK(T.w != G.identity());
}

TEST_CASE("local table degenerate case: G = S = M27") {
  MetacyclicGroup M = builtin::m27();
  PLocalContext ctx = p_local_context(M.group, 3);
  LocalSubgroupTable T = local_table(ctx, M.x, M.y, M.params);
  CHECK(T.w == M.group.identity());
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(T.NQ[j].order() == 9);
    CHECK(T.NQ[j] == T.CQ[j]);
  }
}

TEST_CASE("local table rejects central-E input") {
  MetacyclicGroup A = construct_metacyclic({3, 2, 2, 1, 2});  // m != n+l
  PLocalContext ctx = p_local_context(A.group, 3);
  CHECK_THROWS_AS(local_table(ctx, A.x, A.y, A.params), Error);
}
