#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etmod/builtin.hpp"
#include "etmod/group.hpp"

using namespace etmod;

namespace {

// independent oracle: quadratic fixed-point closure over permutations
std::vector<Permutation> naive_closure(std::size_t degree,
                                       std::vector<Permutation> gens) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  for (const auto& g : gens) elems.push_back(g);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> next = elems;
    for (const auto& a : elems)
      for (const auto& b : elems) next.push_back(a * b);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() != elems.size()) grew = true;
    elems = std::move(next);
  }
  return elems;
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  Permutation a = Permutation::from_images({1, 2, 0});
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * a * a).is_identity());
  Permutation b = Permutation::from_images({1, 0, 2});
  CHECK(b.order() == 2);
  // composition is left-to-right
  CHECK((a * b)[0] == b[a[0]]);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 0}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), Error);
}

TEST_CASE("closure examples") {
  FiniteGroup c3 = FiniteGroup::closure(3, {Permutation::from_images({1, 2, 0})});
  CHECK(c3.order() == 3);
  FiniteGroup s3 = FiniteGroup::closure(
      3, {Permutation::from_images({1, 2, 0}), Permutation::from_images({1, 0, 2})});
  CHECK(s3.order() == 6);
  FiniteGroup v4 = builtin::klein_four();
  CHECK(v4.order() == 4);
  for (Idx g = 0; g < v4.order(); ++g) CHECK(v4.element_order(g) <= 2);
  // identity sits at index 0 in canonical order
  CHECK(s3.element(0).is_identity());
}

TEST_CASE("closure matches the quadratic oracle") {
  std::vector<Permutation> gens{Permutation::from_images({1, 2, 3, 0}),
                                Permutation::from_images({1, 0, 2, 3})};
  FiniteGroup s4 = FiniteGroup::closure(4, gens);
  CHECK(s4.order() == 24);
  CHECK(s4.elements() == naive_closure(4, gens));
}

TEST_CASE("closure cap is enforced") {
  std::vector<Permutation> gens{Permutation::from_images({1, 2, 3, 4, 0}),
                                Permutation::from_images({1, 0, 2, 3, 4})};
  CHECK_THROWS_AS(FiniteGroup::closure(5, gens, "", 100), Error);
}

TEST_CASE("subgroup generation") {
  FiniteGroup s3 = builtin::symmetric3();
  Subgroup t = subgroup_generated(s3, {s3.identity()});
  CHECK(t.order() == 1);
  // all 3-cycles generate the alternating subgroup
  IdxVec cycles;
  for (Idx g = 0; g < s3.order(); ++g)
    if (s3.element_order(g) == 3) cycles.push_back(g);
  CHECK(subgroup_generated(s3, cycles).order() == 3);

  FiniteGroup a4 = builtin::alternating4();
  Idx d1 = a4.index_of(Permutation::from_images({1, 0, 3, 2}));
  Idx d2 = a4.index_of(Permutation::from_images({2, 3, 0, 1}));
  CHECK(subgroup_generated(a4, {d1, d2}).order() == 4);
  CHECK_THROWS_AS(subgroup_generated(s3, {42}), Error);
}

TEST_CASE("normalizer and centralizer") {
  FiniteGroup s3 = builtin::symmetric3();
  CHECK(centralizer(s3, {s3.identity()}).order() == 6);
  IdxVec cycles;
  for (Idx g = 0; g < s3.order(); ++g)
    if (s3.element_order(g) == 3) cycles.push_back(g);
  Subgroup c3 = subgroup_generated(s3, cycles);
  CHECK(normalizer(s3, c3).order() == 6);
  // centralizer of a transposition has order 2 (element-wise commuting scan)
  Idx t = 0;
  for (Idx g = 0; g < s3.order(); ++g)
    if (s3.element_order(g) == 2) { t = g; break; }
  std::size_t scan = 0;
  for (Idx g = 0; g < s3.order(); ++g)
    if (s3.commutes(g, t)) ++scan;
  CHECK(scan == 2);
  CHECK(centralizer(s3, {t}).order() == 2);
}

TEST_CASE("derived subgroups") {
  FiniteGroup v4 = builtin::klein_four();
  CHECK(derived_subgroup(v4, full_subgroup(v4)).order() == 1);
  FiniteGroup s3 = builtin::symmetric3();
  CHECK(derived_subgroup(s3, full_subgroup(s3)).order() == 3);
  MetacyclicGroup m27 = builtin::m27();
  Subgroup d = derived_subgroup(m27.group, full_subgroup(m27.group));
  CHECK(d.order() == 3);
  // S' = <x^(p^l)> = <x^3>
  Subgroup x3 = subgroup_generated(m27.group, {m27.group.pow(m27.x, 3)});
  CHECK(d == x3);
}

TEST_CASE("quotients") {
  FiniteGroup s3 = builtin::symmetric3();
  CHECK(quotient(s3, full_subgroup(s3)).order() == 1);
  IdxVec cyc;
  for (Idx g = 0; g < s3.order(); ++g)
    if (s3.element_order(g) == 3) cyc.push_back(g);
  Subgroup c3 = subgroup_generated(s3, cyc);
  QuotientGroup q = quotient(s3, c3);
  CHECK(q.order() == 2);

  FiniteGroup a4 = builtin::alternating4();
  IdxVec inv;
  for (Idx g = 0; g < a4.order(); ++g)
    if (a4.element_order(g) == 2) inv.push_back(g);
  Subgroup v4 = subgroup_generated(a4, inv);
  CHECK(v4.order() == 4);
  QuotientGroup q2 = quotient(a4, v4);
  CHECK(q2.order() == 3);
  CHECK(q2.order() * v4.order() == a4.order());
  // a non-normal subgroup is rejected
  Idx t = 0;
  for (Idx g = 0; g < a4.order(); ++g)
    if (a4.element_order(g) == 3) { t = g; break; }
  Subgroup c3a = subgroup_generated(a4, {t});
  CHECK_THROWS_AS(quotient(a4, c3a), Error);
  // quotient realized as a permutation group
  FiniteGroup qg = q2.to_group("A4/V4");
  CHECK(qg.order() == 3);
}

TEST_CASE("abelian invariants") {
  FiniteGroup c1 = builtin::cyclic(1);
  CHECK(abelian_invariants(c1).empty());
  FiniteGroup v4 = builtin::klein_four();
  CHECK(abelian_invariants(v4) == std::vector<std::uint64_t>{2, 2});
  FiniteGroup c6 = builtin::cyclic(6);
  CHECK(abelian_invariants(c6) == std::vector<std::uint64_t>{6});
  FiniteGroup s3 = builtin::symmetric3();
  CHECK_THROWS_AS(abelian_invariants(s3), Error);
  // oracle: element-order statistics determine the type
  FiniteGroup c2c6 = builtin::direct_sum(builtin::cyclic(2), builtin::cyclic(6), "C2xC6");
  CHECK(abelian_invariants(c2c6) == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("product sets") {
  FiniteGroup a4 = builtin::alternating4();
  IdxVec inv;
  for (Idx g = 0; g < a4.order(); ++g)
    if (a4.element_order(g) == 2) inv.push_back(g);
  Subgroup v4 = subgroup_generated(a4, inv);
  Idx three = 0;
  for (Idx g = 0; g < a4.order(); ++g)
    if (a4.element_order(g) == 3) { three = g; break; }
  Subgroup c3 = subgroup_generated(a4, {three});
  // Frattini-style factorization: V4 * C3 = A4
  CHECK(product_set(a4, v4.idx, c3.idx).size() == 12);
  // identity and closure cases
  CHECK(product_set(a4, {a4.identity()}, v4.idx) == v4.idx);
  CHECK(product_set(a4, c3.idx, c3.idx) == c3.idx);
}

TEST_CASE("quotient group multiplication table is a group") {
  FiniteGroup a4 = builtin::alternating4();
  IdxVec inv;
  for (Idx g = 0; g < a4.order(); ++g)
    if (a4.element_order(g) == 2) inv.push_back(g);
  QuotientGroup q = quotient(a4, subgroup_generated(a4, inv));
  for (Idx a = 0; a < q.order(); ++a) {
    CHECK(q.mult(a, q.inv(a)) == 0);
    for (Idx b = 0; b < q.order(); ++b)
      for (Idx c = 0; c < q.order(); ++c)
        CHECK(q.mult(q.mult(a, b), c) == q.mult(a, q.mult(b, c)));
  }
}
