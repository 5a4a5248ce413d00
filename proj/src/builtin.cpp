#include "etmod/builtin.hpp"

namespace etmod {
namespace builtin {

namespace {

Permutation cycle(std::size_t degree, const std::vector<std::uint16_t>& pts) {
  std::vector<std::uint16_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = static_cast<std::uint16_t>(i);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(std::move(img));
}

}  // namespace

FiniteGroup cyclic(unsigned n) {
  std::vector<std::uint16_t> pts(n);
  for (unsigned i = 0; i < n; ++i) pts[i] = static_cast<std::uint16_t>(i);
  return FiniteGroup::closure(n, {cycle(n, pts)},
                              "C" + std::to_string(n));
}

FiniteGroup symmetric3() {
  return FiniteGroup::closure(3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})},
                              "S3");
}

FiniteGroup symmetric4() {
  return FiniteGroup::closure(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})},
                              "S4");
}

FiniteGroup alternating4() {
  return FiniteGroup::closure(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})},
                              "A4");
}

FiniteGroup alternating5() {
  return FiniteGroup::closure(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})},
                              "A5");
}

FiniteGroup klein_four() {
  return FiniteGroup::closure(
      4,
      {Permutation::from_images({1, 0, 3, 2}),
       Permutation::from_images({2, 3, 0, 1})},
      "V4");
}

FiniteGroup c3c3() {
  return direct_sum(cyclic(3), cyclic(3), "C3xC3");
}

FiniteGroup c3c3_inverter() {
  // points (a,b) in Z3 x Z3, index 3a + b
  auto enc = [](unsigned a, unsigned b) {
    return static_cast<std::uint16_t>(3 * a + b);
  };
  std::vector<std::uint16_t> t1(9), t2(9), inv(9);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      t1[enc(a, b)] = enc((a + 1) % 3, b);
      t2[enc(a, b)] = enc(a, (b + 1) % 3);
      inv[enc(a, b)] = enc((3 - a) % 3, (3 - b) % 3);
    }
  return FiniteGroup::closure(9,
                              {Permutation(std::move(t1)),
                               Permutation(std::move(t2)),
                               Permutation(std::move(inv))},
                              "C3xC3:inv");
}

FiniteGroup sl2_3() {
  // nonzero vectors of F_3^2, index 3a + b - 1
  auto enc = [](unsigned a, unsigned b) {
    return static_cast<std::uint16_t>(3 * a + b - 1);
  };
  std::vector<std::uint16_t> t(8), s(8);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      t[enc(a, b)] = enc((a + b) % 3, b);        // [[1,1],[0,1]]
      s[enc(a, b)] = enc((3 - b) % 3, a);        // [[0,-1],[1,0]]
    }
  FiniteGroup G = FiniteGroup::closure(
      8, {Permutation(std::move(t)), Permutation(std::move(s))}, "SL(2,3)");
  if (G.order() != 24) fail(ErrorKind::Internal, "SL(2,3) has order 24");
  return G;
}

FiniteGroup quaternion8() {
  // right-regular realization from the unit table; elements ordered
  // 1, -1, i, -i, j, -j, k, -k
  static const int tab[8][8] = {
      // 1   -1   i   -i   j   -j   k   -k
      {0, 1, 2, 3, 4, 5, 6, 7},    // 1
      {1, 0, 3, 2, 5, 4, 7, 6},    // -1
      {2, 3, 1, 0, 6, 7, 5, 4},    // i   (i*i=-1, i*j=k, i*k=-j)
      {3, 2, 0, 1, 7, 6, 4, 5},    // -i
      {4, 5, 7, 6, 1, 0, 2, 3},    // j   (j*i=-k, j*j=-1, j*k=i)
      {5, 4, 6, 7, 0, 1, 3, 2},    // -j
      {6, 7, 4, 5, 3, 2, 1, 0},    // k   (k*i=j, k*j=-i, k*k=-1)
      {7, 6, 5, 4, 2, 3, 0, 1},    // -k
  };
  std::vector<Permutation> elems;
  for (int b = 0; b < 8; ++b) {
    std::vector<std::uint16_t> img(8);
    for (int a = 0; a < 8; ++a)
      img[a] = static_cast<std::uint16_t>(tab[a][b]);  // right mult by b
    elems.push_back(Permutation(std::move(img)));
  }
  std::vector<Permutation> gens{elems[2], elems[4]};  // i, j
  return FiniteGroup::from_elements(8, std::move(elems), std::move(gens),
                                    "Q8");
}

FiniteGroup semidihedral16() {
  // <r,s | r^8 = s^2 = 1, s r s = r^3> on points (i,j), index i + 8j
  auto enc = [](unsigned i, unsigned j) {
    return static_cast<std::uint16_t>(i + 8 * j);
  };
  std::vector<std::uint16_t> r(16), s(16);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < 8; ++i) {
      r[enc(i, j)] = enc((i + (j ? 3 : 1)) % 8, j);  // right mult by r
      s[enc(i, j)] = enc(i, 1 - j);
    }
  FiniteGroup G = FiniteGroup::closure(
      16, {Permutation(std::move(r)), Permutation(std::move(s))}, "SD16");
  if (G.order() != 16) fail(ErrorKind::Internal, "SD16 has order 16");
  return G;
}

FiniteGroup extraspecial27() {
  // Heisenberg group mod 3 acting on itself: points (a,b,c), right
  // multiplication (a,b,c)*(x,y,z) = (a+x, b+y, c+z+ay)
  auto enc = [](unsigned a, unsigned b, unsigned c) {
    return static_cast<std::uint16_t>(9 * a + 3 * b + c);
  };
  std::vector<std::uint16_t> gx(27), gy(27);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c) {
        gx[enc(a, b, c)] = enc((a + 1) % 3, b, c);
        gy[enc(a, b, c)] = enc(a, (b + 1) % 3, (c + a) % 3);
      }
  FiniteGroup G = FiniteGroup::closure(
      27, {Permutation(std::move(gx)), Permutation(std::move(gy))}, "ES27");
  if (G.order() != 27) fail(ErrorKind::Internal, "extraspecial group order");
  for (Idx g = 0; g < G.order(); ++g)
    if (G.element_order(g) > 3)
      fail(ErrorKind::Internal, "extraspecial exponent should be 3");
  return G;
}

FiniteGroup direct_sum(const FiniteGroup& a, const FiniteGroup& b,
                       std::string name) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g[i];
    for (std::size_t i = 0; i < db; ++i)
      img[da + i] = static_cast<std::uint16_t>(da + i);
    gens.push_back(Permutation(std::move(img)));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (std::size_t i = 0; i < da; ++i)
      img[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < db; ++i)
      img[da + i] = static_cast<std::uint16_t>(da + g[i]);
    gens.push_back(Permutation(std::move(img)));
  }
  return FiniteGroup::closure(da + db, std::move(gens), std::move(name));
}

MetacyclicGroup m27() {
  return construct_metacyclic(MetacyclicParams{3, 2, 1, 1, 2}, "M27");
}

FiniteGroup m27_with_inverter() {
  MetacyclicGroup M = m27();
  // x -> x^-1, y -> y
  return extend_by_automorphism(M, {M.params.pm() - 1, 0}, {0, 1}, "M27:2");
}

MetacyclicGroup mc81_presented_nonsplit() {
  return construct_metacyclic(MetacyclicParams{3, 2, 2, 1, 1}, "mc81");
}

FiniteGroup mc81_times_c2() {
  MetacyclicGroup M = mc81_presented_nonsplit();
  return direct_sum(M.group, cyclic(2), "mc81xC2");
}

MetacyclicGroup mc243() {
  return construct_metacyclic(MetacyclicParams{3, 3, 2, 1, 3}, "mc243");
}

FiniteGroup mc243_with_inverter() {
  MetacyclicGroup M = mc243();
  return extend_by_automorphism(M, {M.params.pm() - 1, 0}, {0, 1}, "mc243:2");
}

MetacyclicGroup mc729_nonsplit() {
  return construct_metacyclic(MetacyclicParams{3, 3, 3, 1, 2}, "mc729");
}

FiniteGroup mc729_times_c2() {
  MetacyclicGroup M = mc729_nonsplit();
  return direct_sum(M.group, cyclic(2), "mc729xC2");
}

}  // namespace builtin
}  // namespace etmod
