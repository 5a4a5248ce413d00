#pragma once

#include "etmod/group.hpp"
#include "etmod/metacyclic.hpp"

namespace etmod {
namespace builtin {

FiniteGroup cyclic(unsigned n);
FiniteGroup symmetric3();
FiniteGroup symmetric4();
FiniteGroup alternating4();
FiniteGroup alternating5();
FiniteGroup klein_four();
FiniteGroup c3c3();
// C3 x C3 extended by the inversion automorphism, on 9 points.
FiniteGroup c3c3_inverter();
// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
FiniteGroup sl2_3();
// quaternion group of order 8 in its regular realization
FiniteGroup quaternion8();
// semidihedral group of order 16
FiniteGroup semidihedral16();
// extraspecial 3-group of order 27 and exponent 3 (not metacyclic)
FiniteGroup extraspecial27();

// G1 x G2 acting on the disjoint union of the point sets
FiniteGroup direct_sum(const FiniteGroup& a, const FiniteGroup& b,
                       std::string name);

MetacyclicGroup m27();                      // (3,2,1,1,q=2) split
FiniteGroup m27_with_inverter();            // M27 ⋊ C2, order 54, degree 27
MetacyclicGroup mc81_presented_nonsplit();  // (3,2,2,1,1); the group is split
FiniteGroup mc81_times_c2();
MetacyclicGroup mc243();                    // (3,3,2,1,3) split, E noncentral
FiniteGroup mc243_with_inverter();          // order 486
MetacyclicGroup mc729_nonsplit();           // (3,3,3,1,2) canonical nonsplit
FiniteGroup mc729_times_c2();

}  // namespace builtin
}  // namespace etmod
