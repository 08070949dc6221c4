#ifndef SGH_FIXTURES_HPP_
#define SGH_FIXTURES_HPP_

#include "sgh/semigroup.hpp"

namespace sgh {
namespace fixtures {

// 5 elements {x11, x12, x21, x22, q} at indices 0..4: the rectangular band
// products x_ij x_kl = x_il, x_ij q = x_i1, q x_ij = x_ij, qq = q.
// No left or right zero, yet BS is contractible.
SemigroupTable no_zero();

// 6 elements {x11, x12, x21, x22, q, r} at indices 0..5, extending
// no_zero() by a second q-like element; BS ~ S^3.
SemigroupTable sphere3();

// 5 elements {x11, x12, x21, x22, y11} at indices 0..4 with
// y x_ij = x_1j, x_ij y = x_i1, yy = x11; H_i = Z for all i >= 2.
SemigroupTable zzz();

// 6 elements {x11, x12, x21, x22, y11, z11} at indices 0..5 with all
// products a_ij b_kl = x_il; H_i has rank 2^(i-2) for i >= 2.
SemigroupTable two_pow();

// The 9-element table whose classifying space is a Moore space M(C_2, 3).
SemigroupTable nine();

// The 12-element table whose classifying space is a Moore space M(C_2, 2).
SemigroupTable twelve();

// The 10-element table with H_6 = Z^9 x C_1494640.
SemigroupTable torsion_1494640();

}  // namespace fixtures
}  // namespace sgh

#endif  // SGH_FIXTURES_HPP_
