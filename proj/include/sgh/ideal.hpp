#ifndef SGH_IDEAL_HPP_
#define SGH_IDEAL_HPP_

#include <array>
#include <vector>

#include "sgh/semigroup.hpp"

namespace sgh {

// The Rees matrix structure of the minimal ideal K(S):
//   K(S) = I * H * J with (i,h,j)(i',h',j') = (i, h<j,i'>h', j'),
// where <j,i> = j*i is the sandwich product, H is a group with identity
// e_H, and the sandwich matrix is normalized (the row of e_H in J and the
// column of e_H in I are constantly e_H).
struct ReesStructure {
  int k;                       // the all-elements product, an element of K
  std::vector<int> I, J, H;    // sorted element indices
  int e_h;                     // identity of H (element index)
  int e_h_pos;                 // position of e_h within H
  // sandwich[j_pos][i_pos] = position in H of the product J[j_pos]*I[i_pos]
  std::vector<std::vector<int>> sandwich;
  // Unique factorization of K: element -> {i_pos, h_pos, j_pos}, or
  // {-1,-1,-1} for elements outside K. Indexed by element id.
  std::vector<std::array<int, 3>> factor;
  std::vector<int> k_elements;  // sorted

  bool k_thin() const { return I.size() == 1 || J.size() == 1; }
};

// How much of the structure to re-verify before returning. Light checks
// cost O(|K|) semigroup operations (group axioms via the inverse finder,
// unique factorization, normalization); Full adds the O(|K|^2) pairwise
// product-law check.
enum class Verify { Light, Full };

// Computes K(S) via the all-product element: k = x_0 * ... * x_{n-1},
// I = {x*k idempotent}, J = {k*x idempotent}, H = {k*x*k}. O(|S|)
// semigroup operations plus verification.
ReesStructure min_ideal(const SemigroupTable& s, Verify verify = Verify::Full);

// Testing oracle: K(S) as the intersection of all ideals S^1 a S^1.
std::vector<int> min_ideal_bruteforce(const SemigroupTable& s,
                                      int order_cap = 64);

inline bool is_k_thin(const ReesStructure& r) { return r.k_thin(); }

}  // namespace sgh

#endif  // SGH_IDEAL_HPP_
