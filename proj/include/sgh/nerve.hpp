#ifndef SGH_NERVE_HPP_
#define SGH_NERVE_HPP_

#include <vector>

#include "sgh/intmat.hpp"
#include "sgh/semigroup.hpp"

namespace sgh {

// Boundary matrix of the bar (Delta-set) chain complex of BS in dimension
// i: one generator per i-tuple (lexicographic, first coordinate most
// significant), boundary = sum of (-1)^j d_j with the face maps dropping
// the first entry, multiplying adjacent entries, or dropping the last.
// Dimension 0 has rank 1 (the empty tuple), so d_1 = 0.
IntMatrix bar_boundary(const SemigroupTable& s, int i, long col_cap = 20000);

// [H_1 .. H_m] of BS from the bar complex; ground truth at small order.
std::vector<FinAbGroup> nerve_homology(const SemigroupTable& s, int m,
                                       long col_cap = 20000);

}  // namespace sgh

#endif  // SGH_NERVE_HPP_
