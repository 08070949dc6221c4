#ifndef SGH_GROUP_HPP_
#define SGH_GROUP_HPP_

#include <vector>

#include "sgh/finab.hpp"
#include "sgh/semigroup.hpp"

namespace sgh {

// Union by size with path compression.
class DisjointSetForest {
 public:
  explicit DisjointSetForest(int n);

  int find(int x);
  bool same_component(int a, int b) { return find(a) == find(b); }
  // Returns true when the merge was effective.
  bool merge_components(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

// A group sitting inside an ambient table: the element subset, its
// identity, and the inverse map (indexed by element id; -1 outside).
struct GroupTable {
  std::vector<int> elems;  // sorted
  int e;
  std::vector<int> sigma;
};

// Finds the identity (the unique idempotent) and all inverses in O(|H|)
// semigroup operations via power walks. Verifies sigma before returning;
// throws NotAGroup when the subset is not a group under the ambient
// product.
GroupTable identity_and_inverses(const SemigroupTable& s,
                                 const std::vector<int>& subset);

// The subgroup <X> <= H, computed with a disjoint-set forest over H: each
// generator not yet in the component of e merges h with h*x for all h.
// O(|H| log |H| alpha(|H|)) because every effective pass at least doubles
// the coset size. Returns {h in H : sameComponent(h, e)}, sorted.
std::vector<int> generated_subgroup(const SemigroupTable& s,
                                    const GroupTable& h,
                                    const std::vector<int>& x);

// The group completion GS as representatives inside S.
struct QuotientGroup {
  std::vector<int> reps;  // representative elements, ascending
  std::vector<int> rho;   // element id -> index into reps
  int rep_of(int x) const { return reps[rho[x]]; }
};

// Group completion GS = H/N where K(S) = M(H; I, J; <.>) and N is the
// normal closure of the sandwich entries. Uses the minimal-ideal
// structure, the inverse finder and the disjoint-set forest; the total
// table-lookup count is O(|S| log |S| alpha(|S|)).
QuotientGroup group_completion(const SemigroupTable& s);

// Multiplication table of the quotient group on rep indices. |R|^2 products.
SemigroupTable quotient_table(const SemigroupTable& s,
                              const QuotientGroup& g);

// Invariant factors of G/[G, G], via the cokernel of the Cayley relation
// matrix (one relation a + b - ab per pair).
FinAbGroup abelianization(const SemigroupTable& s, const QuotientGroup& g);

// Invariant factors of a finite abelian group given by its table.
FinAbGroup abelian_invariants(const SemigroupTable& g);

}  // namespace sgh

#endif  // SGH_GROUP_HPP_
