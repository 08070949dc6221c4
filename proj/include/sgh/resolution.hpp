#ifndef SGH_RESOLUTION_HPP_
#define SGH_RESOLUTION_HPP_

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgh/finab.hpp"
#include "sgh/ideal.hpp"
#include "sgh/intmat.hpp"
#include "sgh/semigroup.hpp"

namespace sgh {

struct ResolutionCaps {
  size_t max_nodes = 100000;       // live resolution nodes
  long max_rank_per_node = 100000; // total Z-rank of one node's domain
  long max_shift = 1000000;
};

// A vector over the Z-basis of a summand module, as sorted
// (global basis index, coefficient) pairs with nonzero coefficients.
using SparseVec = std::vector<std::pair<int, Int>>;

// The ambient monoid of a resolution, with the left ideals S*e enumerated
// once per idempotent.
class MonoidCtx {
 public:
  explicit MonoidCtx(SemigroupTable monoid);

  const SemigroupTable& table() const { return s_; }
  int order() const { return s_.order(); }
  int one() const { return s_.identity(); }

  // Idempotents sorted by (|Se|, e) ascending.
  const std::vector<int>& idempotents_by_ideal_size() const {
    return idem_by_size_;
  }
  const std::vector<int>& left_ideal(int e) const { return basis_[e]; }
  int left_pos(int e, int elem) const { return pos_[e][elem]; }

 private:
  SemigroupTable s_;
  std::vector<int> idem_by_size_;
  std::vector<std::vector<int>> basis_;  // basis_[e] = sorted S*e
  std::vector<std::vector<int>> pos_;    // pos_[e][x] = index in basis_[e]
};

// C = ZSe_1 + ... + ZSe_k, with the Z-basis of summand j enumerated as the
// sorted left ideal S*e_j.
struct SummandModule {
  const MonoidCtx* ctx = nullptr;
  std::vector<int> idem;
  std::vector<int> offset;  // size idem.size() + 1

  static SummandModule make(const MonoidCtx& ctx, std::vector<int> idems);
  int summands() const { return static_cast<int>(idem.size()); }
  int total_rank() const { return offset.back(); }
  // (summand, element of S*e_j) -> global basis index
  int global_index(int summand, int elem) const;
  // global basis index -> (summand, element)
  std::pair<int, int> locate(int g) const;
};

// A ZS-linear map between summand modules; column j is the image of the
// generator e_j, expanded over the codomain basis (the right-multiplier
// form is recovered only for display).
struct BoundaryMap {
  SummandModule dom, cod;
  std::vector<SparseVec> cols;  // one per domain summand
};

// The left action of the monoid element s on a vector.
SparseVec left_action_expand(const SummandModule& mod, int s,
                             const SparseVec& v);

// Entrywise augmentation of the right-multiplier matrix: entry (i, j) is
// the coefficient sum of column j within codomain block i.
IntMatrix augmentation_matrix(const BoundaryMap& b);

// The Z-linear matrix of the boundary over the enumerated Z-bases.
IntMatrix boundary_as_int_matrix(const BoundaryMap& b);

// Covering submodule construction: returns (C', d) with d(C') equal to the
// ZS-span of the given kernel vectors. Each chosen vector v gets a summand
// ZSe with e*v = v and |Se| minimal.
BoundaryMap cover_by_mapping(const MonoidCtx& ctx, const SummandModule& cod,
                             std::vector<SparseVec> kernel_vectors,
                             long max_rank);

struct ResolutionNode {
  BoundaryMap bnd;
  bool children_made = false;
  // One child per block; nodes are owned by the engine's cache and can
  // repeat (shared subtrees, self-loops).
  std::vector<ResolutionNode*> children;
  std::vector<std::vector<int>> block_summands;  // domain indices per block
  std::map<long, FinAbGroup> h_cache;
};

// Resolution-backed homology of a finite monoid: nodes are cached by the
// canonical serialization of (domain idempotents, codomain idempotents,
// boundary columns), which keeps self-similar resolutions finite.
class ResolutionEngine {
 public:
  ResolutionEngine(SemigroupTable monoid, ResolutionCaps caps = {});

  // H_{shift+1}(BS; Z).
  FinAbGroup homology_with_shift(long shift);

  ResolutionNode* root() const { return root_; }
  const MonoidCtx& ctx() const { return ctx_; }
  size_t node_count() const { return nodes_created_; }

  void make_children(ResolutionNode& node);
  FinAbGroup compute_homology(ResolutionNode& node);

 private:
  FinAbGroup shift_of(ResolutionNode& node, long shift);
  ResolutionNode* intern(BoundaryMap bnd);

  MonoidCtx ctx_;
  ResolutionCaps caps_;
  std::unordered_map<std::string, std::unique_ptr<ResolutionNode>> cache_;
  ResolutionNode* root_ = nullptr;
  size_t nodes_created_ = 0;
};

// [H_1 .. H_m] for a monoid, straight through the resolution engine.
std::vector<FinAbGroup> resolve_monoid_homology(const SemigroupTable& monoid,
                                                int m,
                                                ResolutionCaps caps = {});

// Pre-computed homology patterns for the small-group short circuit, as
// functions of the dimension.
FinAbGroup cyclic_group_homology(int k, int dim);
FinAbGroup klein_group_homology(int dim);

struct HomologyOptions {
  ResolutionCaps caps;
  // Dispatch toggles, used by consistency tests to force the generic path.
  bool kthin_shortcut = true;
  bool ese_reduction = true;
};

// [H_1(BS; Z) .. H_m(BS; Z)] with the full dispatch: K-thin semigroups
// reduce to group homology, a one-sided monoid ideal eSe reduces the
// table, and otherwise the resolution runs over S with a unit adjoined.
std::vector<FinAbGroup> get_homology(const SemigroupTable& s, int m,
                                     const HomologyOptions& opts = {});

}  // namespace sgh

#endif  // SGH_RESOLUTION_HPP_
