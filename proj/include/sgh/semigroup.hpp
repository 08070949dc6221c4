#ifndef SGH_SEMIGROUP_HPP_
#define SGH_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace sgh {

// An equation between two words in variables 0, 1, 2, ..., e.g.
// lhs = {0, 1}, rhs = {1, 0} for xy = yx.
struct WordEquation {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

// A finite semigroup given by its n x n multiplication table. Immutable
// after construction; all operations are pure, so tables can be shared
// freely between threads.
//
// The monoid flag is always derived by scanning for a two-sided identity,
// never trusted from input.
class SemigroupTable {
 public:
  int order() const { return n_; }

  int at(int a, int b) const {
    if (counter_ != nullptr) {
      ++*counter_;
    }
    return t_[static_cast<size_t>(a) * n_ + b];
  }

  bool is_monoid() const { return id_.has_value(); }
  int identity() const { return *id_; }
  std::optional<int> identity_opt() const { return id_; }

  // Instrumentation hook for operation-count tests: every at() call bumps
  // the counter while one is attached.
  void set_op_counter(uint64_t* counter) const { counter_ = counter; }

  // Constructs without checking associativity; for constructors whose
  // output is associative by construction. The identity index, if given,
  // must be correct.
  static SemigroupTable unchecked(int n, std::vector<int> table,
                                  std::optional<int> identity);

  const std::vector<int>& flat() const { return t_; }

 private:
  SemigroupTable(int n, std::vector<int> t, std::optional<int> id)
      : n_(n), t_(std::move(t)), id_(id) {}

  int n_;
  std::vector<int> t_;
  std::optional<int> id_;
  mutable uint64_t* counter_ = nullptr;
};

// Validates entries, associativity and the identity hint; detects an
// identity automatically when none is hinted.
SemigroupTable validate_table(const std::vector<std::vector<int>>& raw,
                              std::optional<int> identity_hint = std::nullopt);
SemigroupTable validate_table_flat(int n, const std::vector<int>& raw,
                                   std::optional<int> identity_hint
                                   = std::nullopt);

// Finds a two-sided identity, if any.
std::optional<int> find_identity(int n, const std::vector<int>& flat);

// Freely adjoins a unit (as the new last element), even if S is already a
// monoid.
SemigroupTable adjoin_unit(const SemigroupTable& s);

// The opposite semigroup (transposed table).
SemigroupTable opposite(const SemigroupTable& s);

// Componentwise product; index (s, t) -> s * |T| + t. The result is a
// monoid iff both factors are.
SemigroupTable direct_product(const SemigroupTable& s,
                              const SemigroupTable& t);

// x_{ij} x_{kl} = x_{il}, with x_{ij} at index i*b + j (0-based).
SemigroupTable construct_rectangular_band(int a, int b);

// Addition mod k with identity 0.
SemigroupTable construct_cyclic_group(int k);

// The join construction: a monoid on S together with y_count extra "rows"
// {y_k x : x in S}, where S acts by right multiplication on the rows and
// the rows form a left-zero family. Element (k, x) sits at index k*|S| + x,
// with k = 0 the copy of S. Requires S to be a monoid.
SemigroupTable construct_join(const SemigroupTable& s, int y_count);

// Rees matrix semigroup over a group table h with |I| = a, |J| = b and a
// b x a sandwich matrix of h-indices; element (i, h, j) is at index
// (i*|H| + h)*b + j. Throws NotAGroup if h is not a group.
// Defined in group.cpp (it uses the identity/inverse finder).
SemigroupTable construct_rees_matrix(const SemigroupTable& h, int a, int b,
                                     const std::vector<std::vector<int>>&
                                         sandwich);

// Whether the equation holds under all substitutions. The number of
// distinct variables is capped (n^vars substitutions).
bool satisfies_identity(const SemigroupTable& s, const WordEquation& eq,
                        int var_cap = 4);

std::vector<int> idempotents(const SemigroupTable& s);

// The subsemigroup on a product-closed subset, re-indexed by position in
// the (sorted) subset. Throws if the subset is not closed.
SemigroupTable subtable(const SemigroupTable& s, std::vector<int> subset);

// Lexicographically minimal flattened table over all relabelings of s and
// of opposite(s); the census key for classes up to isomorphism and
// anti-isomorphism. Full n! scan, capped.
SemigroupTable canonical_form(const SemigroupTable& s, int order_cap = 5);

}  // namespace sgh

#endif  // SGH_SEMIGROUP_HPP_
