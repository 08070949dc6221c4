#ifndef SGH_FINAB_HPP_
#define SGH_FINAB_HPP_

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgh {

using Int = boost::multiprecision::cpp_int;

// A finitely generated abelian group Z^rank x C_{d_1} x ... x C_{d_t} in
// invariant-factor form, d_1 | d_2 | ... | d_t with every d_i >= 2.
//
// The torsion chain is run-length encoded as (factor, multiplicity) pairs
// with strictly increasing factors, because multiplicities can be as large
// as the ranks (both are arbitrary-precision).
class FinAbGroup {
 public:
  FinAbGroup() : rank_(0) {}

  static FinAbGroup trivial() { return FinAbGroup(); }
  static FinAbGroup free_abelian(Int rank);
  static FinAbGroup cyclic(Int d);
  // From a divisibility chain d_1 | d_2 | ... (entries >= 1; 1s dropped).
  static FinAbGroup from_chain(Int rank, const std::vector<Int>& chain);

  const Int& rank() const { return rank_; }
  const std::vector<std::pair<Int, Int>>& torsion() const { return torsion_; }

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  Int torsion_length() const;  // total number of invariant factors

  // Canonical display, e.g. "0", "Z", "Z^9 x C_1494640", "Z x C_2^5".
  std::string str() const;

  bool operator==(const FinAbGroup& o) const {
    return rank_ == o.rank_ && torsion_ == o.torsion_;
  }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

 private:
  Int rank_;
  std::vector<std::pair<Int, Int>> torsion_;

  friend FinAbGroup direct_sum(
      const std::vector<std::pair<FinAbGroup, Int>>& parts);
};

// Direct sum with multiplicities; repeated summands cost O(1) in the
// multiplicity. Torsion is re-canonicalized to a divisibility chain.
FinAbGroup direct_sum(const std::vector<std::pair<FinAbGroup, Int>>& parts);

// Rebuild a divisibility chain from an arbitrary multiset of cyclic factors
// given as (factor, multiplicity) pairs. Exposed for tests.
std::vector<std::pair<Int, Int>> canonicalize_torsion(
    std::vector<std::pair<Int, Int>> factors);

// Prime factorization by trial division; invariant factors at desk scale
// are small. Returns (prime, exponent) pairs with increasing primes.
std::vector<std::pair<Int, long>> factorize(Int n);

}  // namespace sgh

#endif  // SGH_FINAB_HPP_
