#ifndef SGH_CENSUS_HPP_
#define SGH_CENSUS_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgh/finab.hpp"
#include "sgh/semigroup.hpp"

namespace sgh {

// Homology census of all semigroups of one order, up to isomorphism and
// anti-isomorphism.
struct CensusReport {
  int order = 0;
  int max_dim = 0;
  // signature (H_1..H_m formatted, comma separated) -> class count
  std::map<std::string, long long> signature_counts;
  long long total_classes = 0;
  long long non_k_thin_classes = 0;
};

std::string signature_string(const std::vector<FinAbGroup>& groups);

// Enumerates every associative multiplication table of the given order
// (depth-first filling with incremental associativity checks) and invokes
// the callback with each flat table.
void enumerate_associative_tables(
    int order, const std::function<void(const std::vector<int>&)>& emit);

// Runs the census: enumerate, bucket by canonical form, compute the
// homology signature H_1..H_m per class. Order 4 is gated behind
// `extended` (the raw space is 4^16). threads = 0 picks the hardware
// concurrency.
CensusReport run_census(int order, int max_dim = 6, bool extended = false,
                        int threads = 0, bool progress = false);

}  // namespace sgh

#endif  // SGH_CENSUS_HPP_
