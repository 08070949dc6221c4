#include "sgh/finab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgh {

FinAbGroup FinAbGroup::free_abelian(Int rank) {
  if (rank < 0) {
    throw std::invalid_argument("negative rank");
  }
  FinAbGroup g;
  g.rank_ = std::move(rank);
  return g;
}

FinAbGroup FinAbGroup::cyclic(Int d) {
  if (d < 1) {
    throw std::invalid_argument("cyclic order must be >= 1");
  }
  FinAbGroup g;
  if (d > 1) {
    g.torsion_.emplace_back(std::move(d), 1);
  }
  return g;
}

FinAbGroup FinAbGroup::from_chain(Int rank, const std::vector<Int>& chain) {
  FinAbGroup g;
  g.rank_ = std::move(rank);
  for (const Int& d : chain) {
    if (d < 1) {
      throw std::invalid_argument("invariant factor must be >= 1");
    }
    if (d == 1) {
      continue;
    }
    if (!g.torsion_.empty() && g.torsion_.back().first == d) {
      g.torsion_.back().second += 1;
    } else {
      if (!g.torsion_.empty() && d % g.torsion_.back().first != 0) {
        throw std::invalid_argument("not a divisibility chain");
      }
      g.torsion_.emplace_back(d, 1);
    }
  }
  return g;
}

Int FinAbGroup::torsion_length() const {
  Int total = 0;
  for (const auto& [d, m] : torsion_) {
    total += m;
  }
  return total;
}

std::string FinAbGroup::str() const {
  if (is_trivial()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  auto sep = [&]() {
    if (!first) {
      out << " x ";
    }
    first = false;
  };
  if (rank_ > 0) {
    sep();
    out << "Z";
    if (rank_ != 1) {
      out << "^" << rank_.str();
    }
  }
  for (const auto& [d, m] : torsion_) {
    sep();
    out << "C_" << d.str();
    if (m != 1) {
      out << "^" << m.str();
    }
  }
  return out.str();
}

std::vector<std::pair<Int, long>> factorize(Int n) {
  if (n < 1) {
    throw std::invalid_argument("factorize expects n >= 1");
  }
  std::vector<std::pair<Int, long>> out;
  auto strip = [&](const Int& p) {
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      out.emplace_back(p, e);
    }
  };
  strip(2);
  for (Int p = 3; p * p <= n; p += 2) {
    strip(p);
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<std::pair<Int, Int>> canonicalize_torsion(
    std::vector<std::pair<Int, Int>> factors) {
  // Primary decomposition per prime: a descending list of exponents with
  // multiplicities. Invariant factor #i (counted from the largest) is the
  // product over primes of p^(i-th largest exponent of p).
  std::map<Int, std::vector<std::pair<long, Int>>> primary;  // p -> (exp, mult)
  for (auto& [d, m] : factors) {
    if (m <= 0 || d <= 1) {
      continue;
    }
    for (const auto& [p, e] : factorize(d)) {
      primary[p].emplace_back(e, m);
    }
  }
  if (primary.empty()) {
    return {};
  }

  Int total = 0;  // chain length = max over primes of total multiplicity
  std::set<Int> cuts;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    // Merge equal exponents.
    std::vector<std::pair<long, Int>> merged;
    for (const auto& em : exps) {
      if (!merged.empty() && merged.back().first == em.first) {
        merged.back().second += em.second;
      } else {
        merged.push_back(em);
      }
    }
    exps = std::move(merged);
    Int cum = 0;
    for (const auto& [e, m] : exps) {
      cum += m;
      cuts.insert(cum);
    }
    total = std::max(total, cum);
  }
  cuts.insert(total);

  // Positions are counted from the largest invariant factor. Between two
  // consecutive cuts every prime contributes a constant power, so the
  // invariant factor is constant on the segment.
  std::vector<std::pair<Int, Int>> descending;  // (factor, run length)
  Int prev = 0;
  for (const Int& cut : cuts) {
    if (cut > total) {
      break;
    }
    Int len = cut - prev;
    if (len == 0) {
      continue;
    }
    // Factor at position prev+1 (1-based from the largest).
    Int f = 1;
    for (const auto& [p, exps] : primary) {
      Int cum = 0;
      for (const auto& [e, m] : exps) {
        cum += m;
        if (cum >= prev + 1) {
          Int pe = 1;
          for (long i = 0; i < e; ++i) {
            pe *= p;
          }
          f *= pe;
          break;
        }
      }
    }
    descending.emplace_back(f, len);
    prev = cut;
  }

  std::reverse(descending.begin(), descending.end());
  std::vector<std::pair<Int, Int>> chain;
  for (auto& fm : descending) {
    if (!chain.empty() && chain.back().first == fm.first) {
      chain.back().second += fm.second;
    } else {
      chain.push_back(std::move(fm));
    }
  }
  return chain;
}

FinAbGroup direct_sum(const std::vector<std::pair<FinAbGroup, Int>>& parts) {
  FinAbGroup out;
  std::vector<std::pair<Int, Int>> factors;
  for (const auto& [g, mult] : parts) {
    if (mult < 0) {
      throw std::invalid_argument("negative multiplicity");
    }
    if (mult == 0) {
      continue;
    }
    out.rank_ += g.rank_ * mult;
    for (const auto& [d, m] : g.torsion_) {
      factors.emplace_back(d, m * mult);
    }
  }
  out.torsion_ = canonicalize_torsion(std::move(factors));
  return out;
}

}  // namespace sgh
