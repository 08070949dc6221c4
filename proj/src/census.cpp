#include "sgh/census.hpp"

#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "sgh/error.hpp"
#include "sgh/ideal.hpp"
#include "sgh/resolution.hpp"

namespace sgh {

namespace {

constexpr int kUnset = -1;

// Incremental associativity check after placing cell (r, c): tests every
// triple whose last-determined cell is (r, c).
bool placement_ok(const std::vector<int>& t, int n, int r, int c) {
  auto at = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
  const int v = at(r, c);

  // (a, b) = (r, c): triples (r, c, z).
  for (int z = 0; z < n; ++z) {
    int vz = at(v, z);
    int cz = at(c, z);
    if (vz == kUnset || cz == kUnset) continue;
    int rcz = at(r, cz);
    if (rcz == kUnset) continue;
    if (vz != rcz) return false;
  }
  // (b, z) = (r, c): triples (a, r, c).
  for (int a = 0; a < n; ++a) {
    int ar = at(a, r);
    if (ar == kUnset) continue;
    int arc = at(ar, c);
    if (arc == kUnset) continue;
    int av = at(a, v);
    if (av == kUnset) continue;
    if (arc != av) return false;
  }
  // (ab, z) = (r, c): triples (a, b, c) with a*b == r.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != r) continue;
      int bc = at(b, c);
      if (bc == kUnset) continue;
      int abc = at(a, bc);
      if (abc == kUnset) continue;
      if (v != abc) return false;
    }
  }
  // (a, bz) = (r, c): triples (r, b, z) with b*z == c.
  for (int b = 0; b < n; ++b) {
    for (int z = 0; z < n; ++z) {
      if (at(b, z) != c) continue;
      int rb = at(r, b);
      if (rb == kUnset) continue;
      int rbz = at(rb, z);
      if (rbz == kUnset) continue;
      if (rbz != v) return false;
    }
  }
  return true;
}

void dfs_fill(std::vector<int>& t, int n, int idx,
              const std::function<void(const std::vector<int>&)>& emit) {
  if (idx == n * n) {
    emit(t);
    return;
  }
  const int r = idx / n, c = idx % n;
  for (int v = 0; v < n; ++v) {
    t[idx] = v;
    if (placement_ok(t, n, r, c)) {
      dfs_fill(t, n, idx + 1, emit);
    }
  }
  t[idx] = kUnset;
}

}  // namespace

void enumerate_associative_tables(
    int order, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> t(static_cast<size_t>(order) * order, kUnset);
  dfs_fill(t, order, 0, emit);
}

std::string signature_string(const std::vector<FinAbGroup>& groups) {
  std::string out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += groups[i].str();
  }
  return out;
}

CensusReport run_census(int order, int max_dim, bool extended, int threads,
                        bool progress) {
  if (order < 1 || order > 4) {
    throw OrderTooLarge("census supports orders 1..4");
  }
  if (order == 4 && !extended) {
    throw OrderTooLarge("order-4 census requires --extended");
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }

  const int n = order;
  std::set<std::vector<int>> classes;

  auto canonical_flat = [n](const std::vector<int>& flat) {
    SemigroupTable s = SemigroupTable::unchecked(
        n, flat, find_identity(n, flat));
    return canonical_form(s).flat();
  };

  if (n <= 2 || threads == 1) {
    enumerate_associative_tables(n, [&](const std::vector<int>& flat) {
      classes.insert(canonical_flat(flat));
    });
  } else {
    // Shard on the first two rows: enumerate consistent prefixes serially,
    // then complete each prefix in a worker.
    const int depth = 2 * n;
    std::vector<std::vector<int>> prefixes;
    {
      std::vector<int> t(static_cast<size_t>(n) * n, kUnset);
      std::function<void(int)> fill = [&](int idx) {
        if (idx == depth) {
          prefixes.push_back(t);
          return;
        }
        for (int v = 0; v < n; ++v) {
          t[idx] = v;
          if (placement_ok(t, n, idx / n, idx % n)) {
            fill(idx + 1);
          }
        }
        t[idx] = kUnset;
      };
      fill(0);
    }
    std::mutex merge_mutex;
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    auto worker = [&]() {
      std::set<std::vector<int>> local;
      for (;;) {
        size_t job = next.fetch_add(1);
        if (job >= prefixes.size()) break;
        std::vector<int> t = prefixes[job];
        dfs_fill(t, n, depth, [&](const std::vector<int>& flat) {
          local.insert(canonical_flat(flat));
        });
        size_t d = ++done;
        if (progress && d % 1024 == 0) {
          std::cerr << "\r" << d << "/" << prefixes.size() << " prefixes"
                    << std::flush;
        }
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      classes.merge(local);
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
    if (progress) {
      std::cerr << "\r" << prefixes.size() << "/" << prefixes.size()
                << " prefixes\n";
    }
  }

  CensusReport report;
  report.order = order;
  report.max_dim = max_dim;
  for (const std::vector<int>& flat : classes) {
    SemigroupTable s = SemigroupTable::unchecked(
        n, flat, find_identity(n, flat));
    ++report.total_classes;
    if (!min_ideal(s).k_thin()) {
      ++report.non_k_thin_classes;
    }
    ++report.signature_counts[signature_string(get_homology(s, max_dim))];
  }
  return report;
}

}  // namespace sgh
