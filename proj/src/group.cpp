#include "sgh/group.hpp"

#include <algorithm>
#include <string>

#include "sgh/error.hpp"
#include "sgh/ideal.hpp"
#include "sgh/intmat.hpp"

namespace sgh {

DisjointSetForest::DisjointSetForest(int n)
    : parent_(n), size_(n, 1), components_(n) {
  for (int i = 0; i < n; ++i) {
    parent_[i] = i;
  }
}

int DisjointSetForest::find(int x) {
  int root = x;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[x] != root) {
    int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSetForest::merge_components(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) {
    return false;
  }
  if (size_[a] < size_[b]) {
    std::swap(a, b);
  }
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

GroupTable identity_and_inverses(const SemigroupTable& s,
                                 const std::vector<int>& subset) {
  const int n = s.order();
  std::vector<char> in(n, 0);
  for (int h : subset) {
    if (h < 0 || h >= n) {
      throw ElementOutsideGroup("element outside the table");
    }
    in[h] = 1;
  }
  int e = -1;
  for (int h : subset) {
    if (s.at(h, h) == h) {
      if (e >= 0) {
        throw NotAGroup("more than one idempotent");
      }
      e = h;
    }
  }
  if (e < 0) {
    throw NotAGroup("no idempotent");
  }

  std::vector<int> sigma(n, -1);
  sigma[e] = e;
  std::vector<int> walk;
  for (int h : subset) {
    walk.assign({e, h});
    while (sigma[walk.back()] < 0) {
      int next = s.at(walk.back(), h);
      if (!in[next] || static_cast<int>(walk.size()) > n + 1) {
        throw NotAGroup("powers escape the subset");
      }
      walk.push_back(next);
    }
    // walk = [e, h, h^2, ..., h^t] with sigma(h^t) known; back-fill
    // sigma(h^l) = sigma(h^t) * h^(t-l).
    const int t = static_cast<int>(walk.size()) - 1;
    for (int l = 1; l < t; ++l) {
      sigma[walk[l]] = s.at(sigma[walk[t]], walk[t - l]);
    }
  }
  for (int h : subset) {
    int g = sigma[h];
    if (g < 0 || !in[g] || sigma[g] != h || s.at(h, g) != e
        || s.at(g, h) != e) {
      throw NotAGroup("inverse verification failed");
    }
  }

  GroupTable out;
  out.elems = subset;
  std::sort(out.elems.begin(), out.elems.end());
  out.e = e;
  out.sigma = std::move(sigma);
  return out;
}

std::vector<int> generated_subgroup(const SemigroupTable& s,
                                    const GroupTable& h,
                                    const std::vector<int>& x) {
  const int n = s.order();
  std::vector<int> pos(n, -1);
  for (size_t p = 0; p < h.elems.size(); ++p) {
    pos[h.elems[p]] = static_cast<int>(p);
  }
  for (int g : x) {
    if (g < 0 || g >= n || pos[g] < 0) {
      throw ElementOutsideGroup("generator outside the group");
    }
  }
  DisjointSetForest forest(static_cast<int>(h.elems.size()));
  const int epos = pos[h.e];
  for (int g : x) {
    if (!forest.same_component(epos, pos[g])) {
      for (size_t p = 0; p < h.elems.size(); ++p) {
        forest.merge_components(static_cast<int>(p),
                                pos[s.at(h.elems[p], g)]);
      }
    }
  }
  std::vector<int> out;
  for (size_t p = 0; p < h.elems.size(); ++p) {
    if (forest.same_component(static_cast<int>(p), epos)) {
      out.push_back(h.elems[p]);
    }
  }
  return out;
}

QuotientGroup group_completion(const SemigroupTable& s) {
  ReesStructure rees = min_ideal(s, Verify::Light);
  GroupTable group = identity_and_inverses(s, rees.H);
  const int e = group.e;

  // Conjugate generating set (JI)^H = {h * j * i * sigma(h)}.
  std::vector<int> gens;
  gens.reserve(rees.H.size() * rees.I.size() * rees.J.size());
  for (int h : rees.H) {
    for (int j : rees.J) {
      int hj = s.at(h, j);
      for (int i : rees.I) {
        gens.push_back(s.at(s.at(hj, i), group.sigma[h]));
      }
    }
  }
  std::vector<int> normal = generated_subgroup(s, group, gens);

  // Assign coset representatives in ascending H order.
  const int n = s.order();
  std::vector<char> remaining(n, 0);
  for (int h : rees.H) {
    remaining[h] = 1;
  }
  QuotientGroup out;
  out.rho.assign(n, -1);
  for (int h : rees.H) {
    if (!remaining[h]) {
      continue;
    }
    int rep_index = static_cast<int>(out.reps.size());
    out.reps.push_back(h);
    for (int g : normal) {
      int hg = s.at(h, g);
      remaining[hg] = 0;
      out.rho[hg] = rep_index;
    }
  }
  // rho(x) = rho(e * x * e) for every x in S.
  for (int x = 0; x < n; ++x) {
    if (out.rho[x] < 0) {
      out.rho[x] = out.rho[s.at(s.at(e, x), e)];
    }
  }
  return out;
}

SemigroupTable quotient_table(const SemigroupTable& s,
                              const QuotientGroup& g) {
  const int m = static_cast<int>(g.reps.size());
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      t[static_cast<size_t>(a) * m + b] = g.rho[s.at(g.reps[a], g.reps[b])];
    }
  }
  std::optional<int> id = find_identity(m, t);
  return SemigroupTable::unchecked(m, std::move(t), id);
}

FinAbGroup abelianization(const SemigroupTable& s, const QuotientGroup& g) {
  return abelian_invariants(quotient_table(s, g));
}

FinAbGroup abelian_invariants(const SemigroupTable& g) {
  const int m = g.order();
  // Presentation matrix of G^ab: generators g_0..g_{m-1}, one relation
  // g_a + g_b - g_{a*b} per pair. Its cokernel is G/[G,G].
  IntMatrix rel(m, m * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int c = a * m + b;
      rel.at(a, c) += 1;
      rel.at(b, c) += 1;
      rel.at(g.at(a, b), c) -= 1;
    }
  }
  SmithResult snf = smith_normal_form(rel);
  std::vector<Int> chain;
  int nonzero = 0;
  for (const Int& d : snf.diag) {
    if (d != 0) {
      ++nonzero;
      if (d >= 2) {
        chain.push_back(d);
      }
    }
  }
  return FinAbGroup::from_chain(Int(m - nonzero), chain);
}

SemigroupTable construct_rees_matrix(const SemigroupTable& h, int a, int b,
                                     const std::vector<std::vector<int>>&
                                         sandwich) {
  if (a < 1 || b < 1) {
    throw EntryOutOfRange("rees matrix needs a, b >= 1");
  }
  const int nh = h.order();
  std::vector<int> all(nh);
  for (int i = 0; i < nh; ++i) {
    all[i] = i;
  }
  GroupTable group = identity_and_inverses(h, all);  // throws NotAGroup
  (void)group;
  if (static_cast<int>(sandwich.size()) != b) {
    throw EntryOutOfRange("sandwich must have |J| = b rows");
  }
  for (const auto& row : sandwich) {
    if (static_cast<int>(row.size()) != a) {
      throw EntryOutOfRange("sandwich must have |I| = a columns");
    }
    for (int v : row) {
      if (v < 0 || v >= nh) {
        throw EntryOutOfRange("sandwich entry outside H");
      }
    }
  }
  const int n = a * nh * b;
  auto idx = [&](int i, int g, int j) { return (i * nh + g) * b + j; };
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < a; ++i) {
    for (int g = 0; g < nh; ++g) {
      for (int j = 0; j < b; ++j) {
        for (int i2 = 0; i2 < a; ++i2) {
          for (int g2 = 0; g2 < nh; ++g2) {
            for (int j2 = 0; j2 < b; ++j2) {
              int mid = h.at(h.at(g, sandwich[j][i2]), g2);
              t[static_cast<size_t>(idx(i, g, j)) * n + idx(i2, g2, j2)]
                  = idx(i, mid, j2);
            }
          }
        }
      }
    }
  }
  std::optional<int> id = find_identity(n, t);
  return SemigroupTable::unchecked(n, std::move(t), id);
}

}  // namespace sgh
