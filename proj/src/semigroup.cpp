#include "sgh/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgh/error.hpp"

namespace sgh {

SemigroupTable SemigroupTable::unchecked(int n, std::vector<int> table,
                                         std::optional<int> identity) {
  return SemigroupTable(n, std::move(table), identity);
}

std::optional<int> find_identity(int n, const std::vector<int>& flat) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = flat[static_cast<size_t>(e) * n + x] == x
           && flat[static_cast<size_t>(x) * n + e] == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

SemigroupTable validate_table_flat(int n, const std::vector<int>& raw,
                                   std::optional<int> identity_hint) {
  if (n < 1) {
    throw EntryOutOfRange("order must be >= 1");
  }
  if (raw.size() != static_cast<size_t>(n) * n) {
    throw EntryOutOfRange("table has wrong size");
  }
  for (int v : raw) {
    if (v < 0 || v >= n) {
      throw EntryOutOfRange("entry " + std::to_string(v)
                            + " outside [0, " + std::to_string(n) + ")");
    }
  }
  auto mul = [&](int a, int b) { return raw[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw NotAssociative(a, b, c);
        }
      }
    }
  }
  std::optional<int> id = find_identity(n, raw);
  if (identity_hint.has_value() && id != identity_hint) {
    throw BadIdentityHint("hinted identity "
                          + std::to_string(*identity_hint)
                          + " is not a two-sided identity");
  }
  return SemigroupTable::unchecked(n, raw, id);
}

SemigroupTable validate_table(const std::vector<std::vector<int>>& raw,
                              std::optional<int> identity_hint) {
  const int n = static_cast<int>(raw.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n) {
      throw EntryOutOfRange("table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_table_flat(n, flat, identity_hint);
}

SemigroupTable adjoin_unit(const SemigroupTable& s) {
  const int n = s.order();
  const int m = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[static_cast<size_t>(a) * m + b] = s.at(a, b);
    }
  }
  for (int a = 0; a < m; ++a) {
    t[static_cast<size_t>(a) * m + n] = a;
    t[static_cast<size_t>(n) * m + a] = a;
  }
  return SemigroupTable::unchecked(m, std::move(t), n);
}

SemigroupTable opposite(const SemigroupTable& s) {
  const int n = s.order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[static_cast<size_t>(a) * n + b] = s.at(b, a);
    }
  }
  return SemigroupTable::unchecked(n, std::move(t), s.identity_opt());
}

SemigroupTable direct_product(const SemigroupTable& s,
                              const SemigroupTable& t) {
  const int ns = s.order(), nt = t.order();
  const int n = ns * nt;
  std::vector<int> p(static_cast<size_t>(n) * n);
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < nt; ++b) {
      for (int c = 0; c < ns; ++c) {
        for (int d = 0; d < nt; ++d) {
          p[static_cast<size_t>(a * nt + b) * n + (c * nt + d)]
              = s.at(a, c) * nt + t.at(b, d);
        }
      }
    }
  }
  std::optional<int> id;
  if (s.is_monoid() && t.is_monoid()) {
    id = s.identity() * nt + t.identity();
  }
  return SemigroupTable::unchecked(n, std::move(p), id);
}

SemigroupTable construct_rectangular_band(int a, int b) {
  if (a < 1 || b < 1) {
    throw EntryOutOfRange("rectangular band needs a, b >= 1");
  }
  const int n = a * b;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < a; ++k) {
        for (int l = 0; l < b; ++l) {
          t[static_cast<size_t>(i * b + j) * n + (k * b + l)] = i * b + l;
        }
      }
    }
  }
  std::optional<int> id;
  if (n == 1) {
    id = 0;
  }
  return SemigroupTable::unchecked(n, std::move(t), id);
}

SemigroupTable construct_cyclic_group(int k) {
  if (k < 1) {
    throw EntryOutOfRange("cyclic group needs k >= 1");
  }
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      t[static_cast<size_t>(a) * k + b] = (a + b) % k;
    }
  }
  return SemigroupTable::unchecked(k, std::move(t), 0);
}

SemigroupTable construct_join(const SemigroupTable& s, int y_count) {
  if (!s.is_monoid()) {
    throw NotAMonoid("join construction requires a monoid");
  }
  if (y_count < 0) {
    throw EntryOutOfRange("y_count must be >= 0");
  }
  const int ns = s.order();
  const int n = (1 + y_count) * ns;
  std::vector<int> t(static_cast<size_t>(n) * n);
  auto idx = [&](int k, int x) { return k * ns + x; };
  for (int k = 0; k <= y_count; ++k) {
    for (int x = 0; x < ns; ++x) {
      for (int k2 = 0; k2 <= y_count; ++k2) {
        for (int x2 = 0; x2 < ns; ++x2) {
          int out;
          if (k == 0 && k2 == 0) {
            out = idx(0, s.at(x, x2));       // x * x' = xx'
          } else if (k == 0) {
            out = idx(k2, x2);               // x * y'x' = y'x'
          } else if (k2 == 0) {
            out = idx(k, s.at(x, x2));       // yx * x' = y(xx')
          } else {
            out = idx(k, x2);                // yx * y'x' = yx'
          }
          t[static_cast<size_t>(idx(k, x)) * n + idx(k2, x2)] = out;
        }
      }
    }
  }
  return SemigroupTable::unchecked(n, std::move(t), s.identity());
}

bool satisfies_identity(const SemigroupTable& s, const WordEquation& eq,
                        int var_cap) {
  if (eq.lhs.empty() || eq.rhs.empty()) {
    throw EntryOutOfRange("equation sides must be nonempty");
  }
  int vars = 0;
  for (int v : eq.lhs) {
    vars = std::max(vars, v + 1);
  }
  for (int v : eq.rhs) {
    vars = std::max(vars, v + 1);
  }
  std::vector<bool> seen(vars, false);
  for (int v : eq.lhs) seen[v] = true;
  for (int v : eq.rhs) seen[v] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw EntryOutOfRange("variable indices must be contiguous from 0");
  }
  if (vars > var_cap) {
    throw TooManyVariables(std::to_string(vars) + " variables exceeds cap "
                           + std::to_string(var_cap));
  }
  const int n = s.order();
  std::vector<int> assign(vars, 0);
  auto eval = [&](const std::vector<int>& word) {
    int acc = assign[word[0]];
    for (size_t i = 1; i < word.size(); ++i) {
      acc = s.at(acc, assign[word[i]]);
    }
    return acc;
  };
  for (;;) {
    if (eval(eq.lhs) != eval(eq.rhs)) {
      return false;
    }
    int pos = vars - 1;
    while (pos >= 0 && assign[pos] == n - 1) {
      assign[pos--] = 0;
    }
    if (pos < 0) {
      return true;
    }
    ++assign[pos];
  }
}

std::vector<int> idempotents(const SemigroupTable& s) {
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e) {
    if (s.at(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

SemigroupTable subtable(const SemigroupTable& s, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const int m = static_cast<int>(subset.size());
  std::vector<int> pos(s.order(), -1);
  for (int p = 0; p < m; ++p) {
    if (subset[p] < 0 || subset[p] >= s.order()) {
      throw EntryOutOfRange("subset element outside the table");
    }
    pos[subset[p]] = p;
  }
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int prod = s.at(subset[a], subset[b]);
      if (pos[prod] < 0) {
        throw EntryOutOfRange("subset is not closed under the product");
      }
      t[static_cast<size_t>(a) * m + b] = pos[prod];
    }
  }
  std::optional<int> id = find_identity(m, t);
  return SemigroupTable::unchecked(m, std::move(t), id);
}

SemigroupTable canonical_form(const SemigroupTable& s, int order_cap) {
  const int n = s.order();
  if (n > order_cap) {
    throw OrderTooLarge("canonical_form is a full n! scan, capped at order "
                        + std::to_string(order_cap));
  }
  const std::vector<int>& orig = s.flat();
  std::vector<int> op(orig.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      op[static_cast<size_t>(a) * n + b] = orig[static_cast<size_t>(b) * n + a];
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> cur(orig.size());
  do {
    for (const std::vector<int>* tab
         : {&orig, static_cast<const std::vector<int>*>(&op)}) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          cur[static_cast<size_t>(perm[a]) * n + perm[b]]
              = perm[(*tab)[static_cast<size_t>(a) * n + b]];
        }
      }
      if (best.empty() || cur < best) {
        best = cur;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::optional<int> id = find_identity(n, best);
  return SemigroupTable::unchecked(n, std::move(best), id);
}

}  // namespace sgh
