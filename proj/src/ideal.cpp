#include "sgh/ideal.hpp"

#include <algorithm>
#include <string>

#include "sgh/error.hpp"
#include "sgh/group.hpp"

namespace sgh {

namespace {

// Collects {f(x) : x in S} with f(x) subject to a filter, deduplicated via
// an order-n boolean array and returned in ascending element order.
template <typename F, typename P>
std::vector<int> collect(int n, F f, P keep) {
  std::vector<char> mark(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = f(x);
    if (keep(y)) {
      mark[y] = 1;
    }
  }
  std::vector<int> out;
  for (int y = 0; y < n; ++y) {
    if (mark[y]) {
      out.push_back(y);
    }
  }
  return out;
}

// Builds the candidate structure for a given H set and verifies it.
// Returns false (without throwing) on a verification failure so the caller
// can retry with the augmented H.
bool build_and_verify(const SemigroupTable& s, int k, std::vector<int> I,
                      std::vector<int> J, std::vector<int> H, Verify verify,
                      ReesStructure& out, std::string& why) {
  const int n = s.order();

  // Group axioms for H via the O(|H|) identity/inverse finder.
  int e_h;
  try {
    GroupTable group = identity_and_inverses(s, H);
    e_h = group.e;
  } catch (const NotAGroup& err) {
    why = err.what();
    return false;
  }

  std::vector<int> h_pos(n, -1);
  for (size_t p = 0; p < H.size(); ++p) {
    h_pos[H[p]] = static_cast<int>(p);
  }
  for (int h : H) {
    if (s.at(e_h, h) != h || s.at(h, e_h) != h) {
      why = "e_H is not an identity for H";
      return false;
    }
  }
  if (verify == Verify::Full) {
    for (int a : H) {
      for (int b : H) {
        if (h_pos[s.at(a, b)] < 0) {
          why = "H is not closed under the product";
          return false;
        }
      }
    }
  }

  // Sandwich entries <j, i> = j*i must land in H.
  std::vector<std::vector<int>> sandwich(J.size(),
                                         std::vector<int>(I.size()));
  for (size_t jp = 0; jp < J.size(); ++jp) {
    for (size_t ip = 0; ip < I.size(); ++ip) {
      int prod = s.at(J[jp], I[ip]);
      if (h_pos[prod] < 0) {
        why = "sandwich product outside H";
        return false;
      }
      sandwich[jp][ip] = h_pos[prod];
    }
  }

  // Unique factorization of K = I*H*J.
  std::vector<std::array<int, 3>> factor(n, {-1, -1, -1});
  std::vector<int> k_elements;
  for (size_t ip = 0; ip < I.size(); ++ip) {
    for (size_t hp = 0; hp < H.size(); ++hp) {
      int ih = s.at(I[ip], H[hp]);
      for (size_t jp = 0; jp < J.size(); ++jp) {
        int x = s.at(ih, J[jp]);
        if (factor[x][0] >= 0) {
          why = "factorization i*h*j is not unique";
          return false;
        }
        factor[x] = {static_cast<int>(ip), static_cast<int>(hp),
                     static_cast<int>(jp)};
        k_elements.push_back(x);
      }
    }
  }
  std::sort(k_elements.begin(), k_elements.end());
  if (factor[k][0] < 0) {
    why = "k does not factor through I*H*J";
    return false;
  }

  // Normalization at i_0 = j_0 = e_H.
  int e_h_i = -1, e_h_j = -1;
  for (size_t ip = 0; ip < I.size(); ++ip) {
    if (I[ip] == e_h) e_h_i = static_cast<int>(ip);
  }
  for (size_t jp = 0; jp < J.size(); ++jp) {
    if (J[jp] == e_h) e_h_j = static_cast<int>(jp);
  }
  if (e_h_i < 0 || e_h_j < 0) {
    why = "e_H is missing from I or J";
    return false;
  }
  for (size_t ip = 0; ip < I.size(); ++ip) {
    if (H[sandwich[e_h_j][ip]] != e_h) {
      why = "sandwich row of e_H is not normalized";
      return false;
    }
  }
  for (size_t jp = 0; jp < J.size(); ++jp) {
    if (H[sandwich[jp][e_h_i]] != e_h) {
      why = "sandwich column of e_H is not normalized";
      return false;
    }
  }

  if (verify == Verify::Full) {
    // Product law on all of K x K.
    for (int x : k_elements) {
      for (int y : k_elements) {
        const auto& [ix, hx, jx] = factor[x];
        const auto& [iy, hy, jy] = factor[y];
        int mid = s.at(s.at(H[hx], H[sandwich[jx][iy]]), H[hy]);
        int xy = s.at(x, y);
        if (h_pos[mid] < 0 || factor[xy][0] != ix
            || factor[xy][1] != h_pos[mid] || factor[xy][2] != jy) {
          why = "Rees product law violated";
          return false;
        }
      }
    }
  }

  out.k = k;
  out.I = std::move(I);
  out.J = std::move(J);
  out.e_h = e_h;
  out.e_h_pos = h_pos[e_h];
  out.H = std::move(H);
  out.sandwich = std::move(sandwich);
  out.factor = std::move(factor);
  out.k_elements = std::move(k_elements);
  return true;
}

}  // namespace

ReesStructure min_ideal(const SemigroupTable& s, Verify verify) {
  const int n = s.order();
  int k = 0;
  for (int x = 1; x < n; ++x) {
    k = s.at(k, x);
  }
  auto is_idem = [&](int x) { return s.at(x, x) == x; };
  std::vector<int> I = collect(n, [&](int x) { return s.at(x, k); }, is_idem);
  std::vector<int> J = collect(n, [&](int x) { return s.at(k, x); }, is_idem);
  std::vector<int> H = collect(
      n, [&](int x) { return s.at(s.at(k, x), k); },
      [](int) { return true; });

  ReesStructure out;
  std::string why;
  if (build_and_verify(s, k, I, J, H, verify, out, why)) {
    return out;
  }
  // Fallback: H = {k*x*k} might miss k*1*k = k*k; add it and retry.
  int kk = s.at(k, k);
  if (std::find(H.begin(), H.end(), kk) == H.end()) {
    std::vector<int> H2 = H;
    H2.push_back(kk);
    std::sort(H2.begin(), H2.end());
    std::string why2;
    if (build_and_verify(s, k, std::move(I), std::move(J), std::move(H2),
                         verify, out, why2)) {
      return out;
    }
    throw StructureVerificationFailed("minimal ideal verification failed: "
                                      + why + " (with k*k added: " + why2
                                      + ")");
  }
  throw StructureVerificationFailed("minimal ideal verification failed: "
                                    + why);
}

std::vector<int> min_ideal_bruteforce(const SemigroupTable& s,
                                      int order_cap) {
  const int n = s.order();
  if (n > order_cap) {
    throw OrderTooLarge("brute-force minimal ideal capped at order "
                        + std::to_string(order_cap));
  }
  std::vector<char> inter(n, 1);
  for (int a = 0; a < n; ++a) {
    // S^1 a S^1 = {a} u Sa u aS u SaS
    std::vector<char> ideal(n, 0);
    ideal[a] = 1;
    for (int x = 0; x < n; ++x) {
      ideal[s.at(x, a)] = 1;
      ideal[s.at(a, x)] = 1;
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        ideal[s.at(s.at(x, a), y)] = 1;
      }
    }
    for (int x = 0; x < n; ++x) {
      inter[x] = inter[x] && ideal[x];
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (inter[x]) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace sgh
