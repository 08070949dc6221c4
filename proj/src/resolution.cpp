#include "sgh/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sgh/error.hpp"
#include "sgh/group.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {
struct PhaseTimer {
  const char* name;
  std::chrono::steady_clock::time_point start;
  explicit PhaseTimer(const char* n)
      : name(n), start(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    if (std::getenv("SGH_TRACE") != nullptr) {
      double dt = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - start).count();
      if (dt > 0.2) std::cerr << "[" << name << " " << dt << "s]" << std::flush;
    }
  }
};
}  // namespace

namespace sgh {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

MonoidCtx::MonoidCtx(SemigroupTable monoid) : s_(std::move(monoid)) {
  if (!s_.is_monoid()) {
    throw NotAMonoid("resolution requires a monoid");
  }
  const int n = s_.order();
  basis_.resize(n);
  pos_.resize(n);
  std::vector<int> idems = idempotents(s_);
  for (int e : idems) {
    std::vector<char> mark(n, 0);
    for (int x = 0; x < n; ++x) {
      mark[s_.at(x, e)] = 1;
    }
    auto& basis = basis_[e];
    auto& pos = pos_[e];
    pos.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      if (mark[x]) {
        pos[x] = static_cast<int>(basis.size());
        basis.push_back(x);
      }
    }
  }
  idem_by_size_ = idems;
  std::sort(idem_by_size_.begin(), idem_by_size_.end(), [&](int a, int b) {
    if (basis_[a].size() != basis_[b].size()) {
      return basis_[a].size() < basis_[b].size();
    }
    return a < b;
  });
}

SummandModule SummandModule::make(const MonoidCtx& ctx,
                                  std::vector<int> idems) {
  SummandModule m;
  m.ctx = &ctx;
  m.idem = std::move(idems);
  m.offset.resize(m.idem.size() + 1);
  m.offset[0] = 0;
  for (size_t j = 0; j < m.idem.size(); ++j) {
    m.offset[j + 1] =
        m.offset[j] + static_cast<int>(ctx.left_ideal(m.idem[j]).size());
  }
  return m;
}

int SummandModule::global_index(int summand, int elem) const {
  int local = ctx->left_pos(idem[summand], elem);
  if (local < 0) {
    throw std::logic_error("element outside summand basis");
  }
  return offset[summand] + local;
}

std::pair<int, int> SummandModule::locate(int g) const {
  int j = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), g)
                           - offset.begin()) - 1;
  return {j, ctx->left_ideal(idem[j])[g - offset[j]]};
}

SparseVec left_action_expand(const SummandModule& mod, int s,
                             const SparseVec& v) {
  const SemigroupTable& table = mod.ctx->table();
  std::vector<Int> dense(mod.total_rank(), Int(0));
  for (const auto& [g, coeff] : v) {
    auto [summand, elem] = mod.locate(g);
    dense[mod.global_index(summand, table.at(s, elem))] += coeff;
  }
  SparseVec out;
  for (int g = 0; g < mod.total_rank(); ++g) {
    if (dense[g] != 0) {
      out.emplace_back(g, std::move(dense[g]));
    }
  }
  return out;
}

IntMatrix augmentation_matrix(const BoundaryMap& b) {
  IntMatrix m(b.cod.summands(), b.dom.summands());
  for (int j = 0; j < b.dom.summands(); ++j) {
    for (const auto& [g, coeff] : b.cols[j]) {
      m.at(b.cod.locate(g).first, j) += coeff;
    }
  }
  return m;
}

IntMatrix boundary_as_int_matrix(const BoundaryMap& b) {
  IntMatrix m(b.cod.total_rank(), b.dom.total_rank());
  for (int j = 0; j < b.dom.summands(); ++j) {
    const auto& basis = b.dom.ctx->left_ideal(b.dom.idem[j]);
    for (size_t local = 0; local < basis.size(); ++local) {
      // Basis element t of ZSe_j maps to t * (image of the generator).
      SparseVec img = left_action_expand(b.cod, basis[local], b.cols[j]);
      const int col = b.dom.offset[j] + static_cast<int>(local);
      for (auto& [g, coeff] : img) {
        m.at(g, col) = std::move(coeff);
      }
    }
  }
  return m;
}

namespace {

// A mutable sublattice of Z^dim kept as a row HNF basis with distinct
// pivot columns; supports membership and insertion. Entries in pivot
// columns stay reduced below the pivot, which keeps coefficient growth
// under control across many insertions.
class EchelonLattice {
 public:
  explicit EchelonLattice(int dim) : dim_(dim) {}

  bool contains(const SparseVec& v) const {
    std::vector<Int> w = densify(v);
    return reduce_leading(w);
  }

  // Reduces v as far as possible (floor quotients, never failing) and
  // returns the sparse remainder; zero iff v is in the lattice spanned so
  // far, and otherwise supported where the lattice cannot reach.
  SparseVec remainder(const SparseVec& v) const {
    std::vector<Int> w = densify(v);
    for (const auto& [p, row] : rows_) {
      if (w[p] == 0) {
        continue;
      }
      Int q = floor_div(w[p], row[p]);
      if (q != 0) {
        for (int c = p; c < dim_; ++c) {
          w[c] -= q * row[c];
        }
      }
    }
    SparseVec out;
    for (int c = 0; c < dim_; ++c) {
      if (w[c] != 0) {
        out.emplace_back(c, std::move(w[c]));
      }
    }
    return out;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  void add(const SparseVec& v) {
    std::vector<Int> w = densify(v);
    int from = 0;
    for (;;) {
      int p = lead(w, from);
      if (p < 0) {
        return;
      }
      size_t idx = index_of_pivot(p);
      if (idx == rows_.size() || rows_[idx].first != p) {
        if (w[p] < 0) {
          for (Int& x : w) {
            x = -x;
          }
        }
        rows_.insert(rows_.begin() + idx, {p, std::move(w)});
        normalize_row(idx);
        reduce_column(p, idx);
        return;
      }
      std::vector<Int>& row = rows_[idx].second;
      if (w[p] % row[p] == 0) {
        Int q = w[p] / row[p];
        for (int c = p; c < dim_; ++c) {
          w[c] -= q * row[c];
        }
      } else {
        // gcd step: replace the stored row so its pivot divides both.
        auto [g, a, b] = ext_gcd(row[p], w[p]);
        Int rq = row[p] / g, wq = w[p] / g;
        std::vector<Int> merged(dim_, Int(0));
        for (int c = p; c < dim_; ++c) {
          merged[c] = a * row[c] + b * w[c];
          Int nw = rq * w[c] - wq * row[c];
          w[c] = std::move(nw);
        }
        row = std::move(merged);
        normalize_row(idx);
        reduce_column(p, idx);
      }
      from = p;  // leading index strictly increases
    }
  }

 private:
  static std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    if (b == 0) {
      return a < 0 ? std::tuple<Int, Int, Int>{-a, -1, 0}
                   : std::tuple<Int, Int, Int>{a, 1, 0};
    }
    auto [g, x, y] = ext_gcd(b, a % b);
    return {g, y, x - (a / b) * y};
  }

  static Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) {
      q -= 1;
    }
    return q;
  }

  std::vector<Int> densify(const SparseVec& v) const {
    std::vector<Int> w(dim_, Int(0));
    for (const auto& [g, coeff] : v) {
      w[g] = coeff;
    }
    return w;
  }

  static int lead(const std::vector<Int>& w, int from) {
    for (int c = from; c < static_cast<int>(w.size()); ++c) {
      if (w[c] != 0) {
        return c;
      }
    }
    return -1;
  }

  size_t index_of_pivot(int p) const {
    return std::lower_bound(rows_.begin(), rows_.end(), p,
                            [](const auto& r, int x) { return r.first < x; })
           - rows_.begin();
  }

  // Size-reduce row idx against every row with a larger pivot.
  void normalize_row(size_t idx) {
    std::vector<Int>& row = rows_[idx].second;
    for (size_t j = idx + 1; j < rows_.size(); ++j) {
      int pj = rows_[j].first;
      const std::vector<Int>& other = rows_[j].second;
      Int q = floor_div(row[pj], other[pj]);
      if (q != 0) {
        for (int c = pj; c < dim_; ++c) {
          row[c] -= q * other[c];
        }
      }
    }
  }

  // Reduce column p of every earlier row below the (possibly new) pivot.
  void reduce_column(int p, size_t idx) {
    const std::vector<Int>& pivot_row = rows_[idx].second;
    for (size_t j = 0; j < idx; ++j) {
      std::vector<Int>& row = rows_[j].second;
      Int q = floor_div(row[p], pivot_row[p]);
      if (q != 0) {
        for (int c = p; c < dim_; ++c) {
          row[c] -= q * pivot_row[c];
        }
      }
    }
  }

  bool reduce_leading(std::vector<Int>& w) const {
    int from = 0;
    for (;;) {
      int p = lead(w, from);
      if (p < 0) {
        return true;
      }
      size_t idx = index_of_pivot(p);
      if (idx == rows_.size() || rows_[idx].first != p
          || w[p] % rows_[idx].second[p] != 0) {
        return false;
      }
      Int q = w[p] / rows_[idx].second[p];
      for (int c = p; c < dim_; ++c) {
        w[c] -= q * rows_[idx].second[c];
      }
      from = p;
    }
  }

  int dim_;
  std::vector<std::pair<int, std::vector<Int>>> rows_;  // sorted by pivot
};

bool sparse_less(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) {
      return a[i].first < b[i].first;
    }
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].second != b[i].second) {
      return a[i].second < b[i].second;
    }
  }
  return false;
}

}  // namespace

BoundaryMap cover_by_mapping(const MonoidCtx& ctx, const SummandModule& cod,
                             std::vector<SparseVec> kernel_vectors,
                             long max_rank) {
  // Small ZS-generating sets keep the resolution small, so generators are
  // chosen with an adaptive weighted set-cover greedy: highest covered
  // rank per unit of added module rank first, re-evaluated lazily (gains
  // only shrink as the covered span grows). The candidate pool also holds
  // the idempotent translates e*v of every kernel vector; those are often
  // fixed by idempotents with tiny left ideals, which is where the cheap
  // summands come from. The whole procedure is a deterministic function of
  // the (module, lattice) pair, so self-similar resolutions repeat
  // literally and the node cache can close them into finite graphs.
  struct Candidate {
    SparseVec vec;
    std::vector<SparseVec> orbit;
    int fixer = -1;
    long cost = 0;
    int gain = 0;       // rank the orbit currently adds to the span
    size_t version = 0; // selection epoch the gain was computed in
  };

  const int n = ctx.order();
  std::vector<Candidate> pool;
  {
    std::vector<SparseVec> raw = kernel_vectors;
    for (const SparseVec& v : kernel_vectors) {
      for (int e : ctx.idempotents_by_ideal_size()) {
        SparseVec ev = left_action_expand(cod, e, v);
        if (!ev.empty()) {
          raw.push_back(std::move(ev));
        }
      }
    }
    std::sort(raw.begin(), raw.end(), sparse_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (SparseVec& v : raw) {
      Candidate c;
      c.vec = std::move(v);
      pool.push_back(std::move(c));
    }
  }
  for (Candidate& c : pool) {
    for (int s = 0; s < n; ++s) {
      SparseVec sv = left_action_expand(cod, s, c.vec);
      if (!sv.empty()) {
        c.orbit.push_back(std::move(sv));
      }
    }
    for (int e : ctx.idempotents_by_ideal_size()) {
      if (left_action_expand(cod, e, c.vec) == c.vec) {
        c.fixer = e;
        break;
      }
    }
    if (c.fixer < 0) {
      throw std::logic_error("no fixing idempotent; the identity must fix");
    }
    c.cost = static_cast<long>(ctx.left_ideal(c.fixer).size());
  }

  EchelonLattice span(cod.total_rank());
  auto gain_of = [&](const Candidate& c) {
    EchelonLattice probe = span;
    for (const SparseVec& sv : c.orbit) {
      probe.add(sv);
    }
    return probe.rank() - span.rank();
  };
  // Priority: gain/cost descending, then cost, support size, value.
  auto better = [&](const Candidate& a, const Candidate& b) {
    long lhs = static_cast<long>(a.gain) * b.cost;
    long rhs = static_cast<long>(b.gain) * a.cost;
    if (lhs != rhs) {
      return lhs > rhs;
    }
    if (a.cost != b.cost) {
      return a.cost < b.cost;
    }
    return sparse_less(a.vec, b.vec);
  };

  std::vector<size_t> active(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) {
    active[i] = i;
    pool[i].gain = gain_of(pool[i]);
  }
  std::vector<char> target_covered(kernel_vectors.size(), 0);
  size_t uncovered = kernel_vectors.size();

  std::vector<int> idems;
  std::vector<SparseVec> cols;
  long rank = 0;
  size_t epoch = 0;
  while (uncovered > 0) {
    // Lazy re-evaluation: gains are non-increasing, so a stale gain is an
    // upper bound; refresh the best entry until it stays best.
    size_t best = active.size();
    for (;;) {
      best = active.size();
      for (size_t a = 0; a < active.size(); ++a) {
        if (best == active.size()
            || better(pool[active[a]], pool[active[best]])) {
          best = a;
        }
      }
      if (best == active.size()) {
        throw std::logic_error("cover ran out of candidates");
      }
      Candidate& c = pool[active[best]];
      if (c.version == epoch) {
        break;
      }
      if (span.contains(c.vec)) {
        // The span is S-closed, so a contained candidate never helps.
        active.erase(active.begin() + best);
        continue;
      }
      c.gain = gain_of(c);
      c.version = epoch;
    }
    Candidate& chosen = pool[active[best]];
    idems.push_back(chosen.fixer);
    cols.push_back(chosen.vec);
    rank += chosen.cost;
    if (rank > max_rank) {
      throw ResourceCapExceeded("cover exceeds the per-node rank cap");
    }
    for (const SparseVec& sv : chosen.orbit) {
      span.add(sv);
    }
    active.erase(active.begin() + best);
    ++epoch;
    for (size_t t = 0; t < kernel_vectors.size(); ++t) {
      if (!target_covered[t] && span.contains(kernel_vectors[t])) {
        target_covered[t] = 1;
        --uncovered;
      }
    }
  }
  BoundaryMap out;
  out.dom = SummandModule::make(ctx, std::move(idems));
  out.cod = cod;
  out.cols = std::move(cols);
  return out;
}

namespace {

std::string node_key(const BoundaryMap& b) {
  std::ostringstream out;
  out << "C";
  for (int e : b.cod.idem) {
    out << "," << e;
  }
  out << "|D";
  for (int e : b.dom.idem) {
    out << "," << e;
  }
  out << "|";
  for (const SparseVec& col : b.cols) {
    for (const auto& [g, coeff] : col) {
      out << g << ":" << coeff.str() << ";";
    }
    out << "/";
  }
  return out.str();
}

// Canonical short generating set for a sublattice given by basis rows: the
// unique HNF fixes the basis as a function of the lattice, then LLL keeps
// the generators short so boundary columns (and the kernels built from
// them) stay small along the resolution.
IntMatrix canonical_short_basis(const IntMatrix& rows) {
  return lll_reduce_rows(rowspace_hnf(rows));
}

// Converts basis rows back to sparse vectors.
std::vector<SparseVec> rows_to_sparse(const IntMatrix& h) {
  std::vector<SparseVec> out;
  out.reserve(h.rows());
  for (int r = 0; r < h.rows(); ++r) {
    SparseVec v;
    for (int c = 0; c < h.cols(); ++c) {
      if (h.at(r, c) != 0) {
        v.emplace_back(c, h.at(r, c));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ResolutionEngine::ResolutionEngine(SemigroupTable monoid, ResolutionCaps caps)
    : ctx_(std::move(monoid)), caps_(caps) {
  const int e0 = ctx_.idempotents_by_ideal_size().front();
  SummandModule c0 = SummandModule::make(ctx_, {e0});
  // Z_0 = ker(augmentation : ZSe_0 -> Z).
  IntMatrix eps(1, c0.total_rank());
  for (int c = 0; c < c0.total_rank(); ++c) {
    eps.at(0, c) = 1;
  }
  IntMatrix z0 = canonical_short_basis(kernel_basis(eps).transposed());
  root_ = intern(cover_by_mapping(ctx_, c0, rows_to_sparse(z0),
                                  caps_.max_rank_per_node));
}

ResolutionNode* ResolutionEngine::intern(BoundaryMap bnd) {
  std::string key = node_key(bnd);
  auto it = cache_.find(key);
  if (it != cache_.end()) {
    return it->second.get();
  }
  if (nodes_created_ >= caps_.max_nodes) {
    throw ResourceCapExceeded("node cap exceeded");
  }
  ++nodes_created_;
  auto node = std::make_unique<ResolutionNode>();
  node->bnd = std::move(bnd);
  ResolutionNode* raw = node.get();
  cache_.emplace(std::move(key), std::move(node));
  return raw;
}

void ResolutionEngine::make_children(ResolutionNode& node) {
  if (node.children_made) {
    return;
  }
  const SummandModule& dom = node.bnd.dom;
  IntMatrix bmat = [&] { PhaseTimer t("bmat"); return boundary_as_int_matrix(node.bnd); }();

  // Split the kernel before partitioning: the pure part (vectors living in
  // a single summand) comes from per-summand kernels and never links
  // blocks; only generators that stay mixed after reduction modulo the
  // pure part link summands. This is what lets big kernels fall apart into
  // small repeated covering problems.
  std::vector<std::vector<SparseVec>> pure(dom.summands());
  EchelonLattice pure_span(dom.total_rank());
  {
    PhaseTimer t("pure");
    for (int j = 0; j < dom.summands(); ++j) {
      IntMatrix mj(bmat.rows(), dom.offset[j + 1] - dom.offset[j]);
      for (int r = 0; r < bmat.rows(); ++r) {
        for (int c = dom.offset[j]; c < dom.offset[j + 1]; ++c) {
          mj.at(r, c - dom.offset[j]) = bmat.at(r, c);
        }
      }
      IntMatrix kj = kernel_basis_raw(mj);
      for (int c = 0; c < kj.cols(); ++c) {
        SparseVec v;
        for (int r = 0; r < kj.rows(); ++r) {
          if (kj.at(r, c) != 0) {
            v.emplace_back(dom.offset[j] + r, kj.at(r, c));
          }
        }
        pure_span.add(v);
        pure[j].push_back(std::move(v));
      }
    }
  }
  std::vector<SparseVec> mixed;
  {
    PhaseTimer t("mixed");
    IntMatrix kernel = kernel_basis_raw(bmat);
    for (int c = 0; c < kernel.cols(); ++c) {
      SparseVec v;
      for (int r = 0; r < kernel.rows(); ++r) {
        if (kernel.at(r, c) != 0) {
          v.emplace_back(r, kernel.at(r, c));
        }
      }
      SparseVec rem = pure_span.remainder(v);
      if (!rem.empty()) {
        mixed.push_back(std::move(rem));
      }
    }
  }

  DisjointSetForest forest(std::max(dom.summands(), 1));
  for (const SparseVec& v : mixed) {
    int first = dom.locate(v.front().first).first;
    for (const auto& [g, coeff] : v) {
      forest.merge_components(first, dom.locate(g).first);
    }
  }
  std::vector<std::vector<int>> blocks;
  {
    std::vector<int> block_of(dom.summands(), -1);
    for (int j = 0; j < dom.summands(); ++j) {
      int root = forest.find(j);
      if (block_of[root] < 0) {
        block_of[root] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[block_of[root]].push_back(j);
    }
  }

  for (const std::vector<int>& block : blocks) {
    std::vector<int> idems;
    idems.reserve(block.size());
    for (int j : block) {
      idems.push_back(dom.idem[j]);
    }
    SummandModule block_mod = SummandModule::make(ctx_, std::move(idems));
    std::vector<int> local_of_summand(dom.summands(), -1);
    for (size_t p = 0; p < block.size(); ++p) {
      local_of_summand[block[p]] = static_cast<int>(p);
    }
    auto to_block = [&](const SparseVec& v) {
      SparseVec out;
      for (const auto& [g, coeff] : v) {
        auto [summand, elem] = dom.locate(g);
        out.emplace_back(
            block_mod.global_index(local_of_summand[summand], elem), coeff);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<SparseVec> vecs;
    for (int j : block) {
      for (const SparseVec& v : pure[j]) {
        vecs.push_back(to_block(v));
      }
    }
    for (const SparseVec& v : mixed) {
      if (forest.find(dom.locate(v.front().first).first)
          == forest.find(block[0])) {
        vecs.push_back(to_block(v));
      }
    }
    if (!vecs.empty()) {
      IntMatrix rows(static_cast<int>(vecs.size()), block_mod.total_rank());
      for (size_t r = 0; r < vecs.size(); ++r) {
        for (const auto& [g, coeff] : vecs[r]) {
          rows.at(static_cast<int>(r), g) = coeff;
        }
      }
      vecs = [&] { PhaseTimer t("blockcanon"); return rows_to_sparse(canonical_short_basis(rows)); }();
    }
    node.children.push_back(intern([&] { PhaseTimer t("cover"); return cover_by_mapping(
        ctx_, block_mod, std::move(vecs), caps_.max_rank_per_node); }()));
    node.block_summands.push_back(block);
  }
  node.children_made = true;
}

FinAbGroup ResolutionEngine::compute_homology(ResolutionNode& node) {
  make_children(node);
  IntMatrix m_out = augmentation_matrix(node.bnd);
  int total_cols = 0;
  for (const ResolutionNode* child : node.children) {
    total_cols += child->bnd.dom.summands();
  }
  IntMatrix m_in(node.bnd.dom.summands(), total_cols);
  int col_off = 0;
  for (size_t j = 0; j < node.children.size(); ++j) {
    IntMatrix aug = augmentation_matrix(node.children[j]->bnd);
    const std::vector<int>& rows = node.block_summands[j];
    for (int r = 0; r < aug.rows(); ++r) {
      for (int c = 0; c < aug.cols(); ++c) {
        m_in.at(rows[r], col_off + c) = aug.at(r, c);
      }
    }
    col_off += aug.cols();
  }
  return homology_from_matrices(m_out, m_in);
}

FinAbGroup ResolutionEngine::shift_of(ResolutionNode& node, long shift) {
  auto it = node.h_cache.find(shift);
  if (it != node.h_cache.end()) {
    return it->second;
  }
  if (shift > caps_.max_shift) {
    throw ResourceCapExceeded("shift cap exceeded");
  }
  FinAbGroup h;
  if (shift == 0) {
    h = compute_homology(node);
  } else {
    make_children(node);
    // Combine repeated children once, with multiplicity.
    std::vector<std::pair<ResolutionNode*, Int>> mult;
    for (ResolutionNode* child : node.children) {
      auto found = std::find_if(mult.begin(), mult.end(),
                                [&](const auto& p) { return p.first == child; });
      if (found == mult.end()) {
        mult.emplace_back(child, 1);
      } else {
        found->second += 1;
      }
    }
    std::vector<std::pair<FinAbGroup, Int>> parts;
    parts.reserve(mult.size());
    for (auto& [child, count] : mult) {
      parts.emplace_back(shift_of(*child, shift - 1), count);
    }
    h = direct_sum(parts);
  }
  node.h_cache.emplace(shift, h);
  return h;
}

FinAbGroup ResolutionEngine::homology_with_shift(long shift) {
  return shift_of(*root_, shift);
}

std::vector<FinAbGroup> resolve_monoid_homology(const SemigroupTable& monoid,
                                                int m, ResolutionCaps caps) {
  ResolutionEngine engine(monoid, caps);
  std::vector<FinAbGroup> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    out.push_back(engine.homology_with_shift(i));
  }
  return out;
}

FinAbGroup cyclic_group_homology(int k, int dim) {
  if (k <= 1 || dim <= 0 || dim % 2 == 0) {
    return FinAbGroup::trivial();
  }
  return FinAbGroup::cyclic(k);
}

FinAbGroup klein_group_homology(int dim) {
  if (dim <= 0) {
    return FinAbGroup::trivial();
  }
  // H_{2j-1} = C_2^{j+1}, H_{2j} = C_2^j.
  long copies = dim % 2 == 1 ? (dim + 3) / 2 : dim / 2;
  return direct_sum({{FinAbGroup::cyclic(2), Int(copies)}});
}

std::vector<FinAbGroup> get_homology(const SemigroupTable& s, int m,
                                     const HomologyOptions& opts) {
  if (m < 1) {
    throw std::invalid_argument("max dimension must be >= 1");
  }
  ReesStructure rees = min_ideal(s);
  if (opts.kthin_shortcut && rees.k_thin()) {
    const int hsize = static_cast<int>(rees.H.size());
    if (hsize == 1 || hsize == 2 || hsize == 3 || hsize == 5 || hsize == 7) {
      std::vector<FinAbGroup> out;
      for (int i = 1; i <= m; ++i) {
        out.push_back(cyclic_group_homology(hsize, i));
      }
      return out;
    }
    if (hsize == 4) {
      std::set<int> squares;
      for (int h : rees.H) {
        squares.insert(s.at(h, h));
      }
      std::vector<FinAbGroup> out;
      for (int i = 1; i <= m; ++i) {
        out.push_back(squares.size() == 1 ? klein_group_homology(i)
                                          : cyclic_group_homology(4, i));
      }
      return out;
    }
    return resolve_monoid_homology(subtable(s, rees.H), m, opts.caps);
  }

  if (opts.ese_reduction) {
    const int n = s.order();
    int best_e = -1;
    std::vector<int> best_ese;
    for (int e : idempotents(s)) {
      std::vector<char> in_es(n, 0), in_se(n, 0), in_ese(n, 0);
      for (int x = 0; x < n; ++x) {
        int ex = s.at(e, x);
        in_es[ex] = 1;
        in_se[s.at(x, e)] = 1;
        in_ese[s.at(ex, e)] = 1;
      }
      if (in_ese != in_es && in_ese != in_se) {
        continue;
      }
      std::vector<int> ese;
      for (int x = 0; x < n; ++x) {
        if (in_ese[x]) {
          ese.push_back(x);
        }
      }
      if (best_e < 0 || ese.size() < best_ese.size()) {
        best_e = e;
        best_ese = std::move(ese);
      }
    }
    if (best_e >= 0) {
      if (static_cast<int>(best_ese.size()) < n) {
        return get_homology(subtable(s, best_ese), m, opts);
      }
      // eSe = S forces e to be a two-sided identity; assert rather than
      // assume.
      for (int x = 0; x < n; ++x) {
        if (s.at(best_e, x) != x || s.at(x, best_e) != x) {
          throw NotAMonoid("eSe = S but e is not a two-sided identity");
        }
      }
      return resolve_monoid_homology(s, m, opts.caps);
    }
  }

  return resolve_monoid_homology(adjoin_unit(s), m, opts.caps);
}

}  // namespace sgh
