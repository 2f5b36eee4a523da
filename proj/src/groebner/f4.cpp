#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <unordered_map>
#include <string>
#include <unordered_set>

#include "critpoints/fglm.hpp"
#include "critpoints/groebner.hpp"
#include "critpoints/kernels.hpp"
#include "monomial_table.hpp"

namespace critpoints {

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::runtime_error("degree cap exceeded: step degree " + std::to_string(degree) +
                         " > cap " + std::to_string(cap)),
      degree_(degree) {}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// Polynomial over interned monomials, terms strictly decreasing.
struct SparsePoly {
  std::vector<std::uint32_t> mons;
  std::vector<std::uint32_t> coeffs;
  int degree = 0;

  std::uint32_t lm() const { return mons.front(); }
};

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  std::uint32_t lcm;
  int degree;
};

/// Row of a Macaulay block: column indices increasing, coefficients borrowed
/// from the polynomial it is a multiple of.
struct BlockRow {
  std::vector<std::uint32_t> cols;
  const std::uint32_t* coeffs = nullptr;
};

/// State shared by the F4 loop and by normal-form reduction: interned
/// monomials, the polynomials, and helpers to multiply and compare them.
class Workspace {
 public:
  explicit Workspace(const Ring& ring)
      : ring_(ring), q_(ring.field.modulus()), table_(ring.nvars),
        one_(table_.intern(Monomial(ring.nvars))) {}

  const Ring& ring() const { return ring_; }
  std::uint32_t q() const { return q_; }
  detail::MonomialTable& table() { return table_; }
  const detail::MonomialTable& table() const { return table_; }
  std::uint32_t one() const { return one_; }

  SparsePoly import(const Polynomial& f) {
    Polynomial g = f.ring().order == ring_.order ? f : f.with_order(ring_.order);
    SparsePoly out;
    out.mons.reserve(g.size());
    out.coeffs.reserve(g.size());
    for (const auto& t : g.terms()) {
      out.mons.push_back(table_.intern(t.monomial));
      out.coeffs.push_back(t.coeff.value);
      out.degree = std::max(out.degree, t.monomial.degree());
    }
    return out;
  }

  Polynomial export_poly(const SparsePoly& p) const {
    std::vector<Term> terms;
    terms.reserve(p.mons.size());
    for (std::size_t k = 0; k < p.mons.size(); ++k) {
      terms.push_back({table_[p.mons[k]], FieldElement{p.coeffs[k]}});
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  void make_monic(SparsePoly& p) const {
    const std::uint32_t inv = ring_.field.inv(FieldElement{p.coeffs.front()}).value;
    kernels::scale_mod(p.coeffs, inv, q_);
  }

  /// Monomial ids of mult * p, decreasing.
  void multiply(std::uint32_t mult, const SparsePoly& p, std::vector<std::uint32_t>& out) {
    out.clear();
    out.reserve(p.mons.size());
    if (mult == one_) {
      out = p.mons;
      return;
    }
    const Monomial u = table_[mult];
    for (std::uint32_t m : p.mons) out.push_back(table_.intern(u * table_[m]));
  }

  bool greater(std::uint32_t a, std::uint32_t b) const {
    return compare(table_[a], table_[b], ring_.order) > 0;
  }

 private:
  Ring ring_;
  std::uint32_t q_;
  detail::MonomialTable table_;
  std::uint32_t one_;
};

/// Dense accumulator reduction of one row against monic pivot rows. Entries
/// stay below q^2 so a single conditional subtraction keeps them exact.
class RowReducer {
 public:
  explicit RowReducer(std::uint32_t q) : q_(q), qq_(static_cast<std::uint64_t>(q) * q) {}

  void resize(std::size_t ncols) {
    if (acc_.size() < ncols) acc_.resize(ncols, 0);
  }

  /// Reduces `row` by `pivots` (indexed by column) and appends the surviving
  /// (column, value) entries, in increasing column order, to `out`.
  void reduce(const BlockRow& row, std::size_t nterms, std::span<const std::int32_t> pivot_of_col,
              std::span<const BlockRow> pivots, std::span<const std::size_t> pivot_sizes,
              std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    out.clear();
    const std::size_t ncols = pivot_of_col.size();
    for (std::size_t k = 0; k < nterms; ++k) acc_[row.cols[k]] = row.coeffs[k];
    for (std::size_t c = row.cols[0]; c < ncols; ++c) {
      std::uint64_t a = acc_[c];
      if (a == 0) continue;
      acc_[c] = 0;
      const auto v = static_cast<std::uint32_t>(a % q_);
      if (v == 0) continue;
      const std::int32_t piv = pivot_of_col[c];
      if (piv < 0) {
        out.emplace_back(static_cast<std::uint32_t>(c), v);
        continue;
      }
      const BlockRow& pr = pivots[piv];
      const std::size_t len = pivot_sizes[piv];
      const std::uint64_t mult = q_ - v;
      for (std::size_t k = 1; k < len; ++k) {
        std::uint64_t& slot = acc_[pr.cols[k]];
        slot += mult * pr.coeffs[k];
        if (slot >= qq_) slot -= qq_;
      }
    }
  }

 private:
  std::uint32_t q_;
  std::uint64_t qq_;
  std::vector<std::uint64_t> acc_;
};

/// Full reduction of `f` by monic polynomials from `polys`, processing
/// monomials in decreasing order from a heap. `find_reducer(m)` returns the
/// index of a polynomial whose leading monomial divides m, or kNone.
template <class FindReducer>
SparsePoly heap_reduce(Workspace& ws, const SparsePoly& f, const std::vector<SparsePoly>& polys,
                       FindReducer&& find_reducer) {
  auto& table = ws.table();
  const std::uint32_t q = ws.q();
  const std::uint64_t qq = static_cast<std::uint64_t>(q) * q;
  std::unordered_map<std::uint32_t, std::uint64_t> acc;
  auto cmp = [&](std::uint32_t a, std::uint32_t b) { return ws.greater(b, a); };
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(cmp)> heap(cmp);
  auto add = [&](std::uint32_t m, std::uint64_t v) {
    auto [it, fresh] = acc.try_emplace(m, 0);
    if (fresh) heap.push(m);
    it->second += v;
    if (it->second >= qq) it->second -= qq;
  };
  for (std::size_t k = 0; k < f.mons.size(); ++k) add(f.mons[k], f.coeffs[k]);
  SparsePoly out;
  std::vector<std::uint32_t> scratch;
  while (!heap.empty()) {
    const std::uint32_t m = heap.top();
    heap.pop();
    auto it = acc.find(m);
    const auto v = static_cast<std::uint32_t>(it->second % q);
    acc.erase(it);
    if (v == 0) continue;
    const std::uint32_t r = find_reducer(m);
    if (r == kNone) {
      out.mons.push_back(m);
      out.coeffs.push_back(v);
      out.degree = std::max(out.degree, table[m].degree());
      continue;
    }
    const SparsePoly& red = polys[r];
    const std::uint32_t mult = table.intern(table[m] / table[red.lm()]);
    ws.multiply(mult, red, scratch);
    const std::uint64_t neg = q - v;
    for (std::size_t k = 1; k < scratch.size(); ++k) add(scratch[k], neg * red.coeffs[k]);
  }
  return out;
}

class F4 {
 public:
  F4(const Ring& ring, const GroebnerOptions& options)
      : ws_(ring), options_(options), reducer_(ring.field.modulus()) {}

  void add_generator(const Polynomial& f) {
    if (f.is_zero()) return;
    homogeneous_ = homogeneous_ && f.is_homogeneous();
    SparsePoly p = ws_.import(f);
    ws_.make_monic(p);
    pending_.push_back(static_cast<std::uint32_t>(polys_.size()));
    polys_.push_back(std::move(p));
    in_basis_.push_back(0);
    redundant_.push_back(0);
  }

  void run() {
    while (!unit_ && (!pairs_.empty() || !pending_.empty())) {
      if (closed()) {
        pairs_.clear();
        break;
      }
      step();
    }
  }

  GroebnerBasis result() {
    if (certified_) {
      return GroebnerBasis(ws_.ring(), std::move(*certified_), max_step_degree_, std::move(steps_));
    }
    std::vector<Polynomial> out;
    if (unit_) {
      out.push_back(Polynomial::constant(ws_.ring(), FieldElement{1}));
      return GroebnerBasis(ws_.ring(), std::move(out), max_step_degree_, std::move(steps_));
    }
    return GroebnerBasis(ws_.ring(), reduced(), max_step_degree_, std::move(steps_));
  }

 private:
  // --- pair bookkeeping -------------------------------------------------

  std::uint32_t lcm_id(std::uint32_t a, std::uint32_t b) {
    const auto& t = ws_.table();
    return ws_.table().intern(t[polys_[a].lm()].lcm(t[polys_[b].lm()]));
  }

  void insert(std::uint32_t h) {
    auto& table = ws_.table();
    const std::uint32_t lm_h = polys_[h].lm();
    if (table[lm_h].is_one()) {
      unit_ = true;
      return;
    }

    struct Candidate {
      std::uint32_t g;
      std::uint32_t lcm;
      int degree;
      bool coprime;
      bool keep;
    };
    std::vector<Candidate> cand;
    for (std::uint32_t g : basis_) {
      if (redundant_[g]) continue;
      std::uint32_t l = lcm_id(h, g);
      cand.push_back({g, l, table[l].degree(),
                      table[lm_h].coprime(table[polys_[g].lm()]), true});
    }
    // Chain criterion on new pairs: drop (h,g) when another new pair's lcm
    // properly divides its lcm; among equal lcms keep one, and none at all if
    // any of them is coprime.
    std::vector<std::size_t> by_degree(cand.size());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return cand[a].degree < cand[b].degree; });
    for (std::size_t a = 0; a < by_degree.size(); ++a) {
      Candidate& ca = cand[by_degree[a]];
      for (std::size_t b = 0; b < a; ++b) {
        const Candidate& cb = cand[by_degree[b]];
        if (cb.degree >= ca.degree) break;
        if (table.divides(cb.lcm, ca.lcm)) {
          ca.keep = false;
          break;
        }
      }
    }
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (cand[a].keep) groups[cand[a].lcm].push_back(a);
    }
    for (auto& [l, members] : groups) {
      bool any_coprime = std::any_of(members.begin(), members.end(),
                                     [&](std::size_t a) { return cand[a].coprime; });
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (any_coprime || k > 0) cand[members[k]].keep = false;
      }
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (!table.divides(lm_h, pr.lcm)) return false;
      return lcm_id(pr.i, h) != pr.lcm && lcm_id(pr.j, h) != pr.lcm;
    });

    for (const auto& c : cand) {
      if (c.keep) pairs_.push_back({c.g, h, c.lcm, c.degree});
    }
    for (std::uint32_t g : basis_) {
      if (!redundant_[g] && table.divides(lm_h, polys_[g].lm())) redundant_[g] = 1;
    }
    basis_.push_back(h);
    in_basis_[h] = 1;
  }

  // --- symbolic preprocessing and reduction ----------------------------

  std::uint32_t find_reducer(std::uint32_t mono) const {
    const auto& table = ws_.table();
    std::uint32_t best = kNone;
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t g : basis_) {
      const SparsePoly& p = polys_[g];
      if (p.mons.size() < best_len && table.divides(p.lm(), mono)) {
        best = g;
        best_len = p.mons.size();
      }
    }
    return best;
  }

  void ensure_scratch() {
    const std::size_t n = ws_.table().size();
    if (stamp_.size() < n) {
      stamp_.resize(n, 0);
      mono_pivot_.resize(n, -1);
      col_of_.resize(n, 0);
    }
  }

  void step() {
    auto& table = ws_.table();
    int d = std::numeric_limits<int>::max();
    for (const auto& pr : pairs_) d = std::min(d, pr.degree);
    for (std::uint32_t g : pending_) d = std::min(d, polys_[g].degree);
    if (options_.degree_cap && d > *options_.degree_cap) {
      throw DegreeCapExceeded(d, *options_.degree_cap);
    }
    max_step_degree_ = std::max(max_step_degree_, d);

    std::vector<Pair> selected;
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (pr.degree != d) return false;
      selected.push_back(pr);
      return true;
    });
    std::sort(selected.begin(), selected.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    std::vector<std::uint32_t> gens;
    std::erase_if(pending_, [&](std::uint32_t g) {
      if (polys_[g].degree != d) return false;
      gens.push_back(g);
      return true;
    });

    // Rows as (multiplier, polynomial) with their monomial ids.
    struct Spec {
      std::uint32_t mult;
      std::uint32_t poly;
      std::vector<std::uint32_t> mons;
    };
    std::vector<Spec> halves;
    std::unordered_set<std::uint64_t> seen_half;
    for (const auto& pr : selected) {
      for (std::uint32_t side : {pr.i, pr.j}) {
        const std::uint64_t key = (static_cast<std::uint64_t>(pr.lcm) << 32) | side;
        if (!seen_half.insert(key).second) continue;
        std::uint32_t mult = table.intern(table[pr.lcm] / table[polys_[side].lm()]);
        halves.push_back({mult, side, {}});
        ws_.multiply(mult, polys_[side], halves.back().mons);
      }
    }

    ensure_scratch();
    ++cur_stamp_;
    std::vector<std::uint32_t> block_monos;
    std::vector<std::uint32_t> queue;
    auto see = [&](std::uint32_t m) {
      if (m >= stamp_.size()) ensure_scratch();
      if (stamp_[m] == cur_stamp_) return;
      stamp_[m] = cur_stamp_;
      mono_pivot_[m] = -1;
      block_monos.push_back(m);
      queue.push_back(m);
    };

    std::vector<Spec> pivots;
    std::vector<Spec> targets;
    // The sparsest half with a given leading monomial becomes its pivot.
    std::unordered_map<std::uint32_t, std::size_t> best_half;
    for (std::size_t k = 0; k < halves.size(); ++k) {
      auto [it, fresh] = best_half.try_emplace(halves[k].mons.front(), k);
      if (!fresh && halves[k].mons.size() < halves[it->second].mons.size()) it->second = k;
    }
    for (std::size_t k = 0; k < halves.size(); ++k) {
      const std::uint32_t lm = halves[k].mons.front();
      if (best_half.at(lm) == k) {
        see(lm);
        mono_pivot_[lm] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(halves[k]));
      } else {
        targets.push_back(std::move(halves[k]));
      }
    }
    for (std::uint32_t g : gens) targets.push_back({ws_.one(), g, polys_[g].mons});
    for (const auto& s : pivots) {
      for (std::uint32_t m : s.mons) see(m);
    }
    for (const auto& s : targets) {
      for (std::uint32_t m : s.mons) see(m);
    }
    std::vector<std::uint32_t> scratch;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t m = queue[qi];
      if (mono_pivot_[m] >= 0) continue;
      const std::uint32_t r = find_reducer(m);
      if (r == kNone) continue;
      std::uint32_t mult = table.intern(table[m] / table[polys_[r].lm()]);
      ws_.multiply(mult, polys_[r], scratch);
      ensure_scratch();
      mono_pivot_[m] = static_cast<std::int32_t>(pivots.size());
      pivots.push_back({mult, r, scratch});
      for (std::uint32_t t : pivots.back().mons) see(t);
    }

    // Columns in decreasing monomial order.
    std::sort(block_monos.begin(), block_monos.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ws_.greater(a, b); });
    const std::size_t ncols = block_monos.size();
    for (std::size_t c = 0; c < ncols; ++c) col_of_[block_monos[c]] = static_cast<std::uint32_t>(c);

    std::vector<BlockRow> pivot_rows(pivots.size());
    std::vector<std::size_t> pivot_sizes(pivots.size());
    std::vector<std::int32_t> pivot_of_col(ncols, -1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      auto& row = pivot_rows[k];
      row.cols.reserve(pivots[k].mons.size());
      for (std::uint32_t m : pivots[k].mons) row.cols.push_back(col_of_[m]);
      row.coeffs = polys_[pivots[k].poly].coeffs.data();
      pivot_sizes[k] = row.cols.size();
      pivot_of_col[row.cols.front()] = static_cast<std::int32_t>(k);
    }

    // Stage 1: eliminate every pivot column from the target rows.
    reducer_.resize(ncols);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> residuals;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& s : targets) {
      BlockRow row;
      row.cols.reserve(s.mons.size());
      for (std::uint32_t m : s.mons) row.cols.push_back(col_of_[m]);
      row.coeffs = polys_[s.poly].coeffs.data();
      reducer_.reduce(row, row.cols.size(), pivot_of_col, pivot_rows, pivot_sizes, out);
      if (!out.empty()) residuals.push_back(out);
    }

    // Stage 2: dense echelon form of the residual rows on the non-pivot columns.
    std::vector<std::uint32_t> compact_to_col;
    std::vector<std::uint32_t> col_to_compact(ncols, kNone);
    for (std::size_t c = 0; c < ncols; ++c) {
      if (pivot_of_col[c] < 0) {
        col_to_compact[c] = static_cast<std::uint32_t>(compact_to_col.size());
        compact_to_col.push_back(static_cast<std::uint32_t>(c));
      }
    }
    const std::size_t width = compact_to_col.size();
    const std::uint32_t q = ws_.q();
    std::vector<std::vector<std::uint32_t>> echelon;
    std::vector<std::size_t> echelon_lead;
    std::vector<std::int32_t> echelon_of(width, -1);
    std::vector<std::uint32_t> dense(width);
    for (const auto& res : residuals) {
      std::fill(dense.begin(), dense.end(), 0);
      for (auto [c, v] : res) dense[col_to_compact[c]] = v;
      std::size_t lead = width;
      for (std::size_t c = col_to_compact[res.front().first]; c < width; ++c) {
        const std::uint32_t v = dense[c];
        if (v == 0) continue;
        const std::int32_t e = echelon_of[c];
        if (e < 0) {
          lead = c;
          break;
        }
        kernels::axpy_mod(std::span(dense).subspan(c), q - v,
                          std::span<const std::uint32_t>(echelon[e]).subspan(c), q);
      }
      if (lead == width) continue;
      // Later entries may still sit in earlier pivot columns; echelon form
      // only needs distinct leading columns.
      const std::uint32_t inv = ws_.ring().field.inv(FieldElement{dense[lead]}).value;
      kernels::scale_mod(std::span(dense).subspan(lead), inv, q);
      echelon_of[lead] = static_cast<std::int32_t>(echelon.size());
      echelon.push_back(dense);
      echelon_lead.push_back(lead);
    }

    StepStats stats{d, selected.size() + gens.size(), pivots.size() + targets.size(), ncols,
                    echelon.size()};
    steps_.push_back(stats);

    for (std::size_t k = 0; k < echelon.size(); ++k) {
      SparsePoly p;
      const auto& row = echelon[k];
      for (std::size_t c = echelon_lead[k]; c < width; ++c) {
        if (row[c] == 0) continue;
        const std::uint32_t m = block_monos[compact_to_col[c]];
        p.mons.push_back(m);
        p.coeffs.push_back(row[c]);
        p.degree = std::max(p.degree, table[m].degree());
      }
      const auto idx = static_cast<std::uint32_t>(polys_.size());
      polys_.push_back(std::move(p));
      in_basis_.push_back(0);
      redundant_.push_back(0);
      insert(idx);
      if (unit_) return;
    }
  }

  // --- closure below the next degree ------------------------------------

  // Every pair and generator of degree <= d has been processed, where d is
  // the largest step degree so far. Returns true when the current basis is
  // provably complete, so the remaining pairs need no reduction:
  //  - homogeneous input whose leading monomials contain every monomial of
  //    degree d: G is a d-truncated basis and I agrees with LM(G) from d on;
  //  - otherwise, a zero-dimensional LM(G) with the same property whose
  //    multiplication matrices commute: the border relations then form a
  //    border basis of an ideal J with <G> ⊆ J ⊆ I = <G>, so the staircase
  //    counts dim K[X]/I and LM(G) = LM(I).
  bool closed() {
    if (steps_.empty()) return false;
    int next = std::numeric_limits<int>::max();
    for (const auto& pr : pairs_) next = std::min(next, pr.degree);
    for (std::uint32_t g : pending_) next = std::min(next, polys_[g].degree);
    const int d = max_step_degree_;
    if (next <= d || d == attempted_degree_) return false;
    attempted_degree_ = d;
    if (!all_monomials_leading(d)) return false;
    if (homogeneous_) return true;
    std::vector<Polynomial> candidate = reduced();
    GroebnerBasis gb(ws_.ring(), candidate, d);
    if (!matrices_commute(multiplication_matrices(gb))) return false;
    certified_ = std::move(candidate);
    return true;
  }

  // True when LM(G) contains all monomials of degree d.
  bool all_monomials_leading(int d) const {
    const auto& table = ws_.table();
    const int n = ws_.ring().nvars;
    std::vector<Monomial> lms;
    for (std::uint32_t g : basis_) {
      if (!redundant_[g]) lms.push_back(table[polys_[g].lm()]);
    }
    auto standard = [&](const Monomial& m) {
      return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<std::pair<Monomial, int>> stack{{Monomial(n), 0}};
    while (!stack.empty()) {
      auto [m, first] = stack.back();
      stack.pop_back();
      if (m.degree() >= d) return false;
      for (int j = first; j < n; ++j) {
        Monomial next = m * Monomial::variable(n, j);
        if (standard(next)) stack.emplace_back(next, j);
      }
    }
    return true;
  }

  // --- final reduction --------------------------------------------------

  std::vector<Polynomial> reduced() {
    std::vector<Polynomial> out;
    std::vector<std::uint32_t> minimal = minimal_basis();
    for (std::uint32_t idx : minimal) out.push_back(ws_.export_poly(tail_reduced(idx, minimal)));
    return out;
  }

  std::vector<std::uint32_t> minimal_basis() const {
    const auto& table = ws_.table();
    std::vector<std::uint32_t> keep;
    for (std::uint32_t g : basis_) {
      bool divisible = false;
      for (std::uint32_t h : basis_) {
        if (h == g) continue;
        const std::uint32_t a = polys_[h].lm(), b = polys_[g].lm();
        // Distinct basis elements never share a leading monomial.
        if (table.divides(a, b) && a != b) {
          divisible = true;
          break;
        }
      }
      if (!divisible) keep.push_back(g);
    }
    std::sort(keep.begin(), keep.end(), [&](std::uint32_t a, std::uint32_t b) {
      return ws_.greater(polys_[b].lm(), polys_[a].lm());
    });
    return keep;
  }

  /// Element `idx` with its tail reduced by the minimal basis.
  SparsePoly tail_reduced(std::uint32_t idx, const std::vector<std::uint32_t>& minimal) {
    const SparsePoly& p = polys_[idx];
    SparsePoly out;
    out.mons.push_back(p.lm());
    out.coeffs.push_back(1);
    out.degree = p.degree;
    if (p.mons.size() == 1) return out;
    SparsePoly tail;
    tail.mons.assign(p.mons.begin() + 1, p.mons.end());
    tail.coeffs.assign(p.coeffs.begin() + 1, p.coeffs.end());
    const auto& table = ws_.table();
    SparsePoly nf = heap_reduce(ws_, tail, polys_, [&](std::uint32_t m) {
      std::uint32_t r = kNone;
      std::size_t best_len = std::numeric_limits<std::size_t>::max();
      for (std::uint32_t g : minimal) {
        if (polys_[g].mons.size() < best_len && table.divides(polys_[g].lm(), m)) {
          r = g;
          best_len = polys_[g].mons.size();
        }
      }
      return r;
    });
    out.mons.insert(out.mons.end(), nf.mons.begin(), nf.mons.end());
    out.coeffs.insert(out.coeffs.end(), nf.coeffs.begin(), nf.coeffs.end());
    return out;
  }

 private:
  Workspace ws_;
  GroebnerOptions options_;
  RowReducer reducer_;

  std::vector<SparsePoly> polys_;
  std::vector<std::uint8_t> in_basis_;
  std::vector<std::uint8_t> redundant_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::uint32_t> pending_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  bool homogeneous_ = true;
  int attempted_degree_ = -1;
  std::optional<std::vector<Polynomial>> certified_;
  int max_step_degree_ = 0;
  std::vector<StepStats> steps_;

  std::vector<std::uint32_t> stamp_;
  std::vector<std::int32_t> mono_pivot_;
  std::vector<std::uint32_t> col_of_;
  std::uint32_t cur_stamp_ = 0;
};

}  // namespace

struct Reducer::Impl {
  explicit Impl(const GroebnerBasis& basis) : ws(basis.ring()) {
    for (const auto& g : basis.basis()) {
      SparsePoly p = ws.import(g);
      ws.make_monic(p);
      polys.push_back(std::move(p));
    }
  }

  std::uint32_t find(std::uint32_t m) {
    auto [it, fresh] = cache.try_emplace(m, kNone);
    if (!fresh) return it->second;
    const auto& table = ws.table();
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t g = 0; g < polys.size(); ++g) {
      if (polys[g].mons.size() < best_len && table.divides(polys[g].lm(), m)) {
        it->second = g;
        best_len = polys[g].mons.size();
      }
    }
    return it->second;
  }

  Workspace ws;
  std::vector<SparsePoly> polys;
  std::unordered_map<std::uint32_t, std::uint32_t> cache;
};

Reducer::Reducer(const GroebnerBasis& basis) : impl_(std::make_unique<Impl>(basis)) {}
Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Polynomial Reducer::normal_form(const Polynomial& f) {
  const Ring& ring = impl_->ws.ring();
  if (f.ring().field.modulus() != ring.field.modulus() || f.ring().nvars != ring.nvars) {
    throw std::invalid_argument("polynomial and basis live in different rings");
  }
  if (f.is_zero()) return Polynomial(ring);
  SparsePoly in = impl_->ws.import(f);
  SparsePoly nf = heap_reduce(impl_->ws, in, impl_->polys,
                              [this](std::uint32_t m) { return impl_->find(m); });
  return impl_->ws.export_poly(nf);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return Reducer(basis).normal_form(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& field = f.ring().field;
  return f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coefficient())) -
         g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coefficient()));
}

bool buchberger_check(const GroebnerBasis& basis, std::optional<std::size_t> max_pairs) {
  const auto& gs = basis.basis();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < gs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      // Coprime leading monomials reduce to zero automatically.
      if (!gs[i].leading_monomial().coprime(gs[j].leading_monomial())) pairs.emplace_back(i, j);
    }
  }
  if (max_pairs && pairs.size() > *max_pairs && *max_pairs > 0) {
    std::vector<std::pair<std::size_t, std::size_t>> sample;
    const double stride = static_cast<double>(pairs.size()) / static_cast<double>(*max_pairs);
    for (std::size_t k = 0; k < *max_pairs; ++k) {
      sample.push_back(pairs[static_cast<std::size_t>(static_cast<double>(k) * stride)]);
    }
    pairs = std::move(sample);
  }
  Reducer reducer(basis);
  for (auto [i, j] : pairs) {
    if (!reducer.normal_form(s_polynomial(gs[i], gs[j])).is_zero()) return false;
  }
  return true;
}

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> basis, int max_step_degree,
                             std::vector<StepStats> steps)
    : ring_(std::move(ring)), basis_(std::move(basis)), max_step_degree_(max_step_degree),
      steps_(std::move(steps)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().leading_monomial().is_one();
}

GroebnerBasis groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                             const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("groebner_basis needs at least one generator");
  const Ring ring = generators.front().ring().with_order(order);
  F4 engine(ring, options);
  for (const auto& f : generators) {
    if (f.ring().field.modulus() != ring.field.modulus() || f.ring().nvars != ring.nvars) {
      throw std::invalid_argument("generators live in different rings");
    }
    engine.add_generator(f);
  }
  engine.run();
  return engine.result();
}

GroebnerBasis groebner_basis(const PolySystem& system, MonomialOrder order,
                             const GroebnerOptions& options) {
  return groebner_basis(std::span<const Polynomial>(system.generators), order, options);
}

}  // namespace critpoints
