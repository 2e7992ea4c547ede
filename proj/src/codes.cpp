#include "rmcode/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>

#include "rmcode/error.hpp"

namespace rmcode {

// ---------------------------------------------------------------- LinearCode

LinearCode::LinearCode(FieldPtr field, std::size_t length, const Matrix& rows)
    : field_(std::move(field)), length_(length) {
  if (rows.rows() > 0 && rows.cols() != length) fail(ErrorKind::DimensionMismatch, "code rows have the wrong length");
  basis_ = rows.rows() == 0 ? Matrix(0, length) : rref(*field_, rows).matrix;
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length_) fail(ErrorKind::DimensionMismatch, "word length differs from code length");
  std::vector<Elem> w(word.begin(), word.end());
  // Basis is in RREF: eliminate each pivot in turn.
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    const auto pivot = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Elem e) { return e != 0; }) -
                                                row.begin());
    if (w[pivot] != 0) axpy(*field_, field_->neg(w[pivot]), row, w);
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

bool LinearCode::operator==(const LinearCode& other) const {
  return length_ == other.length_ && field_->same_as(*other.field_) && basis_ == other.basis_;
}

LinearCode code_of_degree(const ProjectivePointSet& x, const GroebnerBasis& g, int d) {
  if (d < 0) return {x.field(), x.size(), Matrix(0, x.size())};
  const auto delta = standard_monomials(g, d);
  return {x.field(), x.size(), evaluation_matrix(x, delta)};
}

LinearCode dual_code(const LinearCode& c) {
  const Matrix& b = c.basis();
  Matrix h = b.rows() == 0 ? Matrix(0, c.length()) : b;
  return {c.field(), c.length(), nullspace(*c.field(), h)};
}

LinearCode scale_code(const LinearCode& c, std::span<const Elem> beta) {
  if (beta.size() != c.length()) fail(ErrorKind::DimensionMismatch, "scaling vector length differs from code length");
  Matrix rows = c.basis();
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) rows.at(i, j) = c.field()->mul(rows.at(i, j), beta[j]);
  return {c.field(), c.length(), rows};
}

bool monomially_equivalent(const LinearCode& c1, const LinearCode& c2, std::optional<std::span<const Elem>> beta) {
  if (c1.length() != c2.length()) fail(ErrorKind::DimensionMismatch, "codes of different lengths");
  if (!beta) fail(ErrorKind::Unsupported, "monomial equivalence without a candidate vector is not searched");
  for (Elem b : *beta)
    if (b == 0) fail(ErrorKind::InvalidParams, "monomial equivalence needs a vector with nonzero entries");
  return scale_code(c1, *beta) == c2;
}

// ---------------------------------------------------------------- budgets

Budgets Budgets::from_env() {
  Budgets b;
  if (const char* env = std::getenv("RMCODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b = uniform(v);
  }
  return b;
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t sat_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, q);
  return r;
}

// C(n, k), saturating.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

// Visits base + sum c_j rows[j] for every coefficient vector c, changing one
// coefficient per step.
template <class Visit>
void for_each_combination(const Field& f, const Matrix& b, std::span<const Elem> base,
                          const std::vector<std::size_t>& rows, Visit&& visit) {
  std::vector<Elem> v(base.begin(), base.end());
  std::vector<Elem> digits(rows.size(), 0);
  const Elem q = f.q();
  while (true) {
    visit(std::span<const Elem>(v));
    std::size_t j = 0;
    for (; j < rows.size(); ++j) {
      const Elem old = digits[j];
      const Elem next = old + 1 == q ? 0 : old + 1;
      digits[j] = next;
      axpy(f, f.sub(next, old), b.row(rows[j]), v);
      if (next != 0) break;
    }
    if (j == rows.size()) return;
  }
}

// Support bitmask over up to 64*W coordinates.
template <std::size_t W>
struct Mask {
  std::array<std::uint64_t, W> w{};
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Mask operator|(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  bool operator<(const Mask& o) const { return w < o.w; }
  bool operator==(const Mask& o) const { return w == o.w; }
};

template <std::size_t W>
long long ghw_kernel(const LinearCode& c, int r) {
  const Field& f = *c.field();
  const Matrix& b = c.basis();
  const int k = static_cast<int>(b.rows());
  long long best = static_cast<long long>(c.length()) + 1;

  auto mask_of = [](std::span<const Elem> v) {
    Mask<W> m;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) m.set(i);
    return m;
  };

  // Candidate row supports, cached by (pivot, free columns).
  std::map<std::pair<int, std::vector<std::size_t>>, std::vector<Mask<W>>> cache;
  auto candidates = [&](int pivot, const std::vector<std::size_t>& free) -> const std::vector<Mask<W>>& {
    auto key = std::make_pair(pivot, free);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Mask<W>> masks;
    for_each_combination(f, b, b.row(pivot), free, [&](std::span<const Elem> v) { masks.push_back(mask_of(v)); });
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(),
                     [](const Mask<W>& x, const Mask<W>& y) { return x.count() < y.count(); });
    return cache.emplace(std::move(key), std::move(masks)).first->second;
  };

  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) pivots[i] = i;
  while (true) {
    std::vector<const std::vector<Mask<W>>*> lists;
    for (int i = 0; i < r; ++i) {
      std::vector<std::size_t> free;
      for (int j = pivots[i] + 1; j < k; ++j)
        if (!std::binary_search(pivots.begin(), pivots.end(), j)) free.push_back(static_cast<std::size_t>(j));
      lists.push_back(&candidates(pivots[i], free));
    }
    // Depth-first union with pruning on the current best.
    auto dfs = [&](auto&& self, int i, const Mask<W>& acc) -> void {
      if (i == r) {
        best = std::min<long long>(best, acc.count());
        return;
      }
      for (const auto& m : *lists[i]) {
        if (m.count() >= best) break;
        const Mask<W> u = acc | m;
        if (u.count() >= best) continue;
        self(self, i + 1, u);
      }
    };
    dfs(dfs, 0, Mask<W>{});

    int i = r - 1;
    while (i >= 0 && pivots[i] == k - r + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return best;
}

}  // namespace

std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q) {
  if (r < 0 || r > k) return 0;
  // Sum over pivot sets of q^(free entries), via the recurrence
  // [k, r] = [k-1, r-1] + q^r [k-1, r].
  std::vector<std::vector<std::uint64_t>> t(k + 1, std::vector<std::uint64_t>(r + 1, 0));
  for (int n = 0; n <= k; ++n) {
    t[n][0] = 1;
    for (int j = 1; j <= std::min(n, r); ++j) t[n][j] = sat_add(t[n - 1][j - 1], sat_mul(sat_pow(q, j), t[n - 1][j]));
  }
  return t[k][r];
}

namespace {

// Smallest w such that some w columns of a parity-check matrix are linearly
// dependent; nullopt when more than `limit` column subsets would be needed.
std::optional<long long> min_distance_by_columns(const LinearCode& c, std::uint64_t limit) {
  const Field& f = *c.field();
  const std::size_t m = c.length();
  const Matrix h = nullspace(f, c.basis());
  const std::size_t n = h.rows();
  if (n == 0) return 1;
  std::uint64_t spent = 0;
  // Any n + 1 columns are dependent, so the loop ends by w = n + 1.
  for (std::size_t w = 1; w <= n + 1; ++w) {
    spent = sat_add(spent, binomial(m, w));
    if (spent > limit) return std::nullopt;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    Matrix sub(n, w);
    while (true) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < w; ++j) sub.at(r, j) = h.at(r, idx[j]);
      if (rank(f, sub) < w) return static_cast<long long>(w);
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == m - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

long long min_distance(const LinearCode& c, std::uint64_t limit) {
  const int k = static_cast<int>(c.dimension());
  if (k == 0) fail(ErrorKind::InvalidParams, "minimum distance of the zero code");
  const Field& f = *c.field();
  const std::uint64_t classes = gaussian_binomial(k, 1, f.q());
  if (classes > limit) {
    if (auto d = min_distance_by_columns(c, limit)) return *d;
    fail(ErrorKind::BudgetExceeded, "minimum distance needs " + std::to_string(classes) +
                                        " codewords or more column subsets than the budget " + std::to_string(limit));
  }
  const Matrix& b = c.basis();
  std::size_t best = c.length();
  for (int i = 0; i < k; ++i) {
    std::vector<std::size_t> rest;
    for (int j = i + 1; j < k; ++j) rest.push_back(static_cast<std::size_t>(j));
    for_each_combination(f, b, b.row(i), rest,
                         [&](std::span<const Elem> v) { best = std::min(best, hamming_weight(v)); });
  }
  return static_cast<long long>(best);
}

long long ghw(const LinearCode& c, int r, std::uint64_t limit) {
  const int k = static_cast<int>(c.dimension());
  if (r < 1 || r > k)
    fail(ErrorKind::InvalidParams, "ghw needs 1 <= r <= k, got r=" + std::to_string(r) + " k=" + std::to_string(k));
  const std::uint64_t count = gaussian_binomial(k, r, c.field()->q());
  if (count > limit)
    fail(ErrorKind::BudgetExceeded, "ghw needs " + std::to_string(count) + " subspaces, budget " + std::to_string(limit));
  const std::size_t m = c.length();
  if (m <= 64) return ghw_kernel<1>(c, r);
  if (m <= 256) return ghw_kernel<4>(c, r);
  if (m <= 1024) return ghw_kernel<16>(c, r);
  if (m <= 4096) return ghw_kernel<64>(c, r);
  fail(ErrorKind::Unsupported, "ghw supports codes of length at most 4096");
}

long long footprint(const GroebnerBasis& g, int d, int r, long long m, std::uint64_t limit) {
  const auto delta = standard_monomials(g, d);
  const int n = static_cast<int>(delta.size());
  if (r < 1 || r > n) fail(ErrorKind::InvalidParams, "footprint needs 1 <= r <= |standard monomials|");
  std::uint64_t subsets = 1;
  for (int i = 1; i <= r; ++i) subsets = sat_mul(subsets, static_cast<std::uint64_t>(n - r + i)) / i;
  if (subsets > limit)
    fail(ErrorKind::BudgetExceeded, "footprint needs " + std::to_string(subsets) + " subsets, budget " +
                                        std::to_string(limit));
  const MonomialIdeal in = g.initial_ideal();
  long long best = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    std::vector<Monomial> sel;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sel.push_back(delta[i]);
    if (monomial_colon(in, sel) == in) continue;
    const long long deg = monomial_dim_degree(in + MonomialIdeal(g.nvars(), sel)).second;
    best = std::max(best, deg);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return m - best;
}

// ---------------------------------------------------------------- weight matrix

bool WeightMatrix::fully_resolved() const {
  for (const auto& row : cells)
    for (const auto& c : row)
      if (c.kind == WeightCell::Kind::Interval) return false;
  return true;
}

WeightMatrix weight_matrix(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                           const IndicatorSet& is, const Budgets& budgets, bool with_footprint) {
  const long long m = static_cast<long long>(x.size());
  const int r0 = hd.r0;
  const std::uint64_t q = x.field()->q();
  WeightMatrix wm;
  wm.r0 = r0;
  wm.m = x.size();
  wm.cells.assign(r0, std::vector<WeightCell>(m));
  wm.fp.assign(r0, std::vector<std::optional<long long>>(m));
  auto regularity = [&](int r) { return is.v_sorted.at(r - 1); };

  for (int d = 1; d <= r0; ++d) {
    const long long hdim = hd.at(d);
    const LinearCode code = code_of_degree(x, g, d);
    if (static_cast<long long>(code.dimension()) != hdim)
      fail(ErrorKind::InternalInconsistency, "code dimension differs from the Hilbert function");
    for (int r = 1; r <= m; ++r) {
      WeightCell& cell = wm.cells[d - 1][r - 1];
      if (r > hdim) {
        cell = {WeightCell::Kind::Infinity, 0, 0, "infinity"};
        continue;
      }
      if (with_footprint) {
        try {
          wm.fp[d - 1][r - 1] = footprint(g, d, r, m, budgets.subspaces);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExceeded) throw;
        }
      }
      const auto& fp = wm.fp[d - 1][r - 1];
      const long long lo = std::max<long long>(r, fp.value_or(r));
      const long long hi = m - hdim + r;
      if (gaussian_binomial(static_cast<int>(hdim), r, q) <= budgets.subspaces) {
        const long long v = ghw(code, r, budgets.subspaces);
        cell = {WeightCell::Kind::Exact, v, v, "enumeration"};
      } else if (d >= regularity(r)) {
        cell = {WeightCell::Kind::Exact, r, r, "regularity-index"};
      } else {
        cell = {WeightCell::Kind::Interval, lo, hi, "bounds"};
      }
      // Bound and theorem traps.
      if (cell.lo < lo || cell.hi > hi)
        fail(ErrorKind::InternalInconsistency, "weight outside the footprint/Singleton bounds at d=" +
                                                   std::to_string(d) + " r=" + std::to_string(r));
      if (cell.exact() && (d >= regularity(r)) != (cell.lo == r))
        fail(ErrorKind::InternalInconsistency,
             "regularity index of the r-th weight differs from the r-th v-number at r=" + std::to_string(r));
      if (!cell.exact() && d < regularity(r)) cell.lo = std::max<long long>(cell.lo, r + 1);
    }
  }

  // Propagate strict monotonicity along rows and down columns to a fixpoint.
  auto finite = [&](int d, int r) {
    return d >= 1 && d <= r0 && r >= 1 && r <= m && wm.cells[d - 1][r - 1].kind != WeightCell::Kind::Infinity;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    auto tighten = [&](WeightCell& c, long long lo, long long hi) {
      if (lo > c.lo) {
        c.lo = lo;
        changed = true;
      }
      if (hi < c.hi) {
        c.hi = hi;
        changed = true;
      }
      if (c.lo > c.hi) fail(ErrorKind::InternalInconsistency, "weight bounds are contradictory");
    };
    for (int d = 1; d <= r0; ++d)
      for (int r = 1; r < m; ++r) {
        if (!finite(d, r) || !finite(d, r + 1)) continue;
        WeightCell& a = wm.cells[d - 1][r - 1];
        WeightCell& b = wm.cells[d - 1][r];
        tighten(b, a.lo + 1, b.hi);
        tighten(a, a.lo, b.hi - 1);
      }
    for (int r = 1; r <= m; ++r)
      for (int d = 1; d + 1 <= r0 && d + 1 <= regularity(r); ++d) {
        if (!finite(d, r) || !finite(d + 1, r)) continue;
        WeightCell& a = wm.cells[d - 1][r - 1];
        WeightCell& b = wm.cells[d][r - 1];
        tighten(a, b.lo + 1, a.hi);
        tighten(b, b.lo, a.hi - 1);
      }
  }
  for (auto& row : wm.cells)
    for (auto& c : row)
      if (c.kind == WeightCell::Kind::Interval && c.lo == c.hi) c.kind = WeightCell::Kind::Exact;
  return wm;
}

}  // namespace rmcode
