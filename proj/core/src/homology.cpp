#include "gbg/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbg/errors.hpp"

namespace gbg {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense Smith normal form

namespace {

struct Dense {
  IntegerMatrix a;
  IntegerMatrix* u = nullptr;
  IntegerMatrix* v = nullptr;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (u != nullptr) {
      for (std::size_t c = 0; c < u->cols(); ++c) std::swap(u->at(i, c), u->at(j, c));
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (v != nullptr) {
      for (std::size_t r = 0; r < v->rows(); ++r) std::swap(v->at(r, i), v->at(r, j));
    }
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.at(j, c) != 0) a.at(i, c) += q * a.at(j, c);
    }
    if (u != nullptr) {
      for (std::size_t c = 0; c < u->cols(); ++c) u->at(i, c) += q * u->at(j, c);
    }
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a.at(r, j) != 0) a.at(r, i) += q * a.at(r, j);
    }
    if (v != nullptr) {
      for (std::size_t r = 0; r < v->rows(); ++r) v->at(r, i) += q * v->at(r, j);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    if (u != nullptr) {
      for (std::size_t c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
    }
  }

  /// Moves the smallest nonzero entry of the trailing block to (t, t).
  bool bring_min(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    mpz_class best;
    for (std::size_t r = t; r < a.rows(); ++r) {
      for (std::size_t c = t; c < a.cols(); ++c) {
        const mpz_class& x = a.at(r, c);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          br = r;
          bc = c;
          found = true;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void run() {
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < lim; ++t) {
      if (!bring_min(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t r = t + 1; r < a.rows(); ++r) {
          if (a.at(r, t) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
          add_row(r, t, -q);
          if (a.at(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (a.at(t, c) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
          add_col(c, t, -q);
          if (a.at(t, c) != 0) clean = false;
        }
        if (!clean) {
          // A smaller remainder now sits in row or column t.
          std::size_t br = t, bc = t;
          mpz_class best = abs(a.at(t, t));
          for (std::size_t r = t + 1; r < a.rows(); ++r) {
            if (a.at(r, t) != 0 && abs(a.at(r, t)) < best) {
              best = abs(a.at(r, t));
              br = r;
              bc = t;
            }
          }
          for (std::size_t c = t + 1; c < a.cols(); ++c) {
            if (a.at(t, c) != 0 && abs(a.at(t, c)) < best) {
              best = abs(a.at(t, c));
              br = t;
              bc = c;
            }
          }
          swap_rows(t, br);
          swap_cols(t, bc);
          continue;
        }
        bool divides = true;
        for (std::size_t r = t + 1; r < a.rows() && divides; ++r) {
          for (std::size_t c = t + 1; c < a.cols(); ++c) {
            if (a.at(r, c) != 0 && !mpz_divisible_p(a.at(r, c).get_mpz_t(), a.at(t, t).get_mpz_t())) {
              add_row(t, r, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  SmithForm out;
  Dense d{m};
  if (with_transforms) {
    out.U = IntegerMatrix::identity(m.rows());
    out.V = IntegerMatrix::identity(m.cols());
    d.u = &*out.U;
    d.v = &*out.V;
  }
  d.run();
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    if (d.a.at(t, t) == 0) break;
    out.factors.push_back(d.a.at(t, t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sparse elimination

IntegerMatrix SparseMatrix::dense() const {
  IntegerMatrix m(rows, cols);
  for (const auto& [r, c, v] : entries) m.at(r, c) += static_cast<long>(v);
  return m;
}

namespace {

struct Overflow {};

inline bool checked_sub_mul(long long& out, long long a, long long q, long long b) {
  long long prod = 0;
  if (__builtin_mul_overflow(q, b, &prod)) return false;
  return !__builtin_sub_overflow(a, prod, &out);
}
inline bool checked_sub_mul(mpz_class& out, const mpz_class& a, const mpz_class& q, const mpz_class& b) {
  out = a - q * b;
  return true;
}
inline bool is_unit(long long x) { return x == 1 || x == -1; }
inline bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
inline mpz_class to_mpz(long long x) { return mpz_class(static_cast<long>(x)); }
inline mpz_class to_mpz(const mpz_class& x) { return x; }

template <typename T>
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m)
      : rows_(m.rows), col_rows_(m.cols), row_alive_(m.rows, 1), col_done_(m.cols, 0),
        stamp_(m.rows, 0) {
    std::vector<std::map<std::size_t, T>> acc(m.rows);
    for (const auto& [r, c, v] : m.entries) acc[r][c] += T(static_cast<long>(v));
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (auto& [c, v] : acc[r]) {
        if (v == 0) continue;
        rows_[r].emplace_back(c, v);
        col_rows_[c].push_back(r);
      }
    }
  }

  /// Returns (number of unit pivots, residual dense matrix).
  std::pair<std::size_t, IntegerMatrix> run() {
    std::vector<std::size_t> order(col_rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return col_rows_[a].size() < col_rows_[b].size();
    });
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c : order) {
        if (col_done_[c] == 0 && pivot_on(c)) progress = true;
      }
    }
    return {pivots_, residual()};
  }

 private:
  using Row = std::vector<std::pair<std::size_t, T>>;

  const T* entry(std::size_t r, std::size_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, std::size_t col) { return p.first < col; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }

  std::vector<std::size_t> live_rows(std::size_t c) {
    ++epoch_;
    std::vector<std::size_t> out;
    std::vector<std::size_t> keep;
    for (std::size_t r : col_rows_[c]) {
      if (stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      if (row_alive_[r] == 0 || entry(r, c) == nullptr) continue;
      out.push_back(r);
      keep.push_back(r);
    }
    col_rows_[c] = std::move(keep);
    return out;
  }

  bool pivot_on(std::size_t c) {
    const auto rs = live_rows(c);
    if (rs.empty()) {
      col_done_[c] = 1;
      return false;
    }
    std::size_t p = rows_.size();
    for (std::size_t r : rs) {
      if (is_unit(*entry(r, c)) && (p == rows_.size() || rows_[r].size() < rows_[p].size())) p = r;
    }
    if (p == rows_.size()) return false;
    const T pv = *entry(p, c);
    for (std::size_t r : rs) {
      if (r == p) continue;
      const T q = *entry(r, c) * pv;  // pv = +-1, so a/pv = a*pv
      subtract(r, p, q);
    }
    row_alive_[p] = 0;
    col_done_[c] = 1;
    ++pivots_;
    return true;
  }

  void subtract(std::size_t r, std::size_t p, const T& q) {
    const Row& a = rows_[r];
    const Row& b = rows_[p];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v;
        if (!checked_sub_mul(v, T(0), q, b[j].second)) throw Overflow{};
        col_rows_[b[j].first].push_back(r);
        out.emplace_back(b[j].first, v);
        ++j;
      } else {
        T v;
        if (!checked_sub_mul(v, a[i].second, q, b[j].second)) throw Overflow{};
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    rows_[r] = std::move(out);
  }

  IntegerMatrix residual() const {
    std::vector<std::size_t> rmap, cmap(col_done_.size(), static_cast<std::size_t>(-1));
    std::size_t ncols = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r] == 0 || rows_[r].empty()) continue;
      rmap.push_back(r);
      for (const auto& [c, v] : rows_[r]) {
        if (cmap[c] == static_cast<std::size_t>(-1)) cmap[c] = ncols++;
      }
    }
    IntegerMatrix m(rmap.size(), ncols);
    for (std::size_t i = 0; i < rmap.size(); ++i) {
      for (const auto& [c, v] : rows_[rmap[i]]) m.at(i, cmap[c]) = to_mpz(v);
    }
    return m;
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::vector<char> row_alive_;
  std::vector<char> col_done_;
  std::vector<std::size_t> stamp_;
  std::size_t epoch_ = 0;
  std::size_t pivots_ = 0;
};

template <typename T>
std::vector<mpz_class> factors_with(const SparseMatrix& m) {
  Eliminator<T> elim(m);
  auto [units, rest] = elim.run();
  std::vector<mpz_class> out(units, mpz_class(1));
  if (rest.rows() > 0 && rest.cols() > 0) {
    const SmithForm snf = smith_normal_form(rest);
    out.insert(out.end(), snf.factors.begin(), snf.factors.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<mpz_class> invariant_factors(const SparseMatrix& m) {
  try {
    return factors_with<long long>(m);
  } catch (const Overflow&) {
    return factors_with<mpz_class>(m);
  }
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw ValidationError("matrix dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, long long>>> brows(b.rows);
  for (const auto& [r, c, v] : b.entries) brows[r].emplace_back(c, v);
  std::map<std::pair<std::size_t, std::size_t>, long long> acc;
  for (const auto& [r, k, v] : a.entries) {
    for (const auto& [c, w] : brows[k]) acc[{r, c}] += v * w;
  }
  SparseMatrix out{a.rows, b.cols, {}};
  for (const auto& [rc, v] : acc) {
    if (v != 0) out.entries.emplace_back(rc.first, rc.second, v);
  }
  return out;
}

std::vector<SparseMatrix> boundary_matrices(const CubeComplex& cc) {
  if (cc.capped()) throw ValidationError("boundary matrices need the complex built to its top dimension");
  const FiniteGraph& g = cc.graph();
  std::vector<SparseMatrix> out;
  for (int k = 1; k <= cc.top_dim(); ++k) {
    SparseMatrix d{cc.count(k - 1), cc.count(k), {}};
    const auto& level = cc.cubes(k);
    for (std::size_t j = 0; j < level.size(); ++j) {
      const Cube& c = level[j];
      int i = 0;
      for_each_bit(c.moving, [&](std::uint32_t e) {
        const long long sign = (i % 2 == 0) ? 1 : -1;
        const std::size_t hi = cc.index_of(face(c, e, g.edge(e).hi()));
        const std::size_t lo = cc.index_of(face(c, e, g.edge(e).lo()));
        if (hi == CubeComplex::npos || lo == CubeComplex::npos) {
          throw InvariantViolation("boundary of a cube leaves the complex");
        }
        d.entries.emplace_back(hi, j, sign);
        d.entries.emplace_back(lo, j, -sign);
        ++i;
      });
    }
    out.push_back(std::move(d));
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (!multiply(out[k - 1], out[k]).entries.empty()) {
      throw InvariantViolation("boundary squared is nonzero in degree " + std::to_string(k + 1));
    }
  }
  return out;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

HomologyProfile homology(const CubeComplex& cc) {
  const auto ds = boundary_matrices(cc);
  const int top = cc.top_dim();
  // factors[k] belongs to d_k, k = 1..top; d_0 and d_{top+1} are zero.
  std::vector<std::vector<mpz_class>> factors(top + 2);
  for (int k = 1; k <= top; ++k) factors[k] = invariant_factors(ds[k - 1]);

  HomologyProfile h;
  for (int k = 0; k <= top; ++k) {
    const long long rank_out = static_cast<long long>(factors[k].size());
    const long long rank_in = static_cast<long long>(factors[k + 1].size());
    h.betti.push_back(static_cast<long long>(cc.count(k)) - rank_out - rank_in);
    std::vector<mpz_class> tors;
    for (const auto& f : factors[k + 1]) {
      if (f > 1) tors.push_back(f);
    }
    h.torsion.push_back(std::move(tors));
  }
  for (int k = 0; k <= top; ++k) h.euler += (k % 2 == 0 ? 1 : -1) * h.betti[k];
  if (h.euler != euler_characteristic(cc)) {
    throw InvariantViolation("alternating betti sum differs from the euler characteristic");
  }
  return h;
}

std::string homology_json(const HomologyProfile& h) {
  nlohmann::json torsion = nlohmann::json::object();
  for (std::size_t k = 0; k < h.torsion.size(); ++k) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : h.torsion[k]) fs.push_back(f.get_str());
    torsion[std::to_string(k)] = fs;
  }
  nlohmann::json j = {{"betti", h.betti}, {"torsion", torsion}, {"euler", h.euler}};
  return j.dump();
}

std::string triplets_text(const SparseMatrix& m) {
  std::ostringstream out;
  out << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
  for (const auto& [r, c, v] : m.entries) out << r << " " << c << " " << v << "\n";
  return out.str();
}

}  // namespace gbg
