#include "lemon/sparse_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lemon {

namespace {

// Partial-pivoting LU of a small dense row-major matrix.
class DenseLu {
 public:
  DenseLu(std::vector<double> a, std::size_t n) : n_(n), lu_(std::move(a)), perm_(n) {
    std::iota(perm_.begin(), perm_.end(), 0);
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i)
        if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
      if (at(p, k) == 0.0) {
        singular_ = true;
        return;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(p, j), at(k, j));
        std::swap(perm_[p], perm_[k]);
      }
      for (std::size_t i = k + 1; i < n_; ++i) {
        at(i, k) /= at(k, k);
        for (std::size_t j = k + 1; j < n_; ++j) at(i, j) -= at(i, k) * at(k, j);
      }
    }
  }

  bool singular() const { return singular_; }

  // A x = b
  std::vector<double> solve(std::span<const double> b) const {
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= at(i, j) * x[j];
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j < n_; ++j) x[i] -= at(i, j) * x[j];
      x[i] /= at(i, i);
    }
    return x;
  }

  // A^T x = b, using A^T = U^T L^T P.
  std::vector<double> solve_transposed(std::span<const double> b) const {
    std::vector<double> w(b.begin(), b.end());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) w[i] -= at(j, i) * w[j];
      w[i] /= at(i, i);
    }
    for (std::size_t i = n_; i-- > 0;)
      for (std::size_t j = i + 1; j < n_; ++j) w[i] -= at(j, i) * w[j];
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[perm_[i]] = w[i];
    return x;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return lu_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return lu_[i * n_ + j]; }

  std::size_t n_;
  std::vector<double> lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

// Dual of the seed LP in standard form:
//   max mu  s.t.  sum_i lambda_i v_i + mu a = c,  lambda, mu >= 0
// where v_i is row i of V, a = sum of seed rows, c = sum of all rows.
// Columns: [0, N) lambda, N mu, (N, N + l] phase-one artificials.
class DualSimplex {
 public:
  DualSimplex(const SpectralBasis& basis, std::span<const Vertex> seeds)
      : v_(basis), rows_(basis.rows), dim_(basis.cols), seed_row_(dim_, 0.0), rhs_(dim_, 0.0),
        art_sign_(dim_, 1.0) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto col = basis.column(k);
      for (Vertex s : seeds) seed_row_[k] += col[s];
      for (double x : col) rhs_[k] += x;
      art_sign_[k] = rhs_[k] < 0.0 ? -1.0 : 1.0;
    }
  }

  std::size_t mu() const { return rows_; }
  std::size_t artificial(std::size_t r) const { return rows_ + 1 + r; }
  bool is_artificial(std::size_t j) const { return j > rows_; }
  std::size_t total() const { return rows_ + 1 + dim_; }

  void column(std::size_t j, std::span<double> out) const {
    if (j < rows_) {
      for (std::size_t k = 0; k < dim_; ++k) out[k] = v_(j, k);
    } else if (j == rows_) {
      std::copy(seed_row_.begin(), seed_row_.end(), out.begin());
    } else {
      std::fill(out.begin(), out.end(), 0.0);
      out[j - rows_ - 1] = art_sign_[j - rows_ - 1];
    }
  }

  double dot_column(std::size_t j, std::span<const double> y) const {
    if (j < rows_) {
      double acc = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) acc += v_(j, k) * y[k];
      return acc;
    }
    if (j == rows_) return std::inner_product(seed_row_.begin(), seed_row_.end(), y.begin(), 0.0);
    return art_sign_[j - rows_ - 1] * y[j - rows_ - 1];
  }

  enum class Status { optimal, unbounded };

  struct State {
    std::vector<std::size_t> basic;
    std::vector<double> x_basic;
    std::vector<double> duals;
  };

  DenseLu factor(const std::vector<std::size_t>& basic) const {
    std::vector<double> b(dim_ * dim_);
    std::vector<double> col(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      column(basic[c], col);
      for (std::size_t r = 0; r < dim_; ++r) b[r * dim_ + c] = col[r];
    }
    return DenseLu(std::move(b), dim_);
  }

  // Revised simplex minimizing cost(j) over columns with allowed(j).
  template <class Cost, class Allowed>
  Status run(State& st, Cost cost, Allowed allowed, int& pivots) {
    std::vector<char> in_basis(total(), 0);
    for (std::size_t j : st.basic) in_basis[j] = 1;
    std::vector<double> col(dim_);
    const int max_pivots = 50 * static_cast<int>(total()) + 1000;

    for (;;) {
      const DenseLu lu = factor(st.basic);
      if (lu.singular()) throw std::runtime_error("seed LP: singular basis");
      st.x_basic = lu.solve(rhs_);
      std::vector<double> cost_b(dim_);
      for (std::size_t r = 0; r < dim_; ++r) cost_b[r] = cost(st.basic[r]);
      st.duals = lu.solve_transposed(cost_b);

      double dual_scale = 1.0;
      for (double d : st.duals) dual_scale = std::max(dual_scale, std::abs(d));
      const double reduced_tol = 1e-12 * dual_scale;

      // Bland: lowest-index improving column enters.
      std::size_t entering = total();
      for (std::size_t j = 0; j < total() && entering == total(); ++j) {
        if (in_basis[j] || !allowed(j)) continue;
        if (cost(j) - dot_column(j, st.duals) < -reduced_tol) entering = j;
      }
      if (entering == total()) return Status::optimal;
      if (++pivots > max_pivots) throw std::runtime_error("seed LP: pivot limit exceeded");

      column(entering, col);
      const std::vector<double> dir = lu.solve(col);
      std::size_t leave = dim_;
      double best = 0.0;
      for (std::size_t r = 0; r < dim_; ++r) {
        if (dir[r] <= 1e-11) continue;
        const double ratio = std::max(st.x_basic[r], 0.0) / dir[r];
        if (leave == dim_ || ratio < best || (ratio == best && st.basic[r] < st.basic[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == dim_) return Status::unbounded;
      in_basis[st.basic[leave]] = 0;
      in_basis[entering] = 1;
      st.basic[leave] = entering;
    }
  }

  // Pivots zero-level artificials out of the basis where a structural column can replace them.
  void expel_artificials(State& st) const {
    std::vector<char> in_basis(total(), 0);
    for (std::size_t j : st.basic) in_basis[j] = 1;
    std::vector<double> col(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      if (!is_artificial(st.basic[r])) continue;
      const DenseLu lu = factor(st.basic);
      for (std::size_t j = 0; j <= rows_; ++j) {
        if (in_basis[j]) continue;
        column(j, col);
        if (std::abs(lu.solve(col)[r]) > 1e-9) {
          in_basis[st.basic[r]] = 0;
          in_basis[j] = 1;
          st.basic[r] = j;
          break;
        }
      }
    }
  }

  double rhs_norm() const {
    double s = 0.0;
    for (double x : rhs_) s += std::abs(x);
    return s;
  }

 private:
  const SpectralBasis& v_;
  std::size_t rows_;
  std::size_t dim_;
  std::vector<double> seed_row_;
  std::vector<double> rhs_;
  std::vector<double> art_sign_;
};

}  // namespace

ScoreVector ScoreVector::from_values(std::vector<double> values) {
  ScoreVector s;
  s.values = std::move(values);
  s.order.resize(s.values.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Vertex a, Vertex b) { return s.values[a] > s.values[b]; });
  return s;
}

LpSolution solve_seed_lp(const SpectralBasis& basis, std::span<const Vertex> seeds, const LpTolerances& tol) {
  if (seeds.empty()) throw std::invalid_argument("solve_seed_lp: empty seed set");
  if (basis.cols == 0) throw std::invalid_argument("solve_seed_lp: empty basis");
  std::vector<Vertex> unique(seeds.begin(), seeds.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (Vertex s : unique)
    if (s < 0 || static_cast<std::size_t>(s) >= basis.rows) throw std::out_of_range("solve_seed_lp: seed out of range");

  DualSimplex lp(basis, unique);
  const std::size_t dim = basis.cols;
  DualSimplex::State st;
  for (std::size_t r = 0; r < dim; ++r) st.basic.push_back(lp.artificial(r));

  LpSolution sol;
  // Phase one: drive the artificials to zero.
  lp.run(
      st, [&](std::size_t j) { return lp.is_artificial(j) ? 1.0 : 0.0; }, [](std::size_t) { return true; },
      sol.pivots);
  double residual = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    if (lp.is_artificial(st.basic[r])) residual += std::max(st.x_basic[r], 0.0);
  if (residual > 1e-9 * std::max(1.0, lp.rhs_norm())) throw LpInfeasible();
  lp.expel_artificials(st);

  // Phase two: maximize mu. Unbounded dual means the primal is infeasible.
  const auto status = lp.run(
      st, [&](std::size_t j) { return j == lp.mu() ? -1.0 : 0.0; },
      [&](std::size_t j) { return !lp.is_artificial(j); }, sol.pivots);
  if (status == DualSimplex::Status::unbounded) throw LpInfeasible();

  sol.coefficients.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) sol.coefficients[k] = -st.duals[k];
  sol.y.assign(basis.rows, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto col = basis.column(k);
    for (std::size_t i = 0; i < basis.rows; ++i) sol.y[i] += col[i] * sol.coefficients[k];
  }
  sol.objective = std::accumulate(sol.y.begin(), sol.y.end(), 0.0);

  double seed_sum = 0.0;
  for (Vertex s : unique) seed_sum += sol.y[s];
  if (!std::isfinite(sol.objective) || seed_sum < 1.0 - std::max(tol.feasibility, 1e-6)) throw LpInfeasible();
  return sol;
}

ScoreVector solve_sparse_indicator(const SpectralBasis& basis, std::span<const Vertex> seeds,
                                   const LpTolerances& tol) {
  LpSolution sol = solve_seed_lp(basis, seeds, tol);
  for (double& x : sol.y) x = std::max(x, 0.0);
  return ScoreVector::from_values(std::move(sol.y));
}

std::vector<Vertex> truncate_top(const ScoreVector& scores, std::size_t size) {
  if (size < 1 || size > scores.size()) throw std::invalid_argument("truncate_top: size out of range");
  return {scores.order.begin(), scores.order.begin() + static_cast<std::ptrdiff_t>(size)};
}

}  // namespace lemon
