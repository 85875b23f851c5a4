#include "ttake/bivariate.hpp"

#include <algorithm>
#include <string>

#include "ttake/errors.hpp"

namespace ttake {

namespace {

// Reduces rows in place to reduced row echelon form, pivoting only in the
// first `width` columns; trailing columns ride along as right-hand sides.
// Returns the pivot column of each leading row.
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t width, const Zq& zq) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    auto found = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(lead), rows.end(),
                              [col](const auto& r) { return !r[col].is_zero(); });
    if (found == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(lead), found);
    auto& pivot_row = rows[lead];
    const Scalar scale = zq.inv(pivot_row[col]);
    for (auto& x : pivot_row) x = zq.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < pivot_row.size(); ++c) {
        rows[r][c] = zq.sub(rows[r][c], zq.mul(factor, pivot_row[c]));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

bool row_is_zero(const std::vector<Scalar>& row, std::size_t from, std::size_t to) {
  return std::all_of(row.begin() + static_cast<std::ptrdiff_t>(from),
                     row.begin() + static_cast<std::ptrdiff_t>(to),
                     [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace

BivarPoly::BivarPoly(unsigned k, unsigned m, std::vector<Scalar> coeffs, GroupParams params)
    : k_(k), m_(m), coeffs_(std::move(coeffs)), params_(std::move(params)) {
  if (k_ == 0) throw ParameterError("coalition bound k must be at least 1");
  if (coeffs_.size() != rows() * cols()) {
    throw ParameterError("expected " + std::to_string(rows() * cols()) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
  for (const auto& c : coeffs_) {
    if (c.value() >= params_.q) throw ParameterError("coefficient not reduced modulo q");
  }
}

Scalar UnivarPoly::eval(const Scalar& x, const Zq& zq) const {
  Scalar acc = zq.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = zq.add(zq.mul(acc, x), *it);
  return acc;
}

BivarPoly random_poly(unsigned k, unsigned m, const GroupParams& params, RandomSource& rng) {
  Zq zq(params);
  std::vector<Scalar> coeffs(2 * std::size_t{k} * (std::size_t{m} + 1));
  for (auto& c : coeffs) c = zq.random(rng);
  return BivarPoly(k, m, std::move(coeffs), params);
}

std::vector<Scalar> power_ladder(const Scalar& x, std::size_t count, const Zq& zq) {
  std::vector<Scalar> powers;
  powers.reserve(count);
  if (count == 0) return powers;
  powers.push_back(zq.one());
  if (count > 1) powers.push_back(x);
  for (std::size_t i = 2; i < count; ++i) powers.push_back(zq.mul(powers.back(), x));
  return powers;
}

std::vector<Scalar> monomial_row(unsigned k, unsigned m, const Scalar& u, const Scalar& t,
                                 const Zq& zq) {
  const auto u_pow = power_ladder(u, 2 * std::size_t{k}, zq);
  const auto t_pow = power_ladder(t, std::size_t{m} + 1, zq);
  std::vector<Scalar> row;
  row.reserve(u_pow.size() * t_pow.size());
  for (const auto& ui : u_pow)
    for (const auto& tj : t_pow) row.push_back(zq.mul(ui, tj));
  return row;
}

Scalar eval(const BivarPoly& poly, const Scalar& u, const Scalar& t) {
  Zq zq(poly.params());
  const auto row = monomial_row(poly.k(), poly.m(), u, t, zq);
  Scalar acc = zq.zero();
  for (std::size_t n = 0; n < row.size(); ++n) {
    acc = zq.add(acc, zq.mul(row[n], poly.coefficients()[n]));
  }
  return acc;
}

UnivarPoly fix_time(const BivarPoly& poly, const Scalar& t) {
  Zq zq(poly.params());
  const auto t_pow = power_ladder(t, poly.cols(), zq);
  UnivarPoly out;
  out.coeffs.reserve(poly.rows());
  for (std::size_t i = 0; i < poly.rows(); ++i) {
    Scalar b = zq.zero();
    for (std::size_t j = 0; j < poly.cols(); ++j) b = zq.add(b, zq.mul(poly.at(i, j), t_pow[j]));
    out.coeffs.push_back(b);
  }
  return out;
}

std::vector<Scalar> z_star(const BivarPoly& poly, const Scalar& u) {
  Zq zq(poly.params());
  const auto u_pow = power_ladder(u, poly.rows(), zq);
  std::vector<Scalar> out;
  out.reserve(poly.cols());
  for (std::size_t j = 0; j < poly.cols(); ++j) {
    Scalar z = zq.zero();
    for (std::size_t i = 0; i < poly.rows(); ++i) z = zq.add(z, zq.mul(poly.at(i, j), u_pow[i]));
    out.push_back(z);
  }
  return out;
}

LinearSolution solve_linear(const LinearSystem& system, const Zq& zq) {
  if (system.rhs.size() != system.matrix.size()) {
    throw ParameterError("right-hand side length differs from row count");
  }
  const std::size_t width = system.matrix.empty() ? 0 : system.matrix.front().size();
  Matrix rows;
  rows.reserve(system.matrix.size());
  for (std::size_t r = 0; r < system.matrix.size(); ++r) {
    if (system.matrix[r].size() != width) throw ParameterError("ragged linear system");
    rows.push_back(system.matrix[r]);
    rows.back().push_back(system.rhs[r]);
  }
  const auto pivots = row_reduce(rows, width, zq);
  const std::size_t rank = pivots.size();
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][width].is_zero()) return {LinearSolution::Status::kInconsistent, rank, {}};
  }
  if (rank < width) return {LinearSolution::Status::kUnderdetermined, rank, {}};
  std::vector<Scalar> solution(width);
  for (std::size_t r = 0; r < rank; ++r) solution[pivots[r]] = rows[r][width];
  return {LinearSolution::Status::kUnique, rank, std::move(solution)};
}

Matrix vandermonde_inverse(std::span<const Scalar> points, const Zq& zq) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].is_zero()) throw SingularityError("Vandermonde point is zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw SingularityError("repeated Vandermonde point " + points[i].to_string());
      }
    }
  }
  Matrix rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = power_ladder(points[i], n + 1, zq);
    row.erase(row.begin());
    row.resize(2 * n, zq.zero());
    row[n + i] = zq.one();
    rows.push_back(std::move(row));
  }
  if (row_reduce(rows, n, zq).size() != n) throw SingularityError("Vandermonde matrix is singular");
  Matrix inverse;
  inverse.reserve(n);
  for (auto& row : rows) inverse.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  return inverse;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Zq& zq) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  Matrix out(a.size(), std::vector<Scalar>(cols, zq.zero()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw ParameterError("matrix dimensions do not agree");
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < inner; ++l) out[i][j] = zq.add(out[i][j], zq.mul(a[i][l], b[l][j]));
  }
  return out;
}

std::vector<GroupElement> ExponentAffinePoly::elements(const GroupParams& params) const {
  std::vector<GroupElement> out;
  out.reserve(constant.size());
  for (std::size_t n = 0; n < constant.size(); ++n) {
    out.push_back(mul(exp(base, constant[n], params), exp(anchor, slope[n], params), params));
  }
  return out;
}

BivarPoly ExponentAffinePoly::substitute(const Scalar& x, const GroupParams& params) const {
  Zq zq(params);
  std::vector<Scalar> coeffs;
  coeffs.reserve(constant.size());
  for (std::size_t n = 0; n < constant.size(); ++n) {
    coeffs.push_back(zq.add(constant[n], zq.mul(slope[n], x)));
  }
  return BivarPoly(k, m, std::move(coeffs), params);
}

ExponentAffinePoly exponent_interpolate(std::span<const Constraint> constraints,
                                        const GroupElement& base, const GroupElement& anchor,
                                        unsigned k, unsigned m, const GroupParams& params,
                                        RandomSource& rng) {
  if (k == 0) throw ParameterError("coalition bound k must be at least 1");
  Zq zq(params);
  const std::size_t width = 2 * std::size_t{k} * (std::size_t{m} + 1);
  if (constraints.size() >= width) {
    throw ParameterError("at most " + std::to_string(width - 1) + " interpolation constraints");
  }
  // Augmented columns: [monomials | constant part | coefficient of X].
  Matrix rows;
  rows.reserve(constraints.size() + 1);
  std::vector<Scalar> pin(width + 2, zq.zero());
  pin[0] = zq.one();
  pin[width + 1] = zq.one();
  rows.push_back(std::move(pin));
  for (const auto& c : constraints) {
    auto row = monomial_row(k, m, c.u, c.t, zq);
    row.push_back(c.value);
    row.push_back(zq.zero());
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, width, zq);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (!row_is_zero(rows[r], width, width + 2)) {
      throw InconsistentSystemError("interpolation constraints are inconsistent");
    }
  }

  ExponentAffinePoly out{k, m, std::vector<Scalar>(width, zq.zero()),
                         std::vector<Scalar>(width, zq.zero()), base, anchor};
  std::vector<bool> is_pivot(width, false);
  for (auto col : pivots) is_pivot[col] = true;
  for (std::size_t col = 0; col < width; ++col) {
    if (!is_pivot[col]) out.constant[col] = zq.random(rng);
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto& row = rows[r];
    Scalar value = row[width];
    for (std::size_t col = 0; col < width; ++col) {
      if (!is_pivot[col] && !row[col].is_zero()) {
        value = zq.sub(value, zq.mul(row[col], out.constant[col]));
      }
    }
    out.constant[pivots[r]] = value;
    out.slope[pivots[r]] = row[width + 1];
  }
  return out;
}

std::size_t rank_of_rows(std::span<const EvaluationPoint> points, unsigned k, unsigned m,
                         const Zq& zq) {
  if (points.empty()) return 0;
  Matrix rows;
  rows.reserve(points.size());
  for (const auto& pt : points) rows.push_back(monomial_row(k, m, pt.u, pt.t, zq));
  return row_reduce(rows, rows.front().size(), zq).size();
}

}  // namespace ttake
