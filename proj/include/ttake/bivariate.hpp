#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ttake/group.hpp"
#include "ttake/random.hpp"

namespace ttake {

using Matrix = std::vector<std::vector<Scalar>>;

/// Secret polynomial f(u, t) = sum_{i<2k, j<=m} a[i][j] u^i t^j over Z_q.
/// Coefficients are stored row-major: index i * (m + 1) + j.
class BivarPoly {
 public:
  /// Throws ParameterError unless coeffs.size() == 2k(m+1) and k >= 1.
  BivarPoly(unsigned k, unsigned m, std::vector<Scalar> coeffs, GroupParams params);

  unsigned k() const { return k_; }
  unsigned m() const { return m_; }
  std::size_t rows() const { return 2 * std::size_t{k_}; }
  std::size_t cols() const { return std::size_t{m_} + 1; }
  const Scalar& at(std::size_t i, std::size_t j) const { return coeffs_[i * cols() + j]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const GroupParams& params() const { return params_; }

  bool operator==(const BivarPoly& o) const {
    return k_ == o.k_ && m_ == o.m_ && coeffs_ == o.coeffs_ && params_ == o.params_;
  }

 private:
  unsigned k_;
  unsigned m_;
  std::vector<Scalar> coeffs_;
  GroupParams params_;
};

/// f restricted to a fixed period: coefficients b_0..b_{2k-1} in u.
struct UnivarPoly {
  std::vector<Scalar> coeffs;

  Scalar eval(const Scalar& x, const Zq& zq) const;
};

BivarPoly random_poly(unsigned k, unsigned m, const GroupParams& params, RandomSource& rng);

Scalar eval(const BivarPoly& poly, const Scalar& u, const Scalar& t);

/// (1, x, x^2, ..., x^(count-1)) by iterated multiplication.
std::vector<Scalar> power_ladder(const Scalar& x, std::size_t count, const Zq& zq);

/// Row (u^i t^j) in row-major (i, j) order, length 2k(m+1).
std::vector<Scalar> monomial_row(unsigned k, unsigned m, const Scalar& u, const Scalar& t,
                                 const Zq& zq);

UnivarPoly fix_time(const BivarPoly& poly, const Scalar& t);

/// z*_j = sum_i a[i][j] u^i for j = 0..m.
std::vector<Scalar> z_star(const BivarPoly& poly, const Scalar& u);

struct LinearSystem {
  Matrix matrix;
  std::vector<Scalar> rhs;
};

struct LinearSolution {
  enum class Status { kUnique, kUnderdetermined, kInconsistent };

  Status status;
  std::size_t rank;
  /// Populated only for kUnique.
  std::vector<Scalar> solution;

  bool consistent() const { return status != Status::kInconsistent; }
};

/// Gaussian elimination over Z_q. Never throws on rank deficiency or
/// inconsistency; both are reported through the status. Throws
/// ParameterError on ragged input.
LinearSolution solve_linear(const LinearSystem& system, const Zq& zq);

/// Inverse of the matrix with rows (x, x^2, ..., x^n) for the n given points.
/// Throws SingularityError on zero or repeated points.
Matrix vandermonde_inverse(std::span<const Scalar> points, const Zq& zq);

Matrix multiply(const Matrix& a, const Matrix& b, const Zq& zq);

struct EvaluationPoint {
  Scalar u;
  Scalar t;
};

struct Constraint {
  Scalar u;
  Scalar t;
  Scalar value;
};

/// Coefficients a[i][j] = constant[i][j] + slope[i][j] * X, where X is the
/// unknown discrete log of `anchor` to `base`. Public-key style elements are
/// base^constant * anchor^slope, computable without X.
struct ExponentAffinePoly {
  unsigned k;
  unsigned m;
  std::vector<Scalar> constant;
  std::vector<Scalar> slope;
  GroupElement base;
  GroupElement anchor;

  std::vector<GroupElement> elements(const GroupParams& params) const;
  /// Coefficients once X is known.
  BivarPoly substitute(const Scalar& x, const GroupParams& params) const;
};

/// Solves for f through every constraint with a[0][0] pinned to
/// log_base(anchor), without computing that log. Coefficients outside the
/// span of the constraints are drawn uniformly from rng. Throws
/// InconsistentSystemError when the constraints contradict each other or
/// would fix X, and ParameterError if there are 2k(m+1) or more.
ExponentAffinePoly exponent_interpolate(std::span<const Constraint> constraints,
                                        const GroupElement& base, const GroupElement& anchor,
                                        unsigned k, unsigned m, const GroupParams& params,
                                        RandomSource& rng);

/// Rank of the monomial rows evaluated at the given points.
std::size_t rank_of_rows(std::span<const EvaluationPoint> points, unsigned k, unsigned m,
                         const Zq& zq);

}  // namespace ttake
