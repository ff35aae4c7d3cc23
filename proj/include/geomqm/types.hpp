#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace geomqm {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Every failure carries a short machine-readable code next to the message;
// the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct DegenerateStateError : Error {
  explicit DegenerateStateError(const std::string& msg = "state vector is zero")
      : Error("degenerate_state", msg) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& msg = "dimension mismatch")
      : Error("dimension_mismatch", msg) {}
};

struct NonHermitianError : Error {
  explicit NonHermitianError(const std::string& msg = "matrix is not Hermitian")
      : Error("non_hermitian", msg) {}
};

struct FocalPointError : Error {
  explicit FocalPointError(const std::string& msg = "excluded focal point")
      : Error("focal_point", msg) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& msg)
      : Error("numerical_failure", msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("domain_error", msg) {}
};

// A ray representative: nonzero complex amplitude vector. Not normalized on
// construction; every physical quantity downstream is invariant under
// psi -> lambda psi.
class PureState {
public:
  explicit PureState(Vector amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() < 1) throw DegenerateStateError("empty state vector");
    if (amp_.norm() == 0.0) throw DegenerateStateError();
  }

  Eigen::Index dim() const { return amp_.size(); }
  const Vector& amplitudes() const { return amp_; }
  Complex operator[](Eigen::Index k) const { return amp_(k); }
  double norm() const { return amp_.norm(); }
  double squared_norm() const { return amp_.squaredNorm(); }
  PureState normalized() const { return PureState(amp_ / amp_.norm()); }

private:
  Vector amp_;
};

// Split real coordinates (q^1..q^n, p_1..p_n) of a point of M_Q.
// Layout is always the split one, never interleaved.
struct RealifiedState {
  RealVector q;
  RealVector p;

  RealifiedState(RealVector q_, RealVector p_)
      : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size())
      throw DimensionMismatchError("q and p blocks differ in length");
    if (q.norm() == 0.0 && p.norm() == 0.0) throw DegenerateStateError();
  }

  Eigen::Index dim() const { return q.size(); }
};

// One-form in the split layout: components along dq^k and dp_k.
struct Covector {
  RealVector dq;
  RealVector dp;

  Covector(RealVector dq_, RealVector dp_)
      : dq(std::move(dq_)), dp(std::move(dp_)) {
    if (dq.size() != dp.size())
      throw DimensionMismatchError("dq and dp blocks differ in length");
    if (!dq.allFinite() || !dp.allFinite())
      throw DomainError("covector has non-finite entries");
  }

  Eigen::Index dim() const { return dq.size(); }
  double norm() const { return std::sqrt(dq.squaredNorm() + dp.squaredNorm()); }
};

inline double hermiticity_defect(const Matrix& m) {
  double scale = m.cwiseAbs().maxCoeff();
  double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  return scale == 0.0 ? defect : defect / scale;
}

// Hermitian observable. Inputs that miss Hermiticity by more than 1e-12
// (relative max-norm) are rejected; anything inside the tolerance is
// symmetrized to (M + M^dagger)/2 and flagged.
class HermitianOperator {
public:
  static constexpr double kTolerance = 1e-12;

  explicit HermitianOperator(const Matrix& entries, double tolerance = kTolerance) {
    if (entries.rows() != entries.cols())
      throw DimensionMismatchError("operator matrix is not square");
    double defect = hermiticity_defect(entries);
    if (defect > tolerance)
      throw NonHermitianError("matrix exceeds Hermiticity tolerance (defect " +
                              std::to_string(defect) + ")");
    symmetrized_ = defect > 0.0;
    mat_ = 0.5 * (entries + entries.adjoint().eval());
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  bool was_symmetrized() const { return symmetrized_; }

private:
  Matrix mat_;
  bool symmetrized_ = false;
};

// n x n Hermitian, unit trace, positive semidefinite. Rank-one instances
// are the points of the projective space.
class DensityMatrix {
public:
  explicit DensityMatrix(const Matrix& entries) : mat_(entries) {
    if (entries.rows() != entries.cols())
      throw DimensionMismatchError("density matrix is not square");
    if (hermiticity_defect(entries) > 1e-12)
      throw NonHermitianError("density matrix is not Hermitian");
    mat_ = 0.5 * (entries + entries.adjoint().eval());
    if (std::abs(mat_.trace().real() - 1.0) > 1e-12 ||
        std::abs(mat_.trace().imag()) > 1e-12)
      throw DomainError("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
      throw DomainError("density matrix has a negative eigenvalue");
  }

  static DensityMatrix projector(const PureState& psi) {
    const Vector& v = psi.amplitudes();
    return DensityMatrix(v * v.adjoint() / v.squaredNorm());
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

  bool is_pure(double tol = 1e-10) const {
    return ((mat_ * mat_ - mat_).cwiseAbs().maxCoeff()) <= tol;
  }

private:
  Matrix mat_;
};

// Real Pauli decomposition A = a0*sigma0 + a1*sigma1 + a2*sigma2 + a3*sigma3.
struct PauliCoefficients {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

  double vector_norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
};

// Coordinates y_j = Tr(sigma_j rho)/2 of a 2x2 density matrix. y0 is pinned
// at 1/2 by the unit trace; the vector part fills the radius-1/2 ball.
struct BlochState {
  double y0 = 0.5;
  double y1 = 0.0, y2 = 0.0, y3 = 0.0;

  BlochState(double y1_, double y2_, double y3_) : y1(y1_), y2(y2_), y3(y3_) {
    if (radius_sq() > 0.25 + 1e-12)
      throw DomainError("Bloch vector lies outside the state ball");
  }

  double radius_sq() const { return y1 * y1 + y2 * y2 + y3 * y3; }
  bool is_pure(double tol = 1e-10) const {
    return std::abs(radius_sq() - 0.25) <= tol;
  }
};

}  // namespace geomqm
