#include "geomqm/expectation.hpp"

#include "geomqm/hilbert.hpp"

namespace geomqm::expectation {

namespace {

void check_dims(const HermitianOperator& A, const PureState& psi) {
  if (A.dim() != psi.dim())
    throw DimensionMismatchError("operator/state dimension mismatch");
}

// Raw quadratic form <psi|M psi>/<psi|psi> for a not necessarily Hermitian M.
Complex rayleigh(const Matrix& M, const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return v.dot(M * v) / psi.squared_norm();
}

}  // namespace

double expectation(const HermitianOperator& A, const PureState& psi) {
  check_dims(A, psi);
  Complex val = rayleigh(A.matrix(), psi);
  if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val.real())))
    throw NumericalError("expectation value has a non-real residue");
  return val.real();
}

Covector differential(const HermitianOperator& A, const PureState& psi) {
  check_dims(A, psi);
  double e = expectation(A, psi);
  Vector w = 2.0 * (A.matrix() * psi.amplitudes() - e * psi.amplitudes()) /
             psi.squared_norm();
  return Covector(w.real(), w.imag());
}

double poisson_bracket(const HermitianOperator& A, const HermitianOperator& B,
                       const PureState& psi) {
  if (A.dim() != B.dim()) throw DimensionMismatchError();
  check_dims(A, psi);
  // e_{i(AB - BA)}; the commutator of Hermitians is anti-Hermitian, so the
  // value is real up to rounding.
  Matrix comm = A.matrix() * B.matrix() - B.matrix() * A.matrix();
  return (Complex(0, 1) * rayleigh(comm, psi)).real();
}

double covariance(const HermitianOperator& A, const HermitianOperator& B,
                  const PureState& psi) {
  if (A.dim() != B.dim()) throw DimensionMismatchError();
  check_dims(A, psi);
  Matrix sym = A.matrix() * B.matrix() + B.matrix() * A.matrix();
  return 0.5 * rayleigh(sym, psi).real() -
         expectation(A, psi) * expectation(B, psi);
}

double projected_tensor_eval(ProjectedKind kind, const HermitianOperator& A,
                             const HermitianOperator& B,
                             const PureState& psi) {
  switch (kind) {
    case ProjectedKind::G_P:
      return covariance(A, B, psi);
    case ProjectedKind::Omega_P:
      return poisson_bracket(A, B, psi);
  }
  throw DomainError("unknown projected tensor kind");
}

double projected_tensor_eval_coordinates(ProjectedKind kind,
                                         const Covector& alpha,
                                         const Covector& beta,
                                         const PureState& psi) {
  if (alpha.dim() != psi.dim() || beta.dim() != psi.dim())
    throw DimensionMismatchError();
  using hilbert::ContravariantKind;
  RealifiedState x = hilbert::realify(psi);
  hilbert::EulerFields euler = hilbert::euler_fields(x);
  double norm_sq = psi.squared_norm();
  double a_delta = hilbert::pair(alpha, euler.delta);
  double b_delta = hilbert::pair(beta, euler.delta);
  double a_gamma = hilbert::pair(alpha, euler.gamma);
  double b_gamma = hilbert::pair(beta, euler.gamma);
  switch (kind) {
    case ProjectedKind::G_P:
      return 0.25 *
             (norm_sq *
                  hilbert::contravariant_eval(ContravariantKind::G, alpha, beta) -
              a_gamma * b_gamma - a_delta * b_delta);
    case ProjectedKind::Omega_P:
      return -0.5 *
             (norm_sq * hilbert::contravariant_eval(ContravariantKind::Omega,
                                                    alpha, beta) -
              a_delta * b_gamma - a_gamma * b_delta);
  }
  throw DomainError("unknown projected tensor kind");
}

}  // namespace geomqm::expectation
