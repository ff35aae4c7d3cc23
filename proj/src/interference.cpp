#include "geomqm/interference.hpp"

#include "geomqm/bloch.hpp"

#include <cmath>

namespace geomqm::interference {

Vector FiducialProjector::fiducial_vector() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_.matrix());
  Eigen::Index top;
  es.eigenvalues().maxCoeff(&top);
  return es.eigenvectors().col(top);
}

DensityMatrix superpose(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const FiducialProjector& P0, double p1) {
  if (rho1.dim() != rho2.dim() || rho1.dim() != P0.dim())
    throw DimensionMismatchError();
  if (p1 < 0.0 || p1 > 1.0) throw DomainError("p1 must lie in [0, 1]");
  if (!rho1.is_pure() || !rho2.is_pure())
    throw DomainError("superpose needs rank-one pure inputs");
  if (p1 == 1.0) return rho1;
  if (p1 == 0.0) return rho2;

  const Matrix& r1 = rho1.matrix();
  const Matrix& r2 = rho2.matrix();
  const Matrix& f = P0.matrix();
  Matrix chain = r1 * f * r2;
  Complex overlap = (chain * f).trace();
  // Tr(rho1 P0 rho2 P0) is a squared Pancharatnam chain, real nonnegative.
  if (std::abs(overlap.imag()) > 1e-10 || overlap.real() < -1e-10)
    throw NumericalError("Pancharatnam chain overlap is not real nonnegative");
  if (overlap.real() <= 1e-12)
    throw FocalPointError("vanishing Pancharatnam overlap Tr(rho1 P0 rho2 P0)");

  double p2 = 1.0 - p1;
  Matrix rho = p1 * r1 + p2 * r2 +
               std::sqrt(p1 * p2 / overlap.real()) *
                   (chain + chain.adjoint().eval());
  // The scalar weight W of the non-orthogonal case is the trace of the
  // unnormalized combination; dividing by it restores purity and unit trace.
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

PureState lift(const DensityMatrix& rho, const FiducialProjector& P0) {
  if (rho.dim() != P0.dim()) throw DimensionMismatchError();
  if (!rho.is_pure()) throw DomainError("lift needs a rank-one pure state");
  Vector psi0 = P0.fiducial_vector();
  Vector lifted = rho.matrix() * psi0;
  if (lifted.norm() <= 1e-12)
    throw FocalPointError("state is orthogonal to the fiducial projector");
  return PureState(std::move(lifted));
}

double transition_probability(const DensityMatrix& rho1,
                              const DensityMatrix& rho2,
                              const FiducialProjector& P0) {
  Vector psi1 = lift(rho1, P0).normalized().amplitudes();
  Vector psi2 = lift(rho2, P0).normalized().amplitudes();
  return std::norm(psi1.dot(psi2));
}

SpherePoint bloch_to_sphere(const BlochState& y) {
  if (!y.is_pure())
    throw DomainError("only pure Bloch states map to the unit sphere");
  return SpherePoint(2.0 * Eigen::Vector3d(y.y1, y.y2, y.y3));
}

BlochState sphere_to_bloch(const SpherePoint& s) {
  const Eigen::Vector3d& v = s.coords();
  return BlochState(0.5 * v(0), 0.5 * v(1), 0.5 * v(2));
}

SpherePoint density_to_sphere(const DensityMatrix& rho) {
  if (!rho.is_pure())
    throw DomainError("only pure states map to the unit sphere");
  return bloch_to_sphere(bloch::density_to_bloch(rho));
}

DensityMatrix sphere_to_density(const SpherePoint& s) {
  return bloch::bloch_to_density(sphere_to_bloch(s));
}

TangentVector log_map(const SpherePoint& s0, const SpherePoint& s) {
  double c = std::clamp(s0.coords().dot(s.coords()), -1.0, 1.0);
  Eigen::Vector3d perp = s.coords() - c * s0.coords();
  double pnorm = perp.norm();
  if (c < 0.0 && pnorm <= 1e-12)
    throw FocalPointError("log map undefined at the antipode");
  if (pnorm <= 1e-15) return TangentVector(s0, Eigen::Vector3d::Zero());
  double angle = std::atan2(pnorm, c);
  return TangentVector(s0, (angle / pnorm) * perp);
}

SpherePoint exp_map(const SpherePoint& s0, const TangentVector& v) {
  if ((v.base.coords() - s0.coords()).norm() > 1e-12)
    throw DomainError("tangent vector is based at a different point");
  double angle = v.components.norm();
  if (angle == 0.0) return s0;
  Eigen::Vector3d out = std::cos(angle) * s0.coords() +
                        std::sin(angle) * (v.components / angle);
  return SpherePoint(out.normalized());
}

SpherePoint star_compose(const SpherePoint& s0, const SpherePoint& s1,
                         const SpherePoint& s2) {
  TangentVector v1 = log_map(s0, s1);
  TangentVector v2 = log_map(s0, s2);
  return exp_map(s0, TangentVector(s0, v1.components + v2.components));
}

Complex induced_inner_product(const SpherePoint& s0, const TangentVector& v1,
                              const TangentVector& v2) {
  if ((v1.base.coords() - s0.coords()).norm() > 1e-12 ||
      (v2.base.coords() - s0.coords()).norm() > 1e-12)
    throw DomainError("tangent vectors are based at different points");
  double metric = v1.components.dot(v2.components);
  double volume = s0.coords().dot(v1.components.cross(v2.components));
  return Complex(metric, volume);
}

}  // namespace geomqm::interference
