#pragma once

// Superposition of pure states through a fiducial projector (Pancharatnam
// connection), lifts and transition probabilities, and the induced linear
// structure on the sphere: geodesic log/exp and the star composition.

#include "geomqm/types.hpp"

namespace geomqm::interference {

class FiducialProjector {
public:
  explicit FiducialProjector(const DensityMatrix& rho) : rho_(rho) {
    if (!rho.is_pure())
      throw DomainError("fiducial projector must be rank one");
  }
  static FiducialProjector from_state(const PureState& psi) {
    return FiducialProjector(DensityMatrix::projector(psi));
  }

  const Matrix& matrix() const { return rho_.matrix(); }
  Eigen::Index dim() const { return rho_.dim(); }
  // A unit vector spanning the projector.
  Vector fiducial_vector() const;

private:
  DensityMatrix rho_;
};

// Combines two pure states with weights (p1, 1-p1) and the Pancharatnam
// interference term; output is again pure. Throws FocalPointError when the
// chain overlap Tr(rho1 P0 rho2 P0) vanishes (unless p1 is 0 or 1).
DensityMatrix superpose(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const FiducialProjector& P0, double p1);

// rho |psi0> / sqrt(<psi0|psi0>); the projector of the normalized lift
// reproduces rho.
PureState lift(const DensityMatrix& rho, const FiducialProjector& P0);

// |<psi1|psi2>|^2 from the normalized lifts; equals Tr(rho1 rho2).
double transition_probability(const DensityMatrix& rho1,
                              const DensityMatrix& rho2,
                              const FiducialProjector& P0);

class SpherePoint {
public:
  explicit SpherePoint(const Eigen::Vector3d& v) : v_(v) {
    if (std::abs(v_.norm() - 1.0) > 1e-12)
      throw DomainError("sphere point must be a unit 3-vector");
  }
  const Eigen::Vector3d& coords() const { return v_; }

private:
  Eigen::Vector3d v_;
};

struct TangentVector {
  SpherePoint base;
  Eigen::Vector3d components;

  TangentVector(const SpherePoint& base_, const Eigen::Vector3d& components_)
      : base(base_), components(components_) {
    if (std::abs(base.coords().dot(components)) > 1e-12)
      throw DomainError("tangent vector is not orthogonal to its base point");
  }
};

// Bloch chart bridge: unit sphere point <-> pure Bloch state (radius 1/2).
SpherePoint bloch_to_sphere(const BlochState& y);
BlochState sphere_to_bloch(const SpherePoint& s);
SpherePoint density_to_sphere(const DensityMatrix& rho);  // 2x2 pure only
DensityMatrix sphere_to_density(const SpherePoint& s);

// Geodesic inverse of exp_map; throws FocalPointError at the antipode.
TangentVector log_map(const SpherePoint& s0, const SpherePoint& s);

// Time-1 geodesic flow: cos(|v|) s0 + sin(|v|) v-hat.
SpherePoint exp_map(const SpherePoint& s0, const TangentVector& v);

// exp_{s0}(log_{s0}(s1) + log_{s0}(s2)); commutative, s star s0 = s.
SpherePoint star_compose(const SpherePoint& s0, const SpherePoint& s1,
                         const SpherePoint& s2);

// G_P(v1,v2) + i Omega_P(v1,v2) on T_{s0}S^2: round metric plus the volume
// form s0.(v1 x v2). Hermitian under argument swap.
Complex induced_inner_product(const SpherePoint& s0, const TangentVector& v1,
                              const TangentVector& v2);

}  // namespace geomqm::interference
