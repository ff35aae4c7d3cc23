#include "geomqm/dynamics.hpp"

#include "geomqm/expectation.hpp"

#include <cmath>

namespace geomqm::dynamics {

PureState evolve_state(const HermitianOperator& H, const PureState& psi0,
                       double t) {
  if (H.dim() != psi0.dim()) throw DimensionMismatchError();
  Eigen::SelfAdjointEigenSolver<Matrix> es(H.matrix());
  if (es.info() != Eigen::Success)
    throw NumericalError("eigendecomposition of the Hamiltonian failed");
  Vector coeffs = es.eigenvectors().adjoint() * psi0.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::exp(Complex(0.0, -es.eigenvalues()(k) * t));
  return PureState(es.eigenvectors() * coeffs);
}

PureState evolve_state_cayley(const HermitianOperator& H,
                              const PureState& psi0, double t, int steps) {
  if (H.dim() != psi0.dim()) throw DimensionMismatchError();
  if (steps < 1) throw DomainError("step count must be positive");
  double dt = t / steps;
  Matrix id = Matrix::Identity(H.dim(), H.dim());
  Matrix half = Complex(0.0, 0.5 * dt) * H.matrix();
  // (I + i dt H/2)^{-1} (I - i dt H/2) is exactly unitary for Hermitian H.
  Matrix step = (id + half).partialPivLu().solve(id - half);
  Vector psi = psi0.amplitudes();
  for (int k = 0; k < steps; ++k) psi = step * psi;
  return PureState(std::move(psi));
}

Trajectory expectation_trajectory(
    const HermitianOperator& H,
    const std::vector<HermitianOperator>& observables, const PureState& psi0,
    const std::vector<double>& times) {
  for (std::size_t k = 1; k < times.size(); ++k)
    if (times[k] <= times[k - 1])
      throw DomainError("times must be strictly increasing");
  Trajectory traj;
  traj.times = times;
  traj.values.reserve(times.size());
  for (double t : times) {
    PureState psi = evolve_state(H, psi0, t);
    std::vector<double> row;
    row.reserve(observables.size());
    for (const auto& A : observables)
      row.push_back(expectation::expectation(A, psi));
    traj.values.push_back(std::move(row));
  }
  return traj;
}

double ehrenfest_residual(const HermitianOperator& H,
                          const HermitianOperator& A, const PureState& psi,
                          double dt) {
  if (dt <= 0.0) throw DomainError("dt must be positive");
  double forward = expectation::expectation(A, evolve_state(H, psi, dt));
  double backward = expectation::expectation(A, evolve_state(H, psi, -dt));
  double derivative = (forward - backward) / (2.0 * dt);
  return std::abs(derivative - expectation::poisson_bracket(H, A, psi));
}

BlochState bloch_evolve(const PauliCoefficients& h, const BlochState& y0,
                        double t) {
  Eigen::Vector3d axis(h.a1, h.a2, h.a3);
  double rate = axis.norm();
  Eigen::Vector3d y(y0.y1, y0.y2, y0.y3);
  if (rate == 0.0) return y0;
  // ydot = 2 h x y: rotation about h-hat by angle 2|h|t (Rodrigues).
  Eigen::Vector3d n = axis / rate;
  double angle = 2.0 * rate * t;
  Eigen::Vector3d rotated = y * std::cos(angle) + n.cross(y) * std::sin(angle) +
                            n * (n.dot(y)) * (1.0 - std::cos(angle));
  return BlochState(rotated(0), rotated(1), rotated(2));
}

}  // namespace geomqm::dynamics
