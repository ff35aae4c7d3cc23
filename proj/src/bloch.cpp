#include "geomqm/bloch.hpp"

#include <array>

namespace geomqm::bloch {

namespace {

std::array<Matrix, 4> make_paulis() {
  std::array<Matrix, 4> s;
  const Complex i(0.0, 1.0);
  s[0] = Matrix::Identity(2, 2);
  s[1] = Matrix{{0, 1}, {1, 0}};
  s[2] = Matrix{{0, -i}, {i, 0}};
  s[3] = Matrix{{1, 0}, {0, -1}};
  return s;
}

// Fixed once against the Eq.-(24)/(25) closed forms; asserted in the tests.
constexpr double kGNormalization = 0.25;
constexpr double kLambdaNormalization = -0.5;

}  // namespace

const Matrix& pauli(int j) {
  static const std::array<Matrix, 4> s = make_paulis();
  if (j < 0 || j > 3) throw DomainError("Pauli index out of range");
  return s[static_cast<std::size_t>(j)];
}

Matrix assemble(const PauliCoefficients& a) {
  return a.a0 * pauli(0) + a.a1 * pauli(1) + a.a2 * pauli(2) + a.a3 * pauli(3);
}

PauliCoefficients decompose(const HermitianOperator& A) {
  if (A.dim() != 2)
    throw DimensionMismatchError("Pauli decomposition needs a 2x2 operator");
  PauliCoefficients a;
  a.a0 = 0.5 * (pauli(0) * A.matrix()).trace().real();
  a.a1 = 0.5 * (pauli(1) * A.matrix()).trace().real();
  a.a2 = 0.5 * (pauli(2) * A.matrix()).trace().real();
  a.a3 = 0.5 * (pauli(3) * A.matrix()).trace().real();
  return a;
}

BlochState state_to_bloch(const PureState& psi) {
  if (psi.dim() != 2)
    throw DimensionMismatchError("Bloch coordinates need a qubit state");
  return density_to_bloch(DensityMatrix::projector(psi));
}

BlochState density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw DimensionMismatchError("Bloch coordinates need a 2x2 density matrix");
  auto y = [&](int j) { return 0.5 * (pauli(j) * rho.matrix()).trace().real(); };
  return BlochState(y(1), y(2), y(3));
}

DensityMatrix bloch_to_density(const BlochState& y) {
  return DensityMatrix(y.y0 * pauli(0) + y.y1 * pauli(1) + y.y2 * pauli(2) +
                       y.y3 * pauli(3));
}

double pauli_expectation(const PauliCoefficients& a, const BlochState& y) {
  return a.a0 + 2.0 * (a.a1 * y.y1 + a.a2 * y.y2 + a.a3 * y.y3);
}

double commutator_function(const PauliCoefficients& a,
                           const PauliCoefficients& b, const BlochState& y) {
  return 4.0 * (a.a3 * b.a2 - a.a2 * b.a3) * y.y1 +
         4.0 * (a.a1 * b.a3 - a.a3 * b.a1) * y.y2 +
         4.0 * (a.a2 * b.a1 - a.a1 * b.a2) * y.y3;
}

double anticommutator_function(const PauliCoefficients& a,
                               const PauliCoefficients& b,
                               const BlochState& y) {
  return 4.0 * (a.a0 * b.a0 + a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3) * y.y0 +
         4.0 * (a.a1 * b.a0 + a.a0 * b.a1) * y.y1 +
         4.0 * (a.a2 * b.a0 + a.a0 * b.a2) * y.y2 +
         4.0 * (a.a3 * b.a0 + a.a0 * b.a3) * y.y3;
}

double bloch_tensor_eval(BlochTensorKind kind, const PauliCoefficients& a,
                         const PauliCoefficients& b, const BlochState& y) {
  // Coordinate differentials of e_A = 2 sum_j a_j y_j with y0 genuine.
  const std::array<double, 4> da = {2 * a.a0, 2 * a.a1, 2 * a.a2, 2 * a.a3};
  const std::array<double, 4> db = {2 * b.a0, 2 * b.a1, 2 * b.a2, 2 * b.a3};
  const std::array<double, 4> yy = {y.y0, y.y1, y.y2, y.y3};
  switch (kind) {
    case BlochTensorKind::G_rho: {
      double sum = 0.0;
      for (int j = 0; j < 4; ++j) sum += yy[0] * da[j] * db[j];
      for (int j = 1; j < 4; ++j) sum += yy[j] * (da[j] * db[0] + da[0] * db[j]);
      return kGNormalization * 4.0 * sum;
    }
    case BlochTensorKind::Lambda_rho: {
      // epsilon^{jkl} y_j d_k ^ d_l with d_k ^ d_l = d_k(x)d_l - d_l(x)d_k.
      double sum = 0.0;
      const int eps[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          int e = eps[k - 1][l - 1];
          if (e == 0) continue;
          int j = std::abs(e);
          double sign = e > 0 ? 1.0 : -1.0;
          sum += sign * yy[j] * (da[k] * db[l] - da[l] * db[k]);
        }
      return kLambdaNormalization * sum;
    }
  }
  throw DomainError("unknown Bloch tensor kind");
}

bool mixed_state_contains(double y0, double y1, double y2, double y3) {
  return y0 == 0.5 && y1 * y1 + y2 * y2 + y3 * y3 <= 0.25 + 1e-12;
}

}  // namespace geomqm::bloch
