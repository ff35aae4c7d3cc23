#include "geomqm/hilbert.hpp"

namespace geomqm::hilbert {

RealifiedState realify(const PureState& psi) {
  return RealifiedState(psi.amplitudes().real(), psi.amplitudes().imag());
}

PureState complexify(const RealifiedState& x) {
  Vector v(x.dim());
  v.real() = x.q;
  v.imag() = x.p;
  return PureState(std::move(v));
}

Complex hermitian_product(const PureState& psi1, const PureState& psi2) {
  if (psi1.dim() != psi2.dim()) throw DimensionMismatchError();
  return psi1.amplitudes().dot(psi2.amplitudes());
}

RealifiedState apply_complex_structure(const RealifiedState& x) {
  return RealifiedState(-x.p, x.q);
}

Covector apply_complex_structure(const Covector& alpha) {
  return Covector(-alpha.dp, alpha.dq);
}

EulerFields euler_fields(const RealifiedState& x) {
  return EulerFields{RealifiedState(x.q, x.p), RealifiedState(x.p, -x.q)};
}

RealifiedState dilation_flow(const RealifiedState& x, double s) {
  double lambda = std::exp(s);
  return RealifiedState(lambda * x.q, lambda * x.p);
}

RealifiedState phase_flow(const RealifiedState& x, double t) {
  // Integral curve of (p, -q): psi(t) = e^{-it} psi(0).
  double c = std::cos(t), s = std::sin(t);
  return RealifiedState(c * x.q + s * x.p, c * x.p - s * x.q);
}

double contravariant_eval(ContravariantKind kind, const Covector& alpha,
                          const Covector& beta) {
  if (alpha.dim() != beta.dim()) throw DimensionMismatchError();
  switch (kind) {
    case ContravariantKind::G:
      return alpha.dq.dot(beta.dq) + alpha.dp.dot(beta.dp);
    case ContravariantKind::Omega:
      return alpha.dq.dot(beta.dp) - alpha.dp.dot(beta.dq);
  }
  throw DomainError("unknown contravariant kind");
}

double pair(const Covector& alpha, const RealifiedState& v) {
  if (alpha.dim() != v.dim()) throw DimensionMismatchError();
  return alpha.dq.dot(v.q) + alpha.dp.dot(v.p);
}

}  // namespace geomqm::hilbert
