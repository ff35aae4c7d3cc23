#include "geomqm/uncertainty.hpp"

#include "geomqm/expectation.hpp"

namespace geomqm::uncertainty {

namespace {

UncertaintyReport from_brackets(double varA, double varB, double cov,
                                double comm) {
  if (varA < -1e-10 || varB < -1e-10)
    throw NumericalError("negative variance beyond the numerical floor");
  UncertaintyReport rep;
  rep.varA = varA;
  rep.varB = varB;
  rep.cov = cov;
  rep.commutator_term = comm;
  rep.robertson_slack = varA * varB - 0.25 * comm * comm;
  rep.schrodinger_slack = rep.robertson_slack - cov * cov;
  return rep;
}

}  // namespace

UncertaintyReport robertson_check(const HermitianOperator& A,
                                  const HermitianOperator& B,
                                  const PureState& psi) {
  return from_brackets(expectation::covariance(A, A, psi),
                       expectation::covariance(B, B, psi),
                       expectation::covariance(A, B, psi),
                       expectation::poisson_bracket(A, B, psi));
}

UncertaintyReport schrodinger_check(const HermitianOperator& A,
                                    const HermitianOperator& B,
                                    const PureState& psi) {
  return robertson_check(A, B, psi);
}

UncertaintyReport tensor_path_check(const HermitianOperator& A,
                                    const HermitianOperator& B,
                                    const PureState& psi) {
  using expectation::ProjectedKind;
  Covector da = expectation::differential(A, psi);
  Covector db = expectation::differential(B, psi);
  auto eval = [&](ProjectedKind kind, const Covector& x, const Covector& y) {
    return expectation::projected_tensor_eval_coordinates(kind, x, y, psi);
  };
  return from_brackets(eval(ProjectedKind::G_P, da, da),
                       eval(ProjectedKind::G_P, db, db),
                       eval(ProjectedKind::G_P, da, db),
                       eval(ProjectedKind::Omega_P, da, db));
}

}  // namespace geomqm::uncertainty
