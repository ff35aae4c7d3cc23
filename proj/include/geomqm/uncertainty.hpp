#pragma once

// Robertson and Schroedinger uncertainty relations, stated in variances.

#include "geomqm/types.hpp"

namespace geomqm::uncertainty {

struct UncertaintyReport {
  double varA = 0.0;
  double varB = 0.0;
  double cov = 0.0;
  double commutator_term = 0.0;  // e_{[A,B]}(psi)
  double robertson_slack = 0.0;  // varA varB - commutator_term^2 / 4
  double schrodinger_slack = 0.0;  // robertson_slack - cov^2
};

UncertaintyReport robertson_check(const HermitianOperator& A,
                                  const HermitianOperator& B,
                                  const PureState& psi);

UncertaintyReport schrodinger_check(const HermitianOperator& A,
                                    const HermitianOperator& B,
                                    const PureState& psi);

// Same slacks recomputed from the coordinate contractions of G_P / Omega_P
// instead of operator algebra; agrees with the operator route to 1e-10.
UncertaintyReport tensor_path_check(const HermitianOperator& A,
                                    const HermitianOperator& B,
                                    const PureState& psi);

}  // namespace geomqm::uncertainty
