#pragma once

#include <vector>

#include "fgpair/pair.hpp"

namespace fg {

// Exact catalog of the Fuchs-Garnier pairs under study, loaded from the
// embedded pair-file data.  Keys:
//   P1 family:  JKT1, dJKT1, JM1, JM1F
//   P2 family:  JM2, FN, HTW, JKT2, dJKT2_1, dJKT2_2, dJKT2_3, CM2
//   2x2 intermediates: JKT2phi (kappa2 = -1 block of JKT2),
//                      dJKT2_3psi (constraint reduction of dJKT2_3),
//                      dJKT2_2chi (gauged 3x3 stage of dJKT2_2),
//                      dJKT2_2psi (constraint reduction of dJKT2_2chi)
FGPair catalog(const std::string& name);
std::vector<std::string> catalog_names();
const std::string& catalog_text(const std::string& name);  // raw pair-file data

// Scalar second-order pairs in the catalog: G1 (for P1) and G2 (for P2).
// Their coefficients use yp for dy/dt and alpha for the P2 parameter.
ScalarPair scalar_catalog(const std::string& name);

}  // namespace fg
