#pragma once

#include "fgpair/num/ode.hpp"

namespace fg::num {

// Airy function and derivative at complex argument by the Maclaurin series;
// accurate to near machine precision for |z| up to ~6, which covers every
// use here.  Independent of the ODE machinery on purpose: this is the
// oracle the Stokes suite is checked against.
C airy_ai(C z);
C airy_ai_prime(C z);

}  // namespace fg::num
