#include "fgpair/catalog.hpp"

#include <map>

#include "fgpair/expr.hpp"
#include "fgpair/pairio.hpp"

namespace fg {

// Transcriptions of the published systems, one pair-file block each.
// These are data: the tests diff them entry-by-entry against independently
// hand-checked forms, and every claim about them is re-derived by the
// analysis and transform modules.

namespace {

const char* kJKT1 = R"(
pair JKT1
spectral mu
size 3
L
1 | 0 | 0
0 | 1 | 0
0 | 0 | 1
R
-y | mu - z | -4*y^2 - 2*t
0 | y | mu + z
1/4 | 0 | 0
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
0 | -2*y | -2*mu - 2*z
-1/2 | 0 | -4*y
0 | -1/2 | 0
table
y -> z
z -> 6*y^2 + t
end
)";

const char* kDJKT1 = R"(
pair dJKT1
spectral lambda
size 3
L
0 | 1 | 0
0 | 0 | 1
0 | 0 | 0
R
-lambda - y | -z | -4*y^2 - 2*t
0 | -lambda + y | z
1/4 | 0 | -lambda
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
0 | -2*lambda | 0
-1/2 | 0 | -4*y
0 | -1/2 | 0
table
y -> z
z -> 6*y^2 + t
end
)";

const char* kJM1 = R"(
pair JM1
spectral lambda
size 2
L
1 | 0
0 | 1
R
-z | lambda^2 + lambda*y + y^2 + t/2
4*lambda - 4*y | z
T1
0 | 0
0 | 0
T0
0 | lambda/2 + y
2 | 0
table
y -> z
z -> 6*y^2 + t
end
)";

const char* kJM1F = R"(
pair JM1F
spectral zeta
size 2
L
1 | 0
0 | 1
R
4*zeta^4 - 4*y*zeta^2 - 2*z*zeta | 4*y*zeta^3 + 2*z*zeta^2 + (2*y^2 + t)*zeta + 1/2
8*zeta^3 - 8*y*zeta | -4*zeta^4 + 4*y*zeta^2 + 2*z*zeta
T1
0 | 0
0 | 0
T0
zeta | y
2 | -zeta
table
y -> z
z -> 6*y^2 + t
end
)";

const char* kJM2 = R"(
pair JM2
spectral lambda
size 2
alpha 1/2 - theta
L
1 | 0
0 | 1
R
lambda^2 + z + t/2 | lambda*u - u*y
-2*lambda*z/u - 2*(y*z + theta)/u | -lambda^2 - z - t/2
T1
0 | 0
0 | 0
T0
lambda/2 | u/2
-z/u | -lambda/2
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
u -> -y*u
end
)";

const char* kFN = R"(
pair FN
spectral zeta
size 2
alpha alpha
L
1 | 0
0 | 1
R
-4*i*zeta^2 - i*(2*y^2 + t) | 4*y*zeta + 2*i*yp - alpha/zeta
4*y*zeta - 2*i*yp - alpha/zeta | 4*i*zeta^2 + i*(2*y^2 + t)
T1
0 | 0
0 | 0
T0
-i*zeta | y
y | i*zeta
table
y -> yp
yp -> 2*y^3 + t*y + alpha
end
)";

const char* kHTW = R"(
pair HTW
spectral mu
size 2
alpha 1/2 - theta
L
1 | 0
0 | 1
R
-y + theta/(2*mu) | mu - z - 2*y^2 - t
1/2 + z/(2*mu) | y - theta/(2*mu)
T1
0 | 0
0 | 0
T0
y | -mu
-1/2 | -y
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
end
)";

const char* kJKT2 = R"(
pair JKT2
spectral lambda
size 3
alpha 1/2 - kappa1 + kappa2
L
-1 | lambda + y | 0
0 | -1/2 | lambda
0 | 0 | -1
R
z + 2*y^2 + t | -1 - kappa1 | 0
-y | -z/2 | -1 - kappa2
1 | 0 | 0
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
-lambda | z/2 | 1 + kappa2
-1 | y | 0
0 | -1/2 | -y
table
y -> y^2 + z + t/2
z -> -2*y*z - kappa1 + kappa2
u -> -y*u
end
)";

const char* kDJKT2_3 = R"(
pair dJKT2_3
spectral mu
size 3
alpha 1/2 - kappa1 + kappa2
L
0 | mu | 0
0 | 0 | mu
0 | 0 | 0
R
mu - z - 2*y^2 - t | -mu*y + kappa1 | 0
y | mu/2 + z/2 | kappa2
-1 | 0 | mu
T1
0 | 0 | -1
0 | 0 | 0
0 | 0 | 0
T0
0 | z/2 | kappa2
-1 | y | 0
0 | -1/2 | -y
table
y -> y^2 + z + t/2
z -> -2*y*z - kappa1 + kappa2
u -> -y*u
end
)";

const char* kDJKT2_1 = R"(
pair dJKT2_1
spectral lambda
size 3
alpha 1/2 - theta
L
1 | 0 | 0
0 | 1 | 0
0 | 0 | 0
R
-z - t | lambda*z + y*z + theta | 2*lambda
2*y | z | 2
lambda | 0 | 1
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
0 | z/2 | 1
-1 | y | 0
0 | -lambda*z/2 | -lambda
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
u -> -y*u
end
)";

const char* kDJKT2_2 = R"(
pair dJKT2_2
spectral mu
size 3
alpha 1/2 - theta
L
0 | z | 2
0 | 0 | 0
1 | 0 | 0
R
-mu + z + t | -y*z - theta | 0
-2*y | -mu - z | -2
0 | 0 | -1
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
0 | z/2 | 1
-1 | y | 0
mu/2 - z/2 - t/2 | y*z/2 + theta/2 | 0
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
u -> -y*u
end
)";

const char* kCM2 = R"(
pair CM2
spectral lambda
size 2
alpha alpha
L
1 | 0
0 | 1
R
-yp | lambda^3 + lambda^2*y + lambda*(y^2 + t) + y^3 + t*y + 2*alpha
lambda - y | yp
T1
0 | 0
0 | 0
T0
0 | lambda^2/2 + lambda*y + (3*y^2 + t)/2
1/2 | 0
table
y -> yp
yp -> 2*y^3 + t*y + alpha
u -> -y*u
end
)";

// 2x2 block of JKT2 at kappa2 = -1, in the first two components.
const char* kJKT2PHI = R"(
pair JKT2phi
spectral lambda
size 2
alpha -1/2 - kappa1
L
1 | 0
0 | 1
R
-2*lambda^2 - z - t | lambda*z + y*z + 1 + kappa1
-2*lambda + 2*y | z
T1
0 | 0
0 | 0
T0
-lambda | z/2
-1 | y
table
y -> y^2 + z + t/2
z -> -2*y*z - 1 - kappa1
u -> -y*u
end
)";

// Constraint reduction of dJKT2_3 to its last two components.
const char* kDJKT2_3PSI = R"(
pair dJKT2_3psi
spectral mu
size 2
alpha 1/2 - kappa1 + kappa2
L
1 | 0
0 | 1
R
-y + kappa1/mu | mu - z - 2*y^2 - t
1/2 + z/(2*mu) | y + kappa2/mu
T1
0 | 0
0 | 0
T0
y | -mu
-1/2 | -y
table
y -> y^2 + z + t/2
z -> -2*y*z - kappa1 + kappa2
u -> -y*u
end
)";

// dJKT2_2 after the z-dependent 3x3 gauge, still degenerate.
const char* kDJKT2_2CHI = R"(
pair dJKT2_2chi
spectral mu
size 3
alpha 1/2 - theta
L
1 | 0 | 0
0 | 0 | 0
0 | 0 | 1
R
-y - theta/z | -y - theta/z | -mu + z + t
-mu - z | -mu | -2*y*z
0 | 1/2 | 0
T1
0 | 0 | 0
0 | 0 | 0
0 | 0 | 0
T0
0 | 0 | mu - 2*z - t
-y - theta/z | -y - theta/z | -mu + z + t
1/2 | 0 | 0
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
u -> -y*u
end
)";

// Constraint reduction of dJKT2_2chi to the components (chi1, chi3).
const char* kDJKT2_2PSI = R"(
pair dJKT2_2psi
spectral mu
size 2
alpha 1/2 - theta
L
1 | 0
0 | 1
R
(y*z + theta)/mu | -mu + z + t + (2*y^2*z + 2*y*theta)/mu
-1/2 - z/(2*mu) | -y*z/mu
T1
0 | 0
0 | 0
T0
0 | mu - 2*z - t
1/2 | 0
table
y -> y^2 + z + t/2
z -> -2*y*z - theta
u -> -y*u
end
)";

const std::map<std::string, const char*>& raw_catalog() {
  static const std::map<std::string, const char*> m = {
      {"JKT1", kJKT1},         {"dJKT1", kDJKT1},
      {"JM1", kJM1},           {"JM1F", kJM1F},
      {"JM2", kJM2},           {"FN", kFN},
      {"HTW", kHTW},           {"JKT2", kJKT2},
      {"dJKT2_1", kDJKT2_1},   {"dJKT2_2", kDJKT2_2},
      {"dJKT2_3", kDJKT2_3},   {"CM2", kCM2},
      {"JKT2phi", kJKT2PHI},   {"dJKT2_3psi", kDJKT2_3PSI},
      {"dJKT2_2chi", kDJKT2_2CHI}, {"dJKT2_2psi", kDJKT2_2PSI},
  };
  return m;
}

}  // namespace

FGPair catalog(const std::string& name) {
  auto& m = raw_catalog();
  auto it = m.find(name);
  if (it == m.end()) throw Error(Err::UnknownPair, "unknown pair: " + name);
  return parse_pair(it->second);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : raw_catalog()) out.push_back(k);
  return out;
}

const std::string& catalog_text(const std::string& name) {
  static std::map<std::string, std::string> cache;
  auto& m = raw_catalog();
  auto it = m.find(name);
  if (it == m.end()) throw Error(Err::UnknownPair, "unknown pair: " + name);
  auto& slot = cache[name];
  if (slot.empty()) {
    std::string_view raw(it->second);
    if (!raw.empty() && raw.front() == '\n') raw.remove_prefix(1);
    slot = std::string(raw);
  }
  return slot;
}

ScalarPair scalar_catalog(const std::string& name) {
  ScalarPair sp;
  sp.spectral = S::lambda();
  if (name == "G1") {
    sp.potential = parse_ratfunc(
        "3/(4*(lambda - y)^2) - yp/(lambda - y)"
        " + 4*lambda^3 + 2*t*lambda + yp^2 - 4*y^3 - 2*t*y");
  } else if (name == "G2") {
    sp.potential = parse_ratfunc(
        "3/(4*(lambda - y)^2) - yp/(lambda - y)"
        " + yp^2 + lambda^4 - y^4 + t*(lambda^2 - y^2) + 2*alpha*(lambda - y)");
  } else {
    throw Error(Err::UnknownPair, "unknown scalar pair: " + name);
  }
  sp.r1 = parse_ratfunc("1/(2*(lambda - y))");
  sp.r0 = parse_ratfunc("1/(4*(lambda - y)^2)");
  return sp;
}

}  // namespace fg
