#pragma once
#include "gring/modrep.hpp"
#include "gring/trimat.hpp"

#include <map>
#include <string>

namespace gring {

/* The shipped p=7 reference matrices (fixtures/p7/*.mat).  theta, Lprime,
 * rho, sigma, h, f, C, D are column-convention representation data; the
 * lambda pair acts on row vectors. */
struct P7Fixtures {
    LambdaFixture lambda;
    std::map<int, Representation> theta; // k = 1..6
    Representation lprime;               // 6-dim block of the intersection module
    IntMatrix h;                         // 18x18 change of basis
    IntMatrix f;                         // 6x6 change of basis to the C_6 regular rep
    IntMatrix rho_y;                     // quotient action of y (rho_x = I)
    IntMatrix sigma_y;                   // C_6 regular representation of y
    IntMatrix pibar;                     // 6x24 matrix of the reduced projection
    std::map<int, IntMatrix> C, D;       // extension blocks, i in {1,3,4,5,6}
};

P7Fixtures load_p7_fixtures(const std::string& fixtures_dir);

} // namespace gring
