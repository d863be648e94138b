#pragma once

#include "vdt/rational.hpp"

#include <optional>
#include <vector>

namespace vdt {

/// Small dense exact-rational linear program in standard computational form:
///   maximize c.x  subject to  A x <= b,  x >= 0.
/// Two-phase simplex with Bland's rule; everything over mpq, no tolerances.
struct LinearProgram {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<Rat> c;
};

struct LPSolution {
    bool feasible = false;
    bool bounded = true;
    Rat objective{0};
    std::vector<Rat> x;
};

LPSolution solve_lp(const LinearProgram& lp);

} // namespace vdt
