#ifndef TRACEZERO_KAT_HPP
#define TRACEZERO_KAT_HPP

#include <string>
#include <vector>

#include "tracezero/refcurves.hpp"

namespace tracezero::kat {

struct Check {
    std::string name;
    bool pass;
    std::string detail;  // set on failure
};

/// Known-answer vectors for the bundled curves: compression, the explicit
/// doubling/tripling formulas, the line-recovery system, the subalgorithm
/// special cases, both scalar-multiplication algorithms, the scalar
/// decomposition and the call-count figures.
std::vector<Check> run_vectors();

}  // namespace tracezero::kat

#endif
