#ifndef ARLAB_ACCEPTANCE_HPP
#define ARLAB_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace arlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The full verification battery: small-case exact anti-Ramsey and Turan
// values, extremal-family enumerations against their characterizations,
// rainbow-free certificates for every lower-bound coloring, and the
// matching-structure property sweeps.
std::vector<CriterionResult> run_acceptance_suite();

} // namespace arlab

#endif
