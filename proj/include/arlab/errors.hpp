#ifndef ARLAB_ERRORS_HPP
#define ARLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arlab {

// No object with the requested parameters can exist (parity, order, ...).
class infeasible_error : public std::domain_error {
public:
    explicit infeasible_error(const std::string& what) : std::domain_error(what) {}
};

// The search space was exhausted without finding the requested object.
class not_found_error : public std::runtime_error {
public:
    explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

// A resource cap was hit before the computation could finish exactly.
class capped_error : public std::runtime_error {
public:
    explicit capped_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arlab

#endif
