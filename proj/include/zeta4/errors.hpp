#ifndef ZETA4_ERRORS_HPP
#define ZETA4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeta4 {

struct InvalidArguments : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PrecisionInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IllConditionedFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zeta4

#endif
