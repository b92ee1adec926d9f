#pragma once

#include <stdexcept>

namespace ringgraph {

// Bad argument values: invalid vertex ids, mixed models, malformed specs.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Work refused because it would exceed a configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation asked outside its supported domain (arithmetic mode, ambient
// hypotheses of a closed-form rule, cardinal combinations).
class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The inputs do not determine the answer.
class AmbiguityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ringgraph
