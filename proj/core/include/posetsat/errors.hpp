#pragma once

#include <stdexcept>
#include <string>

namespace posetsat {

// Bad parameters or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration or search limit would be exceeded. Exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace posetsat
