#pragma once

#include <stdexcept>

namespace detskein {

// Text that does not describe a valid object: bad PD tokens, malformed
// fractions, certificate files that do not parse.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A well-formed request that the mathematics rules out.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace detskein
