#pragma once

#include <stdexcept>
#include <string>

namespace sunit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// descriptor does not describe a field (non-squarefree d, bad table, ...)
struct DescriptorInvalid : Error {
    using Error::Error;
};

// operation needs data the field does not carry (table field without a
// prime fixture, general ideal factorization, ...)
struct UnsupportedField : Error {
    using Error::Error;
};

// configured resource cap exceeded (search space, discriminant cap)
struct ResourceLimit : Error {
    using Error::Error;
};

// fold() on an element outside the generated group
struct NotInGroup : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

// lambda in {0,1} and similar domain violations
struct DomainError : Error {
    using Error::Error;
};

struct TransportError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace sunit
