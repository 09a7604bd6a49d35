#pragma once

#include <stdexcept>
#include <string>

namespace weylk {

// Base for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact_linalg
struct NotRootOfUnitySpectrum : Error {
    using Error::Error;
};

// root_system
struct InvalidCartan : Error {
    using Error::Error;
};
struct NotARoot : Error {
    using Error::Error;
};
struct NotE6 : Error {
    using Error::Error;
};
struct WordSyntaxError : Error {
    std::size_t position;
    WordSyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// weyl_group
struct ClassMatchFailure : Error {
    using Error::Error;
};

// torus_fixed
struct IdentityElement : Error {
    using Error::Error;
};
struct NotFixed : Error {
    using Error::Error;
};
struct NotOrthogonal : Error {
    using Error::Error;
};

// sectors_ktheory
struct NonIntegralBetti : Error {
    using Error::Error;
};

// group cache
struct CacheError : Error {
    using Error::Error;
};

} // namespace weylk
