#pragma once

#include <stdexcept>
#include <string>

namespace simplexpaths {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PurityError : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct NotAFace : Error {
    using Error::Error;
};
struct NotAFacet : Error {
    using Error::Error;
};
struct UnknownVertex : Error {
    using Error::Error;
};
struct UnknownFixture : Error {
    using Error::Error;
};
struct NotAdjacent : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct NoAdmissibleOrdering : Error {
    using Error::Error;
};
struct StuckError : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct LabelCollision : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace simplexpaths
