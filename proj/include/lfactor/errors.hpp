#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfactor {

// Base class of every domain error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error { using Error::Error; };
struct UnknownLabelError : Error { using Error::Error; };
struct NotDivisibleError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct NoDualDataError : Error { using Error::Error; };
struct OddDimensionError : Error { using Error::Error; };
struct LinkedPartsError : Error { using Error::Error; };
struct NotGenericError : Error { using Error::Error; };
struct NotGeneralPositionError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(std::size_t offset, std::string expected, const std::string& what)
        : Error(what), offset(offset), expected(std::move(expected)) {}

    std::size_t offset;   // byte offset into the source text
    std::string expected; // expected-token set, human readable
};

} // namespace lfactor
