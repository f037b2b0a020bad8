#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pimenov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands live in algebras with different generator counts.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A generator index, generator count, or degree is outside its allowed range.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Scalars from different quadratic extensions were combined.
class FieldMismatchError : public Error {
  public:
    using Error::Error;
};

/// Raised by invert() when the real part is zero.
class NotInvertibleError : public Error {
  public:
    NotInvertibleError() : Error("not invertible: real part is zero") {}
};

/// A documented precondition of an operation does not hold.
class ContractError : public Error {
  public:
    using Error::Error;
};

/// The requested computation is outside what the library can decide.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// The requested computation exceeds a configured size budget.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Malformed element text or JSON. position() is a 0-based byte offset into
/// the text when one is known.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error("position " + std::to_string(position) + ": " + what), position_(position) {}
    explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace pimenov
