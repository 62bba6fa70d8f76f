#ifndef SODLAB_ERROR_HPP
#define SODLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sodlab {

enum class ErrorKind {
    InvalidInput,
    UnsupportedSize,
    ParseError,
    DivisionByZero,
    HypothesisFailure,
    DegenerateCoefficient,
    UnsupportedStratum,
    InternalError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace sodlab

#endif  // SODLAB_ERROR_HPP
