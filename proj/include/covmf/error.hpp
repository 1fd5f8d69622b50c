#ifndef COVMF_ERROR_HPP
#define COVMF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covmf {

enum class Errc {
    OrderMismatch,
    DivisionByZero,
    ShapeMismatch,
    ParseError,
    NonHomogeneous,
    DimensionMismatch,
    DegreeNegative,
    DegreeMismatch,
    EmptyDecomposition,
    NonIntegralGenus,
    NegativeGenus,
    InvalidVariety,
    AllSamplesSingular,
    StageMissingCertificate,
    BadFormat,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(Errc::ParseError, msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace covmf

#endif
