#pragma once

#include <stdexcept>
#include <string>

namespace recur {

// Every failure the library can signal. The CLI maps these onto exit codes:
// malformed input -> 1, mathematical refusal -> 2, exhausted budget -> 3.
enum class Errc {
    // input validation
    InvalidArgument,
    EmptyCoefficients,
    NegativeCoefficient,
    TrailingZero,
    Degenerate,
    WrongInitLength,
    AllZeroInit,
    AllZeroBeta,
    IndexOutOfRange,
    // polynomial arithmetic
    ZeroDivisor,
    NotDivisible,
    BothZero,
    EndpointRoot,
    // root finding / analysis refusals
    NotCharacteristic,
    NotSquarefree,
    GammaNotPositiveAtRoot,
    NTooLarge,
    ImaginaryResidue,
    // resource limits
    BudgetExhausted,
    PrecisionUnreachable,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace recur
