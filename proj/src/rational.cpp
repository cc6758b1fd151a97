#include "recur/rational.hpp"

#include "recur/errors.hpp"
#include "recur/interval.hpp"

namespace recur {

Rat rat_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        raise(Errc::InvalidArgument, "not a rational: '" + text + "'");
    if (q.get_den() == 0)
        raise(Errc::InvalidArgument, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

Int int_from_string(const std::string& text) {
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        raise(Errc::InvalidArgument, "not an integer: '" + text + "'");
    return z;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Interval& iv) {
    return "[" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]";
}

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyCoefficients: return "EmptyCoefficients";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::TrailingZero: return "TrailingZero";
    case Errc::Degenerate: return "Degenerate";
    case Errc::WrongInitLength: return "WrongInitLength";
    case Errc::AllZeroInit: return "AllZeroInit";
    case Errc::AllZeroBeta: return "AllZeroBeta";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::BothZero: return "BothZero";
    case Errc::EndpointRoot: return "EndpointRoot";
    case Errc::NotCharacteristic: return "NotCharacteristic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::GammaNotPositiveAtRoot: return "GammaNotPositiveAtRoot";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::ImaginaryResidue: return "ImaginaryResidue";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::PrecisionUnreachable: return "PrecisionUnreachable";
    }
    return "UnknownError";
}

} // namespace recur
