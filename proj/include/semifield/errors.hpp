#pragma once

#include <stdexcept>
#include <string>

namespace semifield {

enum class Errc {
    NotPrime,
    Reducible,
    DegreeMismatch,
    DivisionByZero,
    EvenCharacteristic,
    NotADivisor,
    LengthMismatch,
    CarrierMismatch,
    Singular,
    ZeroDivisor,
    DimensionMismatch,
    ZeroElement,
    BadParameter,
    NotInvertible,
    NotInSpreadSet,
    NoIdentity,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

/// Library-wide error type. `witness()` carries the canonical integer
/// encoding of the offending element where one exists (ZeroDivisor), else -1.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg, long long witness = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          witness_(witness) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }
    long long witness() const { return witness_; }

  private:
    Errc code_;
    long long witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, long long witness = -1) {
    throw Error(code, msg, witness);
}

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::Reducible: return "Reducible";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::CarrierMismatch: return "CarrierMismatch";
        case Errc::Singular: return "Singular";
        case Errc::ZeroDivisor: return "ZeroDivisor";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::BadParameter: return "BadParameter";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::NotInSpreadSet: return "NotInSpreadSet";
        case Errc::NoIdentity: return "NoIdentity";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace semifield
