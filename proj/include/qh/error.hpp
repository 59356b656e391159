#pragma once

#include <stdexcept>
#include <string>

namespace qh {

enum class Errc {
  NotFinite,
  Singular,
  UnsupportedFamily,
  DimensionMismatch,
  NotHolomorphic,
  NotDivisible,
  NotReflectionGroup,
  NoExponent,
  InvalidHsop,
  NotInvariant,
  NotRelativeInvariant,
  SolveFailed,
  FactorizationFails,
  PointOnZeroSet,
  BadConfig,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotFinite: return "NotFinite";
    case Errc::Singular: return "Singular";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotHolomorphic: return "NotHolomorphic";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotReflectionGroup: return "NotReflectionGroup";
    case Errc::NoExponent: return "NoExponent";
    case Errc::InvalidHsop: return "InvalidHsop";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotRelativeInvariant: return "NotRelativeInvariant";
    case Errc::SolveFailed: return "SolveFailed";
    case Errc::FactorizationFails: return "FactorizationFails";
    case Errc::PointOnZeroSet: return "PointOnZeroSet";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qh
