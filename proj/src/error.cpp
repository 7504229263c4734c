#include "tfg/error.hpp"

namespace tfg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotInLanguage: return "NotInLanguage";
    case Errc::TooShort: return "TooShort";
    case Errc::RadiusTooSmall: return "RadiusTooSmall";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotBijective: return "NotBijective";
    case Errc::OverlapViolation: return "OverlapViolation";
    case Errc::TowerTooShort: return "TowerTooShort";
    case Errc::InvalidSeed: return "InvalidSeed";
    case Errc::UnsupportedOffset: return "UnsupportedOffset";
    case Errc::SearchCeilingExceeded: return "SearchCeilingExceeded";
    case Errc::SeedOrbitNotSeparated: return "SeedOrbitNotSeparated";
    case Errc::AperiodicityUnchecked: return "AperiodicityUnchecked";
    case Errc::DaggerRequired: return "DaggerRequired";
  }
  return "UnknownError";
}

}  // namespace tfg
