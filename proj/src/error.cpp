#include "lamina/error.hpp"

namespace lamina {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::MixedDegree: return "unsupported-mixed-degree";
    case ErrorKind::NoExactForm: return "no-exact-form";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::UnsupportedStructure: return "unsupported-structure";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Dependency: return "dependency";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Config: return 3;
    case ErrorKind::Domain: return 4;
    case ErrorKind::Overflow: return 5;
    case ErrorKind::MixedDegree: return 6;
    case ErrorKind::NoExactForm: return 7;
    case ErrorKind::Precondition: return 8;
    case ErrorKind::Capacity: return 9;
    case ErrorKind::Accuracy: return 10;
    case ErrorKind::Divergence: return 11;
    case ErrorKind::UnsupportedStructure: return 12;
    case ErrorKind::NotApplicable: return 13;
    case ErrorKind::Dependency: return 14;
    case ErrorKind::InternalInconsistency: return 15;
    case ErrorKind::Io: return 16;
  }
  return 1;
}

}  // namespace lamina
