#include "curvelab/error.hpp"

namespace curvelab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::StepBound: return "step bound exceeded";
    case ErrorKind::SearchBound: return "search bound exceeded";
    case ErrorKind::Refused: return "refused";
    case ErrorKind::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

}  // namespace curvelab
