#include "bps/error.hpp"

namespace bps {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::ShiftOutOfRange: return "shift-out-of-range";
    case ErrorKind::InvalidShiftSet: return "invalid-shift-set";
    case ErrorKind::TooManyShifts: return "too-many-shifts";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::SequenceTooShort: return "sequence-too-short";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace bps
