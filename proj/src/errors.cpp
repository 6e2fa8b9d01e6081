#include "mcg/errors.hpp"

namespace mcg {

const char* to_string(MoveErrorKind kind) {
  switch (kind) {
    case MoveErrorKind::kNonDisjoint: return "NonDisjoint";
    case MoveErrorKind::kPatternMismatch: return "PatternMismatch";
    case MoveErrorKind::kNonUnitIntersection: return "NonUnitIntersection";
    case MoveErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case MoveErrorKind::kConfigMismatch: return "ConfigMismatch";
    case MoveErrorKind::kUnknownConfig: return "UnknownConfig";
    case MoveErrorKind::kNotRelator: return "NotRelator";
    case MoveErrorKind::kNoSimplification: return "NoSimplification";
  }
  return "MoveError";
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("multiplication");
  return r;
}

}  // namespace mcg
