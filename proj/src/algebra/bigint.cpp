#include "mazur/algebra/bigint.hpp"

#include "mazur/algebra/errors.hpp"

namespace mazur {

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) {
    throw UsageError("integer " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace mazur
