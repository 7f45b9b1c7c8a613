#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mazur {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Throws UsageError if v does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace mazur
