#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace transfersys {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace transfersys
