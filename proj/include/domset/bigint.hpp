#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// C(n, k) if it fits in 64 bits, otherwise UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace domset
