#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mimd {

/// Raised when an operation is called outside its mathematical domain
/// (box violations, n < 2, malformed bidegrees, context mismatches).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact integer coefficient. All arithmetic on it goes through the checked
/// helpers below; an overflow throws instead of wrapping.
using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in subtraction");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

}  // namespace mimd
