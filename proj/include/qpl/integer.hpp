#ifndef QPL_INTEGER_HPP
#define QPL_INTEGER_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qpl {

// Arbitrary-precision signed integer used for every exact coefficient.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

inline Integer from_decimal(const std::string& s) { return Integer(s, 10); }

inline Integer make_integer(std::int64_t v)
{
    // mpz_class has no int64_t constructor on every platform; go through long.
    return Integer(static_cast<long>(v));
}

// Returns +1 or -1 raised to a (possibly negative) integer power.
inline int sign_pow(int sign, std::int64_t e)
{
    if (sign == 1)
        return 1;
    return (e % 2 == 0) ? 1 : -1;
}

} // namespace qpl

#endif
