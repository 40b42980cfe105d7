#ifndef PERIPARTS_BIGINT_HPP
#define PERIPARTS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace periparts {

/* All counts and series coefficients are exact. The families counted here
 * grow like 2^(n-1) and series run to order 500, so coefficients routinely
 * exceed 64 bits. */
using BigInt = boost::multiprecision::cpp_int;

}  // namespace periparts

#endif
