#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kbinom {

/// Arbitrary-precision integer. Counts of scattered occurrences are never
/// negative; signed values only appear inside elimination and field code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigCount = BigInt;

}  // namespace kbinom
