#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace arbor
