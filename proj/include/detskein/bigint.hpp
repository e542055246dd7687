#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace detskein {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace detskein
