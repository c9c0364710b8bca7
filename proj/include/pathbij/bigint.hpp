#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pathbij {

using BigInt = boost::multiprecision::cpp_int;

} // namespace pathbij
