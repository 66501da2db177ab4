#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclefact {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace cyclefact
