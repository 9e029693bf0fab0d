#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mgk {

/// Exact signed integer with unbounded magnitude.
using Integer = boost::multiprecision::cpp_int;

}  // namespace mgk
