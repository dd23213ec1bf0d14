#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pathstat {

// Exact arbitrary-precision integer used for all counts.
using Natural = boost::multiprecision::cpp_int;

}  // namespace pathstat
