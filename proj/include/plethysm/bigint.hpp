#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace plethysm {

using BigInt = boost::multiprecision::cpp_int;

}
