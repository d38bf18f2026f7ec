#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace jagg {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

// Accepts "p/q", "p" or a terminating decimal such as "0.75".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace jagg
