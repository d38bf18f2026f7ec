#pragma once

#include <string>

#include "jagg/text_format.hpp"

namespace fixtures {

inline const char* kDoctrine =
    "judges 3\n"
    "quota 1/2\n"
    "vars s c m h\n"
    "conc e = -s c\n"
    "conc r = -m -h\n"
    "judge 1: s=1 c=0 m=1 h=1\n"
    "judge 2: s=1 c=1 m=0 h=1\n"
    "judge 3: s=0 c=0 m=1 h=0\n"
    "manipulator 3\n"
    "desired: e=1 r=1\n";

inline const char* kHammingExample =
    "judges 3\n"
    "quota 1/2\n"
    "vars x1 x2 x3 x3p x4\n"
    "conc a = x1 x2\n"
    "conc b = x2 x3\n"
    "conc c = x3 x3p\n"
    "conc d = x3 x4\n"
    "judge 1: x1=1 x2=0 x3=1 x3p=1 x4=1\n"
    "judge 2: x1=0 x2=0 x3=0 x3p=0 x4=1\n"
    "judge 3: x1=1 x2=1 x3=0 x3p=0 x4=0\n"
    "manipulator 3\n"
    "desired: a=1 b=1 c=0 d=0\n";

inline jagg::ManipInstance doctrine() { return jagg::to_manip(jagg::parse_instance(kDoctrine)); }
inline jagg::ManipInstance hamming_example() { return jagg::to_manip(jagg::parse_instance(kHammingExample)); }

// Builds an instance from a text body, with the caller's desired line.
inline jagg::ManipInstance manip(const std::string& text) { return jagg::to_manip(jagg::parse_instance(text)); }

}  // namespace fixtures
