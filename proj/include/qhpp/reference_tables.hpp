#pragma once

#include <string>

#include "qhpp/errors.hpp"

namespace qhpp {

// Static reference data displayed in reports. These lists come from the
// published classification work on fake projective planes and their
// quotients; they are shipped as data and never derived here.

inline std::string reference_table(const std::string& name) {
    if (name == "aut_groups")
        return "automorphism groups of fake projective planes: {1}, C3, C3^2, 7:3";
    if (name == "fundamental_groups")
        return "pi_1 of C3-quotients: {1}, C2, C3, C4, C6, C7, C13, C14, C2^2, C2xC4, S3, D8, Q8"
               " | pi_1 of C3^2-, C7- and 7:3-quotients: {1} or C2"
               " | (3,3)-elliptic resolutions are excluded: their pi_1 is C3";
    if (name == "quotient_types")
        return "C3 quotient: 3 points 1/3(1,2), resolution minimal general type K^2=3"
               " | C3^2 quotient: 4 points 1/3(1,2), resolution minimal general type K^2=1"
               " | C7 quotient: 3 points 1/7(1,5), resolution (2,3)- or (2,4)-elliptic"
               " | 7:3 quotient: 3 points 1/3(1,2) + 1 point 1/7(1,5), resolution (2,3)- or "
               "(2,4)-elliptic";
    throw ParseError("unknown reference table '" + name + "'");
}

} // namespace qhpp
