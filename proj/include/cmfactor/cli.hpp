#pragma once

#include "cmfactor/verify.hpp"

#include <string>

namespace cmf::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_verification_failed = 2,
    exit_hypothesis = 3,
    exit_precision = 4,
};

/// JSON text for a gz/yz report; decimal fields carry floor(prec log10 2) digits.
std::string report_json(VerificationReport const & r);

/// Entry point of the cmfactor tool.
int run(int argc, char ** argv);

} // namespace cmf::cli
