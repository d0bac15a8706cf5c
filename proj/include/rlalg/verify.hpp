#pragma once

#include <string>
#include <vector>

#include "rlalg/transfer.hpp"

namespace rlalg {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;  // whole check skipped; never counts as a failure
    std::string detail;
};

struct VerifyOptions {
    int samples = 100;  // gain samples for the numeric agreement check
    double tol = 1e-8;  // residual tolerance for the numeric agreement check
};

// Decomposes tf and cross-checks the result: closed-loop roots from the
// numeric root finder must land on the component union at sampled gains,
// open-loop poles must land on it at gain zero, biduals must recover every
// component, and certified-smooth curve components must obey the d*(d-1)
// dual degree law. Per-component skips (line components, uncertified
// smoothness) are spelled out in the detail strings.
std::vector<CheckResult> runVerification(const TransferFunction& tf, const VerifyOptions& opt);

}  // namespace rlalg
