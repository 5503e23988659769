#pragma once

#include "qmirror/open_string.hpp"
#include "qmirror/yukawa_gw.hpp"

#include <string>
#include <vector>

namespace qmirror {

/// Everything downstream of the Frobenius basis at one truncation order.
struct Pipeline {
    int order = 0;
    SignConvention sign = SignConvention::standard_minus;
    FrobeniusBasis basis;
    MirrorMap map;
    HalfLogSeries yukawa;  // Y(q)
    InstantonTable instantons;
    UPoly potential;       // Phi from the instanton table
};

Pipeline build_pipeline(int order, SignConvention sign = SignConvention::standard_minus);

struct CheckResult {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Every module invariant at the given order. Exceptions inside a check are
/// recorded as failures with the error text.
std::vector<CheckResult> run_invariant_suite(int order);

}  // namespace qmirror
