#pragma once

#include <string>

#include "fourdist/filters.hpp"
#include "fourdist/model.hpp"

namespace fourdist {

/// Re-derives an elimination from the candidate using arith primitives only,
/// without calling any filter. Returns true iff the witness condition holds
/// and the witness kind matches the filter.
bool witness_holds(const Candidate& c, const Elimination& e);

/// One-line human description of a witness, e.g. "x=7 is an odd prime".
std::string describe_witness(const Witness& w);

}  // namespace fourdist
