#pragma once
// Exhaustive numerical verification of the ratio/dominance lemmas behind
// the series positivity proofs: each named claim is swept over its lattice
// or continuous domain, partial sums over the band index a are cut at a_cap
// and closed with the proofs' own integral majorants.

#include <vector>

#include "npelab/bounds/reports.hpp"

namespace npelab::bounds {

// Runs the whole suite for p in `ps` (subset of {2..8}); a_cap >= 16 is the
// spec'd operating range, smaller caps may render totals inconclusive.
std::vector<BoundReport> lemma_ratio_suite(const std::vector<int>& ps, int a_cap);

}  // namespace npelab::bounds
