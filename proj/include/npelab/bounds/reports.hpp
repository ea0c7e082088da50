#pragma once
// Verification records shared by the sign-map, ratio, ODE and certificate
// suites.

#include <string>
#include <vector>

namespace npelab::bounds {

enum class Status { Pass, Fail, Inconclusive };

struct BoundReport {
    std::string lemma;        // which claim
    std::string description;  // what was checked
    double bound = 0.0;       // the constant from the claim
    bool dominance = false;   // true: require worst(min) > bound; else worst+tail < bound
    double worst = 0.0;       // worst observed value (max for totals, min for dominance)
    double tail = 0.0;        // rigorous bound on the discarded part
    double margin = 0.0;      // distance to the constant, positive when inside
    std::string worst_at;     // parameters attaining the worst value
    std::string swept;        // ranges covered
    Status status = Status::Fail;
};

std::string status_str(Status s);

// Fills margin/status from worst, tail and bound.
void finalize(BoundReport& r);

}  // namespace npelab::bounds
