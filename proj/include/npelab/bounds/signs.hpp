#pragma once
// Sign distribution of the four lattice kernels against the region
// predicates of the sign lemmas, plus CSV emission for the figure data.

#include <string>
#include <vector>

#include "npelab/bounds/reports.hpp"

namespace npelab::bounds {

enum class SignKind { CDC, CCD, AAB, AAB2 };

// Expected sign at a lattice point: +1 / -1 / 0 (resonant zero line).
int predicted_sign(SignKind kind, int m, int l, int p);

// Actual sign of the kernel.
int actual_sign(SignKind kind, int m, int l, int p);

struct SignMapResult {
    SignKind kind;
    int p;
    int extent;      // lattice swept over (0, extent]^2
    int mismatches;
    std::vector<std::string> mismatch_list;  // "m,l: got/want"
};

SignMapResult check_sign_map(SignKind kind, int p, int extent);

// CSV rows "m,l,sign,value" for figure reproduction.
std::string sign_map_csv(SignKind kind, int p, int extent);

std::string sign_kind_name(SignKind kind);

}  // namespace npelab::bounds
