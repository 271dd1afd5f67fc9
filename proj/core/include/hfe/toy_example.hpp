#ifndef HFE_TOY_EXAMPLE_HPP
#define HFE_TOY_EXAMPLE_HPP

// The published toy instance: a 3-variable quadratic public key over GF(2)
// with K = F_2[t]/(t^3+t+1), the accompanying printed 7x7 evaluation system,
// and the printed alias polynomial. The demo solves the printed system
// verbatim, re-runs the interpolation attack under all four coordinate
// conventions, and reports any discrepancies.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hfe/field.hpp"
#include "hfe/hfe.hpp"
#include "hfe/linalg.hpp"
#include "hfe/sparse_poly.hpp"

namespace hfe::toy {

// F_8 = F_2[t]/(t^3 + t + 1).
FieldParams field_params();

// The published 3x3 public key (variables x1,x2,x3 = v[0],v[1],v[2]).
PublicKey public_key();

// The printed 7x7 system: matrix rows are the printed coefficient vectors of
// a..g (exponents 0..6), rhs the printed right-hand sides.
struct PrintedSystem {
    Mat<Gf> matrix;
    std::vector<FieldElement> rhs;
};
PrintedSystem printed_system(const Gf& gf);

// The printed alias: t^2 x^6 + (t^2+1) x^5 + (t^2+t+1) x^4 + (t^2+1) x^3 + (t^2+t) x^2 + 1.
SparsePoly printed_alias(const Gf& gf);

// The seven printed evaluation points 0, 1, t, t+1, t^2, t^2+1, t^2+t.
std::vector<FieldElement> printed_points(const Gf& gf);

struct ConventionResult {
    std::string name;            // "in-asc/out-asc", ...
    SparsePoly alias;            // recovered from the public key
    bool equals_printed = false;
    bool rhs_matches_printed = false;  // public-key route reproduces the printed rhs
};

struct ToyVerdict {
    bool system_consistent = false;
    std::size_t system_rank = 0;
    SparsePoly system_solution;
    bool solution_equals_printed = false;
    std::array<bool, 7> printed_rows_satisfied_by_printed_alias{};
    // (row, exponent) pairs where the printed coefficient differs from the
    // true power of the printed point.
    std::vector<std::pair<int, int>> coefficient_typos;
    std::vector<ConventionResult> conventions;
    std::string matching_convention;  // "none" when no convention reproduces Eq. 8
    bool printed_alias_matches_pk = false;
    std::array<std::string, 3> verdict_lines;
};

// Deterministic; complete in well under a second.
ToyVerdict run_demo();

}  // namespace hfe::toy

#endif
