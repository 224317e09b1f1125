#pragma once

#include "ppm/patterns.hpp"
#include "ppm/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppm {

/**
 * Every generating function in the catalog, each buildable two ways: from
 * its closed form (build) and from its first-return decomposition
 * (build_by_recurrence). F4/F5/F6 equal F3/F2/F1 by the reflection symmetry
 * and share their constructions.
 */
enum class GFName {
    F1, F2, F3, F4, F5, F6,     // single length-4 pattern, marking variable x
    F16, F25, F34, F24, F2345,  // joint distributions, variables x_i
    FS4,                        // P4 over Delannoy paths, variable x
    C,                          // Catalan series
    Cxt,                        // Catalan triangle: Dyck paths by interior returns
    D,                          // large Schroeder
    Dlittle,                    // little Schroeder
};

const std::vector<GFName>& all_gf_names();
std::string gf_name_str(GFName name);
std::optional<GFName> parse_gf_name(std::string_view text);

// Marking variables of the generating function, in pattern order.
std::vector<Var> gf_variables(GFName name);
// Patterns marked by the generating function, paired with their variables.
std::vector<std::pair<PairedPattern, Var>> gf_patterns(GFName name);
PathKind gf_path_kind(GFName name);

// --- scalar building blocks ---

// 1, 1, 2, 5, 14, 42, ... from (1 - sqrt(1-4t)) / (2t).
TruncatedSeries<BigRational> catalan(int order);
// Dyck paths of semisize j with i interior returns to the diagonal, the x^i
// coefficient of 1 + (1 - sqrt(1-4t)) / ((sqrt(1-4t)-1) x + 2).
TruncatedSeries<MultiPoly> catalan_triangle(int order);
// 1, 2, 6, 22, 90, 394, ...
TruncatedSeries<BigRational> schroder(int order);
// 1, 1, 3, 11, 45, 197, ...
TruncatedSeries<BigRational> little_schroder(int order);

// Exact truncated expansion of the named closed form. Scalar entries (C, D,
// Dlittle) come back with constant polynomial coefficients.
TruncatedSeries<MultiPoly> build(GFName name, int order);

// The same series assembled from the published G/H system (or fixed-point
// equation) solved inside the series ring.
TruncatedSeries<MultiPoly> build_by_recurrence(GFName name, int order);

// --- extractors ---

// Coefficient of v^k in each t-coefficient; remaining variables stay symbolic.
TruncatedSeries<MultiPoly> exactly_k(GFName name, Var v, int k, int order);

// Exact-monomial slice over all marking variables (unlisted marked variables
// are pinned at exponent 0, the "avoiding" reading).
TruncatedSeries<BigRational> gf_slice(GFName name, const Monomial& m, int order);

// All marking variables renamed to the single variable x.
TruncatedSeries<MultiPoly> diagonal(GFName name, int order);

struct ParityPair {
    TruncatedSeries<BigRational> even;
    TruncatedSeries<BigRational> odd;
};

// (F|+1 +- F|-1) / 2 with the listed variables at -1 in the minus branch and
// every other variable at 1. Empty list flips all of the name's variables.
ParityPair parity(GFName name, const std::vector<Var>& flip, int order);

// Coefficients of sum_v dF/dx_v evaluated at all-ones: the total number of
// marked matches over all paths of each semisize.
TruncatedSeries<BigRational> expectation_numerators(GFName name, int order);

// Numerators divided by the path counts (binomial(2n,n) or central Delannoy).
std::vector<BigRational> expectation(GFName name, int order);

// Paths of semisize n for the name's path kind.
BigInt path_count(GFName name, int n);

// Coefficient-wise partial specialization helpers.
TruncatedSeries<MultiPoly> substitute_var(const TruncatedSeries<MultiPoly>& s, Var v,
                                          const BigRational& value);
TruncatedSeries<MultiPoly> rename_var(const TruncatedSeries<MultiPoly>& s, Var from, Var to);

} // namespace ppm
