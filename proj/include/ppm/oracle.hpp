#pragma once

#include "ppm/catalog.hpp"
#include "ppm/geometry.hpp"
#include "ppm/patterns.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ppm {

/**
 * Brute-force ground truth. Everything here enumerates paths and counts;
 * no closed form is consulted, so catalog bugs cannot leak in.
 */

struct OracleLimits {
    int lattice_cap = 10;
    int delannoy_cap = 8;
    bool force = false; // lifts the caps
    int jobs = 1;       // prefix-partitioned workers

    void check(int n, PathKind kind) const;
};

// Joint distribution of match counts over all paths of semisize n.
struct DistributionTable {
    int n = 0;
    std::vector<std::string> pattern_ids;         // one per tracked pattern
    std::map<std::vector<std::uint8_t>, BigInt> counts; // count-vector -> #paths

    BigInt total_paths() const;
    // sum over count-vectors of (#paths) * prod x_i^{c_i}
    MultiPoly as_polynomial(const std::vector<Var>& vars) const;
};

DistributionTable joint_distribution(int n, const std::vector<PairedPattern>& patterns,
                                     PathKind kind, const OracleLimits& limits = {});

struct VerificationRow {
    int n = 0;
    bool pass = false;
    std::string expected; // oracle polynomial
    std::string actual;   // catalog coefficient
    std::string first_diff_monomial;
};

struct VerificationReport {
    std::string name;
    std::vector<VerificationRow> rows;

    bool all_pass() const;
};

// Compare the closed-form build against enumeration for n = 0..n_max.
// For the scalar entries the oracle counts the matching path family
// (Dyck paths, Dyck paths by interior returns, subdiagonal Delannoy paths
// with / without diagonal D steps).
VerificationReport verify(GFName name, int n_max, const OracleLimits& limits = {});

// Sum of a per-path statistic over all paths of semisize n.
BigInt total_statistic(int n, PathKind kind,
                       const std::function<std::uint64_t(const PathWord&)>& statistic,
                       const OracleLimits& limits = {});

// Named statistics for the CLI: p1..p6, east-below, north-above, bounce-,
// bounce+, crossh, crossv, touches, dyck-area (Dyck paths only, others 0).
const std::vector<std::string>& statistic_names();
std::optional<std::function<std::uint64_t(const PathWord&)>> statistic_by_name(std::string_view);

} // namespace ppm
