#pragma once

#include "ppm/bijections.hpp"
#include "ppm/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ppm {

/**
 * Sequence export, per-path reports, asymptotics tables and the aggregated
 * verification run. Everything exact lives in BigInt/BigRational; doubles
 * appear only in display columns.
 */

struct SequenceRecord {
    std::string name;
    int offset = 0;              // index of terms[0]
    std::vector<BigInt> terms;
    std::string provenance;      // "catalog" | "oracle" | "formula"
    std::string oeis;            // static annotation, may be empty
};

// Specs understood by sequence_by_spec / export-bfile:
//   catalan | schroder | schroder-little
//   gf:<name>[:var=val,...]           series coefficients, fully specialized
//   exactly:<name>:<var>=<k>[,...]    exact-monomial slice
//   expect-num:<name>                 expectation numerators
//   parity-even:<name> | parity-odd:<name>
//   formula:total-p1 | formula:total-p2 | formula:total-touch
//   formula:even-bounce | formula:odd-bounce
SequenceRecord sequence_by_spec(const std::string& spec, int order);
const std::vector<std::string>& sequence_spec_examples();

// OEIS b-file body: "n a(n)" lines, newline-terminated, nothing else.
// Byte-deterministic for a given record and range.
std::string bfile_text(const SequenceRecord& rec, std::optional<int> from = std::nullopt,
                       std::optional<int> to = std::nullopt);

struct PathReport {
    std::string word;
    PathKind kind = PathKind::lattice;
    int semisize = 0;
    MatchProfile profile;
    std::uint32_t east_below = 0;
    std::uint32_t north_above = 0;
    std::uint32_t bounce_minus = 0;
    std::uint32_t bounce_plus = 0;
    std::uint32_t cross_h = 0;
    std::uint32_t cross_v = 0;
    bool dyck = false;
    std::optional<std::uint64_t> area; // only for Dyck paths
};

PathReport profile_path(const PathWord& path);
std::string path_report_json(const PathReport& report);
std::string ascii_grid(const PathWord& path);

struct AsymptoticsRow {
    int n = 0;
    BigRational exact;
    double exact_value = 0;
    double asymptote = 0;
    double relative_gap = 0;
};

struct AsymptoticsTable {
    std::string target;
    std::string formula; // the printed asymptotic form
    std::vector<AsymptoticsRow> rows;

    bool gap_monotone_decreasing() const;
};

// Targets: E[P1] E[P2] E[P3] E[P16] E[P25] E[P2345].
const std::vector<std::string>& asymptotics_targets();
AsymptoticsTable asymptotics(const std::string& target, int n_lo, int n_hi);

// Values the source tables print incorrectly; the enumeration value is
// pinned everywhere and the printed one kept for transparency.
struct DocumentedOverride {
    std::string series;
    int index;
    BigInt printed;
    BigInt pinned;
};
const std::vector<DocumentedOverride>& documented_overrides();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyAllOutcome {
    bool pass = false;
    std::vector<CheckResult> checks;
    std::string json; // the full machine-readable report
};

// Catalog/oracle agreement for every entry, theorem equivalences, bijection
// checks. Failures are aggregated, never short-circuited.
VerifyAllOutcome verify_all(int n_max, const OracleLimits& limits = {});

// Persist as <dir>/verify-<timestamp>.json; returns the file path.
std::string write_run_log(const VerifyAllOutcome& outcome, const std::string& dir);

std::string verification_report_json(const VerificationReport& report);

// Machine form of a series: per t-power, a list of {exp, num, den} objects,
// exp being the exponent vector over (x, x1..x6).
std::string series_json(const TruncatedSeries<MultiPoly>& s);
std::string series_json(const TruncatedSeries<BigRational>& s);

} // namespace ppm
