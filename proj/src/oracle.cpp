#include "ppm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace ppm {

void OracleLimits::check(int n, PathKind kind) const {
    if (force) return;
    const int cap = kind == PathKind::delannoy ? delannoy_cap : lattice_cap;
    if (n > cap)
        throw std::invalid_argument("oracle: n = " + std::to_string(n) + " exceeds the cap " +
                                    std::to_string(cap) + " (use --force to lift it)");
}

BigInt DistributionTable::total_paths() const {
    BigInt t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

MultiPoly DistributionTable::as_polynomial(const std::vector<Var>& vars) const {
    if (vars.size() != pattern_ids.size())
        throw std::invalid_argument("as_polynomial: need one variable per pattern");
    MultiPoly out;
    for (const auto& [vec, cnt] : counts) {
        Monomial m{};
        for (size_t i = 0; i < vars.size(); ++i)
            m[static_cast<size_t>(vars[i])] += vec[i];
        out += MultiPoly::monomial(m, BigRational(cnt));
    }
    return out;
}

namespace {

// Count vector of the tracked patterns for one path. Canonical length-4
// patterns come from the single-pass profile; anything else is counted by
// its own window scan.
struct PatternCounter {
    std::vector<PairedPattern> patterns;
    bool all_canonical;

    explicit PatternCounter(const std::vector<PairedPattern>& pats) : patterns(pats) {
        all_canonical = std::all_of(pats.begin(), pats.end(),
                                    [](const PairedPattern& p) { return p.canonical.has_value(); });
    }

    std::vector<std::uint8_t> count(const PathWord& path) const {
        std::vector<std::uint8_t> vec(patterns.size(), 0);
        if (all_canonical) {
            MatchProfile prof = match_profile(path);
            for (size_t i = 0; i < patterns.size(); ++i)
                vec[i] = static_cast<std::uint8_t>(prof.at(*patterns[i].canonical));
        } else {
            for (size_t i = 0; i < patterns.size(); ++i) {
                PatternSet one;
                one.patterns = {patterns[i]};
                vec[i] = static_cast<std::uint8_t>(match_count(path, one));
            }
        }
        return vec;
    }
};

using CountMap = std::map<std::vector<std::uint8_t>, BigInt>;

void merge_into(CountMap& into, const CountMap& from) {
    for (const auto& [k, v] : from) into[k] += v;
}

CountMap count_over_paths(int n, PathKind kind, const PatternCounter& counter, int jobs) {
    if (jobs <= 1 || n < 4) {
        CountMap counts;
        for_each_path(n, kind, [&](const PathWord& p) { counts[counter.count(p)] += 1; });
        return counts;
    }
    // partition lexicographically by prefix; merge is a plain sum, so the
    // result is independent of the partitioning
    const int depth = std::min(3, n);
    std::vector<std::string> prefixes = enumeration_prefixes(n, kind, depth);
    std::vector<CountMap> partial(prefixes.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            CountMap local;
            for_each_path_with_prefix(n, kind, prefixes[i],
                                      [&](const PathWord& p) { local[counter.count(p)] += 1; });
            partial[i] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(jobs, static_cast<int>(prefixes.size()));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    CountMap counts;
    for (const CountMap& part : partial) merge_into(counts, part);
    return counts;
}

} // namespace

DistributionTable joint_distribution(int n, const std::vector<PairedPattern>& patterns,
                                     PathKind kind, const OracleLimits& limits) {
    limits.check(n, kind);
    if (patterns.empty()) throw std::invalid_argument("joint_distribution: no patterns");
    DistributionTable table;
    table.n = n;
    for (const auto& p : patterns) table.pattern_ids.push_back(p.id());
    PatternCounter counter(patterns);
    table.counts = count_over_paths(n, kind, counter, limits.jobs);
    return table;
}

namespace {

// Oracle polynomial for the scalar catalog entries.
MultiPoly scalar_oracle(GFName name, int n) {
    BigInt cnt = 0;
    MultiPoly poly;
    switch (name) {
    case GFName::C:
        for_each_path(n, PathKind::lattice, [&](const PathWord& p) {
            if (is_dyck(p)) cnt += 1;
        });
        return MultiPoly(BigRational(cnt));
    case GFName::Cxt:
        for_each_path(n, PathKind::lattice, [&](const PathWord& p) {
            if (!is_dyck(p)) return;
            // interior returns of a weakly-below path are its diagonal touches
            poly += MultiPoly::monomial(
                monomial_of(Var::x, static_cast<int>(touch_events(p).size())), 1);
        });
        return poly;
    case GFName::D:
        for_each_path(n, PathKind::delannoy, [&](const PathWord& p) {
            int x = 0, y = 0;
            for (char c : p.word()) {
                x += (c != 'N');
                y += (c != 'E');
                if (y > x) return;
            }
            cnt += 1;
        });
        return MultiPoly(BigRational(cnt));
    case GFName::Dlittle:
        for_each_path(n, PathKind::delannoy, [&](const PathWord& p) {
            int x = 0, y = 0;
            for (char c : p.word()) {
                if (c == 'D' && x == y) return; // diagonal D step
                x += (c != 'N');
                y += (c != 'E');
                if (y > x) return;
            }
            cnt += 1;
        });
        return MultiPoly(BigRational(cnt));
    default:
        throw std::logic_error("scalar_oracle: not a scalar entry");
    }
}

} // namespace

VerificationReport verify(GFName name, int n_max, const OracleLimits& limits) {
    VerificationReport report;
    report.name = gf_name_str(name);
    const PathKind kind = gf_path_kind(name);
    const auto pattern_vars = gf_patterns(name);
    TruncatedSeries<MultiPoly> built = build(name, n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        MultiPoly expected;
        if (pattern_vars.empty()) {
            expected = scalar_oracle(name, n);
        } else {
            std::vector<PairedPattern> pats;
            std::vector<Var> vars;
            for (const auto& [p, v] : pattern_vars) {
                pats.push_back(p);
                vars.push_back(v);
            }
            expected = joint_distribution(n, pats, kind, limits).as_polynomial(vars);
        }
        const MultiPoly& actual = built.coeff(n);
        row.pass = expected == actual;
        row.expected = expected.str();
        row.actual = actual.str();
        if (!row.pass) {
            MultiPoly diff = actual - expected;
            row.first_diff_monomial = MultiPoly::monomial(diff.terms().begin()->first, 1).str();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool VerificationReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

BigInt total_statistic(int n, PathKind kind,
                       const std::function<std::uint64_t(const PathWord&)>& statistic,
                       const OracleLimits& limits) {
    limits.check(n, kind);
    BigInt total = 0;
    for_each_path(n, kind, [&](const PathWord& p) { total += statistic(p); });
    return total;
}

const std::vector<std::string>& statistic_names() {
    static const std::vector<std::string> names = {
        "p1", "p2", "p3", "p4", "p5", "p6", "east-below", "north-above",
        "bounce-", "bounce+", "crossh", "crossv", "touches", "dyck-area",
    };
    return names;
}

std::optional<std::function<std::uint64_t(const PathWord&)>> statistic_by_name(std::string_view s) {
    if (s.size() == 2 && s[0] == 'p' && s[1] >= '1' && s[1] <= '6') {
        const int i = s[1] - '0';
        return [i](const PathWord& p) { return static_cast<std::uint64_t>(match_profile(p).at(i)); };
    }
    if (s == "east-below") return [](const PathWord& p) { return static_cast<std::uint64_t>(east_below_subdiagonal(p)); };
    if (s == "north-above") return [](const PathWord& p) { return static_cast<std::uint64_t>(north_above_superdiagonal(p)); };
    if (s == "bounce-") return [](const PathWord& p) { return static_cast<std::uint64_t>(bounce_minus(p)); };
    if (s == "bounce+") return [](const PathWord& p) { return static_cast<std::uint64_t>(bounce_plus(p)); };
    if (s == "crossh") return [](const PathWord& p) { return static_cast<std::uint64_t>(cross_h(p)); };
    if (s == "crossv") return [](const PathWord& p) { return static_cast<std::uint64_t>(cross_v(p)); };
    if (s == "touches") return [](const PathWord& p) { return static_cast<std::uint64_t>(touch_events(p).size()); };
    if (s == "dyck-area") return [](const PathWord& p) { return is_dyck(p) ? dyck_area(p) : 0; };
    return std::nullopt;
}

} // namespace ppm
