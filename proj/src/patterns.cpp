#include "ppm/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppm {

const std::array<const char*, 7>& canonical_pattern_words() {
    static const std::array<const char*, 7> words = {"", "EENN", "ENEN", "NEEN", "ENNE", "NENE", "NNEE"};
    return words;
}

PairedPattern PairedPattern::canonical_pattern(int id) {
    if (id < 1 || id > 6) throw std::out_of_range("canonical pattern id must be 1..6");
    PairedPattern p;
    p.word = PathWord::parse(canonical_pattern_words()[static_cast<size_t>(id)], PathKind::lattice);
    p.canonical = id;
    return p;
}

PairedPattern PairedPattern::parse(std::string_view text) {
    if (text.size() == 2 && (text[0] == 'P' || text[0] == 'p') && text[1] >= '1' && text[1] <= '6')
        return canonical_pattern(text[1] - '0');
    PairedPattern p;
    p.word = PathWord::parse(text, PathKind::lattice);
    if (p.word.semisize() == 0)
        throw std::invalid_argument("empty pattern");
    for (int i = 1; i <= 6; ++i)
        if (p.word.word() == canonical_pattern_words()[static_cast<size_t>(i)]) p.canonical = i;
    return p;
}

std::string PairedPattern::id() const {
    if (canonical) return "P" + std::to_string(*canonical);
    return word.word();
}

PatternSet PatternSet::of(std::initializer_list<const char*> words) {
    PatternSet s;
    for (const char* w : words) s.patterns.push_back(PairedPattern::parse(w));
    if (s.patterns.empty()) throw std::invalid_argument("empty pattern set");
    for (const auto& p : s.patterns)
        if (p.semisize() != s.semisize())
            throw std::invalid_argument("pattern set mixes semisizes");
    return s;
}

PatternSet PatternSet::parse(std::string_view text) {
    PatternSet s;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = text.substr(pos, comma - pos);
        if (!tok.empty()) s.patterns.push_back(PairedPattern::parse(tok));
        pos = comma + 1;
    }
    if (s.patterns.empty()) throw std::invalid_argument("empty pattern set");
    for (const auto& p : s.patterns)
        if (p.semisize() != s.semisize())
            throw std::invalid_argument("pattern set mixes semisizes");
    return s;
}

bool PatternSet::contains_word(const std::string& w) const {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const PairedPattern& p) { return p.word.word() == w; });
}

std::uint32_t MatchProfile::total() const {
    std::uint32_t t = 0;
    for (int i = 1; i <= 6; ++i) t += counts[static_cast<size_t>(i)];
    return t;
}

std::uint32_t MatchProfile::total(std::initializer_list<int> ids) const {
    std::uint32_t t = 0;
    for (int i : ids) t += counts[static_cast<size_t>(i)];
    return t;
}

namespace {

// 1-based word positions of the E's and N's; the i-th entries form pair i.
struct PairPositions {
    std::vector<int> easts;
    std::vector<int> norths;

    explicit PairPositions(const PathWord& p) {
        easts.reserve(static_cast<size_t>(p.pair_count()));
        norths.reserve(static_cast<size_t>(p.pair_count()));
        int pos = 0;
        for (char c : p.word()) {
            ++pos;
            if (c == 'E') easts.push_back(pos);
            else if (c == 'N') norths.push_back(pos);
        }
    }

    // Word spelled by pairs {j,...,j+k-1} in relative order (merge of two
    // sorted runs; equivalent to reducing the selected array columns).
    void window_word(int j, int k, std::string& out) const {
        out.clear();
        size_t e = static_cast<size_t>(j - 1), n = static_cast<size_t>(j - 1);
        const size_t end_e = e + static_cast<size_t>(k), end_n = n + static_cast<size_t>(k);
        while (e < end_e || n < end_n) {
            if (n >= end_n || (e < end_e && easts[e] < norths[n])) {
                out.push_back('E');
                ++e;
            } else {
                out.push_back('N');
                ++n;
            }
        }
    }
};

} // namespace

bool match_at(const PathWord& path, const PatternSet& set, int j) {
    const int k = set.semisize();
    const int m = path.pair_count();
    if (j < 1 || j > m - k + 1)
        throw std::out_of_range("match_at: window start " + std::to_string(j) + " out of range");
    PairPositions pp(path);
    std::string w;
    pp.window_word(j, k, w);
    return set.contains_word(w);
}

std::uint32_t match_count(const PathWord& path, const PatternSet& set) {
    const int k = set.semisize();
    const int m = path.pair_count();
    if (m < k) return 0;
    PairPositions pp(path);
    std::string w;
    std::uint32_t cnt = 0;
    for (int j = 1; j <= m - k + 1; ++j) {
        pp.window_word(j, k, w);
        if (set.contains_word(w)) ++cnt;
    }
    return cnt;
}

bool avoids(const PathWord& path, const PatternSet& set) { return match_count(path, set) == 0; }

namespace {

bool occurs_rec(const PairPositions& pp, const PatternSet& set, std::vector<int>& chosen,
                int next, int m, int k, std::string& buf) {
    const int have = static_cast<int>(chosen.size());
    if (have == k) {
        buf.clear();
        // merge the selected pairs' positions in order
        std::vector<std::pair<int, char>> pos;
        pos.reserve(static_cast<size_t>(2 * k));
        for (int i : chosen) {
            pos.emplace_back(pp.easts[static_cast<size_t>(i - 1)], 'E');
            pos.emplace_back(pp.norths[static_cast<size_t>(i - 1)], 'N');
        }
        std::sort(pos.begin(), pos.end());
        for (auto& [p, c] : pos) buf.push_back(c);
        return set.contains_word(buf);
    }
    if (m - next + 1 < k - have) return false; // not enough pairs left
    for (int i = next; i <= m; ++i) {
        chosen.push_back(i);
        if (occurs_rec(pp, set, chosen, i + 1, m, k, buf)) return true;
        chosen.pop_back();
        if (m - i < k - have) break;
    }
    return false;
}

} // namespace

bool occurs(const PathWord& path, const PatternSet& set) {
    const int k = set.semisize();
    const int m = path.pair_count();
    if (m < k) return false;
    PairPositions pp(path);
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(k));
    std::string buf;
    return occurs_rec(pp, set, chosen, 1, m, k, buf);
}

MatchProfile match_profile(const PathWord& path) {
    MatchProfile prof;
    PairPositions pp(path);
    const int m = path.pair_count();
    for (int j = 0; j + 1 < m; ++j) {
        const int e1 = pp.easts[static_cast<size_t>(j)], e2 = pp.easts[static_cast<size_t>(j + 1)];
        const int n1 = pp.norths[static_cast<size_t>(j)], n2 = pp.norths[static_cast<size_t>(j + 1)];
        int which;
        if (e2 < n1) which = 1;                      // EENN
        else if (n2 < e1) which = 6;                 // NNEE
        else if (e1 < n1 && e2 < n2) which = 2;      // ENEN
        else if (e1 < n1) which = 4;                 // ENNE
        else if (e2 < n2) which = 3;                 // NEEN
        else which = 5;                              // NENE
        ++prof.counts[static_cast<size_t>(which)];
    }
    return prof;
}

PathWord reflect(const PathWord& path) {
    std::string w = path.word();
    for (char& c : w) {
        if (c == 'E') c = 'N';
        else if (c == 'N') c = 'E';
    }
    return PathWord::parse(w, path.kind());
}

PathWord rotate(const PathWord& path) {
    std::string w = path.word();
    std::reverse(w.begin(), w.end());
    for (char& c : w) {
        if (c == 'E') c = 'N';
        else if (c == 'N') c = 'E';
    }
    return PathWord::parse(w, path.kind());
}

} // namespace ppm
