#pragma once

#include "ppm/path.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppm {

/**
 * Paired patterns: balanced {E,N} words where the i-th E is paired with the
 * i-th N. A pattern of semisize k matches L at paired step j when the pairs
 * {j,...,j+k-1} of L, read in relative order, spell the pattern word.
 *
 * On Delannoy words the pairs are the E/N pairs and D steps are transparent:
 * they never join a pair and vanish from every extracted subword.
 */
struct PairedPattern {
    PathWord word;                 // lattice word, semisize k >= 1
    std::optional<int> canonical;  // 1..6 when the word is one of P1..P6

    // Accepts a word ("EENN") or a canonical name ("P1".."P6").
    static PairedPattern parse(std::string_view text);
    static PairedPattern canonical_pattern(int id); // P1..P6

    int semisize() const { return word.semisize(); }
    std::string id() const; // "P1".."P6" or the word itself
};

// The six length-4 patterns; index 1..6.
// P1=EENN, P2=ENEN, P3=NEEN, P4=ENNE, P5=NENE, P6=NNEE.
const std::array<const char*, 7>& canonical_pattern_words();

struct PatternSet {
    std::vector<PairedPattern> patterns; // nonempty, uniform semisize

    static PatternSet of(std::initializer_list<const char*> words);
    // Comma-separated words or canonical names: "P1,NNEE".
    static PatternSet parse(std::string_view text);

    int semisize() const { return patterns.front().semisize(); }
    bool contains_word(const std::string& w) const;
};

// Match counts for P1..P6; counts[i] is the Pi count, i = 1..6.
struct MatchProfile {
    std::array<std::uint32_t, 7> counts{};

    std::uint32_t at(int i) const { return counts[static_cast<size_t>(i)]; }
    std::uint32_t total() const;                       // = pair_count - 1 on any nonempty path
    std::uint32_t total(std::initializer_list<int>) const;
};

// True iff the pairs {j,...,j+k-1} of `path` spell a word of `set`.
// j is 1-based; throws std::out_of_range unless 1 <= j <= pairs - k + 1.
bool match_at(const PathWord& path, const PatternSet& set, int j);

// Number of j with match_at; 0 whenever the path has fewer than k pairs.
std::uint32_t match_count(const PathWord& path, const PatternSet& set);

bool avoids(const PathWord& path, const PatternSet& set);

// True iff some pair subset A of size k has ps_L(A) in the set. DFS over
// subsets with feasibility pruning; exponential worst case, fine for n <= 12.
bool occurs(const PathWord& path, const PatternSet& set);

// All six canonical counts in one pass over adjacent pair windows.
MatchProfile match_profile(const PathWord& path);

// Reflection about the diagonal: E <-> N.
PathWord reflect(const PathWord& path);
// 180 degree rotation: E <-> N, then reverse.
PathWord rotate(const PathWord& path);

} // namespace ppm
