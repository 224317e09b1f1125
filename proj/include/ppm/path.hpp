#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ppm {

enum class Step : char { east = 'E', north = 'N', diagonal = 'D' };

enum class PathKind { lattice, delannoy };

/**
 * A path from [0,0] to [n,n] stored as its word over {E,N} (lattice) or
 * {E,N,D} (Delannoy). Positions are 1-based everywhere.
 *
 * Lattice:  #E = #N = n, length 2n.
 * Delannoy: #E + #D = #N + #D = n, so #E = #N.
 */
class PathWord {
public:
    PathWord() = default;

    // Throws std::invalid_argument on illegal characters, D in lattice mode,
    // or unbalanced words.
    static PathWord parse(std::string_view text, PathKind kind = PathKind::lattice);

    const std::string& word() const { return word_; }
    int semisize() const { return semisize_; }
    PathKind kind() const { return kind_; }
    int length() const { return static_cast<int>(word_.size()); }

    // Number of E/N pairs (= #E = #N); equals semisize for lattice paths.
    int pair_count() const { return pair_count_; }

    bool has_diagonal_steps() const { return pair_count_ != semisize_; }

    char at(int pos) const { return word_[static_cast<size_t>(pos - 1)]; } // 1-based

    bool operator==(const PathWord&) const = default;
    auto operator<=>(const PathWord&) const = default;

private:
    std::string word_;
    int semisize_ = 0;
    int pair_count_ = 0;
    PathKind kind_ = PathKind::lattice;
};

// The 2 x n encoding of a lattice path: bottom row holds the 1-based word
// positions of the east steps, top row those of the north steps. Both rows
// strictly increasing. A "full" array uses each of 1..2n exactly once;
// select_columns produces partial arrays that reduce() renormalizes.
struct TwoRowArray {
    std::vector<int> bottom;
    std::vector<int> top;

    int width() const { return static_cast<int>(bottom.size()); }
    bool operator==(const TwoRowArray&) const = default;
};

// Sorted subset of [n], 1-based.
struct IndexSet {
    std::vector<int> indices;

    static IndexSet of(std::initializer_list<int> v);
    // Comma-separated 1-based indices, e.g. "1,3". Empty string -> empty set.
    static IndexSet parse(std::string_view text);
    static IndexSet full(int n);
    static IndexSet window(int j, int k); // {j, ..., j+k-1}

    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const IndexSet&) const = default;
};

TwoRowArray to_array(const PathWord& path);
PathWord from_array(const TwoRowArray& array);

// Order-isomorphic relabeling: the i-th smallest entry becomes i.
// Accepts partial arrays; throws on duplicate entries.
TwoRowArray reduce(const TwoRowArray& array);

TwoRowArray select_columns(const TwoRowArray& array, const IndexSet& columns);

// ps_L(A): keep the i-th E and the i-th N exactly for i in A. For Delannoy
// words the D steps are dropped as well, so the result is always a lattice
// path of semisize |A|.
PathWord paired_subword(const PathWord& path, const IndexSet& keep);

// Streams every path of semisize n exactly once in lexicographic word order
// with E < N < D.
void for_each_path(int n, PathKind kind, const std::function<void(const PathWord&)>& fn);

// Restartable variant: only paths whose word starts with `prefix`. The prefix
// itself must be extendable; an infeasible prefix yields nothing.
void for_each_path_with_prefix(int n, PathKind kind, std::string_view prefix,
                               const std::function<void(const PathWord&)>& fn);

// All feasible prefixes of the given length, in enumeration order. Used to
// partition the path space across workers.
std::vector<std::string> enumeration_prefixes(int n, PathKind kind, int length);

} // namespace ppm
