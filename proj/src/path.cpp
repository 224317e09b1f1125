#include "ppm/path.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ppm {

PathWord PathWord::parse(std::string_view text, PathKind kind) {
    int easts = 0, norths = 0, diags = 0;
    for (char c : text) {
        switch (c) {
        case 'E': ++easts; break;
        case 'N': ++norths; break;
        case 'D':
            if (kind == PathKind::lattice)
                throw std::invalid_argument("lattice word must not contain 'D': " + std::string(text));
            ++diags;
            break;
        default:
            throw std::invalid_argument(std::string("illegal character '") + c + "' in path word");
        }
    }
    if (easts != norths)
        throw std::invalid_argument("unbalanced word: " + std::to_string(easts) + " E's vs " +
                                    std::to_string(norths) + " N's");
    PathWord p;
    p.word_ = std::string(text);
    p.semisize_ = easts + diags;
    p.pair_count_ = easts;
    p.kind_ = kind;
    return p;
}

IndexSet IndexSet::of(std::initializer_list<int> v) {
    IndexSet s;
    s.indices.assign(v);
    std::sort(s.indices.begin(), s.indices.end());
    return s;
}

IndexSet IndexSet::parse(std::string_view text) {
    IndexSet s;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string tok(text.substr(pos, comma - pos));
        if (!tok.empty()) {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1)
                throw std::invalid_argument("bad index '" + tok + "' in index set");
            s.indices.push_back(v);
        }
        pos = comma + 1;
    }
    std::sort(s.indices.begin(), s.indices.end());
    if (std::adjacent_find(s.indices.begin(), s.indices.end()) != s.indices.end())
        throw std::invalid_argument("duplicate index in index set");
    return s;
}

IndexSet IndexSet::full(int n) {
    IndexSet s;
    s.indices.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.indices[static_cast<size_t>(i)] = i + 1;
    return s;
}

IndexSet IndexSet::window(int j, int k) {
    IndexSet s;
    s.indices.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s.indices[static_cast<size_t>(i)] = j + i;
    return s;
}

TwoRowArray to_array(const PathWord& path) {
    if (path.has_diagonal_steps())
        throw std::invalid_argument("to_array: no 2 x n encoding for Delannoy paths");
    TwoRowArray t;
    const std::string& w = path.word();
    for (int i = 1; i <= path.length(); ++i)
        (w[static_cast<size_t>(i - 1)] == 'E' ? t.bottom : t.top).push_back(i);
    return t;
}

PathWord from_array(const TwoRowArray& array) {
    const int n = array.width();
    if (static_cast<int>(array.top.size()) != n)
        throw std::invalid_argument("from_array: rows differ in length");
    std::string w(static_cast<size_t>(2 * n), '?');
    auto place = [&](const std::vector<int>& row, char c) {
        int prev = 0;
        for (int v : row) {
            if (v < 1 || v > 2 * n || v <= prev)
                throw std::invalid_argument("from_array: rows must increase within 1..2n");
            if (w[static_cast<size_t>(v - 1)] != '?')
                throw std::invalid_argument("from_array: rows are not disjoint");
            w[static_cast<size_t>(v - 1)] = c;
            prev = v;
        }
    };
    place(array.bottom, 'E');
    place(array.top, 'N');
    // rows disjoint + in range + 2n slots means every slot got filled
    return PathWord::parse(w, PathKind::lattice);
}

TwoRowArray reduce(const TwoRowArray& array) {
    std::map<int, int> rank;
    for (int v : array.bottom) rank.emplace(v, 0);
    for (int v : array.top) {
        if (!rank.emplace(v, 0).second)
            throw std::invalid_argument("reduce: duplicate entry " + std::to_string(v));
    }
    if (rank.size() != array.bottom.size() + array.top.size())
        throw std::invalid_argument("reduce: duplicate entry within a row");
    int next = 1;
    for (auto& [v, r] : rank) r = next++;
    TwoRowArray out;
    out.bottom.reserve(array.bottom.size());
    out.top.reserve(array.top.size());
    for (int v : array.bottom) out.bottom.push_back(rank[v]);
    for (int v : array.top) out.top.push_back(rank[v]);
    return out;
}

TwoRowArray select_columns(const TwoRowArray& array, const IndexSet& columns) {
    TwoRowArray out;
    for (int c : columns.indices) {
        if (c < 1 || c > array.width())
            throw std::out_of_range("select_columns: column " + std::to_string(c) + " out of range");
        out.bottom.push_back(array.bottom[static_cast<size_t>(c - 1)]);
        out.top.push_back(array.top[static_cast<size_t>(c - 1)]);
    }
    return out;
}

PathWord paired_subword(const PathWord& path, const IndexSet& keep) {
    const int m = path.pair_count();
    std::vector<char> selected(static_cast<size_t>(m + 1), 0);
    for (int i : keep.indices) {
        if (i < 1 || i > m)
            throw std::out_of_range("paired_subword: pair index " + std::to_string(i) + " out of range");
        selected[static_cast<size_t>(i)] = 1;
    }
    std::string out;
    out.reserve(static_cast<size_t>(2 * keep.size()));
    int e = 0, n = 0;
    for (char c : path.word()) {
        if (c == 'E' && selected[static_cast<size_t>(++e)]) out.push_back('E');
        else if (c == 'N' && selected[static_cast<size_t>(++n)]) out.push_back('N');
    }
    return PathWord::parse(out, PathKind::lattice);
}

namespace {

void enumerate_rec(std::string& w, int x, int y, int n, PathKind kind,
                   const std::function<void(const PathWord&)>& fn) {
    if (x == n && y == n) {
        fn(PathWord::parse(w, kind));
        return;
    }
    // lexicographic with E < N < D
    if (x < n) {
        w.push_back('E');
        enumerate_rec(w, x + 1, y, n, kind, fn);
        w.pop_back();
    }
    if (y < n) {
        w.push_back('N');
        enumerate_rec(w, x, y + 1, n, kind, fn);
        w.pop_back();
    }
    if (kind == PathKind::delannoy && x < n && y < n) {
        w.push_back('D');
        enumerate_rec(w, x + 1, y + 1, n, kind, fn);
        w.pop_back();
    }
}

// Returns false if the prefix is not a feasible start of a path of semisize n.
bool prefix_endpoint(std::string_view prefix, int n, PathKind kind, int& x, int& y) {
    x = y = 0;
    for (char c : prefix) {
        if (c == 'E') ++x;
        else if (c == 'N') ++y;
        else if (c == 'D' && kind == PathKind::delannoy) { ++x; ++y; }
        else return false;
        if (x > n || y > n) return false;
    }
    return true;
}

} // namespace

void for_each_path(int n, PathKind kind, const std::function<void(const PathWord&)>& fn) {
    std::string w;
    w.reserve(static_cast<size_t>(2 * n));
    enumerate_rec(w, 0, 0, n, kind, fn);
}

void for_each_path_with_prefix(int n, PathKind kind, std::string_view prefix,
                               const std::function<void(const PathWord&)>& fn) {
    int x = 0, y = 0;
    if (!prefix_endpoint(prefix, n, kind, x, y)) return;
    std::string w(prefix);
    w.reserve(static_cast<size_t>(2 * n));
    enumerate_rec(w, x, y, n, kind, fn);
}

std::vector<std::string> enumeration_prefixes(int n, PathKind kind, int length) {
    std::vector<std::string> out{""};
    const std::string steps = kind == PathKind::delannoy ? "END" : "EN";
    for (int d = 0; d < length; ++d) {
        std::vector<std::string> next;
        for (const std::string& p : out) {
            for (char c : steps) {
                std::string q = p + c;
                int x, y;
                if (prefix_endpoint(q, n, kind, x, y)) next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace ppm
