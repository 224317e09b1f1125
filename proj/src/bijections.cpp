#include "ppm/bijections.hpp"

#include "ppm/geometry.hpp"

#include <cassert>
#include <stdexcept>

namespace ppm {

namespace {

void require_lattice(const PathWord& path, const char* who) {
    if (path.has_diagonal_steps())
        throw std::invalid_argument(std::string(who) + ": lattice paths only");
}

std::string flipped_range(const std::string& w, size_t lo, size_t hi) {
    std::string out = w;
    for (size_t i = lo; i < hi; ++i) out[i] = out[i] == 'E' ? 'N' : 'E';
    return out;
}

} // namespace

std::vector<int> diagonal_touches(const PathWord& path) {
    require_lattice(path, "diagonal_touches");
    std::vector<int> out;
    int excess = 0;
    const int len = path.length();
    for (int i = 1; i < len; ++i) {
        excess += path.at(i) == 'E' ? 1 : -1;
        if (excess == 0 && i % 2 == 0) out.push_back(i / 2);
    }
    return out;
}

PathWord flip_suffix(const PathWord& path, int p) {
    require_lattice(path, "flip_suffix");
    const std::string& w = path.word();
    const size_t cut = static_cast<size_t>(2 * p);
    if (p < 0 || cut > w.size())
        throw std::invalid_argument("flip_suffix: point outside the path");
    int easts = 0;
    for (size_t i = 0; i < cut; ++i) easts += w[i] == 'E';
    if (easts != p)
        throw std::invalid_argument("flip_suffix: [" + std::to_string(p) + "," + std::to_string(p) +
                                    "] is not on the path");
    return PathWord::parse(flipped_range(w, cut, w.size()), PathKind::lattice);
}

PathWord cross_to_bounce(const PathWord& path) {
    require_lattice(path, "cross_to_bounce");
    const std::vector<int> touches = diagonal_touches(path);
    PathWord cur = path;
    for (size_t i = 0; i < touches.size(); ++i) {
        // suffix flips negate the prefix excess beyond the flip point, so the
        // touch set never moves
        assert(diagonal_touches(cur) == touches);
        cur = flip_suffix(cur, touches[i]);
    }
    return cur;
}

PathWord touch_to_cross(const PathWord& path) {
    require_lattice(path, "touch_to_cross");
    const int n = path.semisize();
    std::vector<int> bounds;
    bounds.push_back(0);
    for (int p : diagonal_touches(path)) bounds.push_back(p);
    bounds.push_back(n);

    std::vector<TouchEvent> events = touch_events(path);
    std::string w = path.word();
    for (size_t i = 1; i + 1 < bounds.size(); ++i) {
        const TouchKind kind = events[i - 1].kind;
        if (kind == TouchKind::bounce_right || kind == TouchKind::cross_horizontal)
            w = flipped_range(w, static_cast<size_t>(2 * bounds[i - 1]),
                              static_cast<size_t>(2 * bounds[i]));
    }
    return PathWord::parse(w, PathKind::lattice);
}

} // namespace ppm
