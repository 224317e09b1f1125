#include "ppm/geometry.hpp"

#include <stdexcept>

namespace ppm {

std::vector<TouchEvent> touch_events(const PathWord& path) {
    std::vector<TouchEvent> events;
    const std::string& w = path.word();
    const int len = path.length();
    int x = 0, y = 0;
    int i = 0;
    while (i < len) {
        const char c = w[static_cast<size_t>(i)];
        x += (c != 'N');
        y += (c != 'E');
        if (x == y && i + 1 < len) {
            // skip D steps sliding along the diagonal
            const int first = x;
            const char before = c;
            int j = i + 1;
            while (j < len && w[static_cast<size_t>(j)] == 'D') {
                ++x;
                ++y;
                ++j;
            }
            if (before != 'D' && j < len) {
                const char after = w[static_cast<size_t>(j)];
                TouchKind kind;
                if (before == 'N') kind = after == 'E' ? TouchKind::bounce_right : TouchKind::cross_vertical;
                else kind = after == 'N' ? TouchKind::bounce_left : TouchKind::cross_horizontal;
                events.push_back({first, kind});
            }
            i = j;
        } else {
            ++i;
        }
    }
    return events;
}

namespace {

std::uint32_t count_kind(const PathWord& path, TouchKind k) {
    std::uint32_t c = 0;
    for (const TouchEvent& e : touch_events(path))
        if (e.kind == k) ++c;
    return c;
}

} // namespace

std::uint32_t bounce_minus(const PathWord& path) { return count_kind(path, TouchKind::bounce_right); }
std::uint32_t bounce_plus(const PathWord& path) { return count_kind(path, TouchKind::bounce_left); }
std::uint32_t cross_h(const PathWord& path) { return count_kind(path, TouchKind::cross_horizontal); }
std::uint32_t cross_v(const PathWord& path) { return count_kind(path, TouchKind::cross_vertical); }

std::uint32_t north_touch(const PathWord& path) {
    return bounce_minus(path) + cross_v(path);
}

std::uint32_t crossings(const PathWord& path) {
    return cross_h(path) + cross_v(path);
}

std::uint32_t bounces(const PathWord& path) {
    return bounce_minus(path) + bounce_plus(path);
}

std::uint32_t east_below_subdiagonal(const PathWord& path) { return east_below_line(path, 1); }

std::uint32_t east_below_line(const PathWord& path, int c) {
    int excess = 0;
    std::uint32_t cnt = 0;
    for (char ch : path.word()) {
        if (ch == 'E') {
            if (++excess >= c + 1) ++cnt;
        } else if (ch == 'N') {
            --excess;
        }
        // D steps leave #E - #N unchanged
    }
    return cnt;
}

std::uint32_t north_above_superdiagonal(const PathWord& path) {
    int excess = 0;
    std::uint32_t cnt = 0;
    for (char ch : path.word()) {
        if (ch == 'N') {
            if (++excess >= 2) ++cnt;
        } else if (ch == 'E') {
            --excess;
        }
    }
    return cnt;
}

bool is_dyck(const PathWord& path) {
    int excess = 0;
    for (char ch : path.word()) {
        if (ch == 'E') ++excess;
        else if (ch == 'N') --excess;
        else return false; // Delannoy steps are outside the Dyck notion used here
        if (excess < 0) return false;
    }
    return true;
}

std::uint64_t dyck_area(const PathWord& path) {
    if (!is_dyck(path)) throw std::domain_error("dyck_area: path is not a Dyck path");
    std::uint64_t area = 0, height = 0;
    for (char ch : path.word()) {
        if (ch == 'N') ++height;
        else area += height;
    }
    return area;
}

} // namespace ppm
