#pragma once

#include "ppm/path.hpp"

#include <cstdint>
#include <vector>

namespace ppm {

enum class TouchKind {
    bounce_right,     // arrived by N, left by E   (= P2 matches)
    bounce_left,      // arrived by E, left by N   (= P5 matches)
    cross_horizontal, // arrived by E, left by E   (= P3 matches)
    cross_vertical,   // arrived by N, left by N   (= P4 matches)
};

// An interior diagonal point [x,x] of the path, classified by the steps
// around it. For Delannoy paths a maximal run of diagonal points joined by D
// steps collapses to one event at the run's first point, classified by the
// non-D steps entering and leaving the run; runs touching an endpoint give
// no event, so a D step through the diagonal is neither bounce nor cross.
struct TouchEvent {
    int x;
    TouchKind kind;

    bool operator==(const TouchEvent&) const = default;
};

std::vector<TouchEvent> touch_events(const PathWord& path);

std::uint32_t bounce_minus(const PathWord& path); // bounce_right count
std::uint32_t bounce_plus(const PathWord& path);  // bounce_left count
std::uint32_t cross_h(const PathWord& path);
std::uint32_t cross_v(const PathWord& path);

// Touches arrived at by a north step: bounce_right + cross_vertical.
std::uint32_t north_touch(const PathWord& path);
// All crossings: cross_horizontal + cross_vertical.
std::uint32_t crossings(const PathWord& path);
// All bounces: bounce_right + bounce_left.
std::uint32_t bounces(const PathWord& path);

// East steps strictly below y = x-1, i.e. inclusive prefix has #E >= #N + 2.
std::uint32_t east_below_subdiagonal(const PathWord& path);
// Mirror image: north steps strictly above y = x+1.
std::uint32_t north_above_superdiagonal(const PathWord& path);
// East steps strictly below y = x-c: inclusive prefix has #E >= #N + c + 1.
// c = 1 recovers east_below_subdiagonal.
std::uint32_t east_below_line(const PathWord& path, int c);

// Every prefix has #E >= #N (path stays weakly below the diagonal).
bool is_dyck(const PathWord& path);

// Area between the path and the x-axis: sum over east steps of the height at
// which they are taken. Matches the series anchor sum 0+1+2+2+3 = 8 over the
// five Dyck paths of semisize 3. Throws std::domain_error on non-Dyck input.
std::uint64_t dyck_area(const PathWord& path);

} // namespace ppm
