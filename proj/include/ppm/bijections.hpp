#pragma once

#include "ppm/path.hpp"

#include <vector>

namespace ppm {

// x-coordinates of the interior diagonal points of a lattice path,
// increasing.
std::vector<int> diagonal_touches(const PathWord& path);

// Swap E and N in every step after the diagonal point [p,p]; the word before
// it is untouched. Throws std::invalid_argument unless [p,p] lies on the
// path. Flipping at 0 reflects the whole path; flipping at n is the
// identity.
PathWord flip_suffix(const PathWord& path, int p);

/**
 * Reflection map exchanging bounces and crossings: flip the suffix at the
 * first interior touch, then (of the evolving path) at the second, and so on
 * through all of them. The set of diagonal touch points is invariant under
 * each flip, which the implementation asserts. For every path
 *     bounces(result) = crossings(input),  crossings(result) = bounces(input),
 * and the map is injective (checked exhaustively in the tests).
 */
PathWord cross_to_bounce(const PathWord& path);

/**
 * Segment-flip map relating north-touches and crossings. With interior
 * touches p_1..p_j and sentinels p_0 = [0,0], p_{j+1} = [n,n], the part
 * between p_{i-1} and p_i is flipped exactly when p_i is a bounce-right or
 * horizontal-crossing position of the input path. (Classifying on the
 * evolving path instead changes nothing: flips before p_i never touch the
 * steps around p_i.)
 *
 * Satisfies north_touch(result) = crossings(input) on every path and is
 * injective, so it restricts to a bijection from paths with k crossings onto
 * paths with k north-touches for every k. No map can exchange the pair in
 * both directions pointwise: the joint distribution of (north_touch,
 * crossings) over semisize-n paths is asymmetric from n = 3 on.
 */
PathWord touch_to_cross(const PathWord& path);

} // namespace ppm
