#ifndef SETFAM_SHIFTING_HPP
#define SETFAM_SHIFTING_HPP

#include <utility>
#include <vector>

#include "setfam/core.hpp"

namespace setfam {

// One replacement step: occurrences of from_elem become to_elem.
struct ShiftStep {
    int from_elem = 0;
    int to_elem = 0;
};

// Distinct traces F ∩ [t] of a family, grouped by trace cardinality:
// classes[i] holds the i-element traces as a family over ground set [t].
struct TraceProfile {
    int window_t = 0;
    std::vector<Family> classes;
};

// Replaces from_elem by to_elem in every member where the replacement
// result is not already present in the input family; other members are
// kept. Preserves family size and member cardinalities.
Family shift_family(const Family& family, ShiftStep step);

// Applies the same step to both families. Applied simultaneously, the step
// preserves the cross-intersecting property.
std::pair<Family, Family> shift_pair(const Family& a, const Family& b, ShiftStep step);

// Repeatedly applies every step that moves an element to a smaller index
// (sweeps ordered by from_elem descending, to_elem ascending) until a full
// sweep leaves both families unchanged. Terminates because every effective
// step strictly decreases the total element sum.
std::pair<Family, Family> compress_pair(const Family& a, const Family& b);

// True iff every a in A and b in B share an element of the window [t].
bool window_intersection_check(const Family& a, const Family& b, int window_t);

// Distinct traces of the family on the window [t], grouped by size.
TraceProfile trace_profile(const Family& family, int window_t);

}  // namespace setfam

#endif
