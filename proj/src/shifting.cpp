#include "setfam/shifting.hpp"

#include <algorithm>
#include <bit>

namespace setfam {

namespace {

void check_step(const Family& family, ShiftStep step) {
    detail::require_element(step.from_elem, family.ground_n());
    detail::require_element(step.to_elem, family.ground_n());
    if (step.from_elem == step.to_elem) {
        throw std::domain_error("shift step needs two distinct elements");
    }
}

}  // namespace

Family shift_family(const Family& family, ShiftStep step) {
    check_step(family, step);
    const std::uint64_t from_bit = std::uint64_t{1} << (step.from_elem - 1);
    const std::uint64_t to_bit = std::uint64_t{1} << (step.to_elem - 1);
    std::vector<std::uint64_t> out;
    out.reserve(family.size());
    for (std::uint64_t m : family.masks()) {
        if ((m & from_bit) != 0 && (m & to_bit) == 0) {
            const std::uint64_t moved = (m & ~from_bit) | to_bit;
            out.push_back(family.contains(moved) ? m : moved);
        } else {
            out.push_back(m);
        }
    }
    return Family(family.ground_n(), std::move(out));
}

std::pair<Family, Family> shift_pair(const Family& a, const Family& b, ShiftStep step) {
    detail::require_same_ground(a, b);
    return {shift_family(a, step), shift_family(b, step)};
}

std::pair<Family, Family> compress_pair(const Family& a, const Family& b) {
    detail::require_same_ground(a, b);
    Family cur_a = a;
    Family cur_b = b;
    const int n = a.ground_n();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = n; i >= 2; --i) {
            for (int j = 1; j < i; ++j) {
                auto [next_a, next_b] = shift_pair(cur_a, cur_b, ShiftStep{i, j});
                if (next_a != cur_a || next_b != cur_b) {
                    changed = true;
                    cur_a = std::move(next_a);
                    cur_b = std::move(next_b);
                }
            }
        }
    }
    return {std::move(cur_a), std::move(cur_b)};
}

bool window_intersection_check(const Family& a, const Family& b, int window_t) {
    detail::require_same_ground(a, b);
    if (window_t < 0 || window_t > a.ground_n()) {
        throw std::domain_error("window size outside ground set");
    }
    const std::uint64_t window = full_mask(window_t);
    for (std::uint64_t ma : a.masks()) {
        for (std::uint64_t mb : b.masks()) {
            if ((ma & mb & window) == 0) {
                return false;
            }
        }
    }
    return true;
}

TraceProfile trace_profile(const Family& family, int window_t) {
    if (window_t < 0 || window_t > family.ground_n()) {
        throw std::domain_error("window size outside ground set");
    }
    const std::uint64_t window = full_mask(window_t);
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(window_t) + 1);
    for (std::uint64_t m : family.masks()) {
        const std::uint64_t trace = m & window;
        by_size[static_cast<std::size_t>(std::popcount(trace))].push_back(trace);
    }
    TraceProfile profile;
    profile.window_t = window_t;
    profile.classes.reserve(by_size.size());
    for (auto& traces : by_size) {
        profile.classes.emplace_back(window_t, std::move(traces));
    }
    return profile;
}

}  // namespace setfam
