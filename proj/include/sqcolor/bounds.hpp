#pragma once

#include "sqcolor/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqcolor {

// Degeneracy bound for the square of a graph with mad < 2k:
// max((2k-1)D - k^2 + k, (2k-2)D + 2k^3 + k^2 + 1, (k-1)D + k^4 + 2k^3 + 1).
long long ghost_degeneracy_bound(long long k, long long delta);

// Chromatic version: each term one higher, i.e. ghost_degeneracy_bound + 1.
long long ghost_chromatic_bound(long long k, long long delta);

struct Mad4Bounds {
    long long upper = 0;       // 3*delta + 1
    long long lower = 0;       // ceil(5*delta / 2)
    bool upper_in_range = false;  // the upper bound is stated for delta >= 8
};
Mad4Bounds mad4_bounds(long long delta);

// Planar-square bound: 7 for delta 3, delta+5 for 4..7, floor(3*delta/2)+1
// beyond. Throws below delta 3.
long long wegner_bound(long long delta);

// delta + 1 when mad < 16/7, nothing otherwise.
std::optional<long long> hds_bound(const Rational& mad_value, long long delta);

struct BoundRow {
    long long k = 0;
    long long delta = 0;
    long long ghost_degeneracy = 0;
    long long ghost_chromatic = 0;
    long long mad4_upper = 0;
    long long mad4_lower = 0;
    long long wegner = -1;  // -1 when delta < 3
    bool mad4_upper_in_range = false;
    // Which of the two square-coloring upper bounds is smaller on this row.
    enum class Best { mad4, ghost, tie } best_upper = Best::tie;
};

struct BoundTable {
    std::vector<BoundRow> rows;
};

BoundTable compare_table(long long k, long long delta_min, long long delta_max);

// Aligned text or CSV with columns
// k,delta,ghost_deg,ghost_chi,mad4_up,mad4_low,wegner,best_upper. Rows whose
// parameters fall outside the stated hypotheses are marked in the text form.
std::string format_bound_table(const BoundTable& table, bool csv);

} // namespace sqcolor
