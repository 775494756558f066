#include "sqcolor/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sqcolor {

namespace {
void check_params(long long k, long long delta) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
}
} // namespace

long long ghost_degeneracy_bound(long long k, long long delta) {
    check_params(k, delta);
    long long t1 = (2 * k - 1) * delta - k * k + k;
    long long t2 = (2 * k - 2) * delta + 2 * k * k * k + k * k + 1;
    long long t3 = (k - 1) * delta + k * k * k * k + 2 * k * k * k + 1;
    return std::max({t1, t2, t3});
}

long long ghost_chromatic_bound(long long k, long long delta) {
    return ghost_degeneracy_bound(k, delta) + 1;
}

Mad4Bounds mad4_bounds(long long delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    Mad4Bounds b;
    b.upper = 3 * delta + 1;
    b.lower = (5 * delta + 1) / 2;
    b.upper_in_range = delta >= 8;
    return b;
}

long long wegner_bound(long long delta) {
    if (delta < 3) throw std::invalid_argument("wegner bound needs delta >= 3");
    if (delta == 3) return 7;
    if (delta <= 7) return delta + 5;
    return 3 * delta / 2 + 1;
}

std::optional<long long> hds_bound(const Rational& mad_value, long long delta) {
    if (mad_value < Rational(16, 7)) return delta + 1;
    return std::nullopt;
}

BoundTable compare_table(long long k, long long delta_min, long long delta_max) {
    check_params(k, delta_min);
    if (delta_min > delta_max) throw std::invalid_argument("empty delta range");
    BoundTable table;
    for (long long d = delta_min; d <= delta_max; ++d) {
        BoundRow row;
        row.k = k;
        row.delta = d;
        row.ghost_degeneracy = ghost_degeneracy_bound(k, d);
        row.ghost_chromatic = row.ghost_degeneracy + 1;
        Mad4Bounds m = mad4_bounds(d);
        row.mad4_upper = m.upper;
        row.mad4_lower = m.lower;
        row.mad4_upper_in_range = m.upper_in_range;
        row.wegner = d >= 3 ? wegner_bound(d) : -1;
        if (row.mad4_upper < row.ghost_chromatic)
            row.best_upper = BoundRow::Best::mad4;
        else if (row.ghost_chromatic < row.mad4_upper)
            row.best_upper = BoundRow::Best::ghost;
        else
            row.best_upper = BoundRow::Best::tie;
        table.rows.push_back(row);
    }
    return table;
}

std::string format_bound_table(const BoundTable& table, bool csv) {
    std::ostringstream out;
    auto best_name = [](BoundRow::Best b) {
        switch (b) {
            case BoundRow::Best::mad4: return "3d+1";
            case BoundRow::Best::ghost: return "ghost";
            default: return "tie";
        }
    };
    if (csv) {
        out << "k,delta,ghost_deg,ghost_chi,mad4_up,mad4_low,wegner,best_upper\n";
        for (const auto& r : table.rows) {
            out << r.k << "," << r.delta << "," << r.ghost_degeneracy << ","
                << r.ghost_chromatic << "," << r.mad4_upper << "," << r.mad4_lower << ",";
            if (r.wegner >= 0) out << r.wegner;
            out << "," << best_name(r.best_upper) << "\n";
        }
        return out.str();
    }
    out << std::setw(4) << "k" << std::setw(7) << "delta" << std::setw(11) << "ghost_deg"
        << std::setw(11) << "ghost_chi" << std::setw(9) << "mad4_up" << std::setw(10)
        << "mad4_low" << std::setw(8) << "wegner" << std::setw(12) << "best_upper"
        << "\n";
    bool flagged = false;
    for (const auto& r : table.rows) {
        out << std::setw(4) << r.k << std::setw(7) << r.delta << std::setw(11)
            << r.ghost_degeneracy << std::setw(10) << r.ghost_chromatic
            << (r.k >= 2 ? " " : "*") << std::setw(8) << r.mad4_upper
            << (r.mad4_upper_in_range ? " " : "*") << std::setw(10) << r.mad4_lower
            << std::setw(8);
        if (r.wegner >= 0)
            out << r.wegner;
        else
            out << "-";
        out << std::setw(12) << best_name(r.best_upper) << "\n";
        if (!r.mad4_upper_in_range || r.k < 2) flagged = true;
    }
    if (flagged) out << "* outside stated hypotheses (delta < 8 or k < 2)\n";
    return out.str();
}

} // namespace sqcolor
