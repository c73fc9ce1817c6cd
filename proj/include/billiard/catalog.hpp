#pragma once

#include "billiard/simulate.hpp"
#include "billiard/table.hpp"
#include "billiard/unfolding.hpp"

#include <cstdint>
#include <vector>

namespace billiard {

/// One equivalence class of period-K orbits: slope m/n with m, n coprime and
/// m + n = K/2, type (p, q) = (2m, 2n), class C_K(p). The period-two entries
/// are the limiting pairs (1, 0) and (0, 1) with perpendicular launches.
struct CatalogEntry {
    std::int64_t m = 0;
    std::int64_t n = 0;
    int p = 0;
    int q = 0;
    bool limiting = false;
    Generator representative;
    std::vector<Rational> singular_start_list;

    std::string name(int period) const { return class_name(period, p); }
};

struct ClassCatalog {
    int period = 0;
    TableSpec table;
    std::vector<CatalogEntry> entries;
};

/// All equivalence classes of period-K orbits on the given table, ordered by
/// ascending m. For even K >= 4 there are exactly phi(K/2) of them, one per
/// totative m of K/2; each carries a representative generator started at
/// p0 = 1/p (half the fundamental-domain width, never a singular start).
/// K = 2 returns the two limiting period-two entries. Odd K is rejected:
/// no odd-period orbit exists on a rectangular table.
ClassCatalog enumerate_classes(int period, const TableSpec& table);

/// Runs the direct simulator on an entry's representative and checks that it
/// closes at exactly the cataloged period and type; a mismatch is an
/// internal consistency failure, not bad input.
Trajectory representative_orbit(const CatalogEntry& entry, int period);

} // namespace billiard
