#include "billiard/catalog.hpp"

#include "billiard/numtheory.hpp"

#include <stdexcept>

namespace billiard {

ClassCatalog enumerate_classes(int period, const TableSpec& table) {
    if (period < 2)
        throw std::domain_error("enumerate_classes: period must be at least 2");
    if (period % 2 != 0)
        throw std::domain_error("enumerate_classes: no odd-period orbits exist on a rectangular table");

    ClassCatalog catalog;
    catalog.period = period;
    catalog.table = table;

    if (period == 2) {
        CatalogEntry up;
        up.m = 1;
        up.n = 0;
        up.p = 2;
        up.q = 0;
        up.limiting = true;
        up.representative = Generator(Side::AB, Rational(1, 2), SlopeDescriptor::vertical(), table);
        up.singular_start_list = singular_starts(2, 0);
        catalog.entries.push_back(up);

        CatalogEntry across;
        across.m = 0;
        across.n = 1;
        across.p = 0;
        across.q = 2;
        across.limiting = true;
        across.representative = Generator(Side::BC, Rational(1, 2), SlopeDescriptor::vertical(), table);
        across.singular_start_list = singular_starts(0, 2);
        catalog.entries.push_back(across);
        return catalog;
    }

    const std::uint64_t half = static_cast<std::uint64_t>(period) / 2;
    for (std::uint64_t m : totatives(half)) {
        std::uint64_t n = half - m;
        CatalogEntry entry;
        entry.m = static_cast<std::int64_t>(m);
        entry.n = static_cast<std::int64_t>(n);
        entry.p = static_cast<int>(2 * m);
        entry.q = static_cast<int>(2 * n);
        entry.representative =
            Generator(Side::AB, Rational(1, entry.p),
                      SlopeDescriptor::rational(Rational(entry.m, entry.n)), table);
        entry.singular_start_list = singular_starts(entry.p, entry.q);
        catalog.entries.push_back(entry);
    }
    return catalog;
}

Trajectory representative_orbit(const CatalogEntry& entry, int period) {
    Trajectory traj = simulate(entry.representative, std::max<std::int64_t>(4 * period, 64));
    if (!traj.closed() || traj.period != period || traj.horizontal_hits != entry.p ||
        traj.vertical_hits != entry.q)
        throw std::logic_error("representative_orbit: representative of " + entry.name(period) +
                               " does not close with the cataloged type");
    return traj;
}

} // namespace billiard
