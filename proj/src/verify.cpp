#include "billiard/verify.hpp"

#include "billiard/numtheory.hpp"
#include "billiard/simulate.hpp"

#include <atomic>
#include <numeric>
#include <thread>

namespace billiard {

namespace {

struct CellInput {
    Rational p0;
    std::int64_t m, n;
    Rational rho;
};

VerifyCell check_cell(const CellInput& in, std::int64_t max_steps) {
    VerifyCell cell;
    cell.p0 = in.p0;
    cell.m = in.m;
    cell.n = in.n;
    cell.rho = in.rho;

    Generator g(Side::AB, in.p0, SlopeDescriptor::rational(Rational(in.m, in.n)),
                TableSpec{in.rho});
    cell.classified = classify(g);
    Trajectory traj = simulate(g, max_steps);

    switch (cell.classified.kind) {
        case OrbitClass::Kind::Periodic: {
            if (!traj.closed()) {
                cell.detail = "classified periodic but simulation did not close";
                return cell;
            }
            if (traj.period % 2 != 0) {
                cell.detail = "simulated period is odd";
                return cell;
            }
            if (traj.period != cell.classified.period || traj.horizontal_hits != cell.classified.p ||
                traj.vertical_hits != cell.classified.q) {
                cell.detail = "period/type mismatch: simulated " + std::to_string(traj.period) +
                              " (" + std::to_string(traj.horizontal_hits) + "," +
                              std::to_string(traj.vertical_hits) + ")";
                return cell;
            }
            break;
        }
        case OrbitClass::Kind::Singular: {
            if (!traj.hit_vertex()) {
                cell.detail = "classified singular but simulation did not reach a vertex";
                return cell;
            }
            std::int64_t bound = (cell.classified.diagonal.m + cell.classified.diagonal.n) - 1;
            if (static_cast<std::int64_t>(traj.collisions.size()) > bound) {
                cell.detail = "vertex reached after " + std::to_string(traj.collisions.size()) +
                              " collisions, bound " + std::to_string(bound);
                return cell;
            }
            break;
        }
        case OrbitClass::Kind::NonPeriodic:
            cell.detail = "rational slope classified as non-periodic";
            return cell;
    }
    cell.agree = true;
    return cell;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.max_denominator < 1 || options.max_sum < 2)
        throw std::domain_error("verify: need max_denominator >= 1 and max_sum >= 2");
    for (const Rational& rho : options.rhos)
        if (!(rho > Rational(0))) throw std::domain_error("verify: aspect ratio must be positive");

    // Unique reduced start positions a/b in [0, 1), b <= max_denominator.
    std::vector<Rational> starts;
    starts.emplace_back(0);
    for (std::int64_t b = 2; b <= options.max_denominator; ++b)
        for (std::int64_t a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) starts.emplace_back(a, b);

    std::vector<CellInput> inputs;
    for (const Rational& rho : options.rhos)
        for (std::int64_t sum = 2; sum <= options.max_sum; ++sum)
            for (std::int64_t m = 1; m < sum; ++m) {
                std::int64_t n = sum - m;
                if (std::gcd(m, n) != 1) continue;
                for (const Rational& p0 : starts) inputs.push_back({p0, m, n, rho});
            }

    const std::int64_t max_steps =
        options.max_steps > 0 ? options.max_steps : default_max_steps();

    VerifyReport report;
    report.cells.resize(inputs.size());

    if (options.parallel && inputs.size() > 1) {
        const unsigned workers =
            std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                            static_cast<unsigned>(inputs.size())));
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= inputs.size()) break;
                report.cells[idx] = check_cell(inputs[idx], max_steps);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            report.cells[i] = check_cell(inputs[i], max_steps);
    }

    for (const VerifyCell& cell : report.cells) {
        if (!cell.agree) ++report.disagreements;
        if (cell.classified.periodic() && cell.classified.period % 2 != 0)
            report.odd_period_seen = true;
    }
    return report;
}

} // namespace billiard
