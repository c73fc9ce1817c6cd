// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include "billiard/catalog.hpp"
#include "billiard/cli.hpp"
#include "billiard/numtheory.hpp"
#include "billiard/render.hpp"
#include "billiard/simulate.hpp"
#include "billiard/table.hpp"
#include "billiard/unfolding.hpp"
#include "billiard/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace billiard;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Generator square_gen(Rational p0, Rational slope) {
    return Generator(Side::AB, p0, SlopeDescriptor::rational(slope), TableSpec{Rational(1)});
}

std::set<std::pair<std::string, std::string>> collision_set(const Trajectory& t) {
    std::set<std::pair<std::string, std::string>> s;
    for (const CollisionPoint& c : t.collisions) {
        Point p = physical_coordinates(c, t.generator.table);
        s.insert({p.x.str(), p.y.str()});
    }
    return s;
}

bool expect(bool condition, const std::string& message, std::string& detail) {
    if (!condition && detail.empty()) detail = message;
    return condition;
}

const std::vector<Rational> kSweepRhos = {Rational(1), Rational(1, 2), Rational(3, 4),
                                          Rational(3, 2), Rational(2)};

// ---------------------------------------------------------------------------

bool criterion_totients(std::string& detail) {
    auto start = Clock::now();
    bool ok = true;
    for (std::uint64_t n = 1; n <= 500 && ok; ++n) {
        std::uint64_t reference = totient_bruteforce(n);
        ok &= expect(totient_product(n) == reference,
                     "product formula disagrees at N=" + std::to_string(n), detail);
        ok &= expect(totient_dft(n) == reference,
                     "cosine-sum formula disagrees at N=" + std::to_string(n), detail);
        ok &= expect(totatives(n).size() == reference,
                     "totative count disagrees at N=" + std::to_string(n), detail);
    }
    ok &= expect(totient_product(5) == 4, "phi(5) != 4", detail);
    double elapsed = seconds_since(start);
    ok &= expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s exceeds 5s", detail);
    return ok;
}

bool check_sequence(const Trajectory& t, const std::vector<Point>& expected, int p, int q,
                    std::string& detail) {
    bool ok = expect(t.closed(), "orbit did not close", detail);
    if (!ok) return false;
    ok &= expect(t.period == static_cast<int>(expected.size()), "wrong period", detail);
    ok &= expect(t.horizontal_hits == p && t.vertical_hits == q, "wrong type", detail);
    for (std::size_t i = 0; i < expected.size() && ok; ++i) {
        Point got = physical_coordinates(t.collisions[i], t.generator.table);
        ok &= expect(got == expected[i],
                     "collision " + std::to_string(i + 1) + " at (" + got.x.str() + ", " +
                         got.y.str() + "), expected (" + expected[i].x.str() + ", " +
                         expected[i].y.str() + ")",
                     detail);
    }
    return ok;
}

bool criterion_paper_orbits(std::string& detail) {
    Trajectory a = simulate(square_gen(Rational(1, 5), Rational(2)));
    bool ok = check_sequence(a,
                             {{Rational(7, 10), Rational(1)},
                              {Rational(1), Rational(2, 5)},
                              {Rational(4, 5), Rational(0)},
                              {Rational(3, 10), Rational(1)},
                              {Rational(0), Rational(2, 5)},
                              {Rational(1, 5), Rational(0)}},
                             4, 2, detail);

    Trajectory b = simulate(square_gen(Rational(3, 5), Rational(1, 2)));
    ok &= check_sequence(b,
                         {{Rational(1), Rational(1, 5)},
                          {Rational(0), Rational(7, 10)},
                          {Rational(3, 5), Rational(1)},
                          {Rational(1), Rational(4, 5)},
                          {Rational(0), Rational(3, 10)},
                          {Rational(3, 5), Rational(0)}},
                         2, 4, detail);
    return ok;
}

bool criterion_oracle_sweep(std::string& detail) {
    auto start = Clock::now();
    VerifyOptions options;
    options.max_denominator = 12;
    options.max_sum = 10;
    options.rhos = kSweepRhos;
    VerifyReport report = run_verify(options);
    bool ok = expect(report.disagreements == 0,
                     std::to_string(report.disagreements) + " disagreements", detail);
    ok &= expect(!report.odd_period_seen, "odd period observed", detail);
    double elapsed = seconds_since(start);
    ok &= expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s", detail);
    if (ok) detail = std::to_string(report.cells.size()) + " cells";
    return ok;
}

bool criterion_singular_starts(std::string& detail) {
    std::vector<Rational> starts = singular_starts(6, 4);
    bool ok = expect(starts == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)},
                     "singular starts for slope 3/2 are not {0, 1/3, 2/3}", detail);
    for (const Rational& s : starts) {
        Trajectory t = simulate(square_gen(s, Rational(3, 2)));
        ok &= expect(t.hit_vertex(), "start " + s.str() + " did not reach a vertex", detail);
        ok &= expect(static_cast<std::int64_t>(t.collisions.size()) + 1 <= 4,
                     "start " + s.str() + " needed more than 4 segments", detail);
    }
    for (int k = 1; k < 30; ++k) {
        if (k == 10 || k == 20) continue;
        Trajectory t = simulate(square_gen(Rational(k, 30), Rational(3, 2)));
        ok &= expect(t.closed() && t.period == 10,
                     "start " + Rational(k, 30).str() + " did not close at period 10", detail);
    }
    return ok;
}

bool criterion_diagonals(std::string& detail) {
    bool ok = true;
    for (std::int64_t m = 1; m + 1 <= 14; ++m) {
        for (std::int64_t n = 1; m + n <= 14; ++n) {
            if (std::gcd(m, n) != 1) continue;
            GeneralizedDiagonal d = generalized_diagonal(m, n, Vertex::A);
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            ok &= expect(d.length == m + n - 2, tag + " wrong length", detail);
            ok &= expect(d.horizontal_hits == m - 1 && d.vertical_hits == n - 1,
                         tag + " wrong hit counts", detail);
            ok &= expect(d.start != d.end, tag + " starts and ends at the same vertex", detail);

            Trajectory t = simulate(square_gen(Rational(0), Rational(m, n)));
            ok &= expect(t.hit_vertex(), tag + " simulation did not reach a vertex", detail);
            ok &= expect(t.terminal_vertex == d.end, tag + " terminal vertex mismatch", detail);
            ok &= expect(static_cast<std::int64_t>(t.collisions.size()) == d.length,
                         tag + " simulated length mismatch", detail);
            int horizontal = 0;
            for (const CollisionPoint& c : t.collisions)
                if (is_horizontal(c.side)) ++horizontal;
            ok &= expect(horizontal == d.horizontal_hits, tag + " simulated hits mismatch", detail);
        }
    }
    GeneralizedDiagonal d14 = generalized_diagonal(1, 4, Vertex::A);
    ok &= expect(d14.end == Vertex::D && d14.length == 3, "(1,4) from A must end at D after 3",
                 detail);
    return ok;
}

bool criterion_enumeration(std::string& detail) {
    bool ok = true;
    for (int period = 4; period <= 60 && ok; period += 2) {
        std::uint64_t expected = totient_bruteforce(static_cast<std::uint64_t>(period) / 2);
        for (const Rational& rho : kSweepRhos) {
            ClassCatalog catalog = enumerate_classes(period, TableSpec{rho});
            ok &= expect(catalog.entries.size() == expected,
                         "K=" + std::to_string(period) + " catalog size mismatch", detail);
            for (const CatalogEntry& entry : catalog.entries) {
                Trajectory t = representative_orbit(entry, period);
                ok &= expect(t.period == period && t.horizontal_hits == entry.p &&
                                 t.vertical_hits == entry.q,
                             "K=" + std::to_string(period) + " representative mismatch", detail);
            }
        }
    }
    ClassCatalog ten = enumerate_classes(10, TableSpec{Rational(1)});
    std::set<std::pair<int, int>> types;
    for (const CatalogEntry& e : ten.entries) types.insert({e.p, e.q});
    ok &= expect(types == std::set<std::pair<int, int>>{{2, 8}, {4, 6}, {6, 4}, {8, 2}},
                 "K=10 types are not {(2,8),(4,6),(6,4),(8,2)}", detail);
    return ok;
}

bool criterion_rectangle(std::string& detail) {
    struct Case {
        Rational rho;
        int period, p, q;
    };
    const Case cases[] = {
        {Rational(2), 10, 2, 8},
        {Rational(1, 2), 4, 2, 2},
        {Rational(3, 4), 10, 4, 6},
    };
    bool ok = true;
    for (const Case& c : cases) {
        Rational normalized = Rational(1, 2) / c.rho;
        Generator g(Side::AB, Rational(1, 10), SlopeDescriptor::rational(normalized),
                    TableSpec{c.rho});
        OrbitClass klass = classify(g);
        std::string tag = "rho=" + c.rho.str();
        ok &= expect(klass.periodic() && klass.period == c.period && klass.p == c.p &&
                         klass.q == c.q,
                     tag + " classification mismatch", detail);
        Trajectory t = simulate(g);
        ok &= expect(t.closed() && t.period == c.period && t.horizontal_hits == c.p &&
                         t.vertical_hits == c.q,
                     tag + " simulation mismatch", detail);
    }
    return ok;
}

bool criterion_reversal_equivalence(std::string& detail) {
    bool ok = true;
    // reversal over the criterion-3 grid
    for (const Rational& rho : kSweepRhos) {
        for (std::int64_t sum = 2; sum <= 10 && ok; ++sum) {
            for (std::int64_t m = 1; m < sum; ++m) {
                std::int64_t n = sum - m;
                if (std::gcd(m, n) != 1) continue;
                for (std::int64_t b = 1; b <= 12; ++b) {
                    for (std::int64_t a = 0; a < b; ++a) {
                        if (std::gcd(a, b) != 1 && a != 0) continue;
                        if (a == 0 && b != 1) continue;
                        Generator g(Side::AB, Rational(a, b),
                                    SlopeDescriptor::rational(Rational(m, n)), TableSpec{rho});
                        Trajectory fwd = simulate(g);
                        Trajectory rev = simulate_reversed(g);
                        ok &= expect(fwd.kind == rev.kind, "reversal changed the outcome kind",
                                     detail);
                        if (fwd.closed())
                            ok &= expect(collision_set(fwd) == collision_set(rev),
                                         "reversal changed the collision set", detail);
                        // canonical representative: defined and idempotent on
                        // periodic cells
                        if (fwd.closed()) {
                            Generator canon = canonical_representative(g);
                            ok &= expect(canonical_representative(canon) == canon,
                                         "canonical representative is not idempotent", detail);
                        }
                        if (!ok) return ok;
                    }
                }
            }
        }
    }
    // the worked slope-3/2 identifications: P-2/3 and 2/3-P give the same orbit
    for (int k = 1; k < 60 && ok; ++k) {
        Rational p(k, 60);
        if ((p * Rational(3)).is_integer()) continue;
        Generator g = square_gen(p, Rational(3, 2));
        Rational expected = p;
        if (p > Rational(1, 3) && p < Rational(2, 3)) expected = Rational(2, 3) - p;
        if (p > Rational(2, 3)) expected = p - Rational(2, 3);
        ok &= expect(canonical_representative(g).p0 == expected,
                     "canonical representative of p0=" + p.str() + " is not " + expected.str(),
                     detail);
    }
    return ok;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_determinism(std::string& detail) {
    bool ok = true;
    const std::string golden_dir = BILLIARD_GOLDEN_DIR;

    // golden figures
    Trajectory ten = simulate(square_gen(Rational(3, 20), Rational(3, 2)));
    ok &= expect(render_folded(ten) == read_file(golden_dir + "/fig_period10_type64.svg"),
                 "period-ten golden figure mismatch", detail);
    Trajectory diag = simulate(square_gen(Rational(0), Rational(1, 4)));
    ok &= expect(render_folded(diag) == read_file(golden_dir + "/fig_diagonal_1_4.svg"),
                 "diagonal golden figure mismatch", detail);
    Generator six = square_gen(Rational(3, 5), Rational(1, 2));
    ok &= expect(render_unfolded(six, 6) == read_file(golden_dir + "/fig_unfolded_period6.svg"),
                 "unfolded golden figure mismatch", detail);

    // byte-identical output across two runs, through the installed CLI when
    // available, in-process otherwise
    const char* cli = std::getenv("BILLIARD_CLI");
    if (cli && *cli) {
        auto shell = [&](const std::string& args, const std::string& redirect) {
            std::string cmd = std::string(cli) + " " + args + " > " + redirect + " 2>/dev/null";
            return std::system(cmd.c_str()) == 0;
        };
        ok &= expect(shell("classify --p0 3/20 --slope 3/2 --json", "acc_a.json") &&
                         shell("classify --p0 3/20 --slope 3/2 --json", "acc_b.json"),
                     "CLI classify failed", detail);
        ok &= expect(read_file("acc_a.json") == read_file("acc_b.json") &&
                         !read_file("acc_a.json").empty(),
                     "classify --json is not byte-stable", detail);
        ok &= expect(shell("enumerate --period 10 --json", "acc_c.json") &&
                         shell("enumerate --period 10 --json", "acc_d.json"),
                     "CLI enumerate failed", detail);
        ok &= expect(read_file("acc_c.json") == read_file("acc_d.json"),
                     "enumerate --json is not byte-stable", detail);
        ok &= expect(shell("render --p0 3/20 --slope 3/2 --out acc_a.svg", "acc_r1.log") &&
                         shell("render --p0 3/20 --slope 3/2 --out acc_b.svg", "acc_r2.log"),
                     "CLI render failed", detail);
        ok &= expect(read_file("acc_a.svg") == read_file("acc_b.svg") &&
                         !read_file("acc_a.svg").empty(),
                     "render output is not byte-stable", detail);
        for (const char* f : {"acc_a.json", "acc_b.json", "acc_c.json", "acc_d.json", "acc_a.svg",
                              "acc_b.svg", "acc_r1.log", "acc_r2.log"})
            std::remove(f);
    } else {
        std::ostringstream out1, out2, err;
        std::vector<std::string> args = {"classify", "--p0", "3/20", "--slope", "3/2", "--json"};
        run_cli(args, out1, err);
        run_cli(args, out2, err);
        ok &= expect(out1.str() == out2.str(), "classify --json is not byte-stable", detail);
        ok &= expect(render_folded(ten) == render_folded(ten), "render is not byte-stable",
                     detail);
    }
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "totient triple agreement for N in 1..500", criterion_totients},
        {2, "worked period-six orbits reproduced exactly", criterion_paper_orbits},
        {3, "oracle sweep: closed form vs direct simulation", criterion_oracle_sweep},
        {4, "singular starts for slope 3/2 are {0, 1/3, 2/3}", criterion_singular_starts},
        {5, "generalized diagonals match simulation for m+n <= 14", criterion_diagonals},
        {6, "class catalogs sized phi(K/2) with closing representatives", criterion_enumeration},
        {7, "rectangle worked values for physical slope 1/2", criterion_rectangle},
        {8, "reversal invariance and canonical representatives", criterion_reversal_equivalence},
        {9, "deterministic rendering and JSON, golden figures", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::cout << "[PASS] criterion " << c.id << ": " << c.label;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.label << " -- " << detail
                      << "\n";
        }
    }
    if (failures > 0) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
