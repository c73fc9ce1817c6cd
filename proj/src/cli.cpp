#include "billiard/cli.hpp"

#include "billiard/catalog.hpp"
#include "billiard/numtheory.hpp"
#include "billiard/render.hpp"
#include "billiard/simulate.hpp"
#include "billiard/table.hpp"
#include "billiard/unfolding.hpp"
#include "billiard/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

namespace billiard {

namespace {

using json = nlohmann::ordered_json;

Rational parse_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string("invalid value for ") + flag + ": " + e.what());
    }
}

Side parse_side(const std::string& text) {
    if (text == "AB") return Side::AB;
    if (text == "BC") return Side::BC;
    if (text == "CD") return Side::CD;
    if (text == "DA") return Side::DA;
    throw std::domain_error("invalid value for --side: expected AB, BC, CD or DA");
}

Vertex parse_vertex(const std::string& text) {
    if (text == "A") return Vertex::A;
    if (text == "B") return Vertex::B;
    if (text == "C") return Vertex::C;
    if (text == "D") return Vertex::D;
    throw std::domain_error("invalid value for --start: expected A, B, C or D");
}

struct GeneratorFlags {
    std::string p0 = "0";
    std::string slope;
    std::string rho = "1";
    std::string side = "AB";

    /// --slope is the physical tan(alpha0); stored normalized as slope/rho.
    Generator build() const {
        Rational rho_value = parse_flag(rho, "--rho");
        TableSpec table{rho_value};
        Rational physical = parse_flag(slope, "--slope");
        if (!(physical > Rational(0)))
            throw std::domain_error("invalid value for --slope: must be positive");
        Rational normalized = physical / rho_value;
        Rational position = parse_flag(p0, "--p0");
        return Generator(parse_side(side), position, SlopeDescriptor::rational(normalized), table);
    }
};

void add_generator_flags(CLI::App* cmd, GeneratorFlags& f, bool p0_required = true) {
    auto* p0 = cmd->add_option("--p0", f.p0, "start position on the side, rational A/B in [0,1)");
    if (p0_required) p0->required();
    cmd->add_option("--slope", f.slope, "physical slope tan(alpha0), rational M/N > 0")->required();
    cmd->add_option("--rho", f.rho, "table aspect ratio (height of BC/DA), rational R/S");
    cmd->add_option("--side", f.side, "start side: AB, BC, CD or DA");
}

json diagonal_json(const GeneralizedDiagonal& d) {
    json j;
    j["m"] = d.m;
    j["n"] = d.n;
    j["start"] = vertex_name(d.start);
    j["end"] = vertex_name(d.end);
    j["length"] = d.length;
    j["horizontal_hits"] = d.horizontal_hits;
    j["vertical_hits"] = d.vertical_hits;
    return j;
}

json starts_json(const std::vector<Rational>& starts) {
    json j = json::array();
    for (const Rational& s : starts) j.push_back(s.str());
    return j;
}

void print_diagonal_text(std::ostream& out, const GeneralizedDiagonal& d) {
    out << "generalized diagonal (m=" << d.m << ", n=" << d.n << ") from " << vertex_name(d.start)
        << ": terminates at " << vertex_name(d.end) << " after " << d.length << " collisions ("
        << d.horizontal_hits << " horizontal, " << d.vertical_hits << " vertical)\n";
}

int cmd_classify(const GeneratorFlags& flags, bool as_json, std::ostream& out) {
    Generator g = flags.build();
    OrbitClass c = classify(g);
    if (as_json) {
        json j;
        switch (c.kind) {
            case OrbitClass::Kind::Periodic:
                j["kind"] = "periodic";
                j["K"] = c.period;
                j["p"] = c.p;
                j["q"] = c.q;
                j["class"] = class_name(c.period, c.p);
                break;
            case OrbitClass::Kind::Singular: {
                j["kind"] = "singular";
                json d = diagonal_json(c.diagonal);
                for (auto& [key, value] : d.items()) j[key] = value;
                j["entry_offset"] = c.entry_offset.num();
                j["singular_starts"] =
                    starts_json(singular_starts(static_cast<int>(2 * c.diagonal.m),
                                                static_cast<int>(2 * c.diagonal.n)));
                break;
            }
            case OrbitClass::Kind::NonPeriodic:
                j["kind"] = "nonperiodic";
                break;
        }
        out << j.dump() << "\n";
        return 0;
    }
    switch (c.kind) {
        case OrbitClass::Kind::Periodic:
            out << "periodic orbit: least period " << c.period << ", type (" << c.p << ", " << c.q
                << "), class " << class_name(c.period, c.p) << "\n";
            break;
        case OrbitClass::Kind::Singular:
            out << "singular orbit (start offset index " << c.entry_offset.str() << ")\n";
            print_diagonal_text(out, c.diagonal);
            break;
        case OrbitClass::Kind::NonPeriodic:
            out << "non-periodic orbit\n";
            break;
    }
    return 0;
}

int cmd_enumerate(int period, const std::string& rho, bool as_json, std::ostream& out) {
    TableSpec table{parse_flag(rho, "--rho")};
    ClassCatalog catalog = enumerate_classes(period, table);
    if (as_json) {
        json j;
        j["kind"] = "catalog";
        j["K"] = catalog.period;
        j["rho"] = table.rho.str();
        j["count"] = catalog.entries.size();
        json entries = json::array();
        for (const CatalogEntry& e : catalog.entries) {
            json je;
            je["class"] = e.name(catalog.period);
            je["m"] = e.m;
            je["n"] = e.n;
            je["p"] = e.p;
            je["q"] = e.q;
            je["limiting"] = e.limiting;
            if (e.representative.slope.is_rational()) {
                je["slope"] = e.representative.slope.value.str();
                je["physical_slope"] = (table.rho * e.representative.slope.value).str();
            } else {
                je["slope"] = "vertical";
                je["physical_slope"] = "vertical";
            }
            je["side"] = side_name(e.representative.start_side);
            je["p0"] = e.representative.p0.str();
            je["singular_starts"] = starts_json(e.singular_start_list);
            entries.push_back(je);
        }
        j["entries"] = entries;
        out << j.dump() << "\n";
        return 0;
    }
    out << "period-" << catalog.period << " classes on the table with aspect ratio "
        << table.rho.str() << " (" << catalog.entries.size() << " class"
        << (catalog.entries.size() == 1 ? "" : "es") << "):\n";
    for (const CatalogEntry& e : catalog.entries) {
        out << "  " << e.name(catalog.period) << ": type (" << e.p << ", " << e.q << "), slope ";
        if (e.representative.slope.is_rational())
            out << e.representative.slope.value.str() << " (physical "
                << (table.rho * e.representative.slope.value).str() << ")";
        else
            out << "perpendicular to " << side_name(e.representative.start_side);
        out << ", representative p0 " << e.representative.p0.str() << " on "
            << side_name(e.representative.start_side);
        if (e.limiting) out << " [limiting]";
        out << ", singular starts:";
        if (e.singular_start_list.empty()) out << " none";
        for (const Rational& s : e.singular_start_list) out << " " << s.str();
        out << "\n";
    }
    return 0;
}

int cmd_simulate(const GeneratorFlags& flags, std::int64_t max_steps, bool as_json,
                 std::ostream& out) {
    Generator g = flags.build();
    Trajectory traj = simulate(g, max_steps > 0 ? max_steps : default_max_steps());
    if (as_json) {
        json j;
        switch (traj.kind) {
            case Trajectory::Kind::Closed:
                j["kind"] = "closed";
                j["K"] = traj.period;
                j["p"] = traj.horizontal_hits;
                j["q"] = traj.vertical_hits;
                break;
            case Trajectory::Kind::HitVertex:
                j["kind"] = "hit_vertex";
                j["vertex"] = vertex_name(traj.terminal_vertex);
                break;
            case Trajectory::Kind::Truncated:
                j["kind"] = "truncated";
                j["max_steps"] = traj.max_steps;
                break;
        }
        json collisions = json::array();
        for (const CollisionPoint& c : traj.collisions) {
            Point p = physical_coordinates(c, g.table);
            json jc;
            jc["side"] = side_name(c.side);
            jc["position"] = c.position.str();
            jc["x"] = p.x.str();
            jc["y"] = p.y.str();
            jc["angle"] = c.angle_class == AngleClass::Alpha ? "alpha" : "complement";
            collisions.push_back(jc);
        }
        j["collisions"] = collisions;
        out << j.dump() << "\n";
        return 0;
    }
    out << std::left << std::setw(5) << "#" << std::setw(6) << "side" << std::setw(12)
        << "position" << std::setw(12) << "x" << std::setw(12) << "y" << "angle\n";
    int index = 0;
    for (const CollisionPoint& c : traj.collisions) {
        Point p = physical_coordinates(c, g.table);
        out << std::left << std::setw(5) << ++index << std::setw(6) << side_name(c.side)
            << std::setw(12) << c.position.str() << std::setw(12) << p.x.str() << std::setw(12)
            << p.y.str() << (c.angle_class == AngleClass::Alpha ? "alpha" : "complement") << "\n";
    }
    switch (traj.kind) {
        case Trajectory::Kind::Closed:
            out << "closed after " << traj.period << " collisions: least period " << traj.period
                << ", type (" << traj.horizontal_hits << ", " << traj.vertical_hits << ")\n";
            break;
        case Trajectory::Kind::HitVertex:
            out << "terminates at vertex " << vertex_name(traj.terminal_vertex) << " after "
                << traj.collisions.size() << " collisions\n";
            break;
        case Trajectory::Kind::Truncated:
            out << "truncated after " << traj.max_steps << " collisions without closing\n";
            break;
    }
    return 0;
}

int cmd_render(const GeneratorFlags& flags, int unfold_count, bool overlay,
               const std::string& out_path, std::ostream& out) {
    Generator g = flags.build();
    std::string svg;
    if (unfold_count > 0) {
        RenderStyle style;
        style.overlay_singular_starts = overlay;
        svg = render_unfolded(g, unfold_count, style);
    } else {
        svg = render_folded(simulate(g));
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file: " + out_path);
    file << svg;
    file.close();
    out << "wrote " << out_path << "\n";
    return 0;
}

int cmd_totient(std::uint64_t n, const std::string& method, std::ostream& out) {
    if (method == "product") {
        out << totient_product(n) << "\n";
    } else if (method == "dft") {
        out << totient_dft(n) << "\n";
    } else if (method == "brute") {
        out << totient_bruteforce(n) << "\n";
    } else if (method == "all") {
        out << "product = " << totient_product(n) << "\n";
        out << "dft     = " << totient_dft(n) << "\n";
        out << "brute   = " << totient_bruteforce(n) << "\n";
    } else {
        throw std::domain_error("invalid value for --method: expected product, dft, brute or all");
    }
    return 0;
}

int cmd_verify(const VerifyOptions& options, const std::string& report_path, std::ostream& out,
               std::ostream& err) {
    VerifyReport report = run_verify(options);

    if (!report_path.empty()) {
        std::ofstream csv(report_path, std::ios::binary);
        if (!csv) throw std::domain_error("cannot open report file: " + report_path);
        csv << "p0,slope,rho,kind,K,p,q,agreement\n";
        for (const VerifyCell& cell : report.cells) {
            csv << cell.p0.str() << "," << cell.m << "/" << cell.n << "," << cell.rho.str() << ",";
            switch (cell.classified.kind) {
                case OrbitClass::Kind::Periodic:
                    csv << "periodic," << cell.classified.period << "," << cell.classified.p << ","
                        << cell.classified.q << ",";
                    break;
                case OrbitClass::Kind::Singular:
                    csv << "singular,,,,";
                    break;
                case OrbitClass::Kind::NonPeriodic:
                    csv << "nonperiodic,,,,";
                    break;
            }
            csv << (cell.agree ? "ok" : "mismatch") << "\n";
        }
    }

    out << "verify sweep: " << report.cells.size() << " cells (p0 denominators <= "
        << options.max_denominator << ", slope sums <= " << options.max_sum << ", "
        << options.rhos.size() << " aspect ratio" << (options.rhos.size() == 1 ? "" : "s")
        << ")\n";
    if (report.odd_period_seen) out << "odd period observed\n";
    out << report.disagreements << " disagreements\n";
    if (report.disagreements > 0 || report.odd_period_seen) {
        for (const VerifyCell& cell : report.cells)
            if (!cell.agree)
                err << "mismatch at p0=" << cell.p0.str() << " slope=" << cell.m << "/" << cell.n
                    << " rho=" << cell.rho.str() << ": " << cell.detail << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic billiards on square and rectangular tables"};
    app.require_subcommand(1);

    // classify
    GeneratorFlags classify_flags;
    bool classify_json = false;
    CLI::App* classify_cmd = app.add_subcommand("classify", "closed-form orbit classification");
    add_generator_flags(classify_cmd, classify_flags);
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    // enumerate
    int enum_period = 0;
    std::string enum_rho = "1";
    bool enum_json = false;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "all orbit classes of a given period");
    enum_cmd->add_option("--period", enum_period, "even period K >= 2")->required();
    enum_cmd->add_option("--rho", enum_rho, "table aspect ratio, rational R/S");
    enum_cmd->add_flag("--json", enum_json, "machine-readable output");

    // diagonal
    std::int64_t diag_m = 0, diag_n = 0;
    std::string diag_start = "A";
    bool diag_json = false;
    CLI::App* diag_cmd = app.add_subcommand("diagonal", "vertex-to-vertex singular orbit data");
    diag_cmd->add_option("--m", diag_m, "horizontal step count (slope numerator)")->required();
    diag_cmd->add_option("--n", diag_n, "vertical step count (slope denominator)")->required();
    diag_cmd->add_option("--start", diag_start, "start vertex: A, B, C or D");
    diag_cmd->add_flag("--json", diag_json, "machine-readable output");

    // singular-starts
    int ss_p = 0, ss_q = 0;
    bool ss_json = false;
    CLI::App* ss_cmd = app.add_subcommand("singular-starts",
                                          "start positions that produce singular orbits");
    ss_cmd->add_option("--p", ss_p, "horizontal collision count")->required();
    ss_cmd->add_option("--q", ss_q, "vertical collision count")->required();
    ss_cmd->add_flag("--json", ss_json, "machine-readable output");

    // simulate
    GeneratorFlags sim_flags;
    std::int64_t sim_max_steps = 0;
    bool sim_json = false;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "direct specular-reflection simulation");
    add_generator_flags(sim_cmd, sim_flags);
    sim_cmd->add_option("--max-steps", sim_max_steps, "collision cap (default 10000)");
    sim_cmd->add_flag("--json", sim_json, "machine-readable output");

    // render
    GeneratorFlags render_flags;
    int render_unfold = 0;
    bool render_overlay = false;
    std::string render_out;
    CLI::App* render_cmd = app.add_subcommand("render", "SVG figure of a trajectory");
    add_generator_flags(render_cmd, render_flags);
    render_cmd->add_option("--unfold", render_unfold,
                           "draw the unfolded lattice picture with N crossings");
    render_cmd->add_flag("--overlay-singular-starts", render_overlay,
                         "overlay singular-start lines (unfolded view)");
    render_cmd->add_option("--out", render_out, "output SVG path")->required();

    // totient
    std::uint64_t totient_n = 0;
    std::string totient_method = "product";
    CLI::App* totient_cmd = app.add_subcommand("totient", "Euler's totient");
    totient_cmd->add_option("N", totient_n, "positive integer")->required();
    totient_cmd->add_option("--method", totient_method, "product, dft, brute or all");

    // verify
    VerifyOptions verify_options;
    std::vector<std::string> verify_rhos;
    std::string verify_report_path;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "closed-form vs direct-simulation oracle sweep");
    verify_cmd->add_option("--max-denominator", verify_options.max_denominator,
                           "largest start-position denominator")->required();
    verify_cmd->add_option("--max-sum", verify_options.max_sum, "largest slope m+n")->required();
    verify_cmd->add_option("--rho", verify_rhos, "aspect ratio (repeatable)");
    verify_cmd->add_flag("--parallel", verify_options.parallel, "spread cells across threads");
    verify_cmd->add_option("--report", verify_report_path, "write per-cell CSV report");
    verify_cmd->add_option("--max-steps", verify_options.max_steps, "simulation collision cap");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("billiard");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (classify_cmd->parsed()) return cmd_classify(classify_flags, classify_json, out);
        if (enum_cmd->parsed()) return cmd_enumerate(enum_period, enum_rho, enum_json, out);
        if (diag_cmd->parsed()) {
            GeneralizedDiagonal d = generalized_diagonal(diag_m, diag_n, parse_vertex(diag_start));
            if (diag_json) {
                json j;
                j["kind"] = "diagonal";
                json dj = diagonal_json(d);
                for (auto& [key, value] : dj.items()) j[key] = value;
                out << j.dump() << "\n";
            } else {
                print_diagonal_text(out, d);
            }
            return 0;
        }
        if (ss_cmd->parsed()) {
            std::vector<Rational> starts = singular_starts(ss_p, ss_q);
            if (ss_json) {
                json j;
                j["kind"] = "singular_starts";
                j["p"] = ss_p;
                j["q"] = ss_q;
                j["starts"] = starts_json(starts);
                out << j.dump() << "\n";
            } else {
                for (const Rational& s : starts) out << s.str() << "\n";
            }
            return 0;
        }
        if (sim_cmd->parsed()) return cmd_simulate(sim_flags, sim_max_steps, sim_json, out);
        if (render_cmd->parsed())
            return cmd_render(render_flags, render_unfold, render_overlay, render_out, out);
        if (totient_cmd->parsed()) return cmd_totient(totient_n, totient_method, out);
        if (verify_cmd->parsed()) {
            if (!verify_rhos.empty()) {
                verify_options.rhos.clear();
                for (const std::string& r : verify_rhos)
                    verify_options.rhos.push_back(parse_flag(r, "--rho"));
            }
            return cmd_verify(verify_options, verify_report_path, out, err);
        }
        err << "error: no subcommand given\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const arithmetic_overflow& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace billiard
