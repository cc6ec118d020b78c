// metallic: command-line front end for the metallic mean Wang tile library.

#include "metallic/equivalence.hpp"
#include "metallic/errors.hpp"
#include "metallic/families.hpp"
#include "metallic/fixtures.hpp"
#include "metallic/io.hpp"
#include "metallic/linalg.hpp"
#include "metallic/minimality.hpp"
#include "metallic/omega.hpp"
#include "metallic/render.hpp"
#include "metallic/selfsim.hpp"
#include "metallic/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

using namespace metallic;

namespace {

enum Exit { Ok = 0, Refuted = 1, Capped = 2, Usage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TileSource {
    std::string file;
    std::string fixture;
    int n = 0;
    bool extended = false;

    void add_to(CLI::App* app) {
        app->add_option("--tiles", file, "Tile-set JSON file");
        app->add_option("--n", n, "Generate the metallic set T_n");
        app->add_flag("--extended", extended, "With --n: generate T'_n instead of T_n");
        app->add_option("--fixture", fixture, "Built-in set: t1, t2, ammann16, u4");
    }

    WangTileSet load() const {
        const int given = !file.empty() + !fixture.empty() + (n > 0);
        if (given != 1) throw UsageError("give exactly one of --tiles, --n or --fixture");
        if (!file.empty()) return tileset_from_json(read_json_file(file));
        if (n > 0) return metallic_tiles(n, extended);
        if (fixture == "t1") return fixtures::t1_published();
        if (fixture == "t2") return fixtures::t2_published();
        if (fixture == "ammann16") return fixtures::ammann16();
        if (fixture == "u4") return fixtures::u4_published();
        throw UsageError("unknown fixture '" + fixture + "'");
    }
};

struct Output {
    std::string path;
    bool quiet = false;
    std::string report = "json";

    void add_to(CLI::App* app, bool with_report) {
        app->add_option("--out", path, "Write to this file instead of stdout");
        app->add_flag("--quiet", quiet, "Print nothing to stdout; rely on the exit code");
        if (with_report) app->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
    }

    void emit(const std::string& text) const {
        if (!path.empty())
            write_text_file(path, text);
        else if (!quiet)
            std::cout << text;
    }
    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
    bool text() const { return report == "text"; }
};

std::uint64_t node_cap_option = 0;

SolverOptions solver_options() {
    SolverOptions opt;
    if (node_cap_option > 0) opt.node_cap = node_cap_option;
    return opt;
}

BoundaryWord parse_word(const std::string& text) {
    BoundaryWord w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) w.push_back(Label::parse(item));
    return w;
}

Json label_map_json(const std::map<Label, Label>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[k.str()] = v.str();
    return j;
}

Json coefficients_json(const IntPoly& p) {
    Json j = Json::array();
    for (const mpz_class& c : p.coeffs()) j.push_back(c.get_str());
    return j;
}

std::string pattern_list(const std::set<Pattern2D>& ps) {
    std::string out;
    for (const Pattern2D& p : ps) {
        if (!out.empty()) out += "; ";
        std::string s = p.str();
        for (char& ch : s)
            if (ch == '\n') ch = '/';
        out += "[" + s + "]";
    }
    return out;
}

Json patterns_json(const std::set<Pattern2D>& ps) {
    Json j = Json::array();
    for (const Pattern2D& p : ps) j.push_back(pattern_to_json(p));
    return j;
}

double metallic_mean(int n) { return (n + std::sqrt(double(n) * n + 4)) / 2; }

// ---------------------------------------------------------------------------

int cmd_tiles(const TileSource& src, const Output& out) {
    WangTileSet s = src.load();
    if (s.names.empty() && s.family != Family::Custom) {
        for (const WangTile& t : s.tiles) s.names.push_back(classify(t, s.n).name);
    }
    out.emit(tileset_to_json(s));
    return Ok;
}

struct SolveArgs {
    int width = 0, height = 0;
    bool torus = false;
    std::vector<std::string> fix;
    std::string bottom, left, right, top;
    std::string order = "asc";
};

int cmd_solve(const TileSource& src, const SolveArgs& a, const Output& out) {
    const WangTileSet tiles = src.load();
    SolverOptions opt = solver_options();
    opt.order = a.order == "desc" ? ValueOrder::Descending : ValueOrder::Ascending;
    std::optional<Pattern2D> result;
    if (a.torus) {
        if (!a.fix.empty() || !a.bottom.empty() || !a.left.empty() || !a.right.empty() || !a.top.empty())
            throw UsageError("--torus does not combine with --fix or boundary words");
        result = solve_torus(tiles, a.width, a.height, opt);
    } else {
        TilingProblem p{&tiles, a.width, a.height, {}, {}, false};
        for (const std::string& f : a.fix) {
            int i = 0, j = 0, t = 0;
            char c1 = 0, c2 = 0;
            std::stringstream ss(f);
            if (!(ss >> i >> c1 >> j >> c2 >> t) || c1 != ',' || c2 != ',')
                throw UsageError("--fix expects i,j,t, got '" + f + "'");
            p.fixed[{i, j}] = t;
        }
        if (!a.bottom.empty()) p.boundary.bottom = parse_word(a.bottom);
        if (!a.left.empty()) p.boundary.left = parse_word(a.left);
        if (!a.right.empty()) p.boundary.right = parse_word(a.right);
        if (!a.top.empty()) p.boundary.top = parse_word(a.top);
        result = solve(p, opt);
    }
    if (!result) {
        if (!out.quiet) std::cerr << "no tiling exists\n";
        return Refuted;
    }
    out.emit(pattern_to_json(*result));
    return Ok;
}

int cmd_substitute(int n, bool extended, const std::string& subst_file, const std::string& pattern_file,
                   const Output& out) {
    if ((n > 0) == !subst_file.empty()) throw UsageError("give exactly one of --n or --substitution");
    const Substitution2D s = n > 0 ? build_omega(n, extended) : substitution_from_json(read_json_file(subst_file));
    const Pattern2D p = pattern_from_json(read_json_file(pattern_file));
    out.emit(pattern_to_json(apply(s, p)));
    return Ok;
}

int cmd_desubstitute(int n, const std::string& pattern_file, const Output& out) {
    const Pattern2D p = pattern_from_json(read_json_file(pattern_file));
    const Desubstitution d = desubstitute(n, p);
    out.emit(Json{{"preimage", pattern_to_json(d.preimage)},
                  {"preimage_tiles", "metallic-extended"},
                  {"shift", {d.shift.first, d.shift.second}},
                  {"columns", d.grid.columns},
                  {"rows", d.grid.rows}});
    return Ok;
}

int cmd_export_omega(int n, bool extended, const std::string& format, const RenderStyle& style, const Output& out) {
    const Substitution2D s = build_omega(n, extended);
    const WangTileSet dom = metallic_tiles(n, extended);
    const WangTileSet cod = metallic_tiles(n, false);
    if (format == "json")
        out.emit(substitution_to_json(s));
    else if (format == "tikz")
        out.emit(substitution_tikz(s, dom, cod, style));
    else
        out.emit(render_substitution(s, dom, cod, style));
    return Ok;
}

int cmd_verify_selfsim(const TileSource& src, const PipelineRadii* radii, const Output& out) {
    const WangTileSet tiles = src.load();
    const PipelineRadii r = radii ? *radii : default_radii(tiles.n);
    SelfSimilarityReport rep;
    try {
        rep = verify_self_similarity(tiles, r, solver_options());
    } catch (const PipelineError& e) {
        if (!out.quiet) std::cerr << "self-similarity not established: " << e.what() << "\n";
        return Refuted;
    }
    const bool ok = rep.matches_omega;
    if (out.text()) {
        std::ostringstream o;
        o << "n = " << rep.n << "\nsteps:";
        for (const FusionStep& s : rep.steps)
            o << " e" << s.axis << "/" << side_name(s.side) << " " << s.markers.size() << " markers -> "
              << s.produced.size() << " tiles;";
        o << "\npruned to " << rep.pruned.tiles.size() << " tiles (dropped " << rep.pruned.dropped.size() << ")\n"
          << "equivalent to input: yes\ncharpoly: " << rep.factorization.str() << "\nPerron eigenvalue: " << rep.perron
          << "\ncomposed substitution equals omega_" << rep.n << ": " << (ok ? "yes" : "no") << "\n";
        out.emit(o.str());
    } else {
        Json steps = Json::array();
        for (const FusionStep& s : rep.steps)
            steps.push_back({{"axis", s.axis},
                             {"side", side_name(s.side)},
                             {"radius", s.radius},
                             {"markers", s.markers},
                             {"tiles", s.produced.size()}});
        out.emit(Json{{"n", rep.n},
                      {"radii", {{"markers", r.markers}, {"first_fusion", r.first_fusion}, {"fusion", r.fusion},
                                 {"prune", r.prune}}},
                      {"steps", steps},
                      {"pruned", {{"tiles", rep.pruned.tiles.size()}, {"dropped", rep.pruned.dropped}}},
                      {"certificate",
                       {{"tile_bijection", rep.certificate.tile_bijection},
                        {"vertical", label_map_json(rep.certificate.vertical)},
                        {"horizontal", label_map_json(rep.certificate.horizontal)}}},
                      {"charpoly", coefficients_json(rep.charpoly)},
                      {"factorization", rep.factorization.str()},
                      {"perron", rep.perron},
                      {"matches_omega", ok},
                      {"composed", substitution_to_json(rep.composed)}});
    }
    return ok ? Ok : Refuted;
}

int cmd_verify_primitivity(int n, const Output& out) {
    const Substitution2D s = build_omega(n, false);
    const auto exponent = primitivity_exponent(s, 64);
    const PerronResult pr = perron_eigenvalue(incidence(s), 1e-12);
    const double expected = std::pow(metallic_mean(n), 2);
    const bool ok = exponent.has_value() && std::abs(pr.eigenvalue - expected) < 1e-8;
    if (out.text()) {
        std::ostringstream o;
        o.precision(15);
        o << "n = " << n << "\nprimitivity exponent: " << (exponent ? std::to_string(*exponent) : "none up to 64")
          << "\nPerron eigenvalue: " << pr.eigenvalue << "\nsquared metallic mean: " << expected << "\n";
        out.emit(o.str());
    } else {
        out.emit(Json{{"n", n},
                      {"primitive", exponent.has_value()},
                      {"exponent", exponent ? Json(*exponent) : Json(nullptr)},
                      {"perron", pr.eigenvalue},
                      {"expected", expected},
                      {"eigenvector", pr.eigenvector}});
    }
    return ok ? Ok : Refuted;
}

int cmd_verify_minimality(int n, const MinimalityRadii& radii, const Output& out) {
    const MinimalityReport rep = check_minimality(n, radii, solver_options());
    if (out.text()) {
        std::ostringstream o;
        o << "n = " << n << "\n";
        for (const ShapeReport& r : rep.shapes) {
            o << shape_name(r.shape) << " (radius " << r.radius << "): solver " << r.solver_language.size()
              << ", substitutive " << r.substitutive_language.size();
            if (r.languages_equal) o << ", equal";
            if (r.recurrent_computed) o << ", recurrent " << r.recurrent.size() << ", violations " << r.violations.size();
            if (!r.violations.empty()) o << " " << pattern_list(r.violations);
            if (!r.note.empty()) o << " (" << r.note << ")";
            o << "\n";
        }
        o << "criterion: " << (rep.inconclusive() ? "inconclusive" : rep.minimal() ? "holds" : "fails") << "\n";
        out.emit(o.str());
    } else {
        Json shapes = Json::array();
        for (const ShapeReport& r : rep.shapes)
            shapes.push_back({{"shape", shape_name(r.shape)},
                              {"radius", r.radius},
                              {"solver_language", r.solver_language.size()},
                              {"substitutive_language", r.substitutive_language.size()},
                              {"languages_equal", r.languages_equal},
                              {"recurrent_computed", r.recurrent_computed},
                              {"recurrent", r.recurrent.size()},
                              {"violations", patterns_json(r.violations)},
                              {"inconclusive", r.inconclusive},
                              {"note", r.note}});
        out.emit(Json{{"n", n}, {"shapes", shapes}, {"inconclusive", rep.inconclusive()}, {"minimal", rep.minimal()}});
    }
    if (rep.inconclusive()) return Capped;
    return rep.minimal() ? Ok : Refuted;
}

int cmd_verify_aperiodicity(const TileSource& src, int max_period, const Output& out) {
    const WangTileSet tiles = src.load();
    Json checked = Json::array();
    std::optional<Json> witness;
    for (int p = 1; p <= max_period && !witness; ++p)
        for (int q = 1; q <= max_period && !witness; ++q) {
            if (auto t = solve_torus(tiles, p, q, solver_options())) witness = Json{{"p", p}, {"q", q}, {"pattern", pattern_to_json(*t)}};
            checked.push_back({p, q});
        }
    if (out.text()) {
        std::ostringstream o;
        if (witness)
            o << "periodic tiling found on the " << (*witness)["p"] << "x" << (*witness)["q"] << " torus\n";
        else
            o << "no periodic tiling with periods up to " << max_period << " in each direction\n";
        out.emit(o.str());
    } else {
        Json j{{"max_period", max_period}, {"tori_checked", checked.size()}, {"periodic", witness.has_value()}};
        if (witness) j["witness"] = *witness;
        out.emit(j);
    }
    return witness ? Refuted : Ok;
}

int cmd_ammann_map(const TileSource& src, const Output& out) {
    const WangTileSet a = src.file.empty() && src.fixture.empty() && src.n == 0 ? fixtures::ammann16() : src.load();
    const WangTileSet t1 = metallic_tiles(1, false);
    const auto cert = equivalent(a, t1);
    if (!cert) {
        if (!out.quiet) std::cerr << "the tile set is not equivalent to T_1\n";
        return Refuted;
    }
    if (out.text()) {
        std::ostringstream o;
        o << "horizontal:";
        for (const auto& [k, v] : cert->horizontal) o << " " << k.str() << "->" << v.str();
        o << "\nvertical:";
        for (const auto& [k, v] : cert->vertical) o << " " << k.str() << "->" << v.str();
        o << "\n";
        out.emit(o.str());
    } else {
        out.emit(Json{{"tile_bijection", cert->tile_bijection},
                      {"horizontal", label_map_json(cert->horizontal)},
                      {"vertical", label_map_json(cert->vertical)}});
    }
    return Ok;
}

int cmd_render(const TileSource& src, const std::string& pattern_file, const std::string& subst_file, int omega_n,
               const std::string& format, const RenderStyle& style, const Output& out) {
    if (!pattern_file.empty()) {
        const WangTileSet tiles = src.load();
        const Pattern2D p = pattern_from_json(read_json_file(pattern_file));
        out.emit(format == "tikz" ? pattern_tikz(p, tiles, style) : render_pattern(p, tiles, style));
        return Ok;
    }
    if (omega_n > 0 || !subst_file.empty()) {
        Substitution2D s;
        WangTileSet dom, cod;
        if (omega_n > 0) {
            s = build_omega(omega_n, false);
            dom = cod = metallic_tiles(omega_n, false);
        } else {
            s = substitution_from_json(read_json_file(subst_file));
            dom = cod = src.load();
        }
        out.emit(format == "tikz" ? substitution_tikz(s, dom, cod, style) : render_substitution(s, dom, cod, style));
        return Ok;
    }
    const WangTileSet tiles = src.load();
    Pattern2D row(static_cast<int>(tiles.size()), 1);
    for (int i = 0; i < row.width(); ++i) row.at(i, 0) = i;
    RenderStyle s = style;
    s.show_index = true;
    out.emit(format == "tikz" ? pattern_tikz(row, tiles, s) : render_pattern(row, tiles, s));
    return Ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metallic mean Wang tiles: generation, solving, substitutions and verification"};
    app.require_subcommand(1);
    app.add_option("--node-cap", node_cap_option, "Solver node cap (default: METALLIC_NODE_CAP or 50000000)");
    int code = Ok;

    // tiles
    TileSource tiles_src;
    Output tiles_out;
    auto* tiles_cmd = app.add_subcommand("tiles", "Print a tile set as JSON");
    tiles_src.add_to(tiles_cmd);
    tiles_out.add_to(tiles_cmd, false);
    tiles_cmd->callback([&] { code = cmd_tiles(tiles_src, tiles_out); });

    // solve
    TileSource solve_src;
    SolveArgs solve_args;
    Output solve_out;
    auto* solve_cmd = app.add_subcommand("solve", "Find a tiling of a rectangle or torus");
    solve_src.add_to(solve_cmd);
    solve_out.add_to(solve_cmd, false);
    solve_cmd->add_option("--width", solve_args.width)->required();
    solve_cmd->add_option("--height", solve_args.height)->required();
    solve_cmd->add_flag("--torus", solve_args.torus);
    solve_cmd->add_option("--fix", solve_args.fix, "Pin a cell: i,j,t (repeatable)");
    solve_cmd->add_option("--bottom", solve_args.bottom, "Bottom word, comma separated, left to right");
    solve_cmd->add_option("--left", solve_args.left, "Left word, bottom to top");
    solve_cmd->add_option("--right", solve_args.right, "Right word, bottom to top");
    solve_cmd->add_option("--top", solve_args.top, "Top word, left to right");
    solve_cmd->add_option("--seed-order", solve_args.order)->check(CLI::IsMember({"asc", "desc"}));
    solve_cmd->add_option("--node-cap", node_cap_option);
    solve_cmd->callback([&] { code = cmd_solve(solve_src, solve_args, solve_out); });

    // substitute
    int sub_n = 0;
    bool sub_ext = false;
    std::string sub_file, sub_pattern;
    Output sub_out;
    auto* sub_cmd = app.add_subcommand("substitute", "Apply omega_n or a substitution file to a pattern");
    sub_cmd->add_option("--n", sub_n);
    sub_cmd->add_flag("--extended", sub_ext);
    sub_cmd->add_option("--substitution", sub_file);
    sub_cmd->add_option("--pattern", sub_pattern)->required();
    sub_out.add_to(sub_cmd, false);
    sub_cmd->callback([&] { code = cmd_substitute(sub_n, sub_ext, sub_file, sub_pattern, sub_out); });

    // desubstitute
    int desub_n = 0;
    std::string desub_pattern;
    Output desub_out;
    auto* desub_cmd = app.add_subcommand("desubstitute", "Decode the return blocks of a pattern over T_n");
    desub_cmd->add_option("--n", desub_n)->required();
    desub_cmd->add_option("--pattern", desub_pattern)->required();
    desub_out.add_to(desub_cmd, false);
    desub_cmd->callback([&] { code = cmd_desubstitute(desub_n, desub_pattern, desub_out); });

    // export-omega
    int exp_n = 0;
    bool exp_ext = false;
    std::string exp_format = "json";
    RenderStyle exp_style;
    Output exp_out;
    auto* exp_cmd = app.add_subcommand("export-omega", "Emit omega_n as JSON, TikZ or SVG");
    exp_cmd->add_option("--n", exp_n)->required();
    exp_cmd->add_flag("--extended", exp_ext);
    exp_cmd->add_option("--format", exp_format)->check(CLI::IsMember({"json", "tikz", "svg"}));
    exp_out.add_to(exp_cmd, false);
    exp_cmd->callback([&] { code = cmd_export_omega(exp_n, exp_ext, exp_format, exp_style, exp_out); });

    // verify
    auto* verify = app.add_subcommand("verify", "Check a structural property");
    verify->require_subcommand(1);

    TileSource ss_src;
    PipelineRadii ss_radii;
    Output ss_out;
    auto* ss_cmd = verify->add_subcommand("self-similarity", "Marker/fusion pipeline back to the input set");
    ss_src.add_to(ss_cmd);
    auto* rm = ss_cmd->add_option("--radius-markers", ss_radii.markers);
    auto* rf = ss_cmd->add_option("--radius-fuse", ss_radii.first_fusion, "Radius of the first fusion");
    auto* rf2 = ss_cmd->add_option("--radius-fuse-rest", ss_radii.fusion, "Radius of the later fusions");
    auto* rp = ss_cmd->add_option("--radius-prune", ss_radii.prune);
    ss_out.add_to(ss_cmd, true);
    ss_cmd->callback([&] {
        const bool custom = rm->count() + rf->count() + rf2->count() + rp->count() > 0;
        if (custom) {
            // Unset radii fall back to the defaults for this n.
            const PipelineRadii d = default_radii(std::max(1, ss_src.load().n));
            if (!rm->count()) ss_radii.markers = d.markers;
            if (!rf->count()) ss_radii.first_fusion = d.first_fusion;
            if (!rf2->count()) ss_radii.fusion = d.fusion;
            if (!rp->count()) ss_radii.prune = d.prune;
        }
        code = cmd_verify_selfsim(ss_src, custom ? &ss_radii : nullptr, ss_out);
    });

    int prim_n = 0;
    Output prim_out;
    auto* prim_cmd = verify->add_subcommand("primitivity", "Primitivity exponent and Perron eigenvalue of omega_n");
    prim_cmd->add_option("--n", prim_n)->required();
    prim_out.add_to(prim_cmd, true);
    prim_cmd->callback([&] { code = cmd_verify_primitivity(prim_n, prim_out); });

    int min_n = 0;
    MinimalityRadii min_radii;
    Output min_out;
    auto* min_cmd = verify->add_subcommand("minimality", "Three-shape minimality criterion for T_n");
    min_cmd->add_option("--n", min_n)->required();
    min_cmd->add_option("--radius-1x2", min_radii.r1x2);
    min_cmd->add_option("--radius-2x1", min_radii.r2x1);
    min_cmd->add_option("--radius-2x2", min_radii.r2x2);
    min_out.add_to(min_cmd, true);
    min_cmd->callback([&] { code = cmd_verify_minimality(min_n, min_radii, min_out); });

    TileSource ap_src;
    int ap_max = 4;
    Output ap_out;
    auto* ap_cmd = verify->add_subcommand("aperiodicity", "Search for periodic tilings on small tori");
    ap_src.add_to(ap_cmd);
    ap_cmd->add_option("--max-period", ap_max);
    ap_out.add_to(ap_cmd, true);
    ap_cmd->callback([&] { code = cmd_verify_aperiodicity(ap_src, ap_max, ap_out); });

    // ammann-map
    TileSource am_src;
    Output am_out;
    auto* am_cmd = app.add_subcommand("ammann-map", "Label bijection between an Ammann-type set and T_1");
    am_src.add_to(am_cmd);
    am_out.add_to(am_cmd, true);
    am_cmd->callback([&] { code = cmd_ammann_map(am_src, am_out); });

    // render
    TileSource r_src;
    std::string r_pattern, r_subst, r_format = "svg";
    int r_omega = 0;
    RenderStyle r_style;
    bool r_no_labels = false;
    Output r_out;
    auto* r_cmd = app.add_subcommand("render", "SVG or TikZ of a pattern, a substitution or a tile set");
    r_src.add_to(r_cmd);
    r_cmd->add_option("--pattern", r_pattern);
    r_cmd->add_option("--substitution", r_subst);
    r_cmd->add_option("--omega", r_omega, "Render omega_n");
    r_cmd->add_option("--format", r_format)->check(CLI::IsMember({"svg", "tikz"}));
    r_cmd->add_option("--cell", r_style.cell);
    r_cmd->add_option("--columns", r_style.columns);
    r_cmd->add_flag("--no-labels", r_no_labels);
    r_cmd->add_flag("--index", r_style.show_index);
    r_out.add_to(r_cmd, false);
    r_cmd->callback([&] {
        r_style.show_labels = !r_no_labels;
        code = cmd_render(r_src, r_pattern, r_subst, r_omega, r_format, r_style, r_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Usage;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap reached: " << e.what() << "\n";
        return Capped;
    } catch (const RecognizabilityError& e) {
        std::cerr << "not recognizable: " << e.what() << "\n";
        return Refuted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Refuted;
    }
    return code;
}
