#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "confviz/error.hpp"
#include "confviz/families.hpp"
#include "confviz/incidence.hpp"
#include "confviz/io.hpp"
#include "confviz/isomorphism.hpp"
#include "confviz/layout.hpp"
#include "confviz/point_circle.hpp"
#include "confviz/solver.hpp"
#include "confviz/spatial.hpp"
#include "confviz/svg.hpp"

using namespace confviz;

namespace {

// Exit status of a subcommand whose checked property failed.
struct PropertyFailed {};

// Arguments echoed into output meta; the output path is left out so the
// same run written to two files gives identical bytes.
std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out" || arg == "-o") {
            ++i;
            continue;
        }
        if (arg.rfind("--out=", 0) == 0) {
            continue;
        }
        out += (out.empty() ? "" : " ") + arg;
    }
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

void emit_json(const std::string& out_path, const json& j) { emit(out_path, dump_canonical(j)); }

// A graph reference is a JSON file (graph or layout) or an inline family such
// as "petersen" or "kneser:7:3".
Graph resolve_graph(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        const auto j = read_json_file(ref);
        switch (detect_kind(j)) {
            case ArtifactKind::graph: return graph_from_json(j);
            case ArtifactKind::layout: return layout_from_json(j).graph;
            default: throw ParameterError("'" + ref + "' does not hold a graph");
        }
    }
    return build_family(FamilySpec::parse(ref));
}

// Incidence structure from an incidence, point-circle, point-plane or graph
// artifact (graphs go through the V-construction).
IncidenceStructure resolve_structure(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        const auto j = read_json_file(ref);
        switch (detect_kind(j)) {
            case ArtifactKind::incidence: return incidence_from_json(j);
            case ArtifactKind::point_circle: return incidence_structure(pcc_from_json(j));
            case ArtifactKind::point_plane: return incidence_structure(point_plane_from_json(j));
            case ArtifactKind::graph: return v_construct(graph_from_json(j));
            case ArtifactKind::layout: return v_construct(layout_from_json(j).graph);
            default: throw ParameterError("'" + ref + "' does not hold an incidence structure");
        }
    }
    return v_construct(build_family(FamilySpec::parse(ref)));
}

struct TolFlags {
    Tolerances tols;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol-incidence", tols.incidence, "incidence tolerance")->capture_default_str();
        cmd->add_option("--tol-separation", tols.separation, "point separation tolerance")->capture_default_str();
        cmd->add_option("--tol-cluster", tols.cluster, "multiple-point clustering tolerance")->capture_default_str();
        cmd->add_option("--tol-isometric", tols.isometric, "equal-radius tolerance")->capture_default_str();
    }
};

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ParameterError(std::string(what) + ": '" + item + "' is not a number");
        }
    }
    if (expected != 0 && out.size() != expected) {
        throw ParameterError(std::string(what) + ": expected " + std::to_string(expected) + " comma-separated numbers");
    }
    return out;
}

std::string flag_text(const std::optional<bool>& f) { return f ? (*f ? "yes" : "no") : "unknown"; }

void print_flags(const ConfigFlags& f) {
    std::cout << "proper: " << flag_text(f.proper) << "\n"
              << "lineal: " << flag_text(f.lineal) << "\n"
              << "isometric: " << flag_text(f.isometric) << "\n"
              << "determining: " << flag_text(f.determining) << "\n"
              << "perfect: " << flag_text(f.perfect) << "\n";
}

int ground_size(const Graph& g) {
    int top = -1;
    for (const auto& l : g.labels()) {
        if (auto s = parse_subset_label(l)) {
            for (int x : *s) {
                top = std::max(top, x);
            }
        }
    }
    return top + 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"confviz: configurations from graphs via neighbourhood blocks"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    std::uint64_t seed = 1;
    std::string out;
    const std::string command_line = join_args(argc, argv);
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed")->envname("CONFVIZ_SEED")->capture_default_str();
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out,-o", out, "output file (default stdout)"); };

    std::function<void()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "build a named graph family member");
    std::string family;
    std::vector<int> family_params;
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", family_params, "integer parameters");
    add_out(gen);
    gen->callback([&] {
        action = [&] {
            FamilySpec spec{family, family_params};
            emit_json(out, to_json(build_family(spec)));
        };
    });

    // product / linegraph
    auto* product = app.add_subcommand("product", "Cartesian product of two graphs");
    std::string graph_a;
    std::string graph_b;
    product->add_option("a", graph_a, "graph file or family")->required();
    product->add_option("b", graph_b, "graph file or family")->required();
    add_out(product);
    product->callback([&] {
        action = [&] { emit_json(out, to_json(cartesian_product(resolve_graph(graph_a), resolve_graph(graph_b)))); };
    });

    auto* linegraph = app.add_subcommand("linegraph", "line graph");
    linegraph->add_option("graph", graph_a, "graph file or family")->required();
    add_out(linegraph);
    linegraph->callback([&] { action = [&] { emit_json(out, to_json(line_graph(resolve_graph(graph_a)))); }; });

    // vconstruct
    auto* vcon = app.add_subcommand("vconstruct", "neighbourhood incidence structure of a graph");
    bool collapse = false;
    vcon->add_option("graph", graph_a, "graph file or family")->required();
    vcon->add_flag("--collapse", collapse, "merge equal neighbourhoods instead of failing");
    add_out(vcon);
    vcon->callback([&] { action = [&] { emit_json(out, to_json(v_construct(resolve_graph(graph_a), collapse))); }; });

    // verify
    auto* verify = app.add_subcommand("verify", "check a structural property (exit 0 iff it holds)");
    std::string kind;
    std::string target;
    int expect_components = -1;
    verify->add_option("kind", kind, "kronecker | selfpolar | type | decompose")
        ->required()
        ->check(CLI::IsMember({"kronecker", "selfpolar", "type", "decompose"}));
    verify->add_option("file", target, "artifact file or family")->required();
    verify->add_option("--expect-components", expect_components, "decompose: required component count");
    verify->callback([&] {
        action = [&] {
            if (kind == "kronecker") {
                const auto g = resolve_graph(target);
                const auto r = verify_kronecker_theorem(g);
                if (!r.admissible) {
                    std::cerr << "not admissible: vertices " << r.offending->first << " and " << r.offending->second
                              << " have equal neighbourhoods\n";
                    throw PropertyFailed{};
                }
                std::cout << "admissible: yes\n"
                          << "levi graph isomorphic to kronecker cover: " << (r.witness ? "yes" : "no") << "\n"
                          << "cover components: " << r.cover_components << "\n"
                          << "levi components: " << r.levi_components << "\n";
                if (r.witness) {
                    std::cout << "witness:";
                    for (int v : r.witness->image) {
                        std::cout << " " << v;
                    }
                    std::cout << "\n";
                }
                if (!r.verified()) {
                    throw PropertyFailed{};
                }
            } else if (kind == "selfpolar") {
                const auto c = resolve_structure(target);
                const auto polarity = is_self_polar(c);
                std::cout << "self-polar: " << (polarity ? "yes" : "no") << "\n";
                if (!polarity) {
                    throw PropertyFailed{};
                }
            } else if (kind == "type") {
                const auto cls = classify(resolve_structure(target), true);
                std::cout << cls.summary() << "\n";
                if (!cls.balanced_k) {
                    throw PropertyFailed{};
                }
            } else {
                const auto parts = decompose(resolve_structure(target));
                std::cout << "components: " << parts.size() << "\n";
                for (const auto& p : parts) {
                    std::cout << classify(p, true).summary() << "\n";
                }
                if (expect_components >= 0 && static_cast<int>(parts.size()) != expect_components) {
                    std::cerr << "expected " << expect_components << " components, found " << parts.size() << "\n";
                    throw PropertyFailed{};
                }
            }
        };
    });

    // realize
    auto* realize = app.add_subcommand("realize", "unit-distance layout of a graph");
    std::string layout_name;
    bool solve = false;
    std::string symmetry;
    std::vector<std::string> pins;
    std::string angles_text;
    double r_outer = 2.0;
    double r_inner = 1.0;
    TolFlags realize_tols;
    realize->add_option("graph", graph_a, "graph file or family")->required();
    auto* layout_opt = realize->add_option("--layout", layout_name, "polygon | hypercube | gen_cuboctahedron")
                           ->check(CLI::IsMember({"polygon", "hypercube", "gen_cuboctahedron"}));
    realize->add_flag("--solve", solve, "numeric unit-distance solve")->excludes(layout_opt);
    realize->add_option("--symmetry", symmetry, "solve: 'shift' imposes the cyclic subset shift")
        ->check(CLI::IsMember({"shift"}));
    realize->add_option("--pin", pins, "solve: fix an orbit radius, ORBIT:RADIUS");
    realize->add_option("--angles", angles_text, "hypercube: comma-separated direction angles (else seeded)");
    realize->add_option("--r-outer", r_outer, "gen_cuboctahedron outer radius")->capture_default_str();
    realize->add_option("--r-inner", r_inner, "gen_cuboctahedron inner radius")->capture_default_str();
    add_seed(realize);
    realize_tols.attach(realize);
    add_out(realize);
    realize->callback([&] {
        action = [&] {
            const Graph g = resolve_graph(graph_a);
            Layout l;
            if (solve) {
                SolverOptions opts;
                if (symmetry == "shift") {
                    const int ground = ground_size(g);
                    auto rot = subset_shift_automorphism(g, ground);
                    if (!rot) {
                        throw ParameterError("--symmetry shift needs subset-labelled vertices closed under the shift");
                    }
                    opts.symmetry = orbits_of(*rot);
                    opts.symmetry->pinned_radius.assign(opts.symmetry->orbits.size(), std::nullopt);
                    for (const auto& pin : pins) {
                        const auto pos = pin.find(':');
                        if (pos == std::string::npos) {
                            throw ParameterError("--pin expects ORBIT:RADIUS");
                        }
                        const auto vals = parse_numbers(pin.substr(0, pos) + "," + pin.substr(pos + 1), 2, "--pin");
                        const auto orbit = static_cast<std::size_t>(vals[0]);
                        if (vals[0] < 0 || orbit >= opts.symmetry->orbits.size()) {
                            throw ParameterError("--pin: no orbit " + pin.substr(0, pos));
                        }
                        opts.symmetry->pinned_radius[orbit] = vals[1];
                    }
                } else if (!pins.empty()) {
                    throw ParameterError("--pin requires --symmetry shift");
                }
                l = solve_unit_distance(g, Seed{seed}, opts).layout;
            } else if (layout_name == "polygon") {
                l = layout_polygon(g.order());
            } else if (layout_name == "hypercube") {
                int d = 0;
                while ((1 << d) < g.order()) {
                    ++d;
                }
                if (!angles_text.empty()) {
                    l = layout_hypercube(d, parse_numbers(angles_text, static_cast<std::size_t>(d), "--angles"),
                                         realize_tols.tols);
                } else {
                    l = layout_hypercube(d, Seed{seed}, realize_tols.tols);
                }
            } else if (layout_name == "gen_cuboctahedron") {
                if (g.order() % 3 != 0) {
                    throw ParameterError("gen_cuboctahedron layout needs 3n vertices");
                }
                l = layout_gen_cuboctahedron(g.order() / 3, r_outer, r_inner, realize_tols.tols);
            } else {
                throw ParameterError("realize needs --layout NAME or --solve");
            }
            if (!solve && !isomorphic(l.graph, g)) {
                throw ParameterError("layout '" + layout_name + "' does not fit graph '" + graph_a + "'");
            }
            l.meta["seed"] = seed;
            l.meta["command"] = command_line;
            emit_json(out, to_json(l));
        };
    });

    // circles
    auto* circles = app.add_subcommand("circles", "one circle per vertex through its neighbours");
    std::string layout_file;
    CircleOptions circle_opts;
    TolFlags circle_tols;
    circles->add_option("layout", layout_file, "layout file")->required()->check(CLI::ExistingFile);
    circles->add_flag("--allow-degree-two", circle_opts.allow_degree_two, "centre degree-2 circles on the vertex");
    circles->add_flag("--allow-degenerate", circle_opts.allow_degenerate, "accept coincident points");
    circle_tols.attach(circles);
    add_out(circles);
    circles->callback([&] {
        action = [&] {
            circle_opts.tols = circle_tols.tols;
            const auto l = layout_from_json(read_json_file(layout_file));
            emit_json(out, to_json(check_flags(circles_from_layout(l, circle_opts))));
        };
    });

    // check
    auto* check = app.add_subcommand("check", "report proper/lineal/isometric/determining/perfect flags");
    std::string pcc_file;
    std::vector<std::string> required_flags;
    check->add_option("pcc", pcc_file, "point-circle file")->required()->check(CLI::ExistingFile);
    check->add_option("--require", required_flags, "exit 1 unless these flags hold")
        ->check(CLI::IsMember({"proper", "lineal", "isometric", "determining", "perfect"}));
    check->callback([&] {
        action = [&] {
            const auto pcc = check_flags(pcc_from_json(read_json_file(pcc_file)));
            print_flags(pcc.flags);
            std::cout << "max incidence residual: " << pcc.max_incidence_residual() << "\n";
            const auto& f = pcc.flags;
            for (const auto& name : required_flags) {
                const std::optional<bool>& v = name == "proper"      ? f.proper
                                               : name == "lineal"    ? f.lineal
                                               : name == "isometric" ? f.isometric
                                               : name == "determining" ? f.determining
                                                                       : f.perfect;
                if (!v.value_or(false)) {
                    std::cerr << "required flag '" << name << "' does not hold\n";
                    throw PropertyFailed{};
                }
            }
        };
    });

    // n3realize
    auto* n3 = app.add_subcommand("n3realize", "points and circumcircles for a structure with 3-point blocks");
    n3->add_option("structure", target, "fano | pappus | desargues | incidence file")->required();
    TolFlags n3_tols;
    add_seed(n3);
    n3_tols.attach(n3);
    add_out(n3);
    n3->callback([&] {
        action = [&] {
            IncidenceStructure c;
            if (target == "fano") {
                c = fano_plane();
            } else if (target == "pappus") {
                c = pappus_oracle().structure;
            } else if (target == "desargues") {
                c = v_construct(build_family(FamilySpec::parse("petersen")));
            } else {
                c = resolve_structure(target);
            }
            emit_json(out, to_json(check_flags(realize_n3(c, Seed{seed}, n3_tols.tols))));
        };
    });

    // invert
    auto* invert = app.add_subcommand("invert", "invert a point-line configuration in a circle");
    std::string input_file;
    std::string center_text = "0,0";
    double radius = 1.0;
    TolFlags invert_tols;
    invert->add_option("input", input_file, "point-line file {points, lines}")->required()->check(CLI::ExistingFile);
    invert->add_option("--center", center_text, "inversion centre x,y")->capture_default_str();
    invert->add_option("--radius", radius, "inversion radius")->capture_default_str();
    invert_tols.attach(invert);
    add_out(invert);
    invert->callback([&] {
        action = [&] {
            const auto in = point_line_from_json(read_json_file(input_file));
            const auto c = parse_numbers(center_text, 2, "--center");
            auto pcc = invert_pointline(in.points, in.lines, {c[0], c[1]}, radius, invert_tols.tols);
            auto checked = check_flags(pcc);
            checked.flags.proper = false;
            emit_json(out, to_json(checked));
        };
    });

    // spatial
    auto* spatial = app.add_subcommand("spatial", "polytope point-plane and sphere-circle constructions");
    std::string polytope;
    std::string spatial_action;
    std::string pole_text;
    double clearance = AutoPole{}.clearance;
    TolFlags spatial_tols;
    spatial->add_option("polytope", polytope, "polytope name or file")->required();
    spatial->add_option("action", spatial_action, "planes | sphere | project")
        ->required()
        ->check(CLI::IsMember({"planes", "sphere", "project"}));
    spatial->add_option("--pole", pole_text, "project: pole x,y,z on the circumsphere (else chosen automatically)");
    spatial->add_option("--clearance", clearance, "project: automatic pole clearance relative to the sphere radius")
        ->capture_default_str();
    add_seed(spatial);
    spatial_tols.attach(spatial);
    add_out(spatial);
    spatial->callback([&] {
        action = [&] {
            PolytopeSkeleton p;
            if (std::filesystem::exists(polytope)) {
                p = polytope_from_json(read_json_file(polytope));
                validate_polytope(p);
            } else {
                p = polytope_data(polytope);
            }
            const auto adm = admissible_polytope(p, spatial_tols.tols.incidence);
            if (!adm.admissible()) {
                std::cerr << "polytope '" << p.name << "' is not admissible: " << adm.diagnosis() << "\n";
                throw PropertyFailed{};
            }
            if (spatial_action == "planes") {
                emit_json(out, to_json(point_plane_vconstruct(p, spatial_tols.tols.incidence)));
                return;
            }
            const auto sc = sphere_circles(p, spatial_tols.tols.incidence);
            if (spatial_action == "sphere") {
                emit_json(out, to_json(sc));
                return;
            }
            std::variant<Point3, AutoPole> pole = AutoPole{Seed{seed}, clearance};
            if (!pole_text.empty()) {
                const auto v = parse_numbers(pole_text, 3, "--pole");
                pole = Point3{v[0], v[1], v[2]};
            }
            const auto proj = stereographic_project(sc, pole, spatial_tols.tols);
            std::cerr << "pole: " << proj.pole.x << "," << proj.pole.y << "," << proj.pole.z
                      << "; max sample residual " << proj.max_sample_residual << "\n";
            emit_json(out, to_json(check_flags(proj.config)));
        };
    });

    // render
    auto* render = app.add_subcommand("render", "SVG drawing of a layout or point-circle file");
    SvgOptions svg_opts;
    render->add_option("input", input_file, "layout or point-circle file")->required()->check(CLI::ExistingFile);
    render->add_flag("--labels", svg_opts.labels, "draw vertex/point labels");
    render->add_option("--width", svg_opts.width_px, "width in pixels")->capture_default_str();
    add_out(render);
    render->callback([&] {
        action = [&] {
            const auto j = read_json_file(input_file);
            switch (detect_kind(j)) {
                case ArtifactKind::layout: emit(out, render_svg(layout_from_json(j), svg_opts)); break;
                case ArtifactKind::point_circle: emit(out, render_svg(pcc_from_json(j), svg_opts)); break;
                default: throw ParameterError("render needs a layout or point-circle file");
            }
        };
    });

    // iso
    auto* iso = app.add_subcommand("iso", "graph isomorphism test (exit 0 iff isomorphic)");
    iso->add_option("a", graph_a, "graph file or family")->required();
    iso->add_option("b", graph_b, "graph file or family")->required();
    iso->callback([&] {
        action = [&] {
            const auto m = isomorphic(resolve_graph(graph_a), resolve_graph(graph_b));
            std::cout << "isomorphic: " << (m ? "yes" : "no") << "\n";
            if (!m) {
                throw PropertyFailed{};
            }
            std::cout << "map:";
            for (int v : m->image) {
                std::cout << " " << v;
            }
            std::cout << "\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        action();
        return 0;
    } catch (const PropertyFailed&) {
        return 1;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
