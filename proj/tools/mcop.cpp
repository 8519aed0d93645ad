// mcop: exact computations on marked chain-order polytopes.
//
// Every subcommand reads a poset JSON file (--poset FILE, "-" for stdin),
// prints a JSON report to stdout and returns 0 on success, 1 when a checked
// property fails to hold, 2 on bad input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mcop/faces.hpp"
#include "mcop/gt.hpp"
#include "mcop/json_io.hpp"
#include "mcop/lattice.hpp"
#include "mcop/num.hpp"
#include "mcop/transfer.hpp"

using namespace mcop;

namespace {

struct CommonOpts {
    std::string poset_path = "-";
    std::vector<std::string> u1, u2, fix;
    bool has_u1 = false, has_u2 = false;
    Int dilation = 1;
    bool plain = false;
    bool json = true;
};

std::vector<std::string> split_list(const std::string& arg) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(arg);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_decomposition = true) {
    cmd->add_option("--poset", opts.poset_path, "poset JSON file, - for stdin");
    if (with_decomposition) {
        cmd->add_option_function<std::string>(
               "--u1", [&opts](const std::string& v) { opts.u1 = split_list(v); opts.has_u1 = true; },
               "comma separated order part; the complement becomes the chain part");
        cmd->add_option_function<std::string>(
               "--u2", [&opts](const std::string& v) { opts.u2 = split_list(v); opts.has_u2 = true; },
               "comma separated chain part; the complement becomes the order part");
    }
    cmd->add_option("--dilate", opts.dilation, "dilation factor applied to the polytope")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--plain", opts.plain, "plain text output instead of JSON");
    cmd->add_flag("--json", opts.json, "JSON output (default)");
}

Decomposition resolve_decomposition(const PosetFile& file, const CommonOpts& opts) {
    if (opts.has_u1 && opts.has_u2) {
        Decomposition d = decomposition_from_u1(file.marked_poset, opts.u1);
        Decomposition check = decomposition_from_u2(file.marked_poset, opts.u2);
        if (!(d == check)) throw NotAPartition("--u1 and --u2 are inconsistent");
        return d;
    }
    if (opts.has_u1) return decomposition_from_u1(file.marked_poset, opts.u1);
    if (opts.has_u2) return decomposition_from_u2(file.marked_poset, opts.u2);
    if (file.decomposition) return *file.decomposition;
    throw Error("no decomposition: pass --u1 or --u2, or store one in the poset file");
}

Json decomposition_json(const MarkedPoset& m, const Decomposition& d) {
    Json j;
    j["U1"] = Json::array();
    for (int id : d.u1) j["U1"].push_back(m.poset().label(id));
    j["U2"] = Json::array();
    for (int id : d.u2) j["U2"].push_back(m.poset().label(id));
    return j;
}

Json ehrhart_json(const EhrhartPolynomial& e) {
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(rational_to_json(c));
    return coeffs;
}

struct Report {
    Json j;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) {
        j["command"] = command;
        j["inputs"] = Json::object();
    }
    void finish(std::ostream& out, bool plain = false) {
        j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        if (plain)
            out << j["command"].get<std::string>() << "\n" << j["results"].dump(2) << "\n";
        else
            out << j.dump() << "\n";
    }
};

void echo_inputs(Report& report, const CommonOpts& opts, const PosetFile& file,
                 const std::optional<Decomposition>& d) {
    report.j["inputs"]["poset"] = opts.poset_path;
    report.j["inputs"]["elements"] = file.marked_poset.poset().size();
    if (d) report.j["inputs"]["decomposition"] = decomposition_json(file.marked_poset, *d);
    if (opts.dilation != 1) report.j["inputs"]["dilate"] = opts.dilation;
}

int thread_cap() {
    const char* env = std::getenv("MCOP_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for marked chain-order polytopes"};
    app.require_subcommand(1);
    thread_cap(); // validated here; all computations are single threaded

    CommonOpts opts;
    std::string lambda_arg, mu_arg;
    int gt_n = 2;
    std::string point_arg;
    std::string to_u1_arg;
    bool gt_verify = false;

    CLI::App* validate = app.add_subcommand("validate", "normalize a poset file and report its covers");
    add_common(validate, opts, false);

    CLI::App* star = app.add_subcommand("star", "list the star elements");
    add_common(star, opts, false);

    CLI::App* decomps = app.add_subcommand("decomps", "enumerate admissible decompositions and classes");
    add_common(decomps, opts, false);

    CLI::App* hrep_cmd = app.add_subcommand("hrep", "print the inequality system");
    add_common(hrep_cmd, opts);

    CLI::App* points = app.add_subcommand("points", "stream the lattice points, one JSON object per line");
    add_common(points, opts);

    CLI::App* count = app.add_subcommand("count", "count the lattice points");
    add_common(count, opts);

    CLI::App* ehrhart_cmd = app.add_subcommand("ehrhart", "exact counting polynomial");
    add_common(ehrhart_cmd, opts);

    CLI::App* vertices = app.add_subcommand("vertices", "enumerate the vertices exactly");
    add_common(vertices, opts);

    CLI::App* fvector_cmd = app.add_subcommand("fvector", "face counts by dimension");
    add_common(fvector_cmd, opts);

    CLI::App* facets = app.add_subcommand("facets", "closed-form facet count against the geometric one");
    add_common(facets, opts);

    CLI::App* transfer_cmd = app.add_subcommand("transfer", "apply the transfer map to a point or to all points");
    add_common(transfer_cmd, opts);
    transfer_cmd->add_option("--point", point_arg, "comma separated values in coordinate order");

    CLI::App* equiv = app.add_subcommand("equiv", "compose a unimodular equivalence between two decompositions");
    add_common(equiv, opts);
    equiv->add_option("--to-u1", to_u1_arg, "order part of the target decomposition")->required();

    CLI::App* verify = app.add_subcommand("verify", "verify a property; exit 1 when it fails");
    verify->require_subcommand(1);
    CLI::App* v_norm = verify->add_subcommand("normality", "dilated points split into sums");
    add_common(v_norm, opts);
    CLI::App* v_mink = verify->add_subcommand("minkowski", "point sets add like their markings");
    add_common(v_mink, opts);
    v_mink->add_option("--mu", mu_arg, "second marking, label=value pairs")->required();
    CLI::App* v_ehr = verify->add_subcommand("ehrhart-equiv", "one counting polynomial for all decompositions");
    add_common(v_ehr, opts);
    CLI::App* v_dec = verify->add_subcommand("decomposition-property", "polytope glues from structural fibers");
    add_common(v_dec, opts);
    v_dec->add_option_function<std::string>(
             "--fix", [&opts](const std::string& v) { opts.fix = split_list(v); },
             "coordinates to fix (defaults to the order part)");

    CLI::App* conjecture = app.add_subcommand("conjecture", "compare face vectors across decompositions");
    add_common(conjecture, opts, false);

    CLI::App* gt_cmd = app.add_subcommand("gt", "emit the triangular poset family as JSON");
    gt_cmd->add_option("--n", gt_n, "size parameter")->required();
    gt_cmd->add_option("--lambda", lambda_arg, "comma separated weakly decreasing marking")->required();
    gt_cmd->add_flag("--verify", gt_verify, "run the cross-check battery instead of printing");
    gt_cmd->allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            std::exit(app.exit(e));
        }
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (gt_cmd->parsed()) {
            for (const std::string& extra : gt_cmd->remaining())
                if (extra == "verify") gt_verify = true;
            GTSpec spec;
            spec.n = gt_n;
            for (const std::string& item : split_list(lambda_arg)) spec.lambda.push_back(std::stoll(item));
            MarkedPoset m = build_gt_poset(spec);
            if (!gt_verify) {
                std::cout << poset_to_json(m).dump() << "\n";
                return 0;
            }
            Report report("gt verify");
            report.j["inputs"]["n"] = spec.n;
            report.j["inputs"]["lambda"] = lambda_arg;
            bool ok = true;
            mpz_class expected = weyl_dimension(spec);
            Json counts = Json::array();
            for (const Decomposition& d : enumerate_admissible(m)) {
                long long c = count_lattice_points(build_chain_order(m, d));
                counts.push_back(c);
                ok = ok && (to_mpz(c) == expected);
            }
            report.j["results"]["dimension_formula"] = expected.get_str();
            report.j["results"]["counts"] = counts;
            report.j["results"]["counts_match"] = ok;
            if (spec.n >= 2) {
                long long classes = count_signature_classes(spec.n);
                long long expected_classes = 1ll << (spec.n - 2);
                report.j["results"]["signature_classes"] = classes;
                ok = ok && classes == expected_classes;
            }
            report.j["results"]["holds"] = ok;
            report.finish(std::cout, opts.plain);
            return ok ? 0 : 1;
        }

        PosetFile file = load_poset_file(opts.poset_path);
        const MarkedPoset& m = file.marked_poset;

        if (validate->parsed()) {
            Report report("validate");
            echo_inputs(report, opts, file, std::nullopt);
            report.j["results"] = poset_to_json(m, file.decomposition);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (star->parsed()) {
            Report report("star");
            echo_inputs(report, opts, file, std::nullopt);
            Json stars = Json::array();
            for (int id : star_elements(m)) stars.push_back(m.poset().label(id));
            report.j["results"]["star"] = std::move(stars);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (decomps->parsed()) {
            Report report("decomps");
            echo_inputs(report, opts, file, std::nullopt);
            Json list = Json::array();
            for (const Decomposition& d : enumerate_admissible(m)) {
                Json entry = decomposition_json(m, d);
                Json sig = Json::array();
                for (int id : star_signature(m, d)) sig.push_back(m.poset().label(id));
                entry["signature"] = std::move(sig);
                list.push_back(std::move(entry));
            }
            report.j["results"]["count"] = list.size();
            report.j["results"]["decompositions"] = std::move(list);
            Json classes = Json::array();
            for (const auto& cls : equivalence_classes(m)) {
                Json group = Json::array();
                for (const Decomposition& d : cls) group.push_back(decomposition_json(m, d));
                classes.push_back(std::move(group));
            }
            report.j["results"]["classes"] = std::move(classes);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (conjecture->parsed()) {
            Report report("conjecture");
            echo_inputs(report, opts, file, std::nullopt);
            ConjectureReport r = test_f_conjecture(m);
            Json fvJson = Json::array();
            for (size_t i = 0; i < r.decompositions.size(); ++i) {
                Json entry = decomposition_json(m, r.decompositions[i]);
                entry["f"] = r.f_vectors[i].f;
                fvJson.push_back(std::move(entry));
            }
            report.j["results"]["f_vectors"] = std::move(fvJson);
            Json pairs = Json::array();
            for (const auto& pair : r.pairs) {
                Json entry;
                entry["fine_u1"] = decomposition_json(m, pair.fine)["U1"];
                entry["coarse_u1"] = decomposition_json(m, pair.coarse)["U1"];
                entry["violations"] = pair.violations;
                pairs.push_back(std::move(entry));
            }
            report.j["results"]["pairs"] = std::move(pairs);
            report.j["results"]["facet_violations"] = r.facet_violations;
            report.j["results"]["total_violations"] = r.total_violations;
            report.finish(std::cout, opts.plain);
            return 0; // findings are reported, never a process failure
        }

        if (v_ehr->parsed()) {
            Report report("verify ehrhart-equiv");
            echo_inputs(report, opts, file, std::nullopt);
            EhrhartEquivalenceReport r = check_ehrhart_equivalence(m);
            report.j["results"]["equivalent"] = r.equivalent;
            report.j["results"]["decompositions"] = r.decompositions.size();
            report.j["results"]["coefficients"] = ehrhart_json(r.polynomial);
            report.finish(std::cout, opts.plain);
            return r.equivalent ? 0 : 1;
        }

        // Everything below needs a decomposition.
        Decomposition d = resolve_decomposition(file, opts);
        HRep h = scale_bounds(build_chain_order(m, d), opts.dilation);

        if (hrep_cmd->parsed()) {
            Report report("hrep");
            echo_inputs(report, opts, file, d);
            report.j["results"] = hrep_to_json(h);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (points->parsed()) {
            Report report("points");
            echo_inputs(report, opts, file, d);
            long long n = 0;
            for (const Point& x : enumerate_lattice_points(h)) {
                std::cout << point_to_json(h.coord_labels(), x).dump() << "\n";
                ++n;
            }
            report.j["results"]["count"] = n;
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (count->parsed()) {
            Report report("count");
            echo_inputs(report, opts, file, d);
            report.j["results"]["count"] = count_lattice_points(h);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (ehrhart_cmd->parsed()) {
            Report report("ehrhart");
            echo_inputs(report, opts, file, d);
            EhrhartPolynomial e = ehrhart_polynomial(m.scaled(opts.dilation), d);
            report.j["results"]["coefficients"] = ehrhart_json(e);
            report.j["results"]["degree"] = e.degree();
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (vertices->parsed()) {
            Report report("vertices");
            echo_inputs(report, opts, file, d);
            VertexSet vs = enumerate_vertices(h);
            report.j["results"]["empty"] = vs.empty;
            report.j["results"]["dim"] = vs.dim;
            Json verts = Json::array();
            for (const auto& v : vs.vertices) {
                Json vj = Json::array();
                for (const auto& c : v) vj.push_back(rational_to_json(c));
                verts.push_back(std::move(vj));
            }
            report.j["results"]["vertices"] = std::move(verts);
            report.j["results"]["integral"] = vs.all_integral();
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (fvector_cmd->parsed()) {
            Report report("fvector");
            echo_inputs(report, opts, file, d);
            FVector fv = f_vector(h);
            report.j["results"]["f"] = fv.f;
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (facets->parsed()) {
            Report report("facets");
            echo_inputs(report, opts, file, d);
            Int formula = facet_count_formula(m, d);
            VertexSet vs = enumerate_vertices(h);
            Int geometric = static_cast<Int>(geometric_facets(h, vs).size());
            report.j["results"]["formula"] = formula;
            report.j["results"]["geometric"] = geometric;
            bool match = formula == geometric;
            report.j["results"]["match"] = match;
            report.finish(std::cout, opts.plain);
            return match ? 0 : 1;
        }

        if (transfer_cmd->parsed()) {
            Report report("transfer");
            echo_inputs(report, opts, file, d);
            if (!point_arg.empty()) {
                Point x;
                for (const std::string& item : split_list(point_arg)) x.push_back(std::stoll(item));
                Point y = chain_order_transfer(m, d, x);
                report.j["results"]["input"] = point_to_json(h.coord_labels(), x);
                report.j["results"]["output"] = point_to_json(h.coord_labels(), y);
            } else {
                Json list = Json::array();
                for (const Point& x : enumerate_lattice_points(build_marked_order(m))) {
                    Json entry;
                    entry["in"] = point_to_json(h.coord_labels(), x);
                    entry["out"] = point_to_json(h.coord_labels(), chain_order_transfer(m, d, x));
                    list.push_back(std::move(entry));
                }
                report.j["results"]["points"] = std::move(list);
            }
            report.j["results"]["map"] = transfer_description(m, d);
            report.finish(std::cout, opts.plain);
            return 0;
        }

        if (equiv->parsed()) {
            Report report("equiv");
            echo_inputs(report, opts, file, d);
            Decomposition target = decomposition_from_u1(m, split_list(to_u1_arg));
            EquivalenceResult eq = compose_equivalence(m, d, target);
            bool ok = verify_unimodular_equivalence(m, d, target, eq.map);
            report.j["results"]["matrix"] = eq.map.matrix;
            report.j["results"]["translation"] = eq.map.translation;
            Json steps = Json::array();
            for (const MoveResult& step : eq.steps) {
                Json s;
                s["element"] = m.poset().label(step.element);
                s["rule"] = std::string(1, step.rule);
                steps.push_back(std::move(s));
            }
            report.j["results"]["steps"] = std::move(steps);
            report.j["results"]["verified"] = ok;
            report.finish(std::cout, opts.plain);
            return ok ? 0 : 1;
        }

        if (v_norm->parsed()) {
            Report report("verify normality");
            echo_inputs(report, opts, file, d);
            Int n = opts.dilation >= 2 ? opts.dilation : 2;
            NormalityReport r = verify_normality(m, d, n);
            report.j["results"]["n"] = n;
            report.j["results"]["dilated_count"] = r.dilated_count;
            report.j["results"]["sum_count"] = r.sum_count;
            report.j["results"]["holds"] = r.holds;
            report.finish(std::cout, opts.plain);
            return r.holds ? 0 : 1;
        }

        if (v_mink->parsed()) {
            Report report("verify minkowski");
            echo_inputs(report, opts, file, d);
            std::map<int, Int> mu;
            for (const std::string& item : split_list(mu_arg)) {
                auto eq_pos = item.find('=');
                if (eq_pos == std::string::npos) throw Error("--mu entries look like label=value");
                mu[m.poset().index(item.substr(0, eq_pos))] = std::stoll(item.substr(eq_pos + 1));
            }
            MinkowskiReport r = verify_minkowski(m, m.with_marking(mu), d);
            report.j["results"]["holds"] = r.holds;
            report.j["results"]["marked_set_linear"] = r.marked_set_linear;
            report.j["results"]["lhs_count"] = r.lhs_count;
            report.j["results"]["rhs_count"] = r.rhs_count;
            report.finish(std::cout, opts.plain);
            return r.holds ? 0 : 1;
        }

        if (v_dec->parsed()) {
            Report report("verify decomposition-property");
            echo_inputs(report, opts, file, d);
            std::vector<int> fixed;
            if (opts.fix.empty()) {
                fixed = d.u1;
            } else {
                for (const std::string& label : opts.fix) fixed.push_back(m.poset().index(label));
            }
            Json fixed_json = Json::array();
            for (int id : fixed) fixed_json.push_back(m.poset().label(id));
            report.j["inputs"]["fix"] = std::move(fixed_json);
            DecompositionPropertyReport r = check_decomposition_property(m, d, fixed);
            report.j["results"]["holds"] = r.holds;
            Json violations = Json::array();
            for (const auto& v : r.escaped) {
                Json entry;
                entry["base"] = point_to_json(h.coord_labels(), v.base);
                entry["mixed"] = point_to_json(h.coord_labels(), v.mixed);
                violations.push_back(std::move(entry));
            }
            report.j["results"]["violations"] = std::move(violations);
            report.finish(std::cout, opts.plain);
            return r.holds ? 0 : 1;
        }

        std::cerr << app.help() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
