#include <orbitope/bly.hpp>
#include <orbitope/hull.hpp>
#include <orbitope/models.hpp>
#include <orbitope/polytope.hpp>
#include <orbitope/satake.hpp>
#include <orbitope/spectral.hpp>
#include <orbitope/svg.hpp>
#include <orbitope/weights.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace orbitope;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "orbitope/1";

double sig12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, 11 - std::floor(std::log10(std::abs(x))));
    return std::round(x * mag) / mag;
}

WeightVec parse_weight(const std::string& s, int rank) {
    WeightVec w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoll(tok));
    if (static_cast<int>(w.size()) != rank)
        throw std::invalid_argument("weight has " + std::to_string(w.size()) +
                                    " entries, expected " + std::to_string(rank));
    return w;
}

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file " + path);
        out << j.dump(2) << "\n";
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << text;
}

json weight_to_json(const WeightVec& w) { return json(w); }

json subset_to_json(const SimpleSubset& s) {
    json j = json::array();
    for (int i : s.indices()) j.push_back(i + 1);  // 1-based simple root labels
    return j;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("ORBITOPE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

DiscreteMeasure load_measure(const RepModel& model, const std::string& spec, uint64_t seed) {
    if (spec == "weights") return weight_basis_measure(model);
    if (spec.rfind("haar:", 0) == 0)
        return haar_measure(model, std::stoi(spec.substr(5)), seed);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open measure file " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return measure_from_json(model, ss.str());
}

int cmd_roots(const std::string& type_s, const std::string& out) {
    const auto rs = RootSystem::build(CartanType::parse(type_s));
    json j;
    j["schema"] = kSchema;
    j["type"] = rs.type()->name();
    j["rank"] = rs.rank();
    j["num_positive_roots"] = rs.positive_roots().size();
    j["weyl_order"] = weyl_group_order(*rs.type());
    j["simple_roots"] = json::array();
    for (const auto& a : rs.simple_roots()) j["simple_roots"].push_back(weight_to_json(a));
    j["positive_roots"] = json::array();
    for (const auto& a : rs.positive_roots()) j["positive_roots"].push_back(weight_to_json(a));
    json form = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        json row = json::array();
        for (int k = 0; k < rs.rank(); ++k) {
            const Rat& q = rs.form()(i, k);
            row.push_back(std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()));
        }
        form.push_back(std::move(row));
    }
    j["form"] = std::move(form);
    emit(j, out);
    return 0;
}

int cmd_satake(const std::string& type_s, const std::string& weight_s, const std::string& out) {
    const auto rs = RootSystem::build(CartanType::parse(type_s));
    const WeightVec mu = parse_weight(weight_s, rs.rank());
    const auto comps = enumerate_boundary_components(rs, mu);
    json j;
    j["schema"] = kSchema;
    j["type"] = rs.type()->name();
    j["weight"] = weight_to_json(mu);
    j["num_components"] = comps.size();
    j["components"] = json::array();
    for (const auto& c : comps) {
        json cj;
        cj["I"] = subset_to_json(c.I);
        cj["saturation"] = subset_to_json(c.J);
        cj["dim_VI"] = c.dim_VI;
        cj["restricted_highest_weight"] = weight_to_json(c.restricted_highest_weight);
        cj["open_stratum"] = (c.I.bits == SimpleSubset::full(rs.rank()).bits);
        j["components"].push_back(std::move(cj));
    }
    emit(j, out);
    return 0;
}

int cmd_polytope(const std::string& type_s, const std::string& weight_s, bool faces,
                 const std::string& svg_path, const std::string& csv_path,
                 const std::string& out) {
    const auto rs = RootSystem::build(CartanType::parse(type_s));
    const WeightVec mu = parse_weight(weight_s, rs.rank());
    if (!rs.is_dominant(mu)) throw std::invalid_argument("weight must be dominant");
    const auto poly = moment_polytope(rs, mu);
    json j;
    j["schema"] = kSchema;
    j["type"] = rs.type()->name();
    j["weight"] = weight_to_json(mu);
    j["num_vertices"] = poly.vertices.size();
    j["vertices"] = json::array();
    for (const auto& v : poly.vertices) j["vertices"].push_back(weight_to_json(v));
    if (faces) {
        j["faces"] = json::array();
        for (const auto& bc : enumerate_boundary_components(rs, mu)) {
            const auto fd = face_of_subset(rs, poly, bc.I);
            json fj;
            fj["I"] = subset_to_json(bc.I);
            fj["num_vertices"] = fd.vertex_set.size();
            fj["vertices"] = json::array();
            for (const auto& v : fd.vertex_set) fj["vertices"].push_back(weight_to_json(v));
            j["faces"].push_back(std::move(fj));
        }
    }
    if (!svg_path.empty()) {
        write_file(svg_path, render_polytope_svg(rs, mu, faces));
        j["svg"] = svg_path;
    }
    if (!csv_path.empty()) {
        write_file(csv_path, polytope_csv(rs, poly));
        j["csv"] = csv_path;
    }
    emit(j, out);
    return 0;
}

int cmd_limit(const std::string& model_s, const std::string& h_s, double t,
              const std::string& out) {
    const RepModel model = parse_model(model_s);
    VectorXd h(model.n);
    {
        std::stringstream ss(h_s);
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',')) {
            if (i >= model.n) throw std::invalid_argument("too many entries in --H");
            h(i++) = std::stod(tok);
        }
        if (i != model.n) throw std::invalid_argument("expected " + std::to_string(model.n) +
                                                      " entries in --H");
    }
    const RayLimit rl = satake_ray_limit(model, h);
    const MatrixXcd numeric = ray_point(model, h, t);
    const MatrixXcd predicted = rl.projector / static_cast<double>(rl.rank);
    json j;
    j["schema"] = kSchema;
    j["model"] = model_name(model);
    j["I"] = subset_to_json(rl.I);
    j["rank"] = rl.rank;
    j["dim_V"] = model.dimV;
    j["t"] = t;
    j["deviation"] = sig12((numeric - predicted).cwiseAbs().maxCoeff());
    emit(j, out);
    return 0;
}

int cmd_balance(const std::string& model_s, const std::string& measure_s, double tol,
                int max_iter, uint64_t seed, const std::string& out) {
    const RepModel model = parse_model(model_s);
    const LieBasis basis = lie_basis(model.n);
    const DiscreteMeasure gamma = load_measure(model, measure_s, seed);
    const auto report = admissibility_check(model, gamma);
    SolverConfig config;
    config.tol = tol;
    config.max_iter = max_iter;
    const BalancedResult result = solve_balanced(model, basis, gamma, config);

    json j = json::parse(result_to_json(result));
    j["schema"] = kSchema;
    j["model"] = model_name(model);
    j["residual"] = sig12(result.residual);
    j["admissibility"] = {{"pass", report.pass},
                          {"rank", report.rank},
                          {"condition", sig12(report.condition)}};
    for (auto& v : j["trace"]) v = sig12(v.get<double>());
    emit(j, out);
    return result.status == SolveStatus::Converged ? 0 : 2;
}

int cmd_lambda1(const std::string& preset_s, bool table, const std::string& out) {
    if (table) {
        emit(json::parse(preset_table_json()), out);
        return 0;
    }
    const TopologicalData td = parse_preset(preset_s);
    json j;
    j["schema"] = kSchema;
    j["preset"] = preset_s;
    j["bound"] = lambda1_bound(td);
    emit(j, out);
    return 0;
}

int cmd_verify(uint64_t seed) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (const char* t : {"A1", "A2", "A3", "B2", "G2"}) {
            const auto rs = RootSystem::build(CartanType::parse(t));
            ok = ok && static_cast<long long>(rs.weyl_orbit(rs.rho()).size()) ==
                           weyl_group_order(*rs.type());
        }
        check("weyl-orbit-of-rho-has-group-order", ok);
    }
    {
        bool ok = true;
        for (const char* t : {"A2", "A3", "B2", "G2"}) {
            const auto rs = RootSystem::build(CartanType::parse(t));
            WeightVec mu(rs.rank(), 0);
            mu[0] = 1;
            const auto diagram = weight_diagram(rs, mu);
            ok = ok && diagram.dim() == weyl_dimension(rs, mu);
        }
        check("freudenthal-dimension-matches-weyl-formula", ok);
    }
    {
        bool ok = true;
        for (const char* t : {"A2", "A3", "B2"}) {
            const auto rs = RootSystem::build(CartanType::parse(t));
            WeightVec mu(rs.rank(), 1);
            const auto diagram = weight_diagram(rs, mu);
            WeightSet supports;
            for (const auto& [w, m] : diagram.entries)
                supports.insert(WeightVec{static_cast<long long>(support(rs, mu, w).bits)});
            size_t connected = 0;
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits)
                if (is_mu_connected(rs, SimpleSubset(bits, rs.rank()), mu)) ++connected;
            ok = ok && supports.size() == connected;
        }
        check("mu-connected-subsets-are-weight-supports", ok);
    }
    {
        bool ok = true;
        for (const char* t : {"A2", "B2", "G2"}) {
            const auto rs = RootSystem::build(CartanType::parse(t));
            WeightVec mu(rs.rank(), 1);
            const auto poly = moment_polytope(rs, mu);
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
                SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                ok = ok && face_of_subset(rs, poly, I).vertex_set ==
                               face_vertices_by_span(rs, poly, I);
                ok = ok && cone_containment_check(rs, poly, cone_system(rs, I)).ok;
                ok = ok && theta_shift_oracle(rs, mu, I);
            }
        }
        check("face-cone-and-shift-oracles", ok);
    }
    {
        const RepModel model = build_model(RepKind::Defining, 3);
        const LieBasis basis = lie_basis(3);
        const auto sample = sample_orbit(model, 200, seed);
        check("moment-norm-identity", moment_norm_identity(model, basis, sample) <= 1e-8);
        const DiscreteMeasure gamma = weight_basis_measure(model);
        const VectorXd psi = bly_eval(model, basis, gamma, MatrixXcd::Identity(3, 3));
        check("weight-basis-measure-is-balanced", psi.norm() <= 1e-14);
    }
    {
        check("lambda1-preset-is-two", lambda1_bound(preset_pn(3)) == 2.0);
    }
    if (failures) std::cout << failures << " check(s) failed\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Satake boundary combinatorics, moment polytopes, and balanced points"};
    app.require_subcommand(1);

    std::string type_s, weight_s, model_s, measure_s, h_s, preset_s;
    std::string out, svg_path, csv_path;
    bool faces = false, table = false;
    double tol = 1e-8, t_ray = 40.0;
    int max_iter = 50;
    uint64_t seed = default_seed();

    auto* roots = app.add_subcommand("roots", "root system data for a Cartan type");
    roots->add_option("--type", type_s, "Cartan type, e.g. A3")->required();
    roots->add_option("-o,--out", out, "output JSON path (default stdout)");

    auto* satake = app.add_subcommand("satake", "boundary components for a highest weight");
    satake->add_option("--type", type_s)->required();
    satake->add_option("--weight", weight_s, "fundamental-weight coordinates, comma separated")
        ->required();
    satake->add_option("-o,--out", out);

    auto* polytope = app.add_subcommand("polytope", "moment polytope and faces");
    polytope->add_option("--type", type_s)->required();
    polytope->add_option("--weight", weight_s)->required();
    polytope->add_flag("--faces", faces, "include face data");
    polytope->add_option("--svg", svg_path, "write rank-2 SVG drawing");
    polytope->add_option("--csv", csv_path, "write vertex CSV");
    polytope->add_option("-o,--out", out);

    auto* limit = app.add_subcommand("limit", "ray limit in the compactification");
    limit->add_option("--model", model_s, "defining:n | ext:n:k | sym:n:d")->required();
    limit->add_option("--H", h_s, "diagonal of H, comma separated, dominant traceless")
        ->required();
    limit->add_option("--t", t_ray, "ray parameter for the numeric check");
    limit->add_option("-o,--out", out);

    auto* balance = app.add_subcommand("balance", "solve for the balanced point of a measure");
    balance->add_option("--model", model_s)->required();
    balance->add_option("--measure", measure_s, "JSON file, or 'weights', or 'haar:N'")
        ->required();
    balance->add_option("--tol", tol, "residual tolerance");
    balance->add_option("--max-iter", max_iter);
    balance->add_option("--seed", seed, "seed for generated measures");
    balance->add_option("-o,--out", out);

    auto* lambda1 = app.add_subcommand("lambda1", "first-eigenvalue upper bound");
    lambda1->add_option("--preset", preset_s, "pn:k or gr:k:n");
    lambda1->add_flag("--table", table, "print the preset table");
    lambda1->add_option("-o,--out", out);

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
        if (roots->parsed()) return cmd_roots(type_s, out);
        if (satake->parsed()) return cmd_satake(type_s, weight_s, out);
        if (polytope->parsed())
            return cmd_polytope(type_s, weight_s, faces, svg_path, csv_path, out);
        if (limit->parsed()) return cmd_limit(model_s, h_s, t_ray, out);
        if (balance->parsed())
            return cmd_balance(model_s, measure_s, tol, max_iter, seed, out);
        if (lambda1->parsed()) {
            if (!table && preset_s.empty())
                throw std::invalid_argument("lambda1 needs --preset or --table");
            return cmd_lambda1(preset_s, table, out);
        }
        if (verify->parsed()) return cmd_verify(seed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
