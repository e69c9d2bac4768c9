#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitope/hull.hpp>
#include <orbitope/models.hpp>
#include <orbitope/polytope.hpp>
#include <orbitope/rng.hpp>

#include <unsupported/Eigen/MatrixFunctions>

using namespace orbitope;

namespace {

MatrixXcd random_traceless(int n, Rng& rng) {
    MatrixXcd x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(rng.normal(), rng.normal());
    x -= (x.trace() / static_cast<double>(n)) * MatrixXcd::Identity(n, n);
    return x;
}

MatrixXcd random_su(int n, Rng& rng) {
    const LieBasis basis = lie_basis(n);
    MatrixXcd x = MatrixXcd::Zero(n, n);
    for (const auto& e : basis.elems) x += rng.normal() * e;
    return x;
}

VectorXcd random_point(const RepModel& model, uint64_t seed) {
    return sample_orbit(model, 1, seed)[0];
}

}  // namespace

TEST_CASE("model construction") {
    const RepModel def3 = build_model(RepKind::Defining, 3);
    CHECK(def3.dimV == 3);
    CHECK(def3.highest_weight() == WeightVec{1, 0});
    CHECK(def3.weight_labels[1] == WeightVec{-1, 1});
    CHECK(def3.weight_labels[2] == WeightVec{0, -1});
    CHECK(def3.fano_scale == 3.0);

    const RepModel gr24 = build_model(RepKind::ExteriorPower, 4, 2);
    CHECK(gr24.dimV == 6);
    CHECK(gr24.highest_weight() == WeightVec{0, 1, 0});
    CHECK(gr24.complex_dim_M() == 4);

    const RepModel sym22 = build_model(RepKind::SymPower, 2, 2);
    CHECK(sym22.dimV == 3);
    CHECK(sym22.highest_weight() == WeightVec{2});
    CHECK(sym22.fano_scale == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_model(RepKind::Defining, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_model(RepKind::Defining, 7), std::invalid_argument);
    CHECK_THROWS_AS(build_model(RepKind::ExteriorPower, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_model(RepKind::SymPower, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("spin:3"), std::invalid_argument);
    CHECK(model_name(parse_model("ext:4:2")) == "ext:4:2");
}

TEST_CASE("weight labels are multiplicity free and match the diagram") {
    for (const char* spec : {"defining:4", "ext:4:2", "sym:2:3", "sym:3:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        const auto diagram = weight_diagram(m.rs, m.highest_weight());
        CHECK(static_cast<int>(diagram.entries.size()) == m.dimV);
        for (const auto& w : m.weight_labels) CHECK(diagram.multiplicity(w) == 1);
    }
}

TEST_CASE("infinitesimal action of diagonal matrices matches the weight labels") {
    Rng rng(3);
    for (const char* spec : {"defining:3", "ext:4:2", "sym:2:2", "sym:3:3"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        VectorXd t(m.n);
        for (int i = 0; i < m.n; ++i) t(i) = rng.normal();
        t.array() -= t.mean();
        MatrixXcd x = MatrixXcd::Zero(m.n, m.n);
        for (int i = 0; i < m.n; ++i) x(i, i) = Complex(0, t(i));
        const MatrixXcd a = m.dtau(x);
        for (int b = 0; b < m.dimV; ++b)
            for (int c = 0; c < m.dimV; ++c) {
                const Complex expect =
                    (b == c) ? Complex(0, m.weight_value(b, t)) : Complex(0, 0);
                CHECK(std::abs(a(b, c) - expect) <= 1e-12);
            }
    }
}

TEST_CASE("dtau is the identity for the defining model and Leibniz on wedges") {
    Rng rng(4);
    const RepModel def = build_model(RepKind::Defining, 3);
    const MatrixXcd x = random_traceless(3, rng);
    CHECK((def.dtau(x) - x).cwiseAbs().maxCoeff() == 0.0);

    // Leibniz on a wedge basis vector: X e_0 = e_2 sends e_0^e_1 to -e_1^e_2.
    const RepModel gr = build_model(RepKind::ExteriorPower, 3, 2);
    MatrixXcd e20 = MatrixXcd::Zero(3, 3);
    e20(2, 0) = 1.0;
    const MatrixXcd a = gr.dtau(e20);
    CHECK(std::abs(a(2, 0) - Complex(-1, 0)) <= 1e-14);  // basis {01},{02},{12}
    CHECK(std::abs(a(1, 0)) <= 1e-14);
}

TEST_CASE("dtau exponentiates to tau") {
    Rng rng(5);
    for (const char* spec : {"defining:3", "ext:4:2", "sym:2:3", "ext:5:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        const MatrixXcd x = 0.3 * random_traceless(m.n, rng);
        const MatrixXcd lhs = m.dtau(x).exp();
        const MatrixXcd rhs = m.tau(x.exp().eval());
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("anti-Hermitian input gives anti-Hermitian action and unitary tau") {
    Rng rng(6);
    for (const char* spec : {"defining:4", "ext:4:2", "sym:3:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        const MatrixXcd x = random_su(m.n, rng);
        const MatrixXcd a = m.dtau(x);
        CHECK((a + a.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        const MatrixXcd q = haar_unitary(m.n, 99, 0);
        const MatrixXcd t = m.tau(q);
        CHECK((t.adjoint() * t - MatrixXcd::Identity(m.dimV, m.dimV)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("moment map at the highest weight line matches the exact weight") {
    for (const char* spec : {"defining:2", "defining:3", "ext:4:2", "sym:2:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        const LieBasis basis = lie_basis(m.n);
        VectorXcd x0 = VectorXcd::Zero(m.dimV);
        x0(m.highest_index) = 1.0;
        const VectorXd phi = moment_map_point(m, basis, x0);
        const VectorXd expected = weight_torus_coords(m, basis, m.highest_weight());
        for (int j = 0; j < basis.diag_offset(); ++j) CHECK(std::abs(phi(j)) <= 1e-14);
        for (int k = 0; k < m.n - 1; ++k)
            CHECK(phi(basis.diag_offset() + k) == doctest::Approx(expected(k)).epsilon(1e-12));
    }
}

TEST_CASE("moment value at the highest weight of the Bloch sphere") {
    const RepModel m = build_model(RepKind::Defining, 2);
    const LieBasis basis = lie_basis(2);
    VectorXcd e1(2);
    e1 << 1.0, 0.0;
    const VectorXd phi = moment_map_point(m, basis, e1);
    // the torus element is i*diag(1,-1)/2; the highest weight pairs to 1/2
    CHECK(phi(basis.diag_offset()) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(phi.norm() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("moment map is phase invariant and equivariant") {
    const RepModel m = build_model(RepKind::Defining, 3);
    const LieBasis basis = lie_basis(3);
    const RepAction action = make_rep_action(m, basis);
    const VectorXcd x = random_point(m, 42);
    const Complex phase = std::exp(Complex(0, 1.234));
    CHECK((moment_map_point(action, (phase * x).eval()) - moment_map_point(action, x)).norm() <=
          1e-13);

    const MatrixXcd a = haar_unitary(3, 5, 1);
    const VectorXcd ax = (m.tau(a) * x).normalized();
    const MatrixXcd lhs = moment_matrix(basis, moment_map_point(action, ax));
    const MatrixXcd rhs = a * moment_matrix(basis, moment_map_point(action, x)) * a.adjoint();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("Lie basis is orthonormal and the Killing closed form matches ad traces") {
    Rng rng(8);
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        const LieBasis basis = lie_basis(n);
        REQUIRE(basis.dim() == n * n - 1);
        for (int a = 0; a < basis.dim(); ++a)
            for (int b = 0; b < basis.dim(); ++b) {
                const double ip = -killing_form(n, basis.elems[a], basis.elems[b]) / 2.0;
                CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-12);
            }
        const MatrixXcd x = random_su(n, rng), y = random_su(n, rng);
        const MatrixXcd br = x * y - y * x;
        CHECK((br + br.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(std::abs(br.trace()) <= 1e-12);
        CHECK(killing_form_via_ad(basis, x, y) ==
              doctest::Approx(killing_form(n, x, y)).epsilon(1e-10));
    }
}

TEST_CASE("hermitian square root") {
    CHECK((hermitian_sqrt(MatrixXcd::Identity(3, 3)) - MatrixXcd::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
    MatrixXcd d = MatrixXcd::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 1.0;
    const MatrixXcd r = hermitian_sqrt(d);
    CHECK(std::abs(r(0, 0) - Complex(2, 0)) <= 1e-14);
    CHECK(std::abs(r(1, 1) - Complex(1, 0)) <= 1e-14);

    Rng rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        MatrixXcd m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
        const MatrixXcd a = m * m.adjoint();
        const MatrixXcd s = hermitian_sqrt(a);
        CHECK((s * s - a).cwiseAbs().maxCoeff() <= 1e-10 * a.cwiseAbs().maxCoeff());
    }
    MatrixXcd neg = -MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(hermitian_sqrt(neg), std::domain_error);
}

TEST_CASE("polar decomposition") {
    Rng rng(10);
    const MatrixXcd q = haar_unitary(3, 12, 0);
    CHECK((polar_rho(q).p - MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);

    MatrixXcd m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    const MatrixXcd pos = hermitian_sqrt(m * m.adjoint());
    const auto pd_pos = polar_rho(pos);
    CHECK((pd_pos.p - pos).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((pd_pos.a - MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-9);

    const auto pd = polar_rho(m);
    CHECK((pd.p * pd.a - m).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((pd.a.adjoint() * pd.a - MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((polar_rho(m * q).p - pd.p).cwiseAbs().maxCoeff() <= 1e-10);

    CHECK_THROWS_AS(polar_rho(MatrixXcd::Zero(2, 2)), NumericError);
}

TEST_CASE("ray limits") {
    const RepModel m = build_model(RepKind::Defining, 3);

    VectorXd regular(3);
    regular << 2, 1, -3;
    const RayLimit rl_reg = satake_ray_limit(m, regular);
    CHECK(rl_reg.I.is_empty());
    CHECK(rl_reg.rank == 1);
    CHECK(std::abs(rl_reg.projector(0, 0) - Complex(1, 0)) <= 1e-14);

    VectorXd wall(3);
    wall << 1, 1, -2;  // alpha_1(H) = 0 < alpha_2(H)
    const RayLimit rl_wall = satake_ray_limit(m, wall);
    CHECK(rl_wall.I == SimpleSubset::of({0}, 2));
    CHECK(rl_wall.rank == 2);

    const RayLimit rl_zero = satake_ray_limit(m, VectorXd::Zero(3));
    CHECK(rl_zero.I == SimpleSubset::full(2));
    CHECK(rl_zero.rank == 3);
    CHECK((ray_point(m, VectorXd::Zero(3), 40.0) - MatrixXcd::Identity(3, 3) / 3.0)
              .cwiseAbs()
              .maxCoeff() <= 1e-14);

    VectorXd bad(3);
    bad << -1, 0, 1;
    CHECK_THROWS_AS(satake_ray_limit(m, bad), std::invalid_argument);
    VectorXd notrace(3);
    notrace << 1, 0, 0;
    CHECK_THROWS_AS(satake_ray_limit(m, notrace), std::invalid_argument);
}

TEST_CASE("numeric ray point converges to the predicted projector") {
    for (const char* spec : {"defining:3", "defining:4", "ext:4:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        VectorXd h(m.n);
        for (int i = 0; i < m.n; ++i) h(i) = (i < 2) ? 1.0 : 0.0;  // alpha_1 wall
        h.array() -= h.mean();
        const RayLimit rl = satake_ray_limit(m, h);
        const MatrixXcd numeric = ray_point(m, h, 40.0);
        const MatrixXcd predicted = rl.projector / static_cast<double>(rl.rank);
        CHECK((numeric - predicted).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("ray projector commutes with the subalgebra action") {
    const RepModel m = build_model(RepKind::ExteriorPower, 4, 2);
    VectorXd h(4);
    h << 1, 1, 1, -3;  // I = {a1, a2}
    const RayLimit rl = satake_ray_limit(m, h);
    CHECK(rl.I == SimpleSubset::of({0, 1}, 3));
    Rng rng(13);
    MatrixXcd x = MatrixXcd::Zero(4, 4);
    x.topLeftCorner(3, 3) = random_su(3, rng);
    const MatrixXcd a = m.dtau(x);
    CHECK((rl.projector * a - a * rl.projector).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("projection to invariant subspaces") {
    const RepModel m = build_model(RepKind::ExteriorPower, 4, 2);
    const SimpleSubset I = SimpleSubset::of({0}, 3);

    VectorXcd inside = VectorXcd::Zero(m.dimV);
    inside(m.highest_index) = 1.0;
    const VectorXcd fixed = project_to_subspace(m, I, inside);
    CHECK((fixed - inside).cwiseAbs().maxCoeff() <= 1e-14);

    for (int trial = 0; trial < 20; ++trial) {
        const VectorXcd x = random_point(m, 100 + trial);
        const VectorXcd y = project_to_subspace(m, I, x);
        CHECK(m.orbit_residual(y) <= 1e-8);
        CHECK(std::abs(y.norm() - 1.0) <= 1e-12);
    }

    VectorXcd perp = VectorXcd::Zero(m.dimV);
    bool set = false;
    for (int b = 0; b < m.dimV && !set; ++b)
        if ((m.supports[b] & ~I.bits) != 0) {
            perp(b) = 1.0;
            set = true;
        }
    REQUIRE(set);
    CHECK_THROWS_AS(project_to_subspace(m, I, perp), IndeterminacyError);
}

TEST_CASE("orbit residuals separate orbit points from generic vectors") {
    const RepModel gr = build_model(RepKind::ExteriorPower, 4, 2);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(gr.orbit_residual(random_point(gr, 7 + trial)) <= 1e-12);
    VectorXcd off = VectorXcd::Zero(6);
    off(0) = std::sqrt(0.5);
    off(5) = std::sqrt(0.5);  // e01 + e23 is not decomposable
    CHECK(gr.orbit_residual(off) > 0.1);

    const RepModel sym = build_model(RepKind::SymPower, 2, 3);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(sym.orbit_residual(random_point(sym, 30 + trial)) <= 1e-10);
    VectorXcd v = VectorXcd::Zero(4);
    v(0) = std::sqrt(0.5);
    v(3) = std::sqrt(0.5);  // x^3 + y^3 has rank two
    CHECK(sym.orbit_residual(v) > 0.1);
}

TEST_CASE("orbit sampling is deterministic and centered") {
    const RepModel m = build_model(RepKind::Defining, 2);
    const LieBasis basis = lie_basis(2);
    const RepAction action = make_rep_action(m, basis);

    const auto one = sample_orbit(m, 1, 5);
    CHECK(one.size() == 1);
    CHECK(std::abs(one[0].norm() - 1.0) <= 1e-12);

    const auto a = sample_orbit(m, 50, 17);
    const auto b = sample_orbit(m, 50, 17);
    for (size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).cwiseAbs().maxCoeff() == 0.0);
    const auto c = sample_orbit(m, 50, 18);
    CHECK((a[0] - c[0]).cwiseAbs().maxCoeff() > 1e-6);

    const int count = 10000;
    const auto sample = sample_orbit(m, count, 1);
    VectorXd mean = pairwise_sum<VectorXd>(0, count, [&](int i) {
        return moment_map_point(action, sample[i]);
    });
    mean /= static_cast<double>(count);
    CHECK(mean.norm() <= 5.0 / std::sqrt(static_cast<double>(count)));

    CHECK_THROWS_AS(sample_orbit(m, 0, 1), std::invalid_argument);
}

TEST_CASE("torus moment image lies in the moment polytope") {
    for (const char* spec : {"defining:3", "ext:4:2"}) {
        CAPTURE(spec);
        const RepModel m = parse_model(spec);
        const LieBasis basis = lie_basis(m.n);
        const RepAction action = make_rep_action(m, basis);
        const auto poly = moment_polytope(m.rs, m.highest_weight());
        std::vector<Eigen::VectorXd> verts;
        for (const auto& v : poly.vertices) verts.push_back(weight_torus_coords(m, basis, v));
        for (const auto& x : sample_orbit(m, 50, 23))
            CHECK(hull_contains(verts, torus_moment(action, basis, x), 1e-6));
    }
}

TEST_CASE("fs pairing: symmetry, isotropy kernel, flow derivative") {
    Rng rng(14);
    const RepModel m = build_model(RepKind::Defining, 3);
    const VectorXcd x = random_point(m, 77);

    const MatrixXcd u = random_su(3, rng), v = random_su(3, rng);
    CHECK(std::abs(fs_pairing(m, x, u, v) - fs_pairing(m, x, v, u)) <= 1e-12);
    CHECK(fs_pairing(m, x, v, v) >= 0.0);

    VectorXcd e1 = VectorXcd::Zero(3);
    e1(0) = 1.0;
    MatrixXcd iso = MatrixXcd::Zero(3, 3);  // stabilizes the line through e_1
    iso(0, 0) = Complex(0, 2);
    iso(1, 1) = Complex(0, -1);
    iso(2, 2) = Complex(0, -1);
    iso(1, 2) = Complex(0.3, 0.1);
    iso(2, 1) = -std::conj(iso(1, 2));
    CHECK(fs_pairing(m, e1, iso, iso) <= 1e-14);

    // d/dt <Phi(exp(t iv) x), v> at t=0 equals -fs(x, v, v)
    for (int trial = 0; trial < 5; ++trial) {
        MatrixXcd w = random_su(3, rng);
        const double t = 1e-4;
        auto hv = [&](double s) {
            const MatrixXcd flow = (s * (Complex(0, 1) * m.dtau(w))).exp();
            VectorXcd y = flow * x;
            y /= y.norm();
            return (y.adjoint() * (m.dtau(w) * y))(0).imag();
        };
        const double fd = (hv(t) - hv(-t)) / (2.0 * t);
        CHECK(fd == doctest::Approx(-fs_pairing(m, x, w, w)).epsilon(1e-5));
    }
}
