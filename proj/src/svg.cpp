#include <orbitope/svg.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace orbitope {

namespace {

std::string fmt(double x) {
    char buf[48];
    if (std::abs(x) < 5e-7) x = 0.0;  // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

// Euclidean coordinates of a weight via a Cholesky factor of the Gram matrix.
std::vector<Eigen::VectorXd> embed(const RootSystem& rs, const std::vector<WeightVec>& ws) {
    const int n = rs.rank();
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram(i, j) = rs.form()(i, j).to_double();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    Eigen::MatrixXd l = llt.matrixL().transpose();  // coords = L^T * fw-coords
    std::vector<Eigen::VectorXd> out;
    for (const auto& w : ws) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = static_cast<double>(w[i]);
        out.push_back(l * v);
    }
    return out;
}

}  // namespace

std::string render_polytope_svg(const RootSystem& rs, const WeightVec& mu, bool highlight_faces) {
    if (rs.rank() != 2) throw std::invalid_argument("render_polytope_svg: rank must be 2");
    const MomentPolytope poly = moment_polytope(rs, mu);
    auto pts = embed(rs, poly.vertices);

    // Hull boundary order: every vertex is extreme, so sorting by angle works.
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::atan2(pts[a](1), pts[a](0)) < std::atan2(pts[b](1), pts[b](0));
    });

    double extent = 1e-9;
    for (const auto& p : pts) extent = std::max({extent, std::abs(p(0)), std::abs(p(1))});
    const double s = 180.0 / extent;  // scale into a 400x400 viewbox
    auto px = [&](const Eigen::VectorXd& p) {
        return fmt(200.0 + s * p(0)) + "," + fmt(200.0 - s * p(1));
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    svg += "  <rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    if (pts.size() >= 3) {
        svg += "  <polygon points=\"";
        for (size_t i = 0; i < order.size(); ++i) {
            if (i) svg += " ";
            svg += px(pts[order[i]]);
        }
        svg += "\" fill=\"#e8eef7\" stroke=\"#35506e\" stroke-width=\"1.5\"/>\n";
    } else if (pts.size() == 2) {
        svg += "  <line x1=\"" + fmt(200.0 + s * pts[0](0)) + "\" y1=\"" +
               fmt(200.0 - s * pts[0](1)) + "\" x2=\"" + fmt(200.0 + s * pts[1](0)) +
               "\" y2=\"" + fmt(200.0 - s * pts[1](1)) +
               "\" stroke=\"#35506e\" stroke-width=\"1.5\"/>\n";
    }

    if (highlight_faces) {
        static const char* colors[] = {"#c0392b", "#27ae60", "#8e44ad", "#e67e22"};
        int ci = 0;
        const uint32_t full = SimpleSubset::full(2).bits;
        for (uint32_t bits = 0; bits < full; ++bits) {  // proper subsets only
            SimpleSubset I(bits, 2);
            if (!is_mu_connected(rs, I, mu)) continue;
            const auto face = face_of_subset(rs, poly, I);
            auto fpts = embed(rs, face.vertex_set);
            const char* color = colors[(ci++) % 4];
            if (fpts.size() == 1) {
                svg += "  <circle cx=\"" + fmt(200.0 + s * fpts[0](0)) + "\" cy=\"" +
                       fmt(200.0 - s * fpts[0](1)) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
            } else {
                for (size_t a = 0; a + 1 < fpts.size(); ++a)
                    svg += "  <line x1=\"" + fmt(200.0 + s * fpts[a](0)) + "\" y1=\"" +
                           fmt(200.0 - s * fpts[a](1)) + "\" x2=\"" +
                           fmt(200.0 + s * fpts[a + 1](0)) + "\" y2=\"" +
                           fmt(200.0 - s * fpts[a + 1](1)) + "\" stroke=\"" + color +
                           "\" stroke-width=\"3\"/>\n";
            }
        }
    }

    for (const auto& p : pts)
        svg += "  <circle cx=\"" + fmt(200.0 + s * p(0)) + "\" cy=\"" + fmt(200.0 - s * p(1)) +
               "\" r=\"2.5\" fill=\"#10263f\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string polytope_csv(const RootSystem& rs, const MomentPolytope& p) {
    auto pts = embed(rs, p.vertices);
    std::string csv;
    for (int i = 0; i < rs.rank(); ++i) csv += "fw" + std::to_string(i + 1) + ",";
    for (int i = 0; i < rs.rank(); ++i) {
        csv += "x" + std::to_string(i + 1);
        csv += (i + 1 < rs.rank()) ? "," : "\n";
    }
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        for (int i = 0; i < rs.rank(); ++i) csv += std::to_string(p.vertices[v][i]) + ",";
        for (int i = 0; i < rs.rank(); ++i) {
            csv += fmt(pts[v](i));
            csv += (i + 1 < rs.rank()) ? "," : "\n";
        }
    }
    return csv;
}

}  // namespace orbitope
