#include "confviz/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numbers>

#include "confviz/error.hpp"

namespace confviz {

namespace {

constexpr double kPi = std::numbers::pi;

// Maps a parameter vector to vertex positions and their derivatives.
class Parametrization {
public:
    Parametrization(int order, const std::optional<OrbitSymmetry>& sym) : n_(order), sym_(sym) {
        if (!sym_) {
            dims_ = 2 * n_;
            return;
        }
        const auto& s = *sym_;
        if (s.order < 1) {
            throw ParameterError("orbit symmetry order must be positive");
        }
        if (!s.pinned_radius.empty() && s.pinned_radius.size() != s.orbits.size()) {
            throw ParameterError("pinned_radius must list one entry per orbit");
        }
        std::vector<int> seen(static_cast<std::size_t>(n_), 0);
        for (std::size_t i = 0; i < s.orbits.size(); ++i) {
            const auto& orbit = s.orbits[i];
            if (orbit.size() != static_cast<std::size_t>(s.order) && orbit.size() != 1) {
                throw ParameterError("orbit " + std::to_string(i) + " has " + std::to_string(orbit.size()) +
                                     " vertices; expected " + std::to_string(s.order) + " or 1");
            }
            for (Vertex v : orbit) {
                if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]++) {
                    throw ParameterError("orbits do not partition the vertex set");
                }
            }
            OrbitVars vars;
            if (orbit.size() > 1) {
                if (pinned(i)) {
                    vars.fixed_radius = *s.pinned_radius[i];
                } else {
                    vars.radius = dims_++;
                }
                vars.phase = dims_++;
            }
            vars_.push_back(vars);
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
            throw ParameterError("orbits do not partition the vertex set");
        }
    }

    int dims() const { return dims_; }

    std::vector<Point2> positions(const Eigen::VectorXd& x) const {
        std::vector<Point2> pos(static_cast<std::size_t>(n_));
        if (!sym_) {
            for (int v = 0; v < n_; ++v) {
                pos[static_cast<std::size_t>(v)] = {x(2 * v), x(2 * v + 1)};
            }
            return pos;
        }
        for (std::size_t i = 0; i < sym_->orbits.size(); ++i) {
            const auto& orbit = sym_->orbits[i];
            for (std::size_t j = 0; j < orbit.size(); ++j) {
                pos[static_cast<std::size_t>(orbit[j])] =
                    orbit.size() == 1 ? Point2{} : point(radius(i, x), angle(i, j, x));
            }
        }
        return pos;
    }

    // d(position of every vertex, flattened x/y) / d(parameters).
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
        if (!sym_) {
            return Eigen::MatrixXd::Identity(2 * n_, 2 * n_);
        }
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n_, dims_);
        for (std::size_t i = 0; i < sym_->orbits.size(); ++i) {
            const auto& orbit = sym_->orbits[i];
            if (orbit.size() == 1) {
                continue;
            }
            const double r = radius(i, x);
            for (std::size_t j = 0; j < orbit.size(); ++j) {
                const double a = angle(i, j, x);
                const int row = 2 * orbit[j];
                if (vars_[i].radius >= 0) {
                    d(row, vars_[i].radius) = std::cos(a);
                    d(row + 1, vars_[i].radius) = std::sin(a);
                }
                d(row, vars_[i].phase) = -r * std::sin(a);
                d(row + 1, vars_[i].phase) = r * std::cos(a);
            }
        }
        return d;
    }

    Eigen::VectorXd from_positions(const std::vector<Point2>& pos) const {
        Eigen::VectorXd x(dims_);
        if (!sym_) {
            for (int v = 0; v < n_; ++v) {
                x(2 * v) = pos[static_cast<std::size_t>(v)].x;
                x(2 * v + 1) = pos[static_cast<std::size_t>(v)].y;
            }
            return x;
        }
        for (std::size_t i = 0; i < sym_->orbits.size(); ++i) {
            if (vars_[i].phase < 0) {
                continue;
            }
            const Point2 p = pos[static_cast<std::size_t>(sym_->orbits[i][0])];
            if (vars_[i].radius >= 0) {
                x(vars_[i].radius) = p.norm();
            }
            x(vars_[i].phase) = std::atan2(p.y, p.x);
        }
        return x;
    }

    Eigen::VectorXd random_start(SeededRng& rng) const {
        Eigen::VectorXd x(dims_);
        if (!sym_) {
            const double spread = 1.0 + std::sqrt(static_cast<double>(n_)) / 2.0;
            for (int i = 0; i < dims_; ++i) {
                x(i) = rng.uniform(-spread, spread);
            }
            return x;
        }
        for (const auto& v : vars_) {
            if (v.radius >= 0) {
                x(v.radius) = rng.uniform(0.3, 2.0);
            }
            if (v.phase >= 0) {
                x(v.phase) = rng.uniform(0.0, 2.0 * kPi);
            }
        }
        return x;
    }

    nlohmann::json describe(const Eigen::VectorXd& x) const {
        if (!sym_) {
            return nullptr;
        }
        nlohmann::json orbits = nlohmann::json::array();
        for (std::size_t i = 0; i < sym_->orbits.size(); ++i) {
            nlohmann::json o = {{"vertices", sym_->orbits[i]}};
            if (vars_[i].phase >= 0) {
                o["radius"] = radius(i, x);
                o["phase"] = x(vars_[i].phase);
            }
            orbits.push_back(std::move(o));
        }
        return {{"order", sym_->order}, {"orbits", std::move(orbits)}};
    }

private:
    struct OrbitVars {
        int radius = -1;
        int phase = -1;
        double fixed_radius = 0.0;
    };

    bool pinned(std::size_t i) const {
        return !sym_->pinned_radius.empty() && sym_->pinned_radius[i].has_value();
    }
    double radius(std::size_t i, const Eigen::VectorXd& x) const {
        return vars_[i].radius >= 0 ? x(vars_[i].radius) : vars_[i].fixed_radius;
    }
    double angle(std::size_t i, std::size_t j, const Eigen::VectorXd& x) const {
        return x(vars_[i].phase) + 2.0 * kPi * static_cast<double>(j) / sym_->order;
    }
    static Point2 point(double r, double a) { return {r * std::cos(a), r * std::sin(a)}; }

    int n_;
    std::optional<OrbitSymmetry> sym_;
    int dims_ = 0;
    std::vector<OrbitVars> vars_;
};

struct Attempt {
    Eigen::VectorXd x;
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
};

Eigen::VectorXd edge_residuals(const Graph& g, const std::vector<Point2>& pos) {
    Eigen::VectorXd r(static_cast<Eigen::Index>(g.size()));
    Eigen::Index k = 0;
    for (auto [u, v] : g.edges()) {
        r(k++) = distance(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]) - 1.0;
    }
    return r;
}

Attempt levenberg_marquardt(const Graph& g, const Parametrization& param, Eigen::VectorXd x,
                            const SolverOptions& opts) {
    const auto m = static_cast<Eigen::Index>(g.size());
    double lambda = opts.initial_damping;
    auto pos = param.positions(x);
    Eigen::VectorXd r = edge_residuals(g, pos);
    double cost = r.squaredNorm();
    Attempt out;
    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        Eigen::MatrixXd jpos = Eigen::MatrixXd::Zero(m, 2 * g.order());
        Eigen::Index k = 0;
        for (auto [u, v] : g.edges()) {
            const Point2 d = pos[static_cast<std::size_t>(u)] - pos[static_cast<std::size_t>(v)];
            const double len = d.norm();
            if (len > 0.0) {
                jpos(k, 2 * u) = d.x / len;
                jpos(k, 2 * u + 1) = d.y / len;
                jpos(k, 2 * v) = -d.x / len;
                jpos(k, 2 * v + 1) = -d.y / len;
            }
            ++k;
        }
        const Eigen::MatrixXd j = jpos * param.jacobian(x);
        const Eigen::VectorXd grad = j.transpose() * r;
        if (grad.lpNorm<Eigen::Infinity>() < 1e-12 || r.lpNorm<Eigen::Infinity>() < 1e-15) {
            break;
        }
        const Eigen::MatrixXd jtj = j.transpose() * j;
        bool improved = false;
        Eigen::VectorXd step;
        while (lambda < 1e16) {
            Eigen::MatrixXd a = jtj;
            a.diagonal().array() += lambda;
            step = a.ldlt().solve(-grad);
            const Eigen::VectorXd trial = x + step;
            auto trial_pos = param.positions(trial);
            Eigen::VectorXd trial_r = edge_residuals(g, trial_pos);
            const double trial_cost = trial_r.squaredNorm();
            if (trial_cost < cost) {
                x = trial;
                pos = std::move(trial_pos);
                r = std::move(trial_r);
                cost = trial_cost;
                lambda = std::max(lambda / 10.0, 1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!improved || step.norm() < 1e-14 * (1.0 + x.norm())) {
            ++iter;
            break;
        }
    }
    out.x = std::move(x);
    out.residual = m == 0 ? 0.0 : r.lpNorm<Eigen::Infinity>();
    out.iterations = iter;
    return out;
}

}  // namespace

SolveResult solve_unit_distance(const Graph& g, const std::variant<Layout, Seed>& init, const SolverOptions& opts) {
    if (g.order() == 0) {
        throw ParameterError("solve_unit_distance: empty graph");
    }
    if (connected_components(g).size() != 1) {
        throw ParameterError("solve_unit_distance: graph must be connected");
    }
    const Parametrization param(g.order(), opts.symmetry);

    auto finish = [&](const Attempt& a, nlohmann::json meta) {
        SolveResult res;
        res.layout.graph = g;
        res.layout.pos = param.positions(a.x);
        res.residual = a.residual;
        res.iterations = a.iterations;
        meta["kind"] = "solved";
        meta["residual"] = a.residual;
        meta["iterations"] = a.iterations;
        meta["symmetry"] = param.describe(a.x);
        res.layout.meta = std::move(meta);
        return res;
    };

    double best = std::numeric_limits<double>::infinity();
    if (const auto* start = std::get_if<Layout>(&init)) {
        if (start->pos.size() != static_cast<std::size_t>(g.order())) {
            throw ParameterError("solve_unit_distance: initial layout has the wrong number of positions");
        }
        auto a = levenberg_marquardt(g, param, param.from_positions(start->pos), opts);
        if (a.residual <= opts.tol) {
            return finish(a, {{"init", "layout"}});
        }
        throw ConvergenceError("solve_unit_distance: residual " + std::to_string(a.residual) + " after " +
                                   std::to_string(a.iterations) + " iterations",
                               a.residual);
    }
    const Seed seed = std::get<Seed>(init);
    SeededRng rng(seed);
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        auto a = levenberg_marquardt(g, param, param.random_start(rng), opts);
        best = std::min(best, a.residual);
        if (a.residual <= opts.tol && min_separation(param.positions(a.x)) >= opts.min_separation) {
            return finish(a, {{"init", "seed"}, {"seed", seed.value}, {"restart", restart}});
        }
    }
    throw ConvergenceError("solve_unit_distance: no non-degenerate solution within tolerance from seed " +
                               std::to_string(seed.value) + "; best residual " + std::to_string(best),
                           best);
}

OrbitSymmetry orbits_of(const VertexMap& rotation) {
    if (!rotation.is_bijection()) {
        throw ParameterError("orbits_of: map is not a permutation");
    }
    const auto n = rotation.image.size();
    std::vector<char> done(n, 0);
    OrbitSymmetry sym;
    sym.order = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (done[v]) {
            continue;
        }
        std::vector<Vertex> orbit;
        auto w = static_cast<Vertex>(v);
        do {
            orbit.push_back(w);
            done[static_cast<std::size_t>(w)] = 1;
            w = rotation.image[static_cast<std::size_t>(w)];
        } while (w != static_cast<Vertex>(v));
        if (orbit.size() > 1) {
            if (sym.order != 0 && sym.order != static_cast<int>(orbit.size())) {
                throw ParameterError("orbits_of: orbits of unequal length");
            }
            sym.order = static_cast<int>(orbit.size());
        }
        sym.orbits.push_back(std::move(orbit));
    }
    sym.order = std::max(sym.order, 1);
    return sym;
}

}  // namespace confviz
