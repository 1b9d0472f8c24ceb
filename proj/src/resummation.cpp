#include "heatsum/resummation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace heatsum {

std::vector<Cplx> BorelSeries::to_cplx() const {
    std::vector<Cplx> v(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) v[i] = phi[i].to_cplx();
    return v;
}

BorelSeries borel(const TSeries& u) {
    BorelSeries b;
    b.mode = u.mode();
    b.phi.resize(u.order() + 1);
    for (int j = 0; j <= u.order(); ++j) {
        Coefficient jf = factorial_coeff(j, u.mode());
        b.phi[j] = u[j] / (jf * jf);
    }
    return b;
}

BorelSeries borel_level2(const TSeries& u) {
    BorelSeries b;
    b.mode = u.mode();
    b.phi.resize(u.order() + 1);
    for (int j = 0; j <= u.order(); ++j)
        b.phi[j] = u[j] / factorial_coeff(2 * j, u.mode());
    return b;
}

TSeries laplace_reexpand(const BorelSeries& b) {
    TSeries u(b.mode, b.count() - 1);
    for (int j = 0; j < b.count(); ++j) {
        Coefficient jf = factorial_coeff(j, b.mode);
        u.at(j) = b.phi[j] * (jf * jf);
    }
    return u;
}

namespace {

// Balance geometric coefficient growth before solving: solve in sigma with
// tau = R sigma, R from the first/last nonzero magnitudes.
double rescale_radius(const std::vector<Cplx>& c) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (std::abs(c[i]) > 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo < 0 || hi <= lo) return 1.0;
    double ratio = std::abs(c[hi]) / std::abs(c[lo]);
    if (!(ratio > 0) || !std::isfinite(ratio)) return 1.0;
    double r = std::pow(ratio, -1.0 / (hi - lo));
    return (std::isfinite(r) && r > 0) ? r : 1.0;
}

std::vector<Cplx> poly_roots(const std::vector<Cplx>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && std::abs(poly[deg]) == 0.0) --deg;
    if (deg <= 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) {
        comp(i, deg - 1) = -poly[i] / poly[deg];
        if (i + 1 < deg) comp(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Cplx> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

Cplx poly_eval(const std::vector<Cplx>& p, Cplx x) {
    Cplx acc(0.0, 0.0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

PadeApproximant pade_from_cplx(const std::vector<Cplx>& phi, int L, int M) {
    if (L < 0 || M < 0 || L + M + 1 > static_cast<int>(phi.size()))
        throw OrderError("pade: L+M+1 exceeds available coefficients");
    double R = rescale_radius(phi);
    std::vector<Cplx> c(phi.size());
    double rk = 1.0;
    for (std::size_t j = 0; j < phi.size(); ++j, rk *= R) c[j] = phi[j] * rk;

    std::vector<Cplx> q(M + 1, Cplx(0.0));
    q[0] = 1.0;
    if (M > 0) {
        Eigen::MatrixXcd A(M, M);
        Eigen::VectorXcd rhs(M);
        for (int i = 0; i < M; ++i) {
            int k = L + 1 + i;
            for (int m = 1; m <= M; ++m)
                A(i, m - 1) = k - m >= 0 ? c[k - m] : Cplx(0.0);
            rhs(i) = -c[k];
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
        if (!lu.isInvertible())
            throw SingularPadeError("singular Pade system at [" + std::to_string(L) + "/" +
                                    std::to_string(M) + "]");
        Eigen::VectorXcd sol = lu.solve(rhs);
        for (int m = 1; m <= M; ++m) q[m] = sol(m - 1);
    }
    std::vector<Cplx> p(L + 1, Cplx(0.0));
    for (int k = 0; k <= L; ++k)
        for (int m = 0; m <= std::min(k, M); ++m) p[k] += q[m] * c[k - m];

    PadeApproximant out;
    out.L = L;
    out.M = M;
    // map back to the original variable: coefficient of tau^m is q_m / R^m
    out.num.resize(L + 1);
    out.den.resize(M + 1);
    rk = 1.0;
    for (int k = 0; k <= std::max(L, M); ++k, rk /= R) {
        if (k <= L) out.num[k] = p[k] * rk;
        if (k <= M) out.den[k] = q[k] * rk;
    }
    for (Cplx root : poly_roots(q)) out.den_roots.push_back(root * R);
    return out;
}

}  // namespace

PadeApproximant pade(const BorelSeries& phi, int L, int M) {
    return pade_from_cplx(phi.to_cplx(), L, M);
}

Cplx PadeApproximant::eval(Cplx tau) const {
    return poly_eval(num, tau) / poly_eval(den, tau);
}

Cplx PadeApproximant::residue_at(Cplx pole) const {
    std::vector<Cplx> dden(den.size() > 1 ? den.size() - 1 : 1, Cplx(0.0));
    for (std::size_t k = 1; k < den.size(); ++k) dden[k - 1] = den[k] * double(k);
    Cplx d = poly_eval(dden, pole);
    if (std::abs(d) == 0.0) return Cplx(0.0);
    return poly_eval(num, pole) / d;
}

double angular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
    return d > M_PI ? 2.0 * M_PI - d : d;
}

namespace {

int default_order(int count) { return std::max(1, (count - 2) / 2); }

std::vector<PadePole> match_poles(const PadeApproximant& hi, const PadeApproximant& lo,
                                  double match_tol, double residue_floor) {
    std::vector<PadePole> out;
    for (Cplx p : hi.den_roots) {
        double best = std::numeric_limits<double>::infinity();
        for (Cplx q : lo.den_roots)
            best = std::min(best, std::abs(p - q) / std::max(std::abs(q), 1e-300));
        if (best > match_tol) continue;
        double res = std::abs(hi.residue_at(p));
        if (res < residue_floor) continue;  // Froissart doublet
        out.push_back(PadePole{p, res, best});
    }
    std::sort(out.begin(), out.end(),
              [](const PadePole& a, const PadePole& b) { return std::abs(a.location) < std::abs(b.location); });
    return out;
}

std::vector<PadePole> stable_poles_cplx(const std::vector<Cplx>& phi, const ScanOptions& opts) {
    int m = opts.pade_order > 0 ? opts.pade_order
                                : default_order(static_cast<int>(phi.size()));
    m = std::min(m, (static_cast<int>(phi.size()) - 1) / 2);
    double scale = 0.0;
    for (const Cplx& c : phi) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};
    // the two highest solvable diagonal orders; singular skips happen only
    // when phi is exactly rational of lower degree
    std::vector<PadeApproximant> solved;
    for (int k = m; k >= 1 && solved.size() < 2; --k) {
        try {
            solved.push_back(pade_from_cplx(phi, k, k));
        } catch (const SingularPadeError&) {
        }
    }
    if (solved.empty()) return {};
    double residue_floor = opts.residue_min * std::max(std::abs(phi[0]), 1e-30);
    if (solved.size() == 1) {
        // exactly rational input: the one reduced order reproduces it, its
        // poles are the function's poles
        std::vector<PadePole> out;
        for (Cplx p : solved[0].den_roots) {
            double res = std::abs(solved[0].residue_at(p));
            if (res >= residue_floor) out.push_back(PadePole{p, res, 0.0});
        }
        std::sort(out.begin(), out.end(), [](const PadePole& a, const PadePole& b) {
            return std::abs(a.location) < std::abs(b.location);
        });
        return out;
    }
    return match_poles(solved[0], solved[1], opts.match_tol, residue_floor);
}

}  // namespace

std::vector<PadePole> stable_poles(const BorelSeries& phi, const ScanOptions& opts) {
    return stable_poles_cplx(phi.to_cplx(), opts);
}

Cplx singularity_estimate(const BorelSeries& phi, int max_order) {
    std::vector<Cplx> f = phi.to_cplx();
    if (f.size() < 4) throw OrderError("singularity_estimate needs >= 4 coefficients");
    if (std::abs(f[0]) == 0.0)
        throw OrderError("singularity_estimate needs phi(0) != 0");
    // g = phi'/phi
    std::vector<Cplx> fp(f.size() - 1);
    for (std::size_t j = 0; j + 1 < f.size(); ++j) fp[j] = double(j + 1) * f[j + 1];
    std::vector<Cplx> g(fp.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        Cplx acc = fp[k];
        for (std::size_t m = 0; m < k; ++m) acc -= g[m] * f[k - m];
        g[k] = acc / f[0];
    }
    std::vector<std::vector<Cplx>> pole_sets;
    for (int m = 1; m <= max_order && 2 * m + 1 <= static_cast<int>(g.size()); ++m) {
        try {
            pole_sets.push_back(pade_from_cplx(g, m, m).den_roots);
        } catch (const SingularPadeError&) {
        }
    }
    if (pole_sets.empty()) throw SingularPadeError("log-derivative Pade table empty");
    Cplx best;
    double best_mod = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pole_sets.size(); ++i)
        for (Cplx p : pole_sets[i])
            for (Cplx q : pole_sets[i - 1])
                if (std::abs(p - q) < 1e-3 * std::max(std::abs(q), 1e-300) &&
                    std::abs(p) < best_mod) {
                    best = p;
                    best_mod = std::abs(p);
                }
    if (std::isfinite(best_mod)) return best;
    // single solvable order: the function was exactly rational
    const auto& ps = pole_sets.back();
    Cplx nearest = ps.front();
    for (Cplx p : ps)
        if (std::abs(p) < std::abs(nearest)) nearest = p;
    return nearest;
}

namespace {

// 32-point Gauss-Legendre nodes on [-1, 1], computed once by Newton on P_32.
struct GaussLegendre {
    std::array<double, 32> x{}, w{};
    GaussLegendre() {
        const int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre& gauss_legendre() {
    static const GaussLegendre gl;
    return gl;
}

}  // namespace

Cplx laplace_sum(const BorelSeries& phi, double theta, Cplx t, int L, int M) {
    if (std::abs(t) == 0.0) throw SummabilityError("laplace_sum: t must be nonzero");
    if (angular_distance(std::arg(t), theta) >= M_PI / 2.0)
        throw SummabilityError("laplace_sum: arg t must lie within pi/2 of the ray");
    ScanOptions opts;
    opts.pade_order = M;
    std::vector<PadePole> guard;
    try {
        guard = stable_poles(phi, opts);
    } catch (const Error&) {
        // pole detection inconclusive (too few orders); integrate anyway
    }
    for (const PadePole& p : guard)
        if (angular_distance(std::arg(p.location), theta) <= opts.clearance)
            throw SummabilityError("laplace_sum: stable singularity on or near the ray");

    PadeApproximant ap = [&] {
        std::vector<Cplx> c = phi.to_cplx();
        for (int mm = M, ll = L; mm >= 0; ll = std::max(0, ll - 1), --mm) {
            try {
                return pade_from_cplx(c, ll, mm);
            } catch (const SingularPadeError&) {
            }
        }
        throw SingularPadeError("laplace_sum: no solvable Pade order");
    }();

    // An approximant pole close to the ray is integrable garbage unless the
    // kernel has already damped it out; weigh the residue against e^{-|p|/|t|}.
    double scale = std::max(std::abs(phi.phi.empty() ? Cplx(0) : phi.phi[0].to_cplx()), 1e-30);
    for (Cplx p : ap.den_roots) {
        if (angular_distance(std::arg(p), theta) > opts.clearance) continue;
        double damped = std::abs(ap.residue_at(p)) * std::exp(-std::abs(p) / std::abs(t));
        if (damped > 1e-12 * scale)
            throw SummabilityError("laplace_sum: singularity of the continuation on the ray");
    }

    const Cplx eith = std::polar(1.0, theta);
    const Cplx lambda = eith / t;  // kernel e^{-s lambda}, Re lambda > 0
    const auto& gl = gauss_legendre();
    Cplx acc(0.0, 0.0);
    double s0 = 0.0, h = std::abs(t) / 4.0;
    const int max_panels = 400;
    for (int panel = 0; panel < max_panels; ++panel) {
        double mid = s0 + 0.5 * h, half = 0.5 * h;
        Cplx contrib(0.0, 0.0);
        for (int i = 0; i < 32; ++i) {
            double s = mid + half * gl.x[i];
            contrib += gl.w[i] * ap.eval(s * eith) * std::exp(-s * lambda);
        }
        contrib *= half;
        acc += contrib;
        if (panel > 3 && std::abs(contrib) < 1e-16 * std::max(std::abs(acc), 1e-300))
            return eith / t * acc;
        s0 += h;
        h *= 1.5;
    }
    throw SummabilityError("laplace_sum: quadrature did not settle");
}

Cplx laplace_sum(const BorelSeries& phi, double theta, Cplx t) {
    int m = default_order(phi.count());
    return laplace_sum(phi, theta, t, m, m);
}

int scan_thread_cap() {
    if (const char* env = std::getenv("GEVREY_HEAT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

namespace {

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(scan_thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SummabilityVerdict> direction_scan(const TSeries& u,
                                               const std::vector<double>& directions,
                                               const ScanOptions& opts) {
    if (u.order() + 1 < 16) throw OrderError("direction_scan needs at least 16 coefficients");
    TSeries uf = u.mode() == Mode::floating ? u : u.to_float();
    BorelSeries phi = borel(uf);
    std::vector<PadePole> poles = stable_poles(phi, opts);

    std::vector<SummabilityVerdict> verdicts(directions.size());
    parallel_for(static_cast<int>(directions.size()), [&](int i) {
        double theta = directions[i];
        SummabilityVerdict v;
        v.theta = theta;
        v.angular_clearance = opts.clearance;
        v.evidence = poles;
        v.summable = true;
        for (const PadePole& p : poles)
            if (angular_distance(std::arg(p.location), theta) <= opts.clearance) {
                v.summable = false;
                break;
            }
        if (v.summable && opts.with_samples) {
            for (double rad : opts.sample_radii) {
                Cplx t = std::polar(rad, theta);
                try {
                    v.samples.emplace_back(t, laplace_sum(phi, theta, t));
                } catch (const Error&) {
                }
            }
        }
        verdicts[i] = std::move(v);
    });
    return verdicts;
}

namespace {

constexpr double kProbeDelta = 10.0 * M_PI / 180.0;   // sector margin beyond pi/2
constexpr double kQuadThreshold = 1.0;                // log-convexity rejection bar
constexpr double kZeroTrace = 1e-280;

// Evaluate one trace at t: direct summation when the tail has settled,
// otherwise Borel-Laplace along arg t.  When rotation is allowed the ray may
// be tilted (staying within pi/2 of arg t) to step around a blocked
// direction; the rotated integral continues the same sum.
bool eval_trace(const TSeries& col, Cplx t, bool allow_rotation, const ScanOptions& opts,
                Cplx& out) {
    auto raw = col.raw();
    Cplx acc(0.0), tp(1.0);
    int settled = 0;
    for (int j = 0; j < static_cast<int>(raw.size()); ++j) {
        Cplx term = raw[j].to_cplx() * tp;
        acc += term;
        tp *= t;
        if (std::abs(term) <= 1e-10 * std::max(std::abs(acc), 1e-300))
            ++settled;
        else
            settled = 0;
    }
    if (settled >= 3) {
        out = acc;
        return true;
    }
    BorelSeries phi = borel(col);
    int m = opts.pade_order > 0 ? opts.pade_order : default_order(phi.count());
    const double step = 15.0 * M_PI / 180.0;
    for (int k = 0; k <= (allow_rotation ? 10 : 0); ++k) {
        int half = (k + 1) / 2;
        double offset = (k % 2 ? half : -half) * step;
        if (std::abs(offset) >= M_PI / 2.0) continue;
        try {
            out = laplace_sum(phi, std::arg(t) + offset, t, m, m);
            return true;
        } catch (const Error&) {
        }
    }
    return false;
}

}  // namespace

TraceFamilyReport check_trace_family(const BivariateSeries& u, double theta, Cplx t_probe,
                                     const ScanOptions& opts) {
    BivariateSeries uf = u.mode() == Mode::floating ? u : u.to_float();
    double radius = std::abs(t_probe);
    if (radius == 0.0) throw SummabilityError("check_trace_family: t_probe must be nonzero");

    const double args[3] = {std::arg(t_probe), theta - (M_PI / 2.0 + kProbeDelta),
                            theta + (M_PI / 2.0 + kProbeDelta)};
    TraceFamilyReport rep;
    rep.ok = true;
    std::vector<int> failed_columns;
    for (int pi = 0; pi < 3; ++pi) {
        const double psi = args[pi];
        TraceProbe probe;
        probe.t = pi == 0 ? t_probe : std::polar(radius, psi);
        std::vector<double> ys, ns;
        int failures = 0;
        for (int n = 0; n <= uf.nmax(); ++n) {
            Cplx val;
            if (!eval_trace(uf.z_col(n), probe.t, /*allow_rotation=*/pi != 0, opts, val)) {
                ++failures;
                continue;
            }
            if (std::abs(val) < kZeroTrace) continue;  // vanishing trace
            ys.push_back(std::log(std::abs(val)) - std::lgamma(n + 1.0));
            ns.push_back(n);
        }
        failed_columns.push_back(failures);
        probe.columns_used = static_cast<int>(ns.size());
        if (probe.columns_used >= 5) {
            Eigen::MatrixXd X(probe.columns_used, 3);
            Eigen::VectorXd y(probe.columns_used);
            for (int i = 0; i < probe.columns_used; ++i) {
                double n = ns[i];
                X(i, 0) = 1.0;
                X(i, 1) = n;
                X(i, 2) = n * (n - 1.0);
                y(i) = ys[i];
            }
            Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
            double n_hi = ns.back();
            probe.evaluated = true;
            probe.quad_coeff = beta(2);
            probe.growth_excess = beta(2) * n_hi * (n_hi - 1.0);
            probe.rejected = probe.growth_excess > kQuadThreshold;
            if (probe.rejected) {
                rep.ok = false;
                rep.reason = "trace family grows faster than C k^n n! near arg t = " +
                             std::to_string(psi);
            }
        }
        rep.probes.push_back(probe);
    }
    for (std::size_t i = 0; i < rep.probes.size(); ++i) {
        if (rep.probes[i].evaluated) continue;
        if (failed_columns[i] == 0) {
            // every unusable trace vanished: polynomial in z, nothing to reject
            if (rep.reason.empty()) rep.reason = "finitely many nonzero traces";
        } else if (rep.ok) {
            rep.ok = false;
            rep.reason = "trace evaluation failed near arg t = " + std::to_string(args[i]);
        }
    }
    return rep;
}

}  // namespace heatsum
