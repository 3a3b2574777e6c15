#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "common.hpp"
#include "verify.hpp"

#include "rqmf/bessel.hpp"
#include "rqmf/geometry.hpp"
#include "rqmf/mathieu.hpp"
#include "rqmf/rqm.hpp"
#include "rqmf/wave.hpp"

namespace fs = std::filesystem;
using namespace rqmf;
using namespace rqmf_cli;
using mathieu::Family;
using geometry::EllipticPoint;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ZerosArgs {
    double mu = 0.7;
    std::string family = "plus";
    int n = 0;
    int m_max = 1;
    std::optional<double> k;
    std::string out;
    int digits = 17;
    std::string cache;
};

int cmd_zeros(const ZerosArgs& a) {
    const Family fam = parse_family(a.family);
    if (fam == Family::Minus && a.n == 0) {
        std::cerr << "zeros: se_0 vanishes identically; the odd family needs --n >= 1\n";
        return kExitBadParams;
    }
    if (!(a.mu > 0.0 && a.mu < 1.0) || a.m_max < 1 || a.n < 0 || (a.k && !(*a.k > 0.0))) {
        std::cerr << "zeros: invalid parameter ranges\n";
        return kExitBadParams;
    }
    const fs::path cdir = cache_dir(a.cache);
    load_zero_cache(cdir);

    const double xi0 = round_key(geometry::xi_for_mu(a.mu));
    std::string csv = a.k ? "m,q,omega\n" : "m,q\n";
    int failures = 0;
    for (int m = 1; m <= a.m_max; ++m) {
        try {
            const auto z = mathieu::find_q_zero(fam, a.n, m, xi0);
            csv += std::to_string(m) + "," + fmt(z.q_root, a.digits);
            if (a.k) csv += "," + fmt(2.0 * std::sqrt(z.q_root) / *a.k, a.digits);
            csv += "\n";
        } catch (const std::exception& e) {
            std::cerr << "zeros: root search failed at m = " << m << ": " << e.what() << "\n";
            csv += std::to_string(m) + ",FAILED" + (a.k ? ",FAILED" : "") + "\n";
            ++failures;
        }
    }
    atomic_write(a.out, csv);
    save_zero_cache(cdir);
    return failures == 0 ? kExitOk : kExitAdequacy;
}

struct EvalArgs {
    std::string family = "plus";
    int n = 0;
    std::optional<int> m;
    std::optional<double> lambda;
    std::optional<double> mu;
    std::optional<double> xi0;
    std::optional<double> k;
    double t = 0.0;
    bool has_t = false;
    int grid_xi = 60;
    int grid_eta = 120;
    std::string config;
    std::string out;
    int digits = 17;
    std::string cache;
};

void write_field_csv(const std::string& out, double xi0, int nxi, int neta, int digits,
                     const std::function<ReducedQuaternion(const EllipticPoint&)>& field) {
    std::string csv = "xi,eta,x,y,sc,i,j\n";
    for (int i = 0; i < nxi; ++i) {
        const double xi = (nxi == 1) ? 0.0 : xi0 * i / (nxi - 1);
        for (int kk = 0; kk < neta; ++kk) {
            const double eta = 2.0 * kPi * kk / neta;
            const auto [x, y] = geometry::to_cartesian({xi, eta});
            const auto v = field({xi, eta});
            csv += fmt(xi, digits) + "," + fmt(eta, digits) + "," + fmt(x, digits) + "," +
                   fmt(y, digits) + "," + fmt(v.s, digits) + "," + fmt(v.x1, digits) + "," +
                   fmt(v.x2, digits) + "\n";
        }
    }
    atomic_write(out, csv);
}

wave::Solution solution_from_config(const nlohmann::json& doc, double* out_residual,
                                    double* out_initial_l2);

int cmd_eval(const EvalArgs& a) {
    if (a.grid_xi < 2 || a.grid_eta < 2 || a.grid_xi > 100000 || a.grid_eta > 100000) {
        std::cerr << "eval: grid out of range\n";
        return kExitBadParams;
    }

    if (!a.config.empty()) {
        // time slice of a wave solution
        std::ifstream in(a.config);
        if (!in) {
            std::cerr << "eval: cannot open config " << a.config << "\n";
            return kExitIo;
        }
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "eval: config parse error: " << e.what() << "\n";
            return kExitIo;
        }
        const fs::path cdir = cache_dir(a.cache);
        load_zero_cache(cdir);
        const auto sol = solution_from_config(doc, nullptr, nullptr);
        const double xi0 = geometry::xi_for_mu(sol.mu0());
        const double t = a.t;
        write_field_csv(a.out, xi0, a.grid_xi, a.grid_eta, a.digits,
                        [&sol, t](const EllipticPoint& p) { return sol.evaluate(p, t); });
        save_zero_cache(cdir);
        return kExitOk;
    }

    const Family fam = parse_family(a.family);
    if (a.m.has_value() == a.lambda.has_value()) {
        std::cerr << "eval: give exactly one of --m (zero-boundary mode) or --lambda\n";
        return kExitBadParams;
    }
    double xi0;
    if (a.mu) {
        xi0 = geometry::xi_for_mu(*a.mu);
    } else if (a.xi0) {
        xi0 = *a.xi0;
    } else {
        std::cerr << "eval: give --mu or --xi0 to fix the domain\n";
        return kExitBadParams;
    }
    if (!(xi0 > 0.0) || xi0 > mathieu::kMaxRadialXi) {
        std::cerr << "eval: xi0 outside (0, " << mathieu::kMaxRadialXi << "]\n";
        return kExitBadParams;
    }

    const fs::path cdir = cache_dir(a.cache);
    if (a.m) load_zero_cache(cdir);

    try {
        if (a.m) {
            if (!a.mu) {
                std::cerr << "eval: --m needs --mu (the boundary where the mode vanishes)\n";
                return kExitBadParams;
            }
            const auto z = rqm::ZeroBoundaryFunction::make(fam, a.n, *a.m, *a.mu);
            double factor = 1.0;
            if (a.has_t) {
                if (!a.k) {
                    std::cerr << "eval: --t on a zero-boundary mode needs --k (wave parameter)\n";
                    return kExitBadParams;
                }
                const double om = 2.0 * std::sqrt(z.zero().q_root) / *a.k;
                factor = std::exp(om * a.t);
            }
            write_field_csv(a.out, xi0, a.grid_xi, a.grid_eta, a.digits,
                            [&z, factor](const EllipticPoint& p) { return z.eval(p) * factor; });
        } else {
            const auto M = rqm::RqmFunction::make(fam, a.n, *a.lambda);
            write_field_csv(a.out, xi0, a.grid_xi, a.grid_eta, a.digits,
                            [&M](const EllipticPoint& p) { return M.eval(p); });
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitBadParams;
    }
    if (a.m) save_zero_cache(cdir);
    return kExitOk;
}

struct GramArgs {
    double mu = 0.5;
    int n_max = 2;
    int m_max = 2;
    int quad_xi = 48;
    int quad_eta = 96;
    bool disk = false;
    std::string out;
    std::string cache;
};

int cmd_gram(const GramArgs& a) {
    if (!(a.mu > 0.0 && a.mu < 1.0) || a.n_max < 0 || a.m_max < 1 || a.quad_xi < 4 ||
        a.quad_eta < 4) {
        std::cerr << "gram: invalid parameter ranges (empty mode set or bad quadrature)\n";
        return kExitBadParams;
    }
    const fs::path cdir = cache_dir(a.cache);
    load_zero_cache(cdir);

    const double mu = a.mu;
    const auto modes = rqm::enumerate_modes(mu, a.n_max, a.m_max);

    // resolution adequacy gate: mode norms must be stable under doubling
    int qx = a.quad_xi, qe = a.quad_eta;
    double rel_change = 1.0;
    Eigen::MatrixXd gram;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), qx, qe);
        const auto fine = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), 2 * qx, 2 * qe);
        gram = rqm::gram_matrix(modes, grid, thread_count());
        const auto gram_fine = rqm::gram_matrix(modes, fine, thread_count());
        rel_change = 0.0;
        for (int i = 0; i < gram.rows(); ++i) {
            rel_change = std::max(rel_change,
                                  std::abs(gram(i, i) - gram_fine(i, i)) / gram_fine(i, i));
        }
        if (rel_change < 1e-10) {
            gram = gram_fine;  // keep the better one
            break;
        }
        qx *= 2;
        qe *= 2;
    }
    if (rel_change >= 1e-10) {
        std::cerr << "gram: quadrature failed the refinement gate (rel change " << rel_change
                  << ")\n";
        return kExitAdequacy;
    }

    nlohmann::json doc;
    doc["schema"] = "rqmf-gram-report/1";
    doc["mu"] = mu;
    doc["n_max"] = a.n_max;
    doc["m_max"] = a.m_max;
    doc["quad_xi"] = qx;
    doc["quad_eta"] = qe;
    doc["refinement_rel_change"] = rel_change;

    auto& jm = doc["modes"] = nlohmann::json::array();
    for (const auto& z : modes) {
        jm.push_back({{"family", family_str(z.family())},
                      {"n", z.order()},
                      {"m", z.zero_index()},
                      {"q", z.zero().q_root},
                      {"lambda", 2.0 * std::sqrt(z.zero().q_root)}});
    }

    double offdiag = 0.0;
    auto& jg = doc["gram"] = nlohmann::json::array();
    for (int i = 0; i < gram.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < gram.cols(); ++j) {
            row.push_back(gram(i, j));
            if (i != j) offdiag = std::max(offdiag, std::abs(gram(i, j)) /
                                                        std::sqrt(gram(i, i) * gram(j, j)));
        }
        jg.push_back(row);
    }
    doc["max_offdiag_normalized"] = offdiag;

    // diagonal entries against the closed norm formula (1D quadratures)
    const double xi0 = geometry::xi_for_mu(mu);
    std::vector<double> gx, gw;
    geometry::gauss_legendre(200, gx, gw);
    auto& jd = doc["diag"] = nlohmann::json::array();
    double worst_diag = 0.0;
    for (size_t i = 0; i < modes.size(); ++i) {
        const auto& z = modes[i];
        const double q = z.zero().q_root;
        const auto mode = mathieu::solve_mode(z.family(), z.order(), q);
        long double ipsi2 = 0, ipsid2 = 0, iphi2 = 0, iphid2 = 0, iphi2cos = 0, ipsi2cosh = 0;
        for (size_t kk = 0; kk < gx.size(); ++kk) {
            const double xi = 0.5 * xi0 * (gx[kk] + 1.0);
            const double wxi = 0.5 * xi0 * gw[kk];
            const auto r = mode.radial(xi);
            ipsi2 += wxi * r.value * r.value;
            ipsid2 += wxi * r.derivative * r.derivative;
            ipsi2cosh += wxi * r.value * r.value * std::cosh(2.0 * xi);
            const double eta = kPi * (gx[kk] + 1.0);
            const double weta = kPi * gw[kk];
            const auto an = mode.angular(eta);
            iphi2 += weta * an.value * an.value;
            iphid2 += weta * an.derivative * an.derivative;
            iphi2cos += weta * an.value * an.value * std::cos(2.0 * eta);
        }
        const double zeta2 = mu * mu / 2.0 * static_cast<double>(ipsi2cosh * iphi2 - ipsi2 * iphi2cos);
        const double delta0 = (z.order() == 0) ? 1.0 : 0.0;
        const double formula = zeta2 +
                               mu * mu / (4.0 * q) * (1.0 + delta0) * kPi * static_cast<double>(ipsid2) +
                               mu * mu / (4.0 * q) * static_cast<double>(iphid2 * ipsi2);
        const double measured = gram(static_cast<int>(i), static_cast<int>(i));
        const double rel = std::abs(measured - formula) / formula;
        worst_diag = std::max(worst_diag, rel);
        jd.push_back({{"measured", measured}, {"formula", formula}, {"rel_err", rel}});
    }
    doc["max_diag_rel_err"] = worst_diag;

    if (a.disk) {
        std::vector<rqm::DiskLimitFunction> dmodes;
        for (int n = 0; n <= a.n_max; ++n) {
            for (int m = 1; m <= a.m_max; ++m) {
                dmodes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Plus, n, m));
            }
        }
        for (int n = 1; n <= a.n_max; ++n) {
            for (int m = 1; m <= a.m_max; ++m) {
                dmodes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Minus, n, m));
            }
        }
        const auto rep = rqm::disk_gram(dmodes, 96, 128);
        auto& jdisk = doc["disk"];
        jdisk["max_offdiag_normalized"] = rep.max_offdiag_normalized;
        auto& arr = jdisk["diag"] = nlohmann::json::array();
        for (size_t i = 0; i < dmodes.size(); ++i) {
            const double ml = std::abs(rep.diag_measured[i] - rep.candidate_linear[i]) /
                              rep.diag_measured[i];
            const double ms = std::abs(rep.diag_measured[i] - rep.candidate_squared[i]) /
                              rep.diag_measured[i];
            arr.push_back({{"family", family_str(dmodes[i].family())},
                           {"n", dmodes[i].order()},
                           {"m", *dmodes[i].zero_index()},
                           {"measured", rep.diag_measured[i]},
                           {"candidate_linear", rep.candidate_linear[i]},
                           {"candidate_squared", rep.candidate_squared[i]},
                           {"rel_err_linear", ml},
                           {"rel_err_squared", ms},
                           {"supports", ms < ml ? "squared" : "linear"}});
        }
    }

    atomic_write(a.out, doc.dump(1) + "\n");
    save_zero_cache(cdir);
    return kExitOk;
}

struct WaveArgs {
    std::string config;
    std::vector<double> times;
    int grid_xi = 40;
    int grid_eta = 80;
    std::string out_prefix;
    int digits = 17;
    std::string cache;
};

wave::Solution solution_from_config(const nlohmann::json& doc, double* out_residual,
                                    double* out_initial_l2) {
    if (!doc.contains("mu0") || !doc.contains("K")) {
        throw std::invalid_argument("config needs numeric fields mu0 and K");
    }
    const double mu0 = doc["mu0"].get<double>();
    const double K = doc["K"].get<double>();
    if (!(mu0 > 0.0 && mu0 < 1.0) || !(K > 0.0)) {
        throw std::invalid_argument("config: mu0 must lie in (0,1), K must be positive");
    }

    if (doc.contains("terms")) {
        std::vector<wave::TermSpec> specs;
        for (const auto& t : doc["terms"]) {
            if (!t.contains("family") || !t.contains("n") || !t.contains("m") || !t.contains("a")) {
                throw std::invalid_argument("config term needs family, n, m, a");
            }
            specs.push_back({parse_family(t["family"].get<std::string>()), t["n"].get<int>(),
                             t["m"].get<int>(), t["a"].get<double>()});
        }
        if (out_residual) *out_residual = 0.0;
        if (out_initial_l2) *out_initial_l2 = 0.0;
        return wave::from_coefficients(specs, mu0, K);
    }

    if (doc.contains("initial_scalar_csv")) {
        // scalar samples on the uniform eval grid: xi,eta,value rows
        const std::string path = doc["initial_scalar_csv"].get<std::string>();
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("config: cannot open " + path);
        std::string line;
        std::getline(in, line);  // header
        struct Sample { double xi, eta, v; };
        std::vector<Sample> samples;
        while (std::getline(in, line)) {
            Sample s{};
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &s.xi, &s.eta, &s.v) == 3) {
                samples.push_back(s);
            }
        }
        if (samples.empty()) throw std::invalid_argument("config: no samples in " + path);
        // nearest-sample lookup field (the samples are expected dense)
        auto field = [samples](const EllipticPoint& p) {
            double best = 1e300, val = 0.0;
            for (const auto& s : samples) {
                const double d = std::hypot(s.xi - p.xi, std::remainder(s.eta - p.eta, 2.0 * kPi));
                if (d < best) {
                    best = d;
                    val = s.v;
                }
            }
            return val;
        };
        const int nmax = doc.value("n_max", 2);
        const int mmax = doc.value("m_max", 2);
        const int gquad_xi = doc.contains("grid") ? doc["grid"].value("xi", 48) : 48;
        const int gquad_eta = doc.contains("grid") ? doc["grid"].value("eta", 96) : 96;
        const auto grid =
            geometry::make_grid(geometry::EllipseSpec::from_mu(mu0), gquad_xi, gquad_eta);
        const auto built = wave::build_solution(field, nmax, mmax, mu0, K, grid);
        if (out_residual) *out_residual = built.projection_residual;
        if (out_initial_l2) *out_initial_l2 = built.initial_l2;
        return built.solution;
    }

    throw std::invalid_argument("config needs either terms[] or initial_scalar_csv");
}

int cmd_wave(const WaveArgs& a) {
    std::ifstream in(a.config);
    if (!in) {
        std::cerr << "wave: cannot open config " << a.config << "\n";
        return kExitIo;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "wave: config parse error: " << e.what() << "\n";
        return kExitIo;
    }
    if (a.grid_xi < 2 || a.grid_eta < 2) {
        std::cerr << "wave: grid out of range\n";
        return kExitBadParams;
    }

    const fs::path cdir = cache_dir(a.cache);
    load_zero_cache(cdir);

    double proj_residual = 0.0, initial_l2 = 0.0;
    std::optional<wave::Solution> sol;
    try {
        sol.emplace(solution_from_config(doc, &proj_residual, &initial_l2));
    } catch (const std::invalid_argument& e) {
        std::cerr << "wave: " << e.what() << "\n";
        return kExitBadParams;
    }

    double tmax = 0.0;
    for (double t : a.times) tmax = std::max(tmax, t);
    if (sol->max_omega() * tmax > 50.0) {
        std::cerr << "wave: warning: max omega*t = " << sol->max_omega() * tmax
                  << " > 50, the dominant term is near overflow\n";
    }

    const double xi0 = geometry::xi_for_mu(sol->mu0());
    for (double t : a.times) {
        if (t < 0.0) {
            std::cerr << "wave: times must be nonnegative\n";
            return kExitBadParams;
        }
        char tbuf[32];
        std::snprintf(tbuf, sizeof(tbuf), "%g", t);
        const std::string path = a.out_prefix + "_t" + tbuf + ".csv";
        write_field_csv(path, xi0, a.grid_xi, a.grid_eta, a.digits,
                        [&sol, t](const EllipticPoint& p) { return sol->evaluate(p, t); });
    }

    // solution descriptor with residual diagnostics
    nlohmann::json out;
    out["schema"] = "rqmf-wave-solution/1";
    out["mu0"] = sol->mu0();
    out["K"] = sol->wave_parameter();
    auto& terms = out["terms"] = nlohmann::json::array();
    for (const auto& term : sol->terms()) {
        terms.push_back({{"family", family_str(term.family)},
                         {"n", term.n},
                         {"m", term.m},
                         {"a", term.coefficient},
                         {"omega", term.omega},
                         {"q", term.mode.zero().q_root}});
    }
    std::vector<wave::SpaceTimeSample> samples;
    for (int i = 0; i < 6; ++i) {
        samples.push_back({{0.15 + 0.1 * i, 0.5 + i}, 0.1 * i});
    }
    out["diagnostics"] = {{"projection_residual", proj_residual},
                          {"initial_l2", initial_l2},
                          {"max_omega", sol->max_omega()},
                          {"time_metamonogenic_residual",
                           wave::residual_time_metamonogenic(*sol, samples, {1e-4})}};
    atomic_write(a.out_prefix + "_solution.json", out.dump(1) + "\n");
    save_zero_cache(cdir);
    return kExitOk;
}

struct VerifyArgs {
    std::string level = "fast";
    std::string out;
    std::string inject_fault;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.level != "fast" && a.level != "full") {
        std::cerr << "verify: level must be fast or full\n";
        return kExitBadParams;
    }
    const auto report = run_verification({a.level, a.inject_fault});
    if (!a.out.empty()) {
        atomic_write(a.out, report.dump(1) + "\n");
    } else {
        std::cout << report.dump(1) << "\n";
    }
    if (!report["pass"].get<bool>()) {
        std::cerr << "verify: FAILED suites:";
        for (const auto& s : report["suites"]) {
            if (!s["pass"].get<bool>()) std::cerr << " " << s["name"].get<std::string>();
        }
        std::cerr << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduced-quaternionic Mathieu functions on elliptical domains"};
    app.require_subcommand(1);

    ZerosArgs za;
    auto* zeros = app.add_subcommand("zeros", "q-roots of the radial functions (CSV table)");
    zeros->add_option("--mu", za.mu, "eccentricity parameter in (0,1)")->required();
    zeros->add_option("--family", za.family, "plus|minus")->required();
    zeros->add_option("--n", za.n, "order")->required();
    zeros->add_option("--m-max", za.m_max, "number of roots")->required();
    zeros->add_option("--k", za.k, "wave parameter; adds the omega column");
    zeros->add_option("--out", za.out, "output CSV path")->required();
    zeros->add_option("--digits", za.digits, "significant digits (default 17)");
    zeros->add_option("--cache-dir", za.cache, "q-zero cache directory");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "sample a function on a grid (CSV)");
    eval->add_option("--family", ea.family, "plus|minus");
    eval->add_option("--n", ea.n, "order");
    eval->add_option("--m", ea.m, "zero index (zero-boundary mode)");
    eval->add_option("--lambda", ea.lambda, "free lambda (plain RQM function)");
    eval->add_option("--mu", ea.mu, "eccentricity parameter");
    eval->add_option("--xi0", ea.xi0, "rectangle height (alternative to --mu)");
    eval->add_option("--k", ea.k, "wave parameter (needed with --t on a mode)");
    auto* topt = eval->add_option("--t", ea.t, "time (scales a mode by e^{omega t})");
    eval->add_option("--grid-xi", ea.grid_xi, "xi samples (default 60)");
    eval->add_option("--grid-eta", ea.grid_eta, "eta samples (default 120)");
    eval->add_option("--config", ea.config, "wave config; evaluates the solution time slice");
    eval->add_option("--out", ea.out, "output CSV path")->required();
    eval->add_option("--digits", ea.digits, "significant digits (default 17)");
    eval->add_option("--cache-dir", ea.cache, "q-zero cache directory");

    GramArgs ga;
    auto* gram = app.add_subcommand("gram", "Gram matrix of zero-boundary modes (JSON report)");
    gram->add_option("--mu", ga.mu, "eccentricity parameter")->required();
    gram->add_option("--n-max", ga.n_max, "max order")->required();
    gram->add_option("--m-max", ga.m_max, "max zero index")->required();
    gram->add_option("--quad-xi", ga.quad_xi, "xi quadrature order (default 48)");
    gram->add_option("--quad-eta", ga.quad_eta, "eta quadrature order (default 96)");
    gram->add_flag("--disk", ga.disk, "include the disk-limit Gram with both norm candidates");
    gram->add_option("--out", ga.out, "output JSON path")->required();
    gram->add_option("--cache-dir", ga.cache, "q-zero cache directory");

    WaveArgs wa;
    auto* wavec = app.add_subcommand("wave", "imaginary-time wave evolution from a config");
    wavec->add_option("--config", wa.config, "JSON config")->required();
    wavec->add_option("--times", wa.times, "time values")->required()->delimiter(',');
    wavec->add_option("--grid-xi", wa.grid_xi, "xi samples (default 40)");
    wavec->add_option("--grid-eta", wa.grid_eta, "eta samples (default 80)");
    wavec->add_option("--out-prefix", wa.out_prefix, "output path prefix")->required();
    wavec->add_option("--digits", wa.digits, "significant digits (default 17)");
    wavec->add_option("--cache-dir", wa.cache, "q-zero cache directory");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the module invariant suites");
    verify->add_option("--level", va.level, "fast|full (default fast)");
    verify->add_option("--out", va.out, "report JSON path (default stdout)");
    verify->add_option("--inject-fault", va.inject_fault,
                       "testing hook: characteristic-perturb trips the ODE-residual suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    ea.has_t = topt->count() > 0;

    try {
        if (app.got_subcommand(zeros)) return cmd_zeros(za);
        if (app.got_subcommand(eval)) return cmd_eval(ea);
        if (app.got_subcommand(gram)) return cmd_gram(ga);
        if (app.got_subcommand(wavec)) return cmd_wave(wa);
        if (app.got_subcommand(verify)) return cmd_verify(va);
    } catch (const NonFiniteOutput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAdequacy;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadParams;
}
