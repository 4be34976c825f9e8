#include "hydro/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hydro {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::vortex: return "vortex";
        case Problem::sod: return "sod";
        case Problem::constant: return "constant";
    }
    return "?";
}
std::string to_string(IntegratorChoice i) {
    switch (i) {
        case IntegratorChoice::ader_onestep: return "ader";
        case IntegratorChoice::rk2: return "rk2";
        case IntegratorChoice::rk3: return "rk3";
    }
    return "?";
}
std::string to_string(SolverChoice s) {
    return s == SolverChoice::rusanov ? "rusanov" : "hll";
}
std::string to_string(TransferStrategy s) {
    return s == TransferStrategy::skinny ? "skinny" : "full";
}

Problem problem_from_string(const std::string& s) {
    if (s == "vortex") return Problem::vortex;
    if (s == "sod") return Problem::sod;
    if (s == "constant") return Problem::constant;
    throw std::invalid_argument("unknown problem '" + s + "'");
}
IntegratorChoice integrator_from_string(const std::string& s) {
    if (s == "ader") return IntegratorChoice::ader_onestep;
    if (s == "rk2") return IntegratorChoice::rk2;
    if (s == "rk3") return IntegratorChoice::rk3;
    throw std::invalid_argument("unknown integrator '" + s + "'");
}
SolverChoice solver_from_string(const std::string& s) {
    if (s == "rusanov") return SolverChoice::rusanov;
    if (s == "hll") return SolverChoice::hll;
    throw std::invalid_argument("unknown riemann solver '" + s + "'");
}
TransferStrategy strategy_from_string(const std::string& s) {
    if (s == "skinny") return TransferStrategy::skinny;
    if (s == "full") return TransferStrategy::full_state;
    throw std::invalid_argument("unknown transfer strategy '" + s + "'");
}

void RunConfig::validate() const {
    if (order != 2 && order != 3) throw std::invalid_argument("order must be 2 or 3");
    if (nx < 4 || ny < 4 || nz < 4) throw std::invalid_argument("mesh must be at least 4^3");
    if (t_final > 0.0 && steps > 0)
        throw std::invalid_argument("set exactly one of tfinal and steps");
    if (cfl > 0.0 && cfl >= 1.0) throw std::invalid_argument("cfl must lie in (0,1)");
    if (nx % split_x || ny % split_y || nz % split_z)
        throw std::invalid_argument("patch split must divide the mesh evenly");
    limiter.validate();
}

ErrorReport error_norms(const SkinnyState& numerical, const SkinnyState& exact,
                        const PatchGeometry& g) {
    if (numerical.mx != exact.mx || numerical.my != exact.my || numerical.mz != exact.mz)
        throw std::invalid_argument("error_norms: shape mismatch");
    ErrorReport rep;
    const int gh = g.ghost;
    const double inv_n = 1.0 / double(zone_count(g, false));
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i)
                for (int q = 0; q < NVAR; ++q) {
                    double d = std::abs(numerical.at(k, j, i, q) - exact.at(k, j, i, q));
                    rep.l1[q] += d;
                    rep.linf[q] = std::max(rep.linf[q], d);
                }
    for (int q = 0; q < NVAR; ++q) rep.l1[q] *= inv_n;
    return rep;
}

namespace {

double initial_dt(const SkinnyState& s, const PatchGeometry& g, const GasModel& gas,
                  double cfl) {
    const int gh = g.ghost;
    double dt = 1.0e32;
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i) {
                ConsVars c = ConsVars::from(s.zone(k, j, i));
                dt = std::min(dt, eval_tstep_ptwise(c, cfl, g.dx, g.dy, g.dz, gas));
            }
    return dt;
}

double resolve_t_final(const RunConfig& cfg, const PatchGeometry& g) {
    if (cfg.steps > 0) return -1.0;
    if (cfg.t_final > 0.0) return cfg.t_final;
    // Default stopping time: one periodic crossing for the advected
    // problems, a short evolution for sod.
    if (cfg.problem == Problem::sod) return 0.2;
    return vortex_crossing_time(g);
}

}  // namespace

RunResult run_simulation(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

    std::array<double, 3> lo, hi;
    default_domain(cfg.problem, lo, hi);
    PatchGeometry geom = make_geometry(cfg.nx, cfg.ny, cfg.nz, cfg.order, lo, hi);

    if (cfg.problem == Problem::vortex) {
        double tail = vortex_boundary_tail(geom);
        if (tail > 1e-10)
            std::cerr << "warning: vortex tail " << tail
                      << " at the periodic boundary exceeds 1e-10\n";
    }

    SkinnyState global = init_problem(cfg.problem, geom, cfg.gas, cfg.order);
    PatchSet set = make_patch_set(geom, cfg.split_x, cfg.split_y, cfg.split_z, cfg.order,
                                  boundary_for(cfg.problem));
    scatter_to_patches(global, set);

    StepParams par;
    par.gas = cfg.gas;
    par.solver = cfg.solver;
    par.integrator = cfg.integrator;
    par.limiter = cfg.limiter;
    par.order = cfg.order;

    TimeState time;
    time.cfl = cfg.effective_cfl();
    time.dt = initial_dt(global, geom, cfg.gas, time.cfl);

    const double t_final = resolve_t_final(cfg, geom);

    RunResult result;
    result.geom = geom;
    reset_riemann_calls();

    double wall0 = omp_get_wtime();
    std::int64_t step = 0;
    while (true) {
        if (cfg.steps > 0) {
            if (step >= cfg.steps) break;
        } else {
            if (t_final - time.t <= 1e-12 * t_final) break;
            if (time.dt >= t_final - time.t) time.dt = t_final - time.t;  // land on t_final
        }
        try {
            run_patch_step(set, time, par, cfg.strategy, &result.profile);
        } catch (const std::exception& e) {
            throw std::runtime_error("step " + std::to_string(step + 1) + ": " + e.what());
        }
        time.t += time.dt;
        time.dt = time.dt_next;
        ++step;
    }
    result.wall_seconds = omp_get_wtime() - wall0;

    result.steps = step;
    result.t_end = time.t;
    result.ledger = set.ledger;
    result.riemann_calls = riemann_call_count();
    result.zones_per_sec =
        result.wall_seconds > 0.0
            ? double(zone_count(geom, false)) * double(step) / result.wall_seconds
            : 0.0;

    result.final_state = SkinnyState::make(geom);
    gather_from_patches(set, result.final_state);

    if (cfg.problem == Problem::vortex) {
        SkinnyState exact = exact_vortex(geom, cfg.gas, time.t, cfg.order);
        result.errors = error_norms(result.final_state, exact, geom);
    } else if (cfg.problem == Problem::constant) {
        SkinnyState exact = init_constant(geom, cfg.gas);
        result.errors = error_norms(result.final_state, exact, geom);
    }
    return result;
}

std::vector<ConvergenceRow> run_convergence_study(const RunConfig& cfg,
                                                  const std::vector<int>& meshes) {
    if (meshes.size() < 2)
        throw std::invalid_argument("convergence study needs at least two meshes");
    std::vector<ConvergenceRow> rows;
    for (std::size_t m = 0; m < meshes.size(); ++m) {
        RunConfig c = cfg;
        c.check = CheckMode::none;
        c.nx = c.ny = c.nz = meshes[m];
        RunResult r = run_simulation(c);
        if (!r.errors) throw std::runtime_error("convergence study needs an exact solution");
        ConvergenceRow row;
        row.mesh = meshes[m];
        row.report = *r.errors;
        if (m > 0) {
            double e_coarse = rows[m - 1].report.l1[0];
            double e_fine = row.report.l1[0];
            row.report.order_estimate =
                std::log(e_coarse / e_fine) / std::log(double(meshes[m]) / meshes[m - 1]);
            r.errors->order_estimate = row.report.order_estimate;
        }
        row.result = std::move(r);
        rows.push_back(std::move(row));
    }
    return rows;
}

RunResult run_benchmark(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.check = CheckMode::none;
    if (c.steps <= 0 && c.t_final <= 0.0) c.steps = 20;
    return run_simulation(c);
}

ReproReport run_reproducibility_check(const RunConfig& cfg) {
    RunConfig base = cfg;
    base.check = CheckMode::none;
    if (base.steps <= 0) {
        base.steps = 50;
        base.t_final = -1.0;
    }
    base.threads = 1;

    RunResult a = run_simulation(base);
    RunResult b = run_simulation(base);

    ReproReport rep;
    rep.serial_bit_identical =
        a.final_state.v.size() == b.final_state.v.size() &&
        std::memcmp(a.final_state.v.data(), b.final_state.v.data(),
                    a.final_state.v.size() * sizeof(double)) == 0;

    RunConfig multi = base;
    multi.threads = std::max(4, omp_get_max_threads());
    RunResult c = run_simulation(multi);

    const PatchGeometry& g = a.geom;
    const int gh = g.ghost;
    double l1 = 0.0;
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i) {
                double d = std::abs(a.final_state.at(k, j, i, 0) - c.final_state.at(k, j, i, 0));
                l1 += d;
                for (int q = 0; q < NVAR; ++q) {
                    double dq =
                        std::abs(a.final_state.at(k, j, i, q) - c.final_state.at(k, j, i, q));
                    if (dq > rep.max_abs_diff) {
                        rep.max_abs_diff = dq;
                        rep.max_diff_zone = {i - gh, j - gh, k - gh};
                    }
                }
            }
    rep.multiworker_l1_diff = l1 / double(zone_count(g, false));
    rep.pass = rep.serial_bit_identical && rep.multiworker_l1_diff < 1e-10;
    return rep;
}

std::string csv_header() {
    return "run_id,problem,order,integrator,riemann,strategy,nx,ny,nz,split,cfl,tfinal,steps,"
           "seed,threads,l1_rho,l1_mx,l1_my,l1_mz,l1_E,linf_rho,linf_mx,linf_my,linf_mz,linf_E,"
           "order_estimate,zones_per_sec,sec_reconstruct,sec_predict,sec_flux,sec_rate,"
           "sec_update,sec_transfer,predictor_fraction,ledger_uploads,ledger_downloads,"
           "ledger_scalar_uploads,ledger_steps,riemann_calls";
}

std::string csv_row(const RunConfig& cfg, const RunResult& result, int mesh_override) {
    static int run_counter = 0;
    std::ostringstream os;
    os.precision(16);
    int n = mesh_override > 0 ? mesh_override : cfg.nx;
    os << to_string(cfg.problem) << "-o" << cfg.order << "-n" << n << "-" << ++run_counter << ','
       << to_string(cfg.problem) << ',' << cfg.order << ',' << to_string(cfg.integrator) << ','
       << to_string(cfg.solver) << ',' << to_string(cfg.strategy) << ',' << result.geom.nx << ','
       << result.geom.ny << ',' << result.geom.nz << ',' << cfg.split_x << 'x' << cfg.split_y
       << 'x' << cfg.split_z << ',' << cfg.effective_cfl() << ',' << result.t_end << ','
       << result.steps << ',' << cfg.seed << ',' << cfg.threads;
    if (result.errors) {
        for (int q = 0; q < NVAR; ++q) os << ',' << result.errors->l1[q];
        for (int q = 0; q < NVAR; ++q) os << ',' << result.errors->linf[q];
        if (std::isnan(result.errors->order_estimate))
            os << ",";
        else
            os << ',' << result.errors->order_estimate;
    } else {
        for (int q = 0; q < 2 * NVAR; ++q) os << ',';
        os << ',';
    }
    os << ',' << result.zones_per_sec << ',' << result.profile.reconstruct << ','
       << result.profile.predict << ',' << result.profile.flux << ',' << result.profile.rate
       << ',' << result.profile.update << ',' << result.profile.transfer << ','
       << result.profile.predictor_fraction() << ',' << result.ledger.uploads << ','
       << result.ledger.downloads << ',' << result.ledger.scalar_uploads << ','
       << result.ledger.steps << ',' << result.riemann_calls;
    return os.str();
}

void append_csv(const std::string& path, const std::string& header, const std::string& rows) {
    bool write_header = true;
    {
        std::ifstream probe(path);
        if (probe.good() && probe.peek() != std::ifstream::traits_type::eof())
            write_header = false;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    if (write_header) out << header << '\n';
    out << rows;
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto parse_split = [&](const std::string& v) {
        int px, py, pz;
        char x1, x2;
        std::istringstream is(v);
        if (!(is >> px >> x1 >> py >> x2 >> pz) || x1 != 'x' || x2 != 'x')
            throw std::invalid_argument("split must look like PxQxR");
        cfg.split_x = px;
        cfg.split_y = py;
        cfg.split_z = pz;
    };
    if (key == "problem") cfg.problem = problem_from_string(value);
    else if (key == "order") cfg.order = std::stoi(value);
    else if (key == "integrator") cfg.integrator = integrator_from_string(value);
    else if (key == "riemann") cfg.solver = solver_from_string(value);
    else if (key == "strategy") cfg.strategy = strategy_from_string(value);
    else if (key == "nx") cfg.nx = std::stoi(value);
    else if (key == "ny") cfg.ny = std::stoi(value);
    else if (key == "nz") cfg.nz = std::stoi(value);
    else if (key == "split") parse_split(value);
    else if (key == "cfl") cfg.cfl = std::stod(value);
    else if (key == "tfinal") { cfg.t_final = std::stod(value); cfg.steps = 0; }
    else if (key == "steps") { cfg.steps = std::stoll(value); cfg.t_final = -1.0; }
    else if (key == "out") cfg.out_path = value;
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "threads") cfg.threads = std::stoi(value);
    else if (key == "check") {
        if (value == "convergence") cfg.check = CheckMode::convergence;
        else if (value == "benchmark") cfg.check = CheckMode::benchmark;
        else if (value == "repro") cfg.check = CheckMode::repro;
        else throw std::invalid_argument("unknown check '" + value + "'");
    } else if (key == "meshes") {
        cfg.meshes.clear();
        std::istringstream is(value);
        std::string tok;
        while (std::getline(is, tok, ',')) cfg.meshes.push_back(std::stoi(tok));
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        apply_key_value(cfg, strip(t.substr(0, eq)), strip(t.substr(eq + 1)));
    }
}

}  // namespace hydro
