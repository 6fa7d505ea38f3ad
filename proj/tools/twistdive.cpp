// twistdive: plan rotor-driven twisting somersaults, verify them by direct
// integration, and tabulate the planning curves.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 plan infeasible
// (document still emitted), 3 verification failed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "twistdive/gen_planner.hpp"
#include "twistdive/phase.hpp"
#include "twistdive/plan_io.hpp"
#include "twistdive/simulator.hpp"
#include "twistdive/sym_planner.hpp"

namespace {

using namespace twistdive;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string gshort(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

DimensionlessParams shape_of(const BodyParams& b) {
    DimensionlessParams d;
    d.delta = b.I1 / b.I2 - 1.0;
    d.gamma = b.I1 / b.I3 - 1.0;
    d.nu = d.gamma != 0.0 ? d.delta / d.gamma : 0.0;
    return d;
}

struct PlanArgs {
    double m = 0, n = 0, ttot = 0;
    double I1 = 0, I2 = 0, I3 = 0;
    double l = 0, omega_d = 0, I_d = 0;
    bool general = false;
    std::string output;
};

int cmd_plan(const PlanArgs& a, bool l_given, bool w_given, bool j_given) {
    if (l_given == (w_given || j_given) || (w_given != j_given)) {
        std::cerr << "error: give either --l or both --omega-d and --I-d\n";
        return 1;
    }
    const bool rotor_given = w_given && j_given;
    DiveRequest req;
    req.m = a.m;
    req.n = a.n;
    req.T_tot = a.ttot;
    req.body = {a.I1, a.I2, a.I3, l_given ? a.l : 0.0, rotor_given ? a.omega_d : 0.0,
                rotor_given ? a.I_d : 0.0};

    DivePlan plan;
    try {
        const bool tri_axial = a.general || a.I1 < a.I2 * (1.0 - 1e-12);
        plan = tri_axial ? plan_dive_general(req) : plan_dive(req);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    for (const std::string& w : plan.warnings) std::cerr << "warning: " << w << "\n";
    if (!plan.feasible) std::cerr << "infeasible: " << plan.reason << "\n";

    int rc = write_output(a.output, plan_document_to_json(make_plan_document(req, plan)));
    if (rc != 0) return rc;
    return plan.feasible ? 0 : 2;
}

struct SimArgs {
    std::string plan_path;
    std::string export_path;
    std::string output;
    double tol = 1e-3;
    double sample_dt = 0.01;
};

int cmd_simulate(const SimArgs& a) {
    std::string text;
    if (a.plan_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(a.plan_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << a.plan_path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    PlanDocument doc;
    try {
        doc = plan_document_from_json(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!doc.plan.feasible) {
        std::cerr << "error: plan is marked infeasible; nothing to simulate\n";
        return 1;
    }

    Tolerances tol;
    tol.max_sample_dt = a.sample_dt;
    ClosureReport rep;
    try {
        rep = simulate_plan(doc.plan, shape_of(doc.request.body), tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (!a.export_path.empty()) {
        int rc = write_output(a.export_path, trajectory_csv(rep.trajectory, doc.plan.l));
        if (rc != 0) return rc;
    }

    const bool pass = rep.phi_error <= a.tol && rep.psi_error <= a.tol &&
                      std::fabs(rep.theta_final) <= a.tol;
    std::string out;
    out += "{\n";
    out += "  \"closure\": {\n";
    out += "    \"delta_phi\": " + g17(rep.delta_phi) + ",\n";
    out += "    \"delta_psi\": " + g17(rep.delta_psi) + ",\n";
    out += "    \"phi_error\": " + g17(rep.phi_error) + ",\n";
    out += "    \"psi_error\": " + g17(rep.psi_error) + ",\n";
    out += "    \"theta_final\": " + g17(rep.theta_final) + "\n";
    out += "  },\n";
    out += "  \"conservation\": {\n";
    out += "    \"max_energy_drift\": " + g17(rep.max_energy_drift) + ",\n";
    out += "    \"max_unit_drift\": " + g17(rep.max_unit_drift) + "\n";
    out += "  },\n";
    // The twisting segment (stages 2..4) closes on the momentum sphere for
    // integer twist counts; report its somersault split into geometric
    // (solid angle) and dynamic parts there.
    if (std::fabs(doc.request.n - std::round(doc.request.n)) < 1e-12) {
        Trajectory loop;
        for (const Sample& s : rep.trajectory.samples)
            if (s.stage >= 2 && s.stage <= 4) loop.samples.push_back(s);
        const PhaseDecomposition pd =
            verify_phase_decomposition(loop, shape_of(doc.request.body));
        out += "  \"phase\": {\n";
        out += "    \"geometric\": " + g17(pd.geometric_phase) + ",\n";
        out += "    \"dynamic\": " + g17(pd.dynamic_phase) + ",\n";
        out += "    \"delta_phi\": " + g17(pd.total_delta_phi) + ",\n";
        out += "    \"residual\": " + g17(pd.residual) + "\n";
        out += "  },\n";
    }
    out += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n";
    out += "}\n";
    int rc = write_output(a.output, out);
    if (rc != 0) return rc;
    return pass ? 0 : 3;
}

struct CurveArgs {
    std::string figure;
    double gamma = 19.0;
    double delta = 0.0;
    double m = 1.5;
    std::vector<double> ns{1, 2, 3, 4, 5};
    std::vector<double> s_range{0.01, 0.8};
    int samples = 200;
    std::string output;
};

int cmd_curves(const CurveArgs& a) {
    const bool general = a.figure.rfind("general-", 0) == 0;
    if (general && !(a.delta < 0.0)) {
        std::cerr << "error: general figures need --delta < 0\n";
        return 1;
    }
    if (!(a.gamma > 0.0) || a.samples < 2 || !(a.s_range[0] > 0.0) ||
        !(a.s_range[1] > a.s_range[0]) || !(a.s_range[1] < 1.0)) {
        std::cerr << "error: need gamma > 0, samples >= 2 and 0 < s-lo < s-hi < 1\n";
        return 1;
    }

    DimensionlessParams shape;
    shape.delta = general ? a.delta : 0.0;
    shape.gamma = a.gamma;
    shape.nu = shape.delta / shape.gamma;

    std::string out = "# twistdive curves figure=" + a.figure + " gamma=" + gshort(a.gamma) +
                      (general ? " delta=" + gshort(a.delta) : "") + " m=" + gshort(a.m) + "\n";
    std::vector<std::string> notes;

    auto cell = [&](double s, double n) -> std::string {
        try {
            if (a.figure == "t2") return g17(t2_hat(s, a.gamma));
            if (a.figure == "t1") return g17(stage_times(s, a.gamma, a.m, n).That1);
            if (a.figure == "ttot") return g17(stage_times(s, a.gamma, a.m, n).That_tot);
            TiltBand band = band_from_s_minus(s, shape);
            StageTimes st = stage_times_general(band, shape, a.m, n);
            return g17(a.figure == "general-t1" ? st.That1 : st.That_tot);
        } catch (const std::exception& e) {
            notes.push_back("# " + (general ? std::string("s_minus=") : std::string("s=")) +
                            gshort(s) + ": " + e.what());
            return "";
        }
    };

    const bool per_n = a.figure == "t1" || a.figure == "general-t1" || a.figure == "general-ttot";
    const std::string abscissa = general ? "s_minus" : "s";
    const std::string base =
        (a.figure == "t1" || a.figure == "general-t1") ? "That1" : "That_tot";
    out += abscissa;
    if (per_n) {
        for (double n : a.ns) out += "," + base + "_n" + gshort(n);
    } else {
        out += a.figure == "t2" ? ",That2" : ",That_tot";
    }
    out += "\n";

    for (int i = 0; i < a.samples; ++i) {
        double s = a.s_range[0] + (a.s_range[1] - a.s_range[0]) * i / (a.samples - 1);
        out += g17(s);
        if (per_n) {
            for (double n : a.ns) out += "," + cell(s, n);
        } else {
            out += "," + cell(s, a.ns.empty() ? 1.0 : a.ns[0]);
        }
        out += "\n";
    }
    for (const std::string& note : notes) out += note + "\n";

    if (a.figure == "ttot" || a.figure == "general-ttot") {
        out += "# min_tilt\n";
        out += "n," + abscissa + ",That_tot\n";
        for (double n : a.ns) {
            try {
                if (general) {
                    double sm = min_tilt_general(a.m, n, shape);
                    StageTimes st = stage_times_general(band_from_s_minus(sm, shape), shape, a.m, n);
                    out += gshort(n) + "," + g17(sm) + "," + g17(st.That_tot) + "\n";
                } else {
                    double sm = min_tilt(a.m, n, a.gamma);
                    out += gshort(n) + "," + g17(sm) + "," +
                           g17(stage_times(sm, a.gamma, a.m, n).That_tot) + "\n";
                }
            } catch (const std::exception& e) {
                out += std::string("# min_tilt n=") + gshort(n) + ": " + e.what() + "\n";
            }
        }
    }
    return write_output(a.output, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plan and verify twisting-somersault dives"};
    app.set_version_flag("--version", "twistdive 0.1.0");
    app.require_subcommand(1);

    PlanArgs pa;
    CLI::App* plan = app.add_subcommand("plan", "solve tilt, rotor and stage schedule");
    plan->add_option("--m", pa.m, "somersault count (multiple of 1/2)")->required();
    plan->add_option("--n", pa.n, "twist count (multiple of 1/2)")->required();
    plan->add_option("--ttot", pa.ttot, "flight time, seconds")->required();
    plan->add_option("--I1", pa.I1, "somersault-axis inertia")->required();
    plan->add_option("--I2", pa.I2, "lateral inertia")->required();
    plan->add_option("--I3", pa.I3, "twist-axis inertia")->required();
    auto* opt_l = plan->add_option("--l", pa.l, "total angular momentum (solve the tilt)");
    auto* opt_w = plan->add_option("--omega-d", pa.omega_d, "rotor rate (solve l instead)");
    auto* opt_j = plan->add_option("--I-d", pa.I_d, "rotor inertia (solve l instead)");
    plan->add_flag("--general", pa.general, "force the tri-axial planner");
    plan->add_option("-o,--output", pa.output, "write the plan JSON here (default stdout)");

    SimArgs sa;
    CLI::App* sim = app.add_subcommand("simulate", "integrate a plan and check closure");
    sim->add_option("--plan", sa.plan_path, "plan JSON path, or - for stdin")->required();
    sim->add_option("--export", sa.export_path, "write the trajectory CSV here");
    sim->add_option("--tol", sa.tol, "closure tolerance, radians")->check(CLI::PositiveNumber);
    sim->add_option("--sample-dt", sa.sample_dt, "scaled sample spacing of the exported CSV")
        ->check(CLI::PositiveNumber);
    sim->add_option("-o,--output", sa.output, "write the report JSON here (default stdout)");

    CurveArgs ca;
    CLI::App* cur = app.add_subcommand("curves", "tabulate planning curves as CSV");
    cur->add_option("--figure", ca.figure, "t2 | t1 | ttot | general-t1 | general-ttot")
        ->required()
        ->check(CLI::IsMember({"t2", "t1", "ttot", "general-t1", "general-ttot"}));
    cur->add_option("--gamma", ca.gamma, "I1/I3 - 1");
    cur->add_option("--delta", ca.delta, "I1/I2 - 1 (general figures)");
    cur->add_option("--m", ca.m, "somersault count for the t1/ttot figures");
    cur->add_option("--n", ca.ns, "twist counts, one column each")->expected(-1);
    cur->add_option("--s-range", ca.s_range, "tilt range lo hi")->expected(2);
    cur->add_option("--samples", ca.samples, "rows in the table");
    cur->add_option("-o,--output", ca.output, "write the CSV here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (plan->parsed())
        return cmd_plan(pa, opt_l->count() > 0, opt_w->count() > 0, opt_j->count() > 0);
    if (sim->parsed()) return cmd_simulate(sa);
    return cmd_curves(ca);
}
