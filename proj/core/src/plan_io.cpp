#include "twistdive/plan_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace twistdive {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json body_to_json(const BodyParams& b) {
    return {{"I1", b.I1}, {"I2", b.I2}, {"I3", b.I3},
            {"l", b.l},   {"omega_d", b.omega_d}, {"I_d", b.I_d}};
}

BodyParams body_from_json(const ordered_json& j) {
    BodyParams b;
    b.I1 = j.at("I1");
    b.I2 = j.at("I2");
    b.I3 = j.at("I3");
    b.l = j.at("l");
    b.omega_d = j.at("omega_d");
    b.I_d = j.at("I_d");
    return b;
}

}  // namespace

PlanDocument make_plan_document(const DiveRequest& req, const DivePlan& plan) {
    PlanDocument doc;
    doc.request = req;
    doc.plan = plan;
    return doc;
}

std::string plan_document_to_json(const PlanDocument& doc) {
    const DiveRequest& req = doc.request;
    const DivePlan& p = doc.plan;
    const BodyParams& b = req.body;

    double delta = b.I1 / b.I2 - 1.0;
    double gamma = b.I1 / b.I3 - 1.0;

    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["request"] = {{"m", req.m}, {"n", req.n}, {"T_tot", req.T_tot}, {"body", body_to_json(b)}};
    j["dimensionless"] = {{"delta", delta},
                          {"gamma", gamma},
                          {"nu", gamma != 0.0 ? delta / gamma : 0.0},
                          {"rho", p.rho},
                          {"rho_hat", p.rho_hat},
                          {"beta", p.beta},
                          {"time_scale", p.l > 0.0 ? b.I1 / p.l : 0.0}};
    j["solution"] = {{"planner", p.general ? "general" : "symmetric"},
                     {"l", p.l},
                     {"s_minus", p.s_minus},
                     {"s_plus", p.s},
                     {"h", p.h},
                     {"terminal_sign", p.terminal_sign}};
    j["stages"] = {
        {"scaled",
         {{"T1", p.That1}, {"T2", p.That2}, {"T3", p.That3}, {"T4", p.That2}, {"T5", p.That1},
          {"T_tot", p.That_tot}}},
        {"physical",
         {{"T1", p.T1}, {"T2", p.T2}, {"T3", p.T3}, {"T4", p.T4}, {"T5", p.T5},
          {"T_tot", p.T_tot}}},
        {"somersault", {{"phi1", p.phi1}, {"phi2", p.phi2}, {"phi3", p.phi3}}},
        {"twist", {{"psi2", p.psi2}, {"psi3", p.psi3}}},
        {"twist_cycle", {{"period", p.twist_period}, {"somersault", p.twist_somersault}}}};
    j["feasibility"] = {{"feasible", p.feasible}, {"reason", p.reason}, {"warnings", p.warnings}};
    return j.dump(2) + "\n";
}

PlanDocument plan_document_from_json(const std::string& text) {
    try {
        ordered_json j = ordered_json::parse(text);
        PlanDocument doc;
        doc.schema_version = j.at("schema_version");
        if (doc.schema_version != 1)
            throw std::invalid_argument("unsupported plan schema version");

        const auto& jr = j.at("request");
        doc.request.m = jr.at("m");
        doc.request.n = jr.at("n");
        doc.request.T_tot = jr.at("T_tot");
        doc.request.body = body_from_json(jr.at("body"));

        DivePlan& p = doc.plan;
        p.m = doc.request.m;
        p.n = doc.request.n;

        const auto& js = j.at("solution");
        p.general = js.at("planner") == "general";
        p.l = js.at("l");
        p.s_minus = js.at("s_minus");
        p.s = js.at("s_plus");
        p.h = js.at("h");
        p.terminal_sign = js.at("terminal_sign");

        const auto& jd = j.at("dimensionless");
        p.rho = jd.at("rho");
        p.rho_hat = jd.at("rho_hat");
        p.beta = jd.at("beta");

        const auto& sc = j.at("stages").at("scaled");
        p.That1 = sc.at("T1");
        p.That2 = sc.at("T2");
        p.That3 = sc.at("T3");
        p.That_tot = sc.at("T_tot");
        const auto& ph = j.at("stages").at("physical");
        p.T1 = ph.at("T1");
        p.T2 = ph.at("T2");
        p.T3 = ph.at("T3");
        p.T4 = ph.at("T4");
        p.T5 = ph.at("T5");
        p.T_tot = ph.at("T_tot");
        const auto& so = j.at("stages").at("somersault");
        p.phi1 = so.at("phi1");
        p.phi2 = so.at("phi2");
        p.phi3 = so.at("phi3");
        const auto& tw = j.at("stages").at("twist");
        p.psi2 = tw.at("psi2");
        p.psi3 = tw.at("psi3");
        const auto& tc = j.at("stages").at("twist_cycle");
        p.twist_period = tc.at("period");
        p.twist_somersault = tc.at("somersault");

        const auto& jf = j.at("feasibility");
        p.feasible = jf.at("feasible");
        p.reason = jf.at("reason");
        p.warnings = jf.at("warnings").get<std::vector<std::string>>();
        return doc;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("plan document: ") + e.what());
    }
}

}  // namespace twistdive
