/*
   Copyright 2026 The ffdescent Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// ffdescent command-line front end.
//
// Exit codes: 0 ok, 2 bound violation, 3 inconclusive (budget), 4 input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "ffdescent/bounds.hpp"
#include "ffdescent/curvemodel.hpp"
#include "ffdescent/descent.hpp"
#include "ffdescent/elliptic.hpp"
#include "ffdescent/factor.hpp"
#include "ffdescent/jacobian.hpp"
#include "ffdescent/points.hpp"
#include "ffdescent/report.hpp"
#include "ffdescent/rrspace.hpp"
#include "ffdescent/torsion_maps.hpp"
#include "suite.hpp"

namespace {

using namespace ffd;

constexpr int kOk = 0, kViolation = 2, kInconclusive = 3, kInputError = 4;

struct RunConfig {
    std::string command;
    std::string curve;
    int c = 4;
    std::string mode = "integral";
    std::string S = "[]";
    std::optional<std::uint64_t> seed;
    int trials = 40;
    double cap = 1e8;
    std::optional<double> lambda;
    std::string out;
    std::string format = "json";
    int workers = 0;
    std::vector<std::string> sweep;
    std::optional<int> q;
    std::string filter;
    std::vector<std::string> params;
};

struct input_error : domain_error {
    using domain_error::domain_error;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("FFDESCENT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw input_error("FFDESCENT_SEED is not an unsigned integer");
        }
    }
    return 1;
}

class Clock {
   public:
    Clock() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

   private:
    std::chrono::steady_clock::time_point t0_;
};

/// Runtime goes to stderr so reports stay byte-identical across runs.
void runtime_note(const std::string& what, const Clock& clk) {
    std::cerr << "[ffdescent] " << what << ": " << clk.seconds() << " s\n";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw input_error("cannot write " + cfg.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

json header(const RunConfig& cfg, std::uint64_t seed) {
    json params{{"c", cfg.c},       {"mode", cfg.mode},     {"S", cfg.S},
                {"trials", cfg.trials}, {"cap", cfg.cap},   {"format", cfg.format}};
    if (cfg.lambda) params["lambda"] = *cfg.lambda;
    if (!cfg.params.empty()) params["overrides"] = cfg.params;
    return json{{"command", cfg.command}, {"version", library_version()}, {"seed", seed}, {"parameters", params}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (const char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return o + "\"";
}

std::string bounds_csv(const BoundReport& R) {
    std::ostringstream s;
    s << "bound_name,applicable,exponent,log2,observed,satisfied,note\n";
    for (const auto& b : R.bounds) {
        s << b.name << ',' << (b.applicable ? "true" : "false") << ','
          << (b.exponent ? to_string(*b.exponent) : std::string()) << ',';
        if (b.applicable) s << b.log2;
        s << ',';
        if (b.observed) s << *b.observed;
        s << ',';
        if (b.satisfied) s << (*b.satisfied ? "true" : "false");
        s << ',' << csv_escape(b.note) << '\n';
    }
    return s.str();
}

/// key=value overrides of bound inputs, applied after the derived values.
void apply_overrides(BoundParams& P, const std::vector<std::string>& kv) {
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw input_error("--param expects key=value, got " + s);
        const std::string k = s.substr(0, eq);
        int v = 0;
        try {
            v = std::stoi(s.substr(eq + 1));
        } catch (const std::exception&) {
            throw input_error("--param " + k + ": integer value required");
        }
        if (k == "d") P.d = v;
        else if (k == "g") P.g = v;
        else if (k == "c") P.c = v;
        else if (k == "h") P.h = v;
        else if (k == "g_f") P.g_f = v;
        else if (k == "omega") P.omega = v;
        else if (k == "rank") P.rank = v;
        else if (k == "two_torsion_dim") P.two_torsion_dim = v;
        else if (k == "conductor_degree") P.conductor_degree = v;
        else if (k == "S") P.S = v;
        else if (k == "deg_disc") P.deg_disc = v;
        else if (k == "rho") P.rho = static_cast<std::uint64_t>(v);
        else throw input_error("--param: unknown bound input " + k);
    }
}

BoundParams derived_params(const HyperellipticModel& m, int c) {
    const GF& K = m.field();
    BoundParams P;
    P.q = K.q();
    P.p = K.p();
    P.d = m.d;
    P.c = c;
    P.h = m.height;
    if (m.polynomial) {
        const PlaneCurveData pc = plane_curve_analyze(m, K.p() > m.d);
        P.irreducible = pc.omega == 1;
        P.omega = pc.omega;
        P.two_torsion_dim = pc.two_torsion_dim;
        P.g_f = pc.genus;
        P.deg_disc = m.disc.num().deg();
    }
    if (m.j && !m.j->is_constant()) P.rho = insep_degree(*m.j);
    P.isotrivial = m.triviality == Triviality::constant || m.triviality == Triviality::isotrivial;
    if (m.d == 3 && m.triviality != Triviality::constant) P.conductor_degree = elliptic_local_data(m).conductor_degree;
    return P;
}

std::vector<Place> parse_places(const GF& K, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("--S: ") + e.what());
    }
    if (!j.is_array()) throw input_error("--S expects a JSON list of polynomials");
    std::vector<Place> S{Place::infinity(K)};
    for (const auto& x : j) {
        const Poly pi = poly_from_json(K, x);
        if (pi.deg() < 1 || !is_irreducible(pi)) throw input_error("--S: places must be irreducible polynomials");
        S.push_back(Place::finite(pi));
    }
    return S;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg) {
    const std::uint64_t seed = resolve_seed(cfg);
    const CurveSpec spec = load_curve(cfg.curve);
    if (!spec.weierstrass) throw input_error("enumerate needs a weierstrass model");
    const HyperellipticModel& m = *spec.weierstrass;
    const Clock clk;
    const EnumOptions eo{cfg.cap, true};
    std::vector<CurvePoint> pts;
    BoundParams P = derived_params(m, cfg.c);
    std::vector<Place> S;
    try {
        if (cfg.mode == "integral") {
            pts = enum_integral(m, cfg.c, eo);
        } else if (cfg.mode == "rational") {
            pts = enum_rational(m, cfg.c, eo);
        } else if (cfg.mode == "s-integral") {
            S = parse_places(m.field(), cfg.S);
            pts = enum_s_integral(m, S, cfg.c, eo);
        } else {
            throw input_error("--mode must be integral, rational or s-integral");
        }
    } catch (const search_limit_error& e) {
        json rep = header(cfg, seed);
        rep["curve"] = spec.source;
        rep["status"] = "inconclusive";
        rep["reason"] = e.what();
        rep["estimate"] = e.estimate();
        emit(cfg, rep.dump(2));
        return kInconclusive;
    }
    SameClassOptions sc;
    sc.mc.trials = cfg.trials;
    sc.mc.seed = seed;
    FiberPartition fp;
    if (m.polynomial) fp = group_fibers(m, pts, sc);

    if (cfg.mode == "s-integral") {
        P.S = static_cast<int>(S.size());
        std::vector<Place> u = S;
        for (const auto& pl : bad_places(m))
            if (std::find(u.begin(), u.end(), pl) == u.end()) u.push_back(pl);
        P.S_union_Sigma = static_cast<int>(u.size());
    }

    apply_overrides(P, cfg.params);
    BoundReport B;
    if (cfg.mode == "s-integral") {
        B = s_integral_count_bound(P);
        B.observe("s_integral_total", static_cast<double>(pts.size()));
    } else {
        B = rational_point_count_bounds(P);
        B.observe(P.g == 0 ? "per_class_p1" : "per_class", fp.max_fiber);
        if (cfg.mode == "integral" && B.find("per_class_p1_integral"))
            B.observe("per_class_p1_integral", fp.max_fiber);
        B.observe(P.g == 0 ? "total_p1" : "total", static_cast<double>(pts.size()));
    }
    runtime_note("enumerate", clk);

    if (cfg.format == "csv") {
        std::map<int, int> cls;
        for (std::size_t f = 0; f < fp.fibers.size(); ++f)
            for (const int i : fp.fibers[f]) cls[i] = static_cast<int>(f);
        std::ostringstream s;
        s << "x,y,deg_x,class\n";
        for (std::size_t i = 0; i < pts.size(); ++i)
            s << csv_escape(pts[i].x.str()) << ',' << csv_escape(pts[i].y.str()) << ',' << pts[i].height() << ','
              << cls[static_cast<int>(i)] << '\n';
        emit(cfg, s.str() + "\n" + bounds_csv(B));
    } else {
        json rep = header(cfg, seed);
        rep["curve"] = spec.source;
        rep["model"] = to_json(m);
        json pl = json::array();
        for (const auto& Q : pts) pl.push_back(to_json(Q));
        rep["points"] = pl;
        rep["fibers"] = to_json(fp);
        rep["bounds"] = to_json(B);
        rep["status"] = B.all_satisfied() ? "ok" : "violation";
        emit(cfg, rep.dump(2));
    }
    return B.all_satisfied() ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

BoundParams torsion_params(const GF& K, int genus, const RunConfig& cfg) {
    if (!cfg.lambda) throw input_error("--lambda is required for the torsion bounds");
    BoundParams P;
    P.q = K.q();
    P.p = K.p();
    P.curve_genus = genus;
    P.lambda = *cfg.lambda;
    return P;
}

struct Census3 {
    std::uint64_t order = 0, n3 = 0;
    BoundReport bounds;
    std::vector<TorsionWitness> witnesses;
    bool ok = true;
};

Census3 census3(const Poly& F, const RunConfig& cfg, bool with_witnesses) {
    const HyperellipticJacobian J(F);
    const auto G = J.enumerate_group();
    Census3 c;
    c.order = G.size();
    c.n3 = torsion_count(J, G, 3);
    c.bounds = torsion_bounds(torsion_params(F.field(), J.genus(), cfg));
    c.bounds.observe("torsion3_total", static_cast<double>(c.n3));
    c.bounds.observe("trivial_3", static_cast<double>(c.n3));
    c.bounds.observe("weil", static_cast<double>(c.n3));
    c.ok = c.bounds.all_satisfied();
    if (with_witnesses) {
        std::vector<MumfordDivisor> tors;
        for (const auto& a : G)
            if (!a.is_zero() && J.mul(3, a).is_zero()) tors.push_back(a);
        c.witnesses = three_torsion_witnesses(F, tors);
        for (std::size_t i = 0; i < tors.size(); ++i)
            c.ok = c.ok && witness_degree_caps(c.witnesses[i]) && recover_class(F, c.witnesses[i]) == tors[i];
    }
    return c;
}

int sweep_torsion3(const RunConfig& cfg) {
    if (cfg.sweep.size() != 2 || cfg.sweep[0] != "F-degree") throw input_error("--sweep expects: F-degree <n>");
    const int deg = std::stoi(cfg.sweep[1]);
    if (!cfg.q) throw input_error("--sweep needs --q");
    if (deg < 3 || deg % 2 == 0) throw input_error("--sweep: degree must be odd and at least 3");
    const GF& K = GF::get(*cfg.q);
    if (K.p() < 5) throw input_error("torsion3 requires p >= 5");
    const int g = (deg - 1) / 2;
    if (g > 3) throw input_error("--sweep: genus above the class enumeration limit");
    const Clock clk;
    std::uint64_t total = 1;
    for (int i = 0; i < deg; ++i) total *= K.q();
    std::ostringstream s;
    s << "F,group_order,torsion3,torsion3_total_log2,weil_log2,ok\n";
    bool ok = true;
    std::uint64_t n = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elt> c;
        std::uint64_t v = idx;
        for (int i = 0; i < deg; ++i, v /= K.q()) c.push_back(static_cast<Elt>(v % K.q()));
        c.push_back(1);
        const Poly F(K, c);
        if (!is_squarefree(F)) continue;
        const Census3 r = census3(F, cfg, false);
        ok = ok && r.ok;
        ++n;
        s << csv_escape(F.str("x")) << ',' << r.order << ',' << r.n3 << ',' << r.bounds.find("torsion3_total")->log2 << ','
          << r.bounds.find("weil")->log2 << ',' << (r.ok ? "true" : "false") << '\n';
    }
    runtime_note("sweep over " + std::to_string(n) + " curves", clk);
    emit(cfg, s.str());
    return ok ? kOk : kViolation;
}

int cmd_torsion3(const RunConfig& cfg) {
    if (!cfg.sweep.empty()) return sweep_torsion3(cfg);
    const std::uint64_t seed = resolve_seed(cfg);
    const CurveSpec spec = load_curve(cfg.curve);
    if (!spec.F) throw input_error("torsion3 needs a hyperelliptic model (field F)");
    const Poly& F = *spec.F;
    if (F.field().p() < 5) throw input_error("torsion3 requires p >= 5");
    if (!F.is_monic() || F.deg() < 3 || F.deg() % 2 == 0) throw input_error("F must be monic of odd degree >= 3");
    if (!is_squarefree(F)) throw input_error("F must be squarefree");
    const Clock clk;
    const Census3 r = census3(F, cfg, true);
    runtime_note("torsion3", clk);
    if (cfg.format == "csv") {
        emit(cfg, bounds_csv(r.bounds));
    } else {
        json rep = header(cfg, seed);
        rep["curve"] = spec.source;
        rep["genus"] = (F.deg() - 1) / 2;
        rep["group_order"] = r.order;
        rep["torsion3"] = r.n3;
        json w = json::array();
        for (const auto& x : r.witnesses) w.push_back(to_json(x));
        rep["witnesses"] = w;
        rep["bounds"] = to_json(r.bounds);
        rep["status"] = r.ok ? "ok" : "violation";
        emit(cfg, rep.dump(2));
    }
    return r.ok ? kOk : kViolation;
}

int cmd_torsion2(const RunConfig& cfg) {
    const std::uint64_t seed = resolve_seed(cfg);
    const CurveSpec spec = load_curve(cfg.curve);
    if (!spec.G) throw input_error("torsion2-trigonal needs a trigonal model (field G)");
    const Clock clk;
    const OnePointCurve C = OnePointCurve::trigonal(*spec.G);
    const int g = C.genus();
    if (g > 4) throw input_error("torsion2-trigonal: genus above the class enumeration limit");
    const auto reps = reduced_representatives(C);
    std::vector<EffectiveDivisor> tors;
    for (const auto& D : reps)
        if (!D.empty() && is_torsion_class(C, D, 2)) tors.push_back(D);
    const std::uint64_t n2 = tors.size() + 1;
    BoundReport B = torsion_bounds(torsion_params(C.field(), g, cfg));
    B.observe("torsion2_total", static_cast<double>(n2));
    B.observe("bhargava", static_cast<double>(n2));
    B.observe("trivial_2", static_cast<double>(n2));
    bool ok = B.all_satisfied();
    json wit = json::array();
    std::map<std::string, int> fibre;
    for (const auto& D : tors) {
        const TorsionWitness w = two_torsion_trigonal_to_point(C, D);
        ok = ok && witness_degree_caps(w) && same_divisor(C, recover_divisor(C, w), D);
        ++fibre[w.F_psi.str() + "|" + w.x0.str() + "|" + w.y0.str()];
        wit.push_back(to_json(w));
    }
    int maxfib = 0;
    for (const auto& [k, v] : fibre) maxfib = std::max(maxfib, v);
    ok = ok && maxfib <= 3;
    runtime_note("torsion2-trigonal", clk);
    if (cfg.format == "csv") {
        emit(cfg, bounds_csv(B));
    } else {
        json rep = header(cfg, seed);
        rep["curve"] = spec.source;
        rep["genus"] = g;
        rep["group_order"] = reps.size();
        rep["torsion2"] = n2;
        rep["witnesses"] = wit;
        rep["max_fibre"] = maxfib;
        rep["family_size"] = trigonal_family(C).size();
        rep["bounds"] = to_json(B);
        rep["status"] = ok ? "ok" : "violation";
        emit(cfg, rep.dump(2));
    }
    return ok ? kOk : kViolation;
}

int cmd_verify(const RunConfig& cfg) {
    suite::Options o;
    o.seed = cfg.seed ? *cfg.seed : (std::getenv("FFDESCENT_SEED") ? resolve_seed(cfg) : o.seed);
    o.trials = cfg.trials;
    o.lambda = cfg.lambda.value_or(1.0);
    o.filter = cfg.filter;
    if (cfg.cap > o.cap) o.cap = cfg.cap;
    json rows = json::array();
    bool fail = false, inconclusive = false;
    std::ostringstream csv;
    csv << "criterion,name,verdict,summary\n";
    for (const auto& info : suite::criteria()) {
        if (!suite::selected(info, o.filter)) continue;
        const Clock clk;
        const suite::Result r = suite::run(info.id, o);
        runtime_note("criterion " + std::to_string(info.id), clk);
        std::cerr << "criterion " << r.id << " (" << r.name << "): " << suite::to_string(r.verdict) << "  "
                  << r.summary << '\n';
        fail = fail || r.verdict == suite::Verdict::fail;
        inconclusive = inconclusive || r.verdict == suite::Verdict::inconclusive;
        rows.push_back(json{{"criterion", r.id}, {"name", r.name}, {"verdict", suite::to_string(r.verdict)},
                            {"summary", r.summary}});
        csv << r.id << ',' << csv_escape(r.name) << ',' << suite::to_string(r.verdict) << ',' << csv_escape(r.summary)
            << '\n';
    }
    if (cfg.format == "csv") {
        emit(cfg, csv.str());
    } else {
        json rep{{"command", "verify"},
                 {"version", library_version()},
                 {"seed", o.seed},
                 {"parameters", json{{"trials", o.trials}, {"lambda", o.lambda}, {"cap", o.cap}, {"filter", o.filter}}},
                 {"criteria", rows},
                 {"status", fail ? "fail" : inconclusive ? "inconclusive" : "pass"}};
        emit(cfg, rep.dump(2));
    }
    return fail ? kViolation : inconclusive ? kInconclusive : kOk;
}

void add_common(CLI::App* app, RunConfig& cfg) {
    app->add_option("--seed", cfg.seed, "random seed (fallback: FFDESCENT_SEED)");
    app->add_option("--trials", cfg.trials, "Monte Carlo trials for squareness tests")->check(CLI::PositiveNumber);
    app->add_option("--cap", cfg.cap, "candidate cap for enumerations")->check(CLI::PositiveNumber);
    app->add_option("--lambda", cfg.lambda, "rank bound constant for the torsion bounds");
    app->add_option("--out", cfg.out, "output path (default stdout)");
    app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--workers", cfg.workers, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ffdescent: descent, torsion and height bounds over F_q(t)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* en = app.add_subcommand("enumerate", "enumerate points, group them by descent class, compare bounds");
    en->add_option("--curve", cfg.curve, "curve JSON file")->required();
    en->add_option("--c", cfg.c, "height bound deg x0 <= c")->check(CLI::NonNegativeNumber);
    en->add_option("--mode", cfg.mode, "point class")->check(CLI::IsMember({"integral", "rational", "s-integral"}));
    en->add_option("--S", cfg.S, "finite places of S as a JSON list of polynomials; infinity is always included");
    en->add_option("--param", cfg.params, "override a bound input, key=value");
    add_common(en, cfg);

    auto* t3 = app.add_subcommand("torsion3", "3-torsion census of y^2 = F(x)");
    t3->add_option("--curve", cfg.curve, "curve JSON file");
    t3->add_option("--sweep", cfg.sweep, "sweep all squarefree F: F-degree <n>")->expected(2);
    t3->add_option("--q", cfg.q, "field size for --sweep (prime)");
    add_common(t3, cfg);

    auto* t2 = app.add_subcommand("torsion2-trigonal", "2-torsion census of a one-point trigonal curve");
    t2->add_option("--curve", cfg.curve, "curve JSON file")->required();
    add_common(t2, cfg);

    auto* ve = app.add_subcommand("verify", "run the acceptance suite");
    ve->add_option("--filter", cfg.filter, "criterion ids or tags, comma separated");
    add_common(ve, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
    try {
        if (*en) {
            cfg.command = "enumerate";
            return cmd_enumerate(cfg);
        }
        if (*t3) {
            cfg.command = "torsion3";
            if (cfg.curve.empty() && cfg.sweep.empty()) throw input_error("torsion3 needs --curve or --sweep");
            return cmd_torsion3(cfg);
        }
        if (*t2) {
            cfg.command = "torsion2-trigonal";
            return cmd_torsion2(cfg);
        }
        cfg.command = "verify";
        return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
