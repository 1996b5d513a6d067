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

#include "ffdescent/report.hpp"

#include <fstream>

namespace ffd {

std::string library_version() { return "0.1.0"; }

json to_json(const Poly& a) {
    json c = json::array();
    for (const Elt x : a.coeffs()) c.push_back(x);
    return c;
}

json to_json(const RatFunc& a) {
    if (a.is_polynomial()) return to_json(a.num());
    return json{{"num", to_json(a.num())}, {"den", to_json(a.den())}};
}

json to_json(const BiPoly& a) {
    json c = json::array();
    for (const auto& x : a.coeffs()) c.push_back(to_json(x));
    return c;
}

json to_json(const CurvePoint& P) {
    return json{{"x", P.x.str()}, {"y", P.y.str()}, {"height", P.height()}};
}

json to_json(const HyperellipticModel& m) {
    json f = json::array();
    for (const auto& a : m.f) f.push_back(to_json(a));
    json j{{"field", m.field().name()},
           {"f", f},
           {"d", m.d},
           {"genus", m.genus},
           {"height", m.height},
           {"polynomial", m.polynomial},
           {"triviality", to_string(m.triviality)},
           {"discriminant", m.disc.str()}};
    if (m.j) j["j"] = m.j->str();
    return j;
}

json to_json(const MumfordDivisor& D) { return json{{"u", D.u.str()}, {"v", D.v.str()}}; }

json to_json(const EffectiveDivisor& D) {
    json pts = json::array();
    for (const auto& [P, k] : D.pts) pts.push_back(json{{"t", P.t}, {"z", P.z}, {"mult", k}});
    return json{{"level", D.level}, {"degree", D.degree()}, {"points", pts}};
}

json to_json(const BoundValue& b, const BoundReport& owner) {
    json j{{"bound_name", b.name}, {"applicable", b.applicable}};
    if (b.exponent) {
        j["exponent_num"] = b.exponent->numerator();
        j["exponent_den"] = b.exponent->denominator();
    }
    j["base"] = b.base;
    if (b.applicable) {
        j["log2"] = b.log2;
        const auto [m, e] = b.mantissa_exponent();
        j["mantissa"] = m;
        j["exp2"] = e;
    }
    json in = json::object();
    for (const auto& [k, v] : owner.inputs) in[k] = v;
    j["inputs"] = in;
    if (!b.note.empty()) j["note"] = b.note;
    if (b.observed) j["observed"] = *b.observed;
    if (b.satisfied) j["satisfied"] = *b.satisfied;
    return j;
}

json to_json(const BoundReport& r) {
    json a = json::array();
    for (const auto& b : r.bounds) a.push_back(to_json(b, r));
    return a;
}

json to_json(const TorsionWitness& w) {
    json j{{"kind", w.kind == WitnessKind::hyperelliptic3 ? "hyperelliptic3" : "trigonal2"},
           {"genus", w.genus},
           {"class_degree", w.class_degree},
           {"x0", w.x0.str()},
           {"y0", w.y0.str()},
           {"c", w.c},
           {"degree_caps", witness_degree_caps(w)}};
    if (w.kind == WitnessKind::hyperelliptic3) {
        j["class"] = to_json(w.mumford);
        j["a"] = w.target_a.str();
        j["phi"] = w.a.str() + " * y + " + w.b.str();
        j["route"] = w.route == LiftRoute::hensel ? "hensel" : "riemann-roch";
    } else {
        j["divisor"] = to_json(w.D);
        j["F_psi"] = w.F_psi.str();
    }
    return j;
}

json to_json(const FiberPartition& f) {
    json a = json::array();
    for (const auto& fb : f.fibers) a.push_back(fb);
    return json{{"fibers", a}, {"max_fiber", f.max_fiber}, {"classes", f.fibers.size()}};
}

namespace {

Elt elt_from_json(const GF& K, const json& j) {
    if (!j.is_number_integer()) throw domain_error("curve file: coefficient must be an integer");
    const long long v = j.get<long long>();
    if (K.n() == 1) return K.from_int(v);
    if (v < 0 || v >= static_cast<long long>(K.q())) throw domain_error("curve file: element index out of range");
    return static_cast<Elt>(v);
}

RatFunc ratfunc_from_json(const GF& K, const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) throw domain_error("curve file: rational coefficient needs num, den");
        const Poly den = poly_from_json(K, j.at("den"));
        if (den.is_zero()) throw domain_error("curve file: zero denominator");
        return RatFunc(poly_from_json(K, j.at("num")), den);
    }
    return RatFunc(poly_from_json(K, j));
}

}  // namespace

Poly poly_from_json(const GF& K, const json& j) {
    if (j.is_number_integer()) return Poly::constant(K, elt_from_json(K, j));
    if (!j.is_array()) throw domain_error("curve file: polynomial must be a coefficient list");
    std::vector<Elt> c;
    for (const auto& x : j) c.push_back(elt_from_json(K, x));
    return Poly(K, std::move(c));
}

CurveSpec parse_curve(const json& j) {
    if (!j.is_object() || !j.contains("p")) throw domain_error("curve file: object with field p required");
    const int p = j.at("p").get<int>();
    const int r = j.value("r", 1);
    if (p < 3 || r < 1) throw domain_error("curve file: need odd p and r >= 1");
    for (int k = 2; k * k <= p; ++k)
        if (p % k == 0) throw domain_error("curve file: p must be prime");
    CurveSpec s;
    s.source = j;
    s.field = &GF::get(p, r);
    const GF& K = *s.field;
    if (j.contains("modulus")) {
        if (j.at("modulus").get<std::vector<int>>() != K.modulus())
            throw domain_error("curve file: modulus differs from the library's defining polynomial");
    }
    s.model = j.value("model", std::string("weierstrass"));
    if (s.model == "weierstrass") {
        if (!j.contains("f")) throw domain_error("curve file: weierstrass model needs f");
        std::vector<RatFunc> f;
        for (const auto& a : j.at("f")) f.push_back(ratfunc_from_json(K, a));
        s.weierstrass = validate_model(K, f);
    } else if (s.model == "hyperelliptic") {
        if (!j.contains("F")) throw domain_error("curve file: hyperelliptic model needs F");
        s.F = poly_from_json(K, j.at("F"));
    } else if (s.model == "trigonal") {
        if (!j.contains("G")) throw domain_error("curve file: trigonal model needs G");
        std::vector<Poly> c;
        for (const auto& a : j.at("G")) c.push_back(poly_from_json(K, a));
        s.G = BiPoly(K, std::move(c));
    } else {
        throw domain_error("curve file: unknown model " + s.model);
    }
    return s;
}

CurveSpec load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open curve file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed curve file: ") + e.what());
    }
    try {
        return parse_curve(j);
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed curve file: ") + e.what());
    }
}

}  // namespace ffd
