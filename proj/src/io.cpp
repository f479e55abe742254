#include "wittsuper/io.hpp"

#include <fstream>
#include <sstream>

namespace wittsuper {

namespace {
Json mono_to_json(const SuperMonomial& x, const Rational& c) {
    Json t;
    t["coeff"] = rat_to_string(c);
    t["alpha"] = x.alpha;
    t["odd"] = x.odd;
    return t;
}
SuperMonomial mono_from_json(const Json& t) {
    SuperMonomial x;
    x.alpha = t.at("alpha").get<std::vector<int>>();
    x.odd = t.at("odd").get<OddSet>();
    return x;
}
}  // namespace

Json poly_to_json(const SuperPolynomial& f) {
    Json out = Json::array();
    for (const auto& [x, c] : f.terms()) out.push_back(mono_to_json(x, c));
    return out;
}

SuperPolynomial poly_from_json(const Json& j, Signature sig, EvenContext ctx) {
    SuperPolynomial f(sig, ctx);
    for (const Json& t : j) f.add_term(mono_from_json(t), rat_from_string(t.at("coeff").get<std::string>()));
    return f;
}

Json field_to_json(const VectorField& x) {
    Json out = Json::array();
    for (const auto& [t, c] : x.terms()) {
        Json e = mono_to_json(t.mono, c);
        e["dir"] = t.dir;
        out.push_back(e);
    }
    return out;
}

VectorField field_from_json(const Json& j, Signature sig) {
    VectorField x(sig);
    for (const Json& t : j)
        x.add_term(mono_from_json(t), t.at("dir").get<int>(), rat_from_string(t.at("coeff").get<std::string>()));
    return x;
}

Json support_to_json(const SupportSet& s) {
    Json comps = Json::array();
    for (const ShiftedCone& c : s.components) {
        Json jc;
        std::vector<std::string> base;
        for (const Rational& r : c.base) base.push_back(rat_to_string(r));
        jc["base"] = base;
        jc["free"] = c.free_gens;
        jc["plus"] = c.plus_gens;
        comps.push_back(jc);
    }
    Json out;
    out["m"] = s.m;
    out["components"] = comps;
    return out;
}

SupportSet support_from_json(const Json& j) {
    SupportSet s;
    s.m = j.at("m").get<int>();
    for (const Json& jc : j.at("components")) {
        ShiftedCone c;
        for (const std::string& b : jc.at("base").get<std::vector<std::string>>())
            c.base.push_back(rat_from_string(b));
        c.free_gens = jc.at("free").get<std::vector<Root>>();
        c.plus_gens = jc.at("plus").get<std::vector<Root>>();
        if (static_cast<int>(c.base.size()) != s.m) fail(ErrorKind::BadInput, "support base arity");
        for (const Root& g : c.free_gens)
            if (static_cast<int>(g.size()) != s.m) fail(ErrorKind::BadInput, "support generator arity");
        for (const Root& g : c.plus_gens)
            if (static_cast<int>(g.size()) != s.m) fail(ErrorKind::BadInput, "support generator arity");
        s.components.push_back(std::move(c));
    }
    return s;
}

namespace {
Json roots_to_json(const std::vector<Root>& v) {
    Json out = Json::array();
    for (const Root& r : v) out.push_back(r);
    return out;
}
}  // namespace

Json shadow_to_json(const ShadowPartition& sh) {
    Json out;
    out["m"] = sh.m;
    out["plus"] = roots_to_json(sh.plus);
    out["minus"] = roots_to_json(sh.minus);
    out["finite"] = roots_to_json(sh.finite);
    out["infinite"] = roots_to_json(sh.infinite);
    out["gamma_gens"] = roots_to_json(sh.gamma_gens);
    out["gamma_consistent"] = sh.gamma_consistent;
    out["diagnostics"] = sh.diagnostics;
    return out;
}

Json levi_to_json(const LeviSpec& spec) {
    Json out;
    out["q"] = spec.q;
    out["n"] = spec.n;
    out["k_blocks"] = spec.k_blocks;
    return out;
}

Json verdict_to_json(const SimplicityVerdict& v) {
    Json out;
    out["case"] = v.case_tag;
    out["simple"] = v.simple;
    out["rule"] = v.rule;
    if (v.case_tag == "UniqueSimpleSubmodule") {
        out["adjacent_level"] = rat_to_string(v.adjacent_level);
        if (v.lambda_prime) {
            std::vector<std::string> w;
            for (const Rational& r : *v.lambda_prime) w.push_back(rat_to_string(r));
            out["lambda_prime"] = w;
        }
    }
    if (!v.detail.empty()) out["detail"] = v.detail;
    return out;
}

Json main_verdict_to_json(const MainVerdict& v) {
    Json out;
    out["case"] = v.case_id;
    out["description"] = v.description;
    out["hc"] = v.hc;
    out["simplicity"] = verdict_to_json(v.simplicity);
    return out;
}

ModuleDescriptor parse_descriptor(const std::string& text_in, int m, int n) {
    std::string text = text_in;
    bool parity = false;
    if (text.rfind("Pi:", 0) == 0) {
        parity = true;
        text = text.substr(3);
    }
    Signature sig{m, n};
    if (text == "A") {
        ModuleDescriptor d = ModuleDescriptor::A(sig, parity);
        return d;
    }
    if (text == "Asigma") {
        ModuleDescriptor d = ModuleDescriptor::A_sigma_type(sig, parity);
        return d;
    }
    ModuleDescriptor d;
    d.sig = sig;
    d.parity_flag = parity;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "poly") {
            d.factors.push_back(EvenFactor{FactorType::Polynomial, Rational(0)});
        } else if (item == "lquot") {
            d.factors.push_back(EvenFactor{FactorType::LaurentQuotient, Rational(0)});
        } else if (item.rfind("laurent(", 0) == 0 && item.back() == ')') {
            std::string num = item.substr(8, item.size() - 9);
            d.factors.push_back(EvenFactor{FactorType::LaurentShift, rat_from_string(num)});
        } else {
            fail(ErrorKind::BadInput, "bad descriptor factor '" + item + "'");
        }
    }
    if (static_cast<int>(d.factors.size()) != m)
        fail(ErrorKind::BadInput, "descriptor lists " + std::to_string(d.factors.size()) + " factors, expected " +
                                      std::to_string(m));
    d.validate();
    return d;
}

MTag parse_mtag(const std::string& text, Signature gl) {
    if (text == "trivial") return MTag::trivial();
    if (text == "str") return MTag::str();
    if (text == "pistr") return MTag::pi_str();
    if (text == "nonfund") return MTag::non_fundamental();
    if (text.rfind("fund:", 0) == 0) {
        std::string rest = text.substr(5);
        auto pos = rest.rfind(':');
        if (pos == std::string::npos) fail(ErrorKind::BadInput, "fund tag needs fund:<base>:<level>");
        std::string base = rest.substr(0, pos);
        Rational level = rat_from_string(rest.substr(pos + 1));
        return MTag::fundamental(parse_descriptor(base, gl.n, gl.m), level);
    }
    fail(ErrorKind::UnknownTag, "M tag '" + text + "'");
}

Box parse_box(const std::string& text, int m) {
    Box out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find(':');
        if (pos == std::string::npos) fail(ErrorKind::BadInput, "window wants lo:hi pairs");
        out.push_back({rat_from_string(item.substr(0, pos)), rat_from_string(item.substr(pos + 1))});
    }
    if (static_cast<int>(out.size()) != m) fail(ErrorKind::BadInput, "window arity");
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::BadInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::BadInput, path + ": " + e.what());
    }
}

}  // namespace wittsuper
