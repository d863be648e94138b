#include "vdt/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace vdt {

namespace {

long to_long_checked(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::out_of_range(std::string(what) + ": value exceeds the JSON integer range");
    return z.get_si();
}

} // namespace

Json rat_to_json(const Rat& r) {
    Json j;
    j["num"] = to_long_checked(r.get_num(), "rational numerator");
    j["den"] = to_long_checked(r.get_den(), "rational denominator");
    return j;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    Rat r(j.at("num").get<long>(), j.at("den").get<long>());
    r.canonicalize();
    return r;
}

Json gaussrat_to_json(const GaussRat& c) {
    Json j;
    j["re_num"] = to_long_checked(c.re.get_num(), "re numerator");
    j["re_den"] = to_long_checked(c.re.get_den(), "re denominator");
    j["im_num"] = to_long_checked(c.im.get_num(), "im numerator");
    j["im_den"] = to_long_checked(c.im.get_den(), "im denominator");
    return j;
}

GaussRat gaussrat_from_json(const Json& j) {
    Rat re(j.at("re_num").get<long>(), j.value("re_den", 1L));
    Rat im(j.value("im_num", 0L), j.value("im_den", 1L));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

Json poly_to_json(const HomogeneousPolynomial& p) {
    Json j;
    j["degree"] = p.degree();
    j["ambient"] = p.ambient();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exponents"] = m.exponents;
        t["coeff"] = gaussrat_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

HomogeneousPolynomial poly_from_json(const Json& j) {
    int d = j.at("degree").get<int>();
    int n;
    if (j.contains("ambient")) {
        n = j.at("ambient").get<int>();
    } else {
        // infer from the first exponent vector
        const auto& terms = j.at("terms");
        if (terms.empty()) throw std::invalid_argument("poly_from_json: cannot infer ambient");
        n = static_cast<int>(terms[0].at("exponents").size()) - 1;
    }
    HomogeneousPolynomial p(n, d);
    for (const auto& t : j.at("terms")) {
        MultiIndex m;
        m.exponents = t.at("exponents").get<std::vector<int>>();
        p.set(m, gaussrat_from_json(t.at("coeff")));
    }
    return p;
}

Json variety_to_json(const VarietyPresentation& v) {
    Json j;
    j["n"] = v.n;
    j["k"] = v.k;
    if (!v.name.empty()) j["name"] = v.name;
    Json gens = Json::array();
    for (const auto& g : v.generators) gens.push_back(poly_to_json(g));
    j["generators"] = std::move(gens);
    if (v.parametrization) {
        Json par = Json::array();
        for (const auto& c : *v.parametrization) par.push_back(poly_to_json(c));
        j["parametrization"] = std::move(par);
    }
    return j;
}

VarietyPresentation variety_from_json(const Json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "P1") return VarietyPresentation::projective_space(1);
        if (name == "P2") return VarietyPresentation::projective_space(2);
        if (name == "P3") return VarietyPresentation::projective_space(3);
        if (name == "conic") return VarietyPresentation::conic_p2();
        if (name == "minimality_conic") return VarietyPresentation::minimality_conic();
        throw std::invalid_argument("unknown builtin variety: " + name);
    }
    VarietyPresentation v;
    v.n = j.at("n").get<int>();
    v.k = j.at("k").get<int>();
    v.name = j.value("name", std::string{});
    for (const auto& g : j.at("generators")) v.generators.push_back(poly_from_json(g));
    if (j.contains("parametrization")) {
        std::vector<HomogeneousPolynomial> par;
        for (const auto& c : j.at("parametrization")) par.push_back(poly_from_json(c));
        v.parametrization = std::move(par);
    }
    return v;
}

Json exppoly_to_json(const ExpPoly& f) {
    Json arr = Json::array();
    for (const auto& [lambda, p] : f.terms()) {
        Json t;
        t["lambda"]["re"] = rat_to_json(lambda.re);
        t["lambda"]["im"] = rat_to_json(lambda.im);
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) {
            Json cc;
            cc["re"] = rat_to_json(c.re);
            cc["im"] = rat_to_json(c.im);
            coeffs.push_back(std::move(cc));
        }
        t["poly"] = std::move(coeffs);
        arr.push_back(std::move(t));
    }
    return arr;
}

ExpPoly exppoly_from_json(const Json& j) {
    ExpPoly f;
    for (const auto& t : j) {
        GaussRat lambda(rat_from_json(t.at("lambda").at("re")),
                        rat_from_json(t.at("lambda").at("im")));
        std::vector<GaussRat> cs;
        for (const auto& c : t.at("poly"))
            cs.push_back(GaussRat(rat_from_json(c.at("re")), rat_from_json(c.at("im"))));
        f = f + ExpPoly::term(lambda, GPoly(cs));
    }
    return f;
}

Json region_to_json(const Region& r) {
    Json j;
    switch (r.kind) {
        case Region::Kind::Disk:
            j["kind"] = "disk";
            j["R"] = r.b;
            break;
        case Region::Kind::PuncturedDisk:
            j["kind"] = "punctured_disk";
            j["s"] = r.a;
            break;
        case Region::Kind::Annulus:
            j["kind"] = "annulus";
            j["s"] = r.a;
            j["t"] = r.b;
            break;
    }
    return j;
}

Region region_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "disk") return Region::disk(j.at("R").get<double>());
    if (kind == "punctured_disk") return Region::punctured_disk(j.at("s").get<double>());
    if (kind == "annulus")
        return Region::annulus(j.at("s").get<double>(), j.at("t").get<double>());
    throw std::invalid_argument("unknown region kind: " + kind);
}

Json divisor_to_json(const Divisor& d) {
    Json arr = Json::array();
    Divisor copy = d;
    copy.sort_canonical();
    for (const auto& p : copy.support) {
        Json e;
        e["re"] = format_double(p.z.real());
        e["im"] = format_double(p.z.imag());
        e["mult"] = p.multiplicity;
        arr.push_back(std::move(e));
    }
    Json j;
    j["region"] = region_to_json(d.region);
    j["support"] = std::move(arr);
    return j;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace vdt
