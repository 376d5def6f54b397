#include "cdalg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cd::io {

using nlohmann::json;

namespace {

std::string printf_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

template <typename T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("field '") + name + "': " + e.what());
    }
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw Error(ErrorKind::Parse, std::string(what) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Element element_from(const json& j) {
    const int level = field<int>(j, "level");
    if (!j.contains("coeffs")) throw Error(ErrorKind::Parse, "missing field 'coeffs'");
    return make_element(level, number_array(j.at("coeffs"), "coeffs"));
}

std::string join_exact(std::span<const double> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_exact(v[i]);
    }
    return out + "]";
}

}  // namespace

std::string format_exact(double v) {
    if (v == 0.0) return "0";  // drop the sign of negative zero
    return printf_double("%.17g", v);
}

std::string format_short(double v) {
    if (v == 0.0) return "0";
    return printf_double("%.6g", v);
}

Element parse_element(std::string_view text) { return element_from(parse_json(text)); }

std::string element_to_json(const Element& x) {
    return "{\"level\":" + std::to_string(x.level()) + ",\"coeffs\":" + join_exact(x.coeffs()) + "}";
}

poly::ComplexPolynomial parse_complex_polynomial(std::string_view text) {
    const json j = parse_json(text);
    const int level = field<int>(j, "level");
    const int degree = field<int>(j, "degree");
    if (!j.contains("direction") || !j.contains("coeffs")) throw Error(ErrorKind::Parse, "polynomial needs direction and coeffs");
    const Element dir = make_element(level, number_array(j.at("direction"), "direction"));
    const json& cs = j.at("coeffs");
    if (!cs.is_array()) throw Error(ErrorKind::Parse, "coeffs must be an array of [r, s] pairs");
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
    if (cs.size() != static_cast<std::size_t>(degree))
        throw Error(ErrorKind::LengthMismatch, "coeffs must hold exactly `degree` pairs");
    std::vector<poly::Complex> lower;
    for (const auto& pair : cs) {
        const auto rs = number_array(pair, "coefficient pair");
        if (rs.size() != 2) throw Error(ErrorKind::LengthMismatch, "coefficient pair must have 2 entries");
        lower.emplace_back(rs[0], rs[1]);
    }
    return poly::ComplexPolynomial(poly::ComplexSlice::from_direction(dir), std::move(lower));
}

std::string complex_polynomial_to_json(const poly::ComplexPolynomial& p) {
    std::string out = "{\"level\":" + std::to_string(p.level()) +
                      ",\"direction\":" + join_exact(p.slice().direction().coeffs()) + ",\"coeffs\":[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += "[" + format_exact(p.coeffs()[i].real()) + "," + format_exact(p.coeffs()[i].imag()) + "]";
    }
    return out + "],\"degree\":" + std::to_string(p.degree()) + "}";
}

poly::GeneralizedPolynomial parse_generalized_polynomial(std::string_view text) {
    const json j = parse_json(text);
    const int level = field<int>(j, "level");
    const int degree = field<int>(j, "degree");
    if (!j.contains("terms") || !j.at("terms").is_array()) throw Error(ErrorKind::Parse, "missing array 'terms'");
    std::vector<poly::Term> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("coeff")) throw Error(ErrorKind::Parse, "term needs 'coeff'");
        terms.push_back({element_from(t.at("coeff")), field<int>(t, "exponent")});
    }
    return poly::GeneralizedPolynomial::from_terms(level, degree, std::move(terms));
}

std::string read_argument(std::string_view arg) {
    if (arg.empty() || arg.front() != '@') return std::string(arg);
    const std::string path(arg.substr(1));
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cd::io
