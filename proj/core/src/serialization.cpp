#include "cstar/serialization.hpp"

#include <charconv>
#include <system_error>
#include <utility>

#include <json.hpp>

namespace cstar {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex entry must be a [re, im] pair of numbers");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_obj(const CMatrix& a) {
    json data = json::array();
    for (const Complex& z : a.data()) data.push_back(complex_to_json(z));
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_obj(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw ParseError("matrix object needs \"rows\", \"cols\" and \"data\"");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        !j["data"].is_array()) {
        throw ParseError("matrix fields have the wrong types");
    }
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    std::vector<Complex> data;
    data.reserve(j["data"].size());
    for (const json& entry : j["data"]) data.push_back(complex_from_json(entry));
    try {
        return CMatrix(rows, cols, std::move(data));
    } catch (const Error& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

json module_vector_to_obj(const ModuleVector& x) {
    json entries = json::array();
    for (const CMatrix& a : x.entries()) entries.push_back(matrix_to_obj(a));
    return json{{"n", x.n()}, {"k", x.k()}, {"entries", std::move(entries)}};
}

ModuleVector module_vector_from_obj(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("module vector object needs an \"entries\" array");
    }
    std::vector<CMatrix> entries;
    entries.reserve(j["entries"].size());
    for (const json& entry : j["entries"]) entries.push_back(matrix_from_obj(entry));
    ModuleVector x = [&] {
        try {
            return ModuleVector(std::move(entries));
        } catch (const Error& e) {
            throw ParseError(std::string("module vector: ") + e.what());
        }
    }();
    if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != x.n())) {
        throw ParseError("module vector: \"n\" disagrees with the entry count");
    }
    if (j.contains("k") && (!j["k"].is_number_integer() || j["k"].get<int>() != x.k())) {
        throw ParseError("module vector: \"k\" disagrees with the entry dimension");
    }
    return x;
}

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string to_json(const CMatrix& a) { return matrix_to_obj(a).dump(); }

std::string to_json(const ModuleVector& x) { return module_vector_to_obj(x).dump(); }

std::string to_json(const FiniteMeasureSpace& space) {
    return json{{"weights", space.weights()}}.dump();
}

std::string to_json(const L2Function& f) {
    json values = json::array();
    for (const Complex& v : f.values) values.push_back(complex_to_json(v));
    return json{{"values", std::move(values)}}.dump();
}

std::string to_json(const GroupFunction& f) {
    json values = json::array();
    for (const CMatrix& v : f.values()) values.push_back(matrix_to_obj(v));
    return json{{"order", f.space().order}, {"k", f.k()}, {"values", std::move(values)}}.dump();
}

std::string to_json(const ConstantReport& r) {
    json j{{"cx", matrix_to_obj(r.cx)},
           {"cx_norm", r.cx_norm},
           {"residual_identity", r.residual_identity},
           {"residual_defs_match", r.residual_defs_match},
           {"commuting", r.commuting},
           {"commutator_norm", r.commutator_norm},
           {"upper_bound_sqrt_cx_norm", r.upper_bound_sqrt_cx_norm},
           {"distance_found", optional_to_json(r.distance_found)},
           {"residual_one_sided", r.residual_one_sided},
           {"residual_factorization", optional_to_json(r.residual_factorization)},
           {"one_minus_half_cx_norm", optional_to_json(r.one_minus_half_cx_norm)},
           {"one_minus_half_cx_lambda_max", optional_to_json(r.one_minus_half_cx_lambda_max)}};
    j["scalar_equivalence_ok"] =
        r.scalar_equivalence_ok ? json(*r.scalar_equivalence_ok) : json(nullptr);
    return j.dump();
}

std::string to_json(const SearchResult& r) {
    return json{{"best_distance", r.best_distance},
                {"best_point", module_vector_to_obj(r.best_point)},
                {"iterations_used", r.iterations_used},
                {"restarts_improved", r.restarts_improved},
                {"gap_to_sqrt_cx_norm", r.gap_to_sqrt_cx_norm}}
        .dump();
}

std::string to_json(const L2ConstantReport& r) {
    return json{{"cf", r.cf},
                {"cf_closed_form", r.cf_closed_form},
                {"distance", r.distance},
                {"norm_identity_residual", r.norm_identity_residual},
                {"distance_identity_residual", r.distance_identity_residual}}
        .dump();
}

std::string to_json(const SubspaceIdentityReport& r) {
    return json{{"trials", r.trials},
                {"skipped", r.skipped},
                {"max_residual_unit_distance", r.max_residual_unit_distance},
                {"max_residual_projection", r.max_residual_projection}}
        .dump();
}

std::string to_json(const GroupMeanReport& r) {
    return json{{"mean", matrix_to_obj(r.mean)},
                {"c", matrix_to_obj(r.c)},
                {"residual", r.residual},
                {"c_norm", r.c_norm},
                {"c_spectrum", r.c_spectrum},
                {"normalization_residual", r.normalization_residual}}
        .dump();
}

CMatrix matrix_from_json(const std::string& text) {
    return matrix_from_obj(parse_or_throw(text));
}

ModuleVector module_vector_from_json(const std::string& text) {
    return module_vector_from_obj(parse_or_throw(text));
}

FiniteMeasureSpace measure_space_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
        throw ParseError("measure space object needs a \"weights\" array");
    }
    std::vector<double> weights;
    weights.reserve(j["weights"].size());
    for (const json& w : j["weights"]) {
        if (!w.is_number()) throw ParseError("measure space: weights must be numbers");
        weights.push_back(w.get<double>());
    }
    try {
        return FiniteMeasureSpace(std::move(weights));
    } catch (const Error& e) {
        throw ParseError(std::string("measure space: ") + e.what());
    }
}

L2Function l2_function_from_json(MeasureSpacePtr space, const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
        throw ParseError("function object needs a \"values\" array");
    }
    std::vector<Complex> values;
    values.reserve(j["values"].size());
    for (const json& v : j["values"]) values.push_back(complex_from_json(v));
    try {
        return L2Function(std::move(space), std::move(values));
    } catch (const Error& e) {
        throw ParseError(std::string("function: ") + e.what());
    }
}

GroupFunction group_function_from_json(const std::string& text, const ToleranceConfig& tol) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("values") ||
        !j["order"].is_number_integer() || !j["values"].is_array()) {
        throw ParseError("group function object needs \"order\" and \"values\"");
    }
    std::vector<CMatrix> values;
    values.reserve(j["values"].size());
    for (const json& v : j["values"]) values.push_back(matrix_from_obj(v));
    GroupFunction f = [&] {
        try {
            return GroupFunction(FiniteGroupSpace{j["order"].get<int>()}, std::move(values), tol);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(std::string("group function: ") + e.what());
        }
    }();
    if (j.contains("k") && (!j["k"].is_number_integer() || j["k"].get<int>() != f.k())) {
        throw ParseError("group function: \"k\" disagrees with the value dimension");
    }
    return f;
}

std::string format_double(double v) {
    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc()) throw Error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

}  // namespace cstar
