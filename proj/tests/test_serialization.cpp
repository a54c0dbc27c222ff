#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exact_constant.hpp"
#include "cstar/modulus_search.hpp"
#include "cstar/rng.hpp"
#include "cstar/serialization.hpp"

using cstar::CMatrix;
using cstar::Complex;

TEST_CASE("format_double renders shortest round-trip decimals") {
    CHECK(cstar::format_double(0.1) == "0.1");
    CHECK(cstar::format_double(1.0) == "1");
    CHECK(cstar::format_double(-0.0) == "-0");
    const double awkward = 2.0 - std::sqrt(2.0);
    CHECK(std::stod(cstar::format_double(awkward)) == awkward);
    CHECK(std::stod(cstar::format_double(1e-300)) == 1e-300);
}

TEST_CASE("matrix JSON round trip is bitwise exact") {
    cstar::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + static_cast<int>(rng.uniform_int(5));
        const CMatrix a = cstar::ginibre(k, rng);
        const CMatrix back = cstar::matrix_from_json(cstar::to_json(a));
        CHECK(back == a);
    }

    CHECK_THROWS_AS(cstar::matrix_from_json("{\"rows\": 2, \"cols\": 2, \"data\": [[1, 0]]}"),
                    cstar::ParseError);
    CHECK_THROWS_AS(cstar::matrix_from_json("{\"rows\": 1, \"cols\": 1"), cstar::ParseError);
    try {
        cstar::matrix_from_json("{\"rows\": 1,");
        FAIL("expected ParseError");
    } catch (const cstar::ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("module vector JSON round trip and shape checks") {
    cstar::Rng rng(5);
    const cstar::ModuleVector x = cstar::random_module_vector(3, 4, rng);
    const cstar::ModuleVector back = cstar::module_vector_from_json(cstar::to_json(x));
    REQUIRE(back.n() == x.n());
    for (int i = 0; i < x.n(); ++i) CHECK(back[i] == x[i]);

    // Declared n/k must match the entries when present.
    const std::string one_entry =
        "{\"entries\": [{\"rows\": 1, \"cols\": 1, \"data\": [[1, 0]]}]}";
    CHECK(cstar::module_vector_from_json(one_entry).n() == 1);
    CHECK_THROWS_AS(cstar::module_vector_from_json(
                        "{\"n\": 2, \"entries\": [{\"rows\": 1, \"cols\": 1, \"data\": [[1, 0]]}]}"),
                    cstar::ParseError);
    CHECK_THROWS_AS(cstar::module_vector_from_json(
                        "{\"k\": 3, \"entries\": [{\"rows\": 1, \"cols\": 1, \"data\": [[1, 0]]}]}"),
                    cstar::ParseError);
    CHECK_THROWS_AS(cstar::module_vector_from_json("{\"entries\": []}"), cstar::Error);
}

TEST_CASE("measure space, l2 function, and group function round trips") {
    const cstar::FiniteMeasureSpace space({0.5, 1.25, 2.0});
    const cstar::FiniteMeasureSpace space_back =
        cstar::measure_space_from_json(cstar::to_json(space));
    CHECK(space_back.weights() == space.weights());

    const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(space.weights());
    const cstar::L2Function f(sp, {Complex(0.25, -1), Complex(0, 0), Complex(3, 0.125)});
    const cstar::L2Function f_back = cstar::l2_function_from_json(sp, cstar::to_json(f));
    CHECK(f_back.values == f.values);

    const cstar::GroupFunction g(cstar::FiniteGroupSpace{2},
                                 {CMatrix::diagonal({Complex(2, 0)}), CMatrix(1, 1)});
    const cstar::GroupFunction g_back = cstar::group_function_from_json(cstar::to_json(g));
    CHECK(g_back.space().order == 2);
    CHECK(g_back.values()[0] == g.values()[0]);
    CHECK(g_back.values()[1] == g.values()[1]);

    // Non-PSD group values are rejected at parse time.
    CHECK_THROWS_AS(
        cstar::group_function_from_json(
            "{\"order\": 1, \"k\": 1, \"values\": [{\"rows\": 1, \"cols\": 1, \"data\": [[-1, 0]]}]}"),
        cstar::ParseError);
}

TEST_CASE("report JSON carries the expected keys and optionals") {
    std::vector<CMatrix> entries = {CMatrix(1, 1, {Complex(1, 0)}),
                                    CMatrix(1, 1, {Complex(0, 0)})};
    const cstar::ModuleVector x(entries);
    const cstar::ConstantReport rep = cstar::verify_commuting_factorization(x);
    const nlohmann::json j = nlohmann::json::parse(cstar::to_json(rep));
    CHECK(j.contains("cx"));
    CHECK(j.contains("cx_norm"));
    CHECK(j.contains("residual_identity"));
    CHECK(j.contains("residual_defs_match"));
    CHECK(j.at("cx_norm").get<double>() == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    // Scalar instances commute, so the factorization block is filled in.
    CHECK(j.at("commuting").get<bool>());
    CHECK(!j.at("residual_factorization").is_null());
    CHECK(!j.at("scalar_equivalence_ok").is_null());

    cstar::Rng rng(9);
    const cstar::ConstantReport plain = cstar::verify_exact_constant_identity(
        cstar::ModuleVector({cstar::haar_unitary(2, rng)}));
    const nlohmann::json jp = nlohmann::json::parse(cstar::to_json(plain));
    CHECK(jp.at("residual_factorization").is_null());  // identity check only
    CHECK(jp.at("scalar_equivalence_ok").is_null());

    cstar::SearchConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 40;
    cfg.seed = 12;
    cfg.use_witness = false;  // x has a zero entry, so the witness is undefined
    const cstar::SearchResult sr = cstar::search_min_distance(x, cfg);
    const nlohmann::json js = nlohmann::json::parse(cstar::to_json(sr));
    CHECK(js.contains("best_distance"));
    CHECK(js.contains("gap_to_sqrt_cx_norm"));
    CHECK(js.contains("iterations_used"));
    CHECK(js.contains("best_point"));
    CHECK(js.at("best_point").contains("entries"));
    CHECK(js.at("restarts_improved").is_number());

    // The embedded best point parses back into a constant-modulus tuple.
    const cstar::ModuleVector point =
        cstar::module_vector_from_json(js.at("best_point").dump());
    CHECK(cstar::is_constant_modulus(point));
}
