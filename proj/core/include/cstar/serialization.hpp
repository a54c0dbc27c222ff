#pragma once

#include <string>

#include "cstar/continuous_l2.hpp"
#include "cstar/exact_constant.hpp"
#include "cstar/group_integral.hpp"
#include "cstar/modulus_search.hpp"

namespace cstar {

// JSON encodings. Complex entries are [re, im] pairs; doubles are rendered in
// shortest round-trip decimal form, so serialize/parse is bit-exact.
//
//   matrix        {"rows": k, "cols": k, "data": [[re, im], ...]}   (row-major)
//   module vector {"n": n, "k": k, "entries": [<matrix>, ...]}
//   measure space {"weights": [w_1, ..., w_m]}
//   l2 function   {"values": [[re, im], ...]}
//   group function{"order": m, "k": k, "values": [<matrix>, ...]}

std::string to_json(const CMatrix& a);
std::string to_json(const ModuleVector& x);
std::string to_json(const FiniteMeasureSpace& space);
std::string to_json(const L2Function& f);
std::string to_json(const GroupFunction& f);
std::string to_json(const ConstantReport& r);
std::string to_json(const SearchResult& r);
std::string to_json(const L2ConstantReport& r);
std::string to_json(const SubspaceIdentityReport& r);
std::string to_json(const GroupMeanReport& r);

CMatrix matrix_from_json(const std::string& text);
ModuleVector module_vector_from_json(const std::string& text);
FiniteMeasureSpace measure_space_from_json(const std::string& text);
L2Function l2_function_from_json(MeasureSpacePtr space, const std::string& text);
GroupFunction group_function_from_json(const std::string& text, const ToleranceConfig& tol = {});

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace cstar
