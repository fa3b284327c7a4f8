#pragma once

#include <complex>
#include <istream>
#include <string>

#include <json.hpp>

#include "einstein4/curvature.hpp"
#include "einstein4/spinor.hpp"

namespace einstein4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBasisTag = "f-plus-minus-v1";

/// { "basis": "f-plus-minus-v1", "matrix": [[... 6x6 ...]] }
Json operator_to_json(const CurvatureOperator& r);
CurvatureOperator operator_from_json(const Json& j, double sym_tol = 1e-9,
                                     double trace_tol = 1e-9);

/// { "w_plus": [[3x3]], "w_minus": [[3x3]], "mixed": [[3x3]], "scalar": s }
Json decomposition_to_json(const CurvatureDecomposition& d);
CurvatureDecomposition decomposition_from_json(const Json& j);

/// Array-of-[re, im] pairs with the rank header, for fixture storage.
Json spinor_to_json(const SpinorTensor<std::complex<double>>& t);
SpinorTensor<std::complex<double>> spinor_from_json(const Json& j);

/// Parse a stream, mapping parse failures to std::invalid_argument.
Json parse_stream(std::istream& in, const std::string& what);

}  // namespace einstein4
