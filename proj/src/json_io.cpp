#include "einstein4/json_io.hpp"

#include <stdexcept>

namespace einstein4 {

namespace {

template <class Mat>
Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

template <class Mat>
Mat matrix_from_json(const Json& j, const char* what) {
  Mat m;
  if (!j.is_array() || static_cast<int>(j.size()) != m.rows()) {
    throw std::invalid_argument(std::string(what) + ": expected a " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " array of arrays");
  }
  for (int i = 0; i < m.rows(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != m.cols()) {
      throw std::invalid_argument(std::string(what) + ": bad row length");
    }
    for (int jcol = 0; jcol < m.cols(); ++jcol) {
      if (!row[jcol].is_number()) {
        throw std::invalid_argument(std::string(what) + ": non-numeric entry");
      }
      m(i, jcol) = row[jcol].get<double>();
    }
  }
  return m;
}

}  // namespace

Json operator_to_json(const CurvatureOperator& r) {
  Json j;
  j["basis"] = kBasisTag;
  j["matrix"] = matrix_to_json(r.matrix());
  return j;
}

CurvatureOperator operator_from_json(const Json& j, double sym_tol, double trace_tol) {
  if (!j.contains("basis") || j["basis"] != kBasisTag) {
    throw std::invalid_argument(std::string("operator JSON: missing or unknown basis tag "
                                            "(expected \"") +
                                kBasisTag + "\")");
  }
  if (!j.contains("matrix")) throw std::invalid_argument("operator JSON: missing \"matrix\"");
  return CurvatureOperator(matrix_from_json<Mat6>(j["matrix"], "operator matrix"), sym_tol,
                           trace_tol);
}

Json decomposition_to_json(const CurvatureDecomposition& d) {
  Json j;
  j["w_plus"] = matrix_to_json(d.w_plus.matrix());
  j["w_minus"] = matrix_to_json(d.w_minus.matrix());
  j["mixed"] = matrix_to_json(d.mixed);
  j["scalar"] = d.scalar;
  return j;
}

CurvatureDecomposition decomposition_from_json(const Json& j) {
  for (const char* key : {"w_plus", "w_minus", "mixed", "scalar"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("decomposition JSON: missing \"") + key + "\"");
    }
  }
  CurvatureDecomposition d;
  d.w_plus = TraceFree3(matrix_from_json<Mat3>(j["w_plus"], "w_plus"), 1e-9);
  d.w_minus = TraceFree3(matrix_from_json<Mat3>(j["w_minus"], "w_minus"), 1e-9);
  d.mixed = matrix_from_json<Mat3>(j["mixed"], "mixed");
  if (!j["scalar"].is_number()) throw std::invalid_argument("decomposition JSON: bad scalar");
  d.scalar = j["scalar"].get<double>();
  return d;
}

Json spinor_to_json(const SpinorTensor<std::complex<double>>& t) {
  Json j;
  j["primed_rank"] = t.primed_rank();
  j["unprimed_rank"] = t.unprimed_rank();
  Json entries = Json::array();
  for (std::size_t f = 0; f < t.size(); ++f) {
    entries.push_back(Json::array({t[f].real(), t[f].imag()}));
  }
  j["entries"] = entries;
  return j;
}

SpinorTensor<std::complex<double>> spinor_from_json(const Json& j) {
  SpinorTensor<std::complex<double>> t(j.at("primed_rank").get<int>(),
                                       j.at("unprimed_rank").get<int>());
  const Json& entries = j.at("entries");
  if (entries.size() != t.size()) {
    throw std::invalid_argument("spinor JSON: entry count does not match rank");
  }
  for (std::size_t f = 0; f < t.size(); ++f) {
    t[f] = std::complex<double>(entries[f][0].get<double>(), entries[f][1].get<double>());
  }
  return t;
}

Json parse_stream(std::istream& in, const std::string& what) {
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(what + ": JSON parse error: " + e.what());
  }
}

}  // namespace einstein4
