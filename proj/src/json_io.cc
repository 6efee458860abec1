#include "schurcol/json_io.h"

#include <cmath>
#include <cstdio>

namespace schurcol::io {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::kInvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j) {
  if (!j.is_number()) invalid("expected a number, got " + j.dump());
  return j.get<double>();
}

int integer(const Json& j) {
  if (!j.is_number_integer()) invalid("expected an integer, got " + j.dump());
  return j.get<int>();
}

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        write(out, j[k]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& value) {
  std::string out;
  write(out, value);
  out += '\n';
  return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) invalid("complex numbers are [re, im], got " + j.dump());
  return {number(j[0]), number(j[1])};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) invalid("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) invalid("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::kDimensionMismatch, "matrix rows have different lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

std::vector<Complex> complex_list_from_json(const Json& j) {
  if (!j.is_array()) invalid("expected an array of complex numbers");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(complex_from_json(x));
  return out;
}

Json to_json(const BlaschkeProduct& b) {
  Json zeros = Json::array();
  for (Complex z : b.zeros()) zeros.push_back(to_json(z));
  Json out = Json::object();
  out["c"] = to_json(b.c());
  out["zeros"] = std::move(zeros);
  return out;
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  const Complex c = j.contains("c") ? complex_from_json(j.at("c")) : Complex(1.0);
  return BlaschkeProduct(c, complex_list_from_json(field(j, "zeros")));
}

Json to_json(const RationalInner& s) {
  Json num = Json::array();
  Json den = Json::array();
  for (Complex c : s.num()) num.push_back(to_json(c));
  for (Complex c : s.den()) den.push_back(to_json(c));
  Json out = Json::object();
  out["num"] = std::move(num);
  out["den"] = std::move(den);
  return out;
}

RationalInner rational_from_json(const Json& j) {
  return RationalInner::from_coefficients(complex_list_from_json(field(j, "num")),
                                          complex_list_from_json(field(j, "den")));
}

Json to_json(const SchurParameterSequence& p) {
  Json params = Json::array();
  for (Complex s : p.params()) params.push_back(to_json(s));
  Json out = Json::object();
  out["params"] = std::move(params);
  return out;
}

SchurParameterSequence params_from_json(const Json& j) {
  return SchurParameterSequence(complex_list_from_json(field(j, "params")));
}

Json to_json(const UnitaryColligation& col) {
  Json out = Json::object();
  out["n"] = col.n();
  out["matrix"] = to_json(col.matrix());
  return out;
}

Matrix colligation_matrix_from_json(const Json& j) {
  Matrix m = j.is_array() ? matrix_from_json(j) : matrix_from_json(field(j, "matrix"));
  if (m.rows() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "colligation matrix must be square");
  if (j.is_object() && j.contains("n") && integer(j.at("n")) != m.rows() - 1)
    throw Error(ErrorKind::kDimensionMismatch, "\"n\" does not match the matrix size");
  return m;
}

UnitaryColligation colligation_from_json(const Json& j) {
  return UnitaryColligation(colligation_matrix_from_json(j));
}

Json to_json(const PartitionedColligation& col) {
  Json dims = Json::object();
  dims["e1"] = col.e1();
  dims["e2"] = col.e2();
  dims["h"] = col.h();
  Json out = Json::object();
  out["dims"] = std::move(dims);
  out["matrix"] = to_json(col.matrix());
  return out;
}

PartitionedColligation partitioned_from_json(const Json& j) {
  if (j.is_object() && j.contains("section"))
    return elementary_schur_section(complex_from_json(j.at("section"))).colligation;
  const Json& dims = field(j, "dims");
  return PartitionedColligation(integer(field(dims, "e1")), integer(field(dims, "e2")),
                                integer(field(dims, "h")), matrix_from_json(field(j, "matrix")));
}

Json to_json(const HessenbergCertificate& cert) {
  Json out = Json::object();
  out["H"] = to_json(cert.h);
  out["V"] = to_json(cert.v);
  out["orientation"] = cert.orientation == Orientation::kLower ? "lower" : "upper";
  out["band"] = cert.band;
  return out;
}

Json to_json(const SchurStateTrace& trace) {
  Json matrices = Json::array();
  for (const Matrix& m : trace.matrices) matrices.push_back(to_json(m));
  Json denominators = Json::array();
  for (const Polynomial& p : trace.denominators) {
    Json coeffs = Json::array();
    for (Complex c : p) coeffs.push_back(to_json(c));
    denominators.push_back(std::move(coeffs));
  }
  Json out = Json::object();
  out["parameters"] = to_json(trace.parameters)["params"];
  out["matrices"] = std::move(matrices);
  out["denominators"] = std::move(denominators);
  return out;
}

}  // namespace schurcol::io
