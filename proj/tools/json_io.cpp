#include "json_io.hpp"

#include <cmath>

namespace bicx::io {

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend backend_from_string(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "float") return Backend::floating;
  throw ParseError("unknown backend '" + s + "' (expected exact or float)");
}

namespace {

bool has_float_leaf(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array() || j.is_object()) {
    for (const auto& child : j)
      if (has_float_leaf(child)) return true;
  }
  return false;
}

Rational read_real_q(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError("non-finite number");
    return to_rational(x);
  }
  throw ParseError("expected a real number, got " + j.dump());
}

double read_real_d(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return read_real_q(j).get_d();
  throw ParseError("expected a real number, got " + j.dump());
}

template <class Real, class Fn>
Complex<Real> read_complex_with(const json& j, Fn real) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") throw ParseError("unexpected key '" + k + "' in complex number");
    const Real re = j.contains("re") ? real(j.at("re")) : Real(0);
    const Real im = j.contains("im") ? real(j.at("im")) : Real(0);
    return Complex<Real>(re, im);
  }
  return Complex<Real>(real(j), Real(0));
}

template <Real R>
Matrix<R> read_component(const json& rows, std::size_t r, std::size_t c) {
  if (!rows.is_array() || rows.size() != r) throw ParseError("component matrix needs " + std::to_string(r) + " rows");
  Matrix<R> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = read_complex<R>(rows[i][k]);
  }
  return m;
}

}  // namespace

Backend infer_backend(const json& doc) {
  if (doc.is_object() && doc.contains("backend")) {
    if (!doc.at("backend").is_string()) throw ParseError("\"backend\" must be a string");
    return backend_from_string(doc.at("backend").get<std::string>());
  }
  return has_float_leaf(doc) ? Backend::floating : Backend::exact;
}

ComplexQ read_complex_q(const json& j) { return read_complex_with<Rational>(j, read_real_q); }
ComplexD read_complex_d(const json& j) { return read_complex_with<double>(j, read_real_d); }

template <Real R>
BicomplexMatrix<R> read_matrix(const json& j) {
  if (!j.is_object()) throw ParseError("a matrix is a JSON object");
  if (!j.contains("rows") || !j.contains("cols")) throw ParseError("matrix needs \"rows\" and \"cols\"");
  if (!j.at("rows").is_number_unsigned() || !j.at("cols").is_number_unsigned())
    throw ParseError("\"rows\" and \"cols\" must be nonnegative integers");
  const auto r = j.at("rows").get<std::size_t>();
  const auto c = j.at("cols").get<std::size_t>();
  if (r == 0 || c == 0) throw ParseError("matrix dimensions must be positive");

  if (j.contains("m1") || j.contains("m2")) {
    if (!j.contains("m1") || !j.contains("m2")) throw ParseError("component form needs both \"m1\" and \"m2\"");
    return BicomplexMatrix<R>(read_component<R>(j.at("m1"), r, c), read_component<R>(j.at("m2"), r, c));
  }
  if (!j.contains("entries")) throw ParseError("matrix needs \"entries\" or \"m1\"/\"m2\"");
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != r) throw ParseError("\"entries\" needs " + std::to_string(r) + " rows");
  BicomplexMatrix<R> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) m.set(i, k, read_scalar<R>(rows[i][k]));
  }
  return m;
}

template BicomplexMatrixQ read_matrix<Rational>(const json&);
template BicomplexMatrixD read_matrix<double>(const json&);

json write(const Rational& x) { return x.get_str(); }
json write(double x) { return x; }
json write(const ComplexQ& z) { return {{"re", write(z.re)}, {"im", write(z.im)}}; }
json write(const ComplexD& z) { return {{"re", z.re}, {"im", z.im}}; }
json write(const BicomplexQ& z) { return {{"idem", {write(z.c1()), write(z.c2())}}}; }
json write(const BicomplexD& z) { return {{"idem", {write(z.c1()), write(z.c2())}}}; }
json write(const HyperbolicD& h) { return json::array({h.h1, h.h2}); }

namespace {

template <Real R>
json write_component(const Matrix<R>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(write(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Real R>
json write_matrix(const BicomplexMatrix<R>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(write(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"backend", is_exact_v<R> ? "exact" : "float"},
          {"entries", std::move(rows)}};
}

template <Real R>
json write_vec(const ComplexVector<R>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(write(z));
  return out;
}

}  // namespace

json write(const MatrixQ& m) { return write_component(m); }
json write(const MatrixD& m) { return write_component(m); }
json write(const BicomplexMatrixQ& m) { return write_matrix(m); }
json write(const BicomplexMatrixD& m) { return write_matrix(m); }
json write(const ComplexVector<Rational>& v) { return write_vec(v); }
json write(const ComplexVector<double>& v) { return write_vec(v); }

json write(const BicomplexVectorQ& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(write(v.at(i)));
  return out;
}

json write(const BicomplexVectorD& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(write(v.at(i)));
  return out;
}

}  // namespace bicx::io
