#pragma once

// JSON codec shared by the command-line front end and its tests.
//
// Complex numbers: {"re": "p/q", "im": "p/q"} (exact) or {"re": 1.5, "im": 0}
// (floating).  A bare string or number is read as a real complex number.
// Scalars: {"idem": [c1, c2]} or {"eucl": [z1, z2]}; a bare complex number is
// embedded as c e + c e†.
// Matrices: {"rows", "cols", "backend"?, "entries": [[scalar, ...], ...]} or
// the component form {"rows", "cols", "m1": [[complex]], "m2": [[complex]]}.
// Vectors: arrays of scalars.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bicomplex/bicomplex_matrix.hpp"

namespace bicx::io {

using json = nlohmann::json;

/// Malformed input: the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Backend { exact, floating };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

/// Exact when no leaf is a non-integral JSON number, unless the document
/// names its backend explicitly.
Backend infer_backend(const json& doc);

ComplexQ read_complex_q(const json& j);
ComplexD read_complex_d(const json& j);

template <Real R>
Complex<R> read_complex(const json& j) {
  if constexpr (is_exact_v<R>) {
    return read_complex_q(j);
  } else {
    return read_complex_d(j);
  }
}

template <Real R>
Bicomplex<R> read_scalar(const json& j) {
  if (j.is_object() && j.contains("idem")) {
    const auto& p = j.at("idem");
    if (!p.is_array() || p.size() != 2) throw ParseError("\"idem\" needs exactly two complex numbers");
    return Bicomplex<R>::from_idempotent(read_complex<R>(p[0]), read_complex<R>(p[1]));
  }
  if (j.is_object() && j.contains("eucl")) {
    const auto& p = j.at("eucl");
    if (!p.is_array() || p.size() != 2) throw ParseError("\"eucl\" needs exactly two complex numbers");
    return Bicomplex<R>::from_euclidean(read_complex<R>(p[0]), read_complex<R>(p[1]));
  }
  return Bicomplex<R>(read_complex<R>(j));
}

template <Real R>
BicomplexMatrix<R> read_matrix(const json& j);

template <Real R>
BicomplexVector<R> read_vector(const json& j) {
  if (!j.is_array()) throw ParseError("a vector is an array of scalars");
  BicomplexVector<R> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.set(i, read_scalar<R>(j[i]));
  return v;
}

json write(const Rational& x);
json write(double x);
json write(const ComplexQ& z);
json write(const ComplexD& z);
json write(const BicomplexQ& z);
json write(const BicomplexD& z);
json write(const HyperbolicD& h);  // [h1, h2]
json write(const MatrixQ& m);      // rows of complex numbers
json write(const MatrixD& m);
json write(const BicomplexMatrixQ& m);
json write(const BicomplexMatrixD& m);
json write(const BicomplexVectorQ& v);
json write(const BicomplexVectorD& v);
json write(const ComplexVector<Rational>& v);
json write(const ComplexVector<double>& v);

}  // namespace bicx::io
