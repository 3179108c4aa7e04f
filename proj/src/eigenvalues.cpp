#include "bicomplex/eigenvalues.hpp"

#include "bicomplex/operator.hpp"

namespace bicx {

namespace {

template <Real R>
std::vector<Bicomplex<R>> pairings(const OperatorSpectrum<R>& s) {
  std::vector<Bicomplex<R>> out;
  out.reserve(s.point_spectrum.size());
  for (const auto& e : s.point_spectrum) out.push_back(e.eigenvalue);
  return out;
}

}  // namespace

std::vector<BicomplexQ> eigenvalues(const BicomplexMatrixQ& a) {
  try {
    return pairings(spectrum(a));
  } catch (const DoesNotSplit& e) {
    std::size_t component = 0;
    for (const auto& [k, v] : e.fields())
      if (k == "component") component = std::stoul(v);
    throw EigenvalueFieldError(e.remaining(), component);
  }
}

std::vector<BicomplexD> eigenvalues(const BicomplexMatrixD& a, double tol, const JacobiOptions& options) {
  try {
    return pairings(spectrum(a, tol, options));
  } catch (const DoesNotSplit& e) {
    std::size_t component = 0;
    for (const auto& [k, v] : e.fields())
      if (k == "component") component = std::stoul(v);
    throw EigenvalueFieldError(e.remaining(), component);
  }
}

}  // namespace bicx
