#include "fsq/polynomial.hpp"

namespace fsq {

std::string to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::D: return "D";
    case OperatorTag::Dbar: return "Dbar";
    case OperatorTag::Dirac: return "Dirac";
    case OperatorTag::Laplacian: return "Laplacian";
    case OperatorTag::PartialX0: return "PartialX0";
    case OperatorTag::HypercomplexDerivative: return "HypercomplexDerivative";
  }
  return "unknown";
}

Multivector<double> evaluate_double(const RationalPolynomial& p, double x0, const std::vector<double>& xv) {
  return to_double(p).evaluate(Paravector<double>{x0, xv});
}

}  // namespace fsq
