#pragma once

#include <stdexcept>
#include <string>

namespace knots {

// All library failures are thrown as Error with a stable machine-readable
// kind string; the CLI maps kind -> error object in its JSON output.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

inline Error malformed_pd(const std::string& msg) { return Error("MalformedPD", msg); }
inline Error bad_arc_multiplicity(const std::string& msg) { return Error("BadArcMultiplicity", msg); }
inline Error non_planar(const std::string& msg) { return Error("NonPlanar", msg); }
inline Error resource_limit(const std::string& msg) { return Error("ResourceLimit", msg); }
inline Error not_adequate(const std::string& msg) { return Error("NotAdequate", msg); }
inline Error not_a_knot(const std::string& msg) { return Error("NotAKnot", msg); }
inline Error not_prime_diagram(const std::string& msg) { return Error("NotPrimeDiagram", msg); }
inline Error division_not_exact(const std::string& msg) { return Error("DivisionNotExact", msg); }
inline Error zero_polynomial(const std::string& msg) { return Error("ZeroPolynomial", msg); }
inline Error odd_parity(const std::string& msg) { return Error("OddParity", msg); }
inline Error precondition_unverifiable(const std::string& msg) { return Error("PreconditionUnverifiable", msg); }
inline Error polyhedra_not_prime(const std::string& msg) { return Error("PolyhedraNotPrime", msg); }
inline Error cache_corrupt(const std::string& msg) { return Error("CacheCorrupt", msg); }
inline Error internal_error(const std::string& msg) { return Error("Internal", msg); }

}  // namespace knots
