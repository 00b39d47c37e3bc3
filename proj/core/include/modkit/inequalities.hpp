#pragma once

// Verifiers for the Powers-Stormer family of trace inequalities. Each
// verifier evaluates both sides of one inequality on concrete matrices and
// returns a signed slack; nothing here proves anything.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modkit/states.hpp"

namespace modkit {

/// Relative slack tolerance: pass <=> slack >= -kSlackTol * max(1, |lhs|, |rhs|).
inline constexpr double kSlackTol = 1e-11;

enum class Direction { LessEqual, GreaterEqual };

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs for <=, lhs - rhs for >=
  bool pass = false;
  std::uint64_t instance_seed = 0;

  static InequalityReport evaluate(double lhs, double rhs, Direction direction, std::uint64_t seed = 0);

  /// slack / max(1, |lhs|, |rhs|)
  double relative_slack() const;
};

/// A positive operator monotone function f with its companion g(t) = t / f(t), g(0) = 0.
class MonotoneFunction {
 public:
  using Fn = std::function<double(double)>;

  /// Spot-checks f((0, inf)) in (0, inf) on a grid and f(B) - f(A) >= 0 on 20
  /// seeded pairs A <= B. Throws NotMonotone.
  static MonotoneFunction make(std::string name, Fn f);

  static MonotoneFunction power(double s);  // t^s, s in [0, 1]
  static MonotoneFunction rational();       // t / (1 + t)
  static MonotoneFunction log1p();          // log(1 + t)

  const std::string& name() const { return name_; }
  double f(double t) const { return f_(t); }
  double g(double t) const { return t > 0.0 ? t / f_(t) : 0.0; }

 private:
  MonotoneFunction(std::string name, Fn f) : name_(std::move(name)), f_(std::move(f)) {}

  std::string name_;
  Fn f_;
};

/// t^{1/2}, t/(1+t), log(1+t).
std::vector<MonotoneFunction> monotone_registry();

struct SandwichReport {
  InequalityReport lower;  // ||X-Y||_HS^2 <= ||X^2-Y^2||_1
  InequalityReport upper;  // ||X^2-Y^2||_1 <= ||X-Y||_HS ||X+Y||_HS
  bool pass() const { return lower.pass && upper.pass; }
};

/// Throws NotPSD.
SandwichReport norm_sandwich(const ComplexMatrix& x, const ComplexMatrix& y);

/// ||sqrt A - sqrt B||_2^2 <= ||A - B||_1. Throws NotPSD.
InequalityReport powers_stormer(const ComplexMatrix& a, const ComplexMatrix& b);

/// 2 Tr(B^s A^{1-s}) >= Tr(A + B - |A - B|). X^0 is the support projection of X.
/// Throws NotPSD / BadExponent.
InequalityReport ozawa_s(const ComplexMatrix& a, const ComplexMatrix& b, double s);

struct OgataReport {
  InequalityReport report;   // lhs is the modular route
  double lhs_modular = 0.0;  // 2 ||Delta^{s/2}_{phi2,phi1} Phi1||^2
  double lhs_trace = 0.0;    // 2 Tr(D2^s D1^{1-s})
  double route_gap = 0.0;    // |lhs_modular - lhs_trace|
};

/// Closed-form side 2 Tr(D2^s D1^{1-s}) (support convention at the endpoints). Needs no faithfulness.
double ogata_trace_lhs(const PositiveFunctional& phi1, const PositiveFunctional& phi2, double s);

/// 2 ||Delta^{s/2}_{phi2,phi1} Phi1||^2 >= phi1(1) + phi2(1) - |phi1 - phi2|(1),
/// with the left side computed through the relative modular operator and cross-checked
/// against ogata_trace_lhs. Throws SingularState unless phi1 is faithful; BadExponent.
OgataReport ogata_modular(const PositiveFunctional& phi1, const PositiveFunctional& phi2, double s);

/// 2 Tr(sqrt f(A) g(B) sqrt f(A)) >= Tr(A + B - |A - B|). Throws NotPSD.
InequalityReport hoa_generalized(const ComplexMatrix& a, const ComplexMatrix& b, const MonotoneFunction& mf);

/// ||A^{1/t} - B^{1/t}||_t^t <= ||A - B||_1 for A >= B >= 0, t >= 1.
/// Throws NotPSD / OrderViolation / BadExponent.
InequalityReport phillips(const ComplexMatrix& a, const ComplexMatrix& b, double t);

}  // namespace modkit
