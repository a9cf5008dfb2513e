#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string_view>

#include "curvop/operators.hpp"

namespace curvop {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// Caps for a nonnegatively weighted eigenvalue sum: every weight is at
/// most omega (highest weight) and the weights add up to total.
///
/// Scalar may be a floating type or Rational.
template <typename Scalar>
struct WeightedSumSpec {
  Scalar omega{0};
  Scalar total{0};

  WeightedSumSpec() = default;
  WeightedSumSpec(Scalar omega_, Scalar total_) : omega(omega_), total(total_) {
    if (omega < Scalar(0) || total < omega)
      throw PreconditionError("weighted sum spec needs 0 <= omega <= total");
  }

  friend bool operator==(const WeightedSumSpec&, const WeightedSumSpec&) = default;
};

template <typename Scalar>
WeightedSumSpec<Scalar> scale(const WeightedSumSpec<Scalar>& a, Scalar c) {
  if (!(c > Scalar(0))) throw PreconditionError("scale factor must be positive");
  return {c * a.omega, c * a.total};
}

/// Raising the highest weight only lowers the guaranteed bound.
template <typename Scalar>
WeightedSumSpec<Scalar> weaken(const WeightedSumSpec<Scalar>& a, Scalar omega) {
  if (omega < a.omega) throw PreconditionError("weaken needs a larger highest weight");
  return {omega, a.total};
}

template <typename Scalar>
WeightedSumSpec<Scalar> add(const WeightedSumSpec<Scalar>& a, const WeightedSumSpec<Scalar>& b) {
  return {a.omega + b.omega, a.total + b.total};
}

template <typename Scalar>
WeightedSumSpec<Scalar> operator+(const WeightedSumSpec<Scalar>& a, const WeightedSumSpec<Scalar>& b) {
  return add(a, b);
}

template <typename Scalar>
WeightedSumSpec<Scalar> operator*(Scalar c, const WeightedSumSpec<Scalar>& a) {
  return scale(a, c);
}

/// (S - m Omega) l_{m+1} + Omega (l_1 + ... + l_m) for 1 <= m <= N-1 with S - m Omega >= 0.
inline double lower_bound(const Spectrum<double>& sp, const WeightedSumSpec<double>& spec, int m) {
  const int n_values = sp.size();
  if (m < 1 || m > n_values - 1) throw PreconditionError("lower_bound: m out of range");
  const double remainder = spec.total - m * spec.omega;
  if (remainder < 0) throw PreconditionError("lower_bound: S - m Omega < 0");
  return remainder * sp[m] + spec.omega * sp.values.head(m).sum();
}

struct BestLowerBound {
  double value = 0;
  /// True when the spectrum is (S/Omega)-nonnegative, which forces value >= 0.
  bool certified_nonnegative = false;
};

/// Largest lower_bound(m) over the admissible m. This is the exact minimum
/// of sum w_a l_a over 0 <= w_a <= Omega, sum w_a = S.
inline BestLowerBound best_lower_bound(const Spectrum<double>& sp,
                                       const WeightedSumSpec<double>& spec) {
  const int n_values = sp.size();
  if (n_values < 1) throw PreconditionError("best_lower_bound: empty spectrum");
  BestLowerBound out;
  if (spec.omega == 0.0) {
    out.certified_nonnegative = true;
    return out;
  }
  const double k = spec.total / spec.omega;
  if (k > n_values * (1.0 + 1e-15))
    throw PreconditionError("best_lower_bound: S > N Omega leaves no admissible weights");
  if (n_values == 1) {
    out.value = spec.total * sp[0];
  } else {
    out.value = -std::numeric_limits<double>::infinity();
    for (int m = 1; m <= n_values - 1 && spec.total - m * spec.omega >= 0; ++m)
      out.value = std::max(out.value, lower_bound(sp, spec, m));
  }
  out.certified_nonnegative = k_nonnegative(sp, std::min<double>(k, n_values)).holds;
  return out;
}

/// Highest/total weight of the assembled lower bound for 3 <Delta W, W>:
/// [8(n-2)/n, 2(n^2+n-8)/n] + 4(n-8)/n [n/(n+2), n-1] + 12 [1, 1]
///   + 32/(n(n+2)) [1, (n-1)(n+2)/2].
/// The Ricci term drops out at n = 8 where its coefficient vanishes.
template <typename Scalar>
WeightedSumSpec<Scalar> bochner_weight_spec(int n) {
  if (n < 8) throw PreconditionError("bochner_weight_spec needs n >= 8");
  const Scalar nn(n);
  WeightedSumSpec<Scalar> spec(Scalar(8) * (nn - 2) / nn, Scalar(2) * (nn * nn + nn - 8) / nn);
  const Scalar ricci_coeff = Scalar(4) * (nn - 8) / nn;
  if (ricci_coeff > Scalar(0))
    spec = spec + ricci_coeff * WeightedSumSpec<Scalar>(nn / (nn + 2), nn - 1);
  spec = spec + Scalar(12) * WeightedSumSpec<Scalar>(Scalar(1), Scalar(1));
  spec = spec + (Scalar(32) / (nn * (nn + 2))) *
                    WeightedSumSpec<Scalar>(Scalar(1), (nn - 1) * (nn + 2) / Scalar(2));
  return spec;
}

/// Weight spec of sum_a l_a |S^a W|^2 / |W|^2.
template <typename Scalar>
WeightedSumSpec<Scalar> weyl_action_weight_spec(int n) {
  const Scalar nn(n);
  return {Scalar(8) * (nn - 2) / nn, Scalar(2) * (nn * nn + nn - 8) / nn};
}

/// Spec bounding the scalar curvature: s >= 2n/(n+2) [1, (n-1)(n+2)/2].
template <typename Scalar>
WeightedSumSpec<Scalar> scalar_weight_spec(int n) {
  const Scalar nn(n);
  return {Scalar(1), (nn - 1) * (nn + 2) / Scalar(2)};
}

/// Spec bounding the smallest Ricci eigenvalue: Ric >= [n/(n+2), n-1].
template <typename Scalar>
WeightedSumSpec<Scalar> ricci_weight_spec(int n) {
  const Scalar nn(n);
  return {nn / (nn + 2), nn - 1};
}

enum class Theorem { A, B5, B7 };

inline std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::A: return "A";
    case Theorem::B5: return "B5";
    case Theorem::B7: return "B7";
  }
  return "?";
}

/// Fractional nonnegativity threshold k for the rigidity statements:
/// 3(n-1)(n+2)/(4(3n-1)) for n >= 8, 252/169 for n = 5, 54/35 for n = 7.
inline Rational threshold(int n, Theorem theorem) {
  switch (theorem) {
    case Theorem::A:
      if (n < 8) throw PreconditionError("threshold A needs n >= 8");
      return Rational(3 * (n - 1) * (n + 2), 4 * (3 * n - 1));
    case Theorem::B5:
      if (n != 5) throw PreconditionError("threshold B5 needs n = 5");
      return Rational(252, 169);
    case Theorem::B7:
      if (n != 7) throw PreconditionError("threshold B7 needs n = 7");
      return Rational(54, 35);
  }
  throw PreconditionError("unknown theorem");
}

}  // namespace curvop
