#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/algebra/polynomial.hpp"
#include "cylspec/cylinder/cylinder.hpp"
#include "cylspec/graph/decomposition.hpp"

namespace cylspec {

struct SpectraOptions {
  unsigned precision_bits = 0;  ///< 0 selects the working precision from a coefficient bound
  unsigned max_precision_bits = 1u << 15;
  unsigned jobs = 1;
  double tol = 1e-6;  ///< largest accepted distance of a product coefficient from an integer
};

/// Factored characteristic polynomial of a construct as produced by one of the
/// theorem regimes.
struct FactoredCharpoly {
  std::string regime;
  std::vector<std::pair<Polynomial, long>> prefactor;  ///< (phi(C_i, x), m_i)
  /// Per-j factors, j = 1..n, as ascending coefficient lists. In the regular
  /// regime each factor is multiplied by `factor_denominator` to clear poles.
  std::vector<std::vector<double>> factors;
  std::vector<std::optional<Polynomial>> factors_exact;  ///< set when a factor rounds to integers
  std::optional<Polynomial> factor_denominator;
  std::vector<double> product_numeric;
  std::optional<Polynomial> product_exact;
  double rounding_residual = 0;
  unsigned precision_bits = 0;
};

namespace detail {

inline std::vector<double> to_doubles(const RealPolynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

inline std::vector<double> to_doubles(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_d());
  return out;
}

/// Rounds every coefficient to the nearest integer; `residual` receives the
/// largest distance.
inline Polynomial round_coefficients(const RealPolynomial& p, double& residual) {
  std::vector<Integer> out;
  residual = 0;
  for (const auto& c : p.coeffs()) {
    Integer z = round_to_integer(c);
    residual = std::max(residual, to_double(abs_value(c - to_real(z))));
    out.push_back(std::move(z));
  }
  return from_integers(out);
}

inline std::optional<Polynomial> round_if_integral(const RealPolynomial& p, double tol) {
  double residual = 0;
  Polynomial q = round_coefficients(p, residual);
  if (residual > tol) return std::nullopt;
  return q;
}

/// ceil(log2(v)) for v >= 1.
inline unsigned bit_length(double v) { return v <= 1 ? 1u : static_cast<unsigned>(std::ceil(std::log2(v))); }

/// Upper bound on the maximum degree of G ⊠ H, from the blocks alone.
inline std::size_t construct_degree_bound(const Decomposition& d, const CoherentList& h) {
  std::size_t best = 0;
  const std::size_t b = h.base_size();
  for (std::size_t s = 0; s < b; ++s) {
    std::size_t deg = 0;
    for (std::size_t q = 0; q < b; ++q) deg += static_cast<std::size_t>(h.base()(s, q));
    for (std::size_t i = 0; i < d.t(); ++i) {
      std::size_t per_edge = 0;
      const Cylinder& c = h[i];
      for (std::size_t q = 0; q < b; ++q) per_edge += static_cast<std::size_t>(c.Ebb(s, q));
      for (std::size_t q = 0; q < c.inner_size(); ++q)
        per_edge += static_cast<std::size_t>(c.Ebc(s, q) + c.Ebpc(s, q));
      std::size_t dmax = 0;
      for (auto v : d.parts()[i].degrees()) dmax = std::max(dmax, v);
      deg += dmax * per_edge;
    }
    best = std::max(best, deg);
  }
  for (const auto& c : h) best = std::max(best, c.inner_size() + 2 * b);
  return best;
}

/// Calls run(bits) under a PrecisionScope, doubling the precision after each
/// PrecisionError until `opts.max_precision_bits` is exceeded.
template <class Run>
auto with_precision_retry(unsigned start_bits, const SpectraOptions& opts, Run&& run) {
  unsigned bits = opts.precision_bits ? opts.precision_bits : start_bits;
  for (;;) {
    try {
      PrecisionScope scope(bits);
      return run(bits);
    } catch (const PrecisionError&) {
      if (bits * 2 > opts.max_precision_bits) throw;
      bits *= 2;
    }
  }
}

}  // namespace detail

inline std::string to_string(const FactoredCharpoly& f) {
  std::string s = "regime: " + f.regime + "\n";
  for (const auto& [p, m] : f.prefactor) s += "prefactor: (" + to_string(p) + ")^" + std::to_string(m) + "\n";
  if (f.factor_denominator) s += "factor denominator: " + to_string(*f.factor_denominator) + "\n";
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    s += "j=" + std::to_string(j + 1) + ": ";
    if (f.factors_exact[j]) {
      s += to_string(*f.factors_exact[j]);
    } else {
      std::string terms;
      for (std::size_t k = f.factors[j].size(); k-- > 0;) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%+.12g*x^%zu", f.factors[j][k], k);
        terms += buf;
        if (k) terms += " ";
      }
      s += terms;
    }
    s += "\n";
  }
  if (f.product_exact) s += "product: " + to_string(*f.product_exact) + "\n";
  return s;
}

}  // namespace cylspec
