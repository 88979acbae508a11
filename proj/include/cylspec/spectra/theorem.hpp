#pragma once

#include <string>
#include <vector>

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/algebra/interpolate.hpp"
#include "cylspec/algebra/resolvent.hpp"
#include "cylspec/construct/assemble.hpp"
#include "cylspec/spectra/factored.hpp"
#include "cylspec/util/parallel.hpp"

namespace cylspec {

namespace detail {

inline void require_pairing(const Decomposition& d, const CoherentList& h) {
  if (h.size() != d.t())
    throw ArgumentError("decomposition has " + std::to_string(d.t()) + " parts but " + std::to_string(h.size()) +
                        " cylinders were given");
}

inline RealPolynomial product_of(const std::vector<RealPolynomial>& fs) {
  RealPolynomial acc = RealPolynomial::constant(Real(1));
  for (const auto& f : fs) acc *= f;
  return acc;
}

/// Integer data shared by the regular and general regimes at one sample point x0.
/// With F = prod_i phi(C_i, x0) and co_i = F / phi(C_i, x0):
///   link[i]      = F Ebb_i + co_i Ebc_i adj_i(x0) Ebpc_i^T   (F (Ebb_i + R_a(C_i)))
///   diag_part[i] = co_i Ebc_i adj_i(x0) Ebc_i^T               (F R_d(C_i))
struct PointData {
  Integer F;
  std::vector<Integer> phi;
  std::vector<Matrix<Integer>> link, diag_part;
};

struct InnerTables {
  std::vector<LinkAdjugate> links;

  explicit InnerTables(const CoherentList& h) {
    for (const auto& c : h) links.push_back(link_adjugate(c.C, c.Ebc, c.Ebpc));
  }

  PointData at(const CoherentList& h, const Integer& x0) const {
    const std::size_t b = h.base_size();
    PointData pd;
    pd.F = 1;
    for (const auto& l : links) {
      Rational v = l.charpoly(Rational(x0));
      pd.phi.push_back(v.get_num());
      pd.F *= v.get_num();
    }
    for (std::size_t i = 0; i < links.size(); ++i) {
      const Cylinder& c = h[i];
      Matrix<Integer> link = pd.F * c.Ebb.cast<Integer>();
      Matrix<Integer> diag(b, b, Integer(0));
      if (c.has_inner()) {
        Integer co = 1;
        for (std::size_t k = 0; k < pd.phi.size(); ++k)
          if (k != i) co *= pd.phi[k];
        link = link + co * LinkAdjugate::horner(links[i].across, x0, b);
        diag = co * LinkAdjugate::horner(links[i].diagonal, x0, b);
      }
      pd.link.push_back(std::move(link));
      pd.diag_part.push_back(std::move(diag));
    }
    return pd;
  }
};

inline Polynomial inner_charpoly_product(const CoherentList& h) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& c : h) p *= charpoly_exact(c.C);
  return p;
}

inline std::vector<std::pair<Polynomial, long>> prefactor_of(const Decomposition& d, const CoherentList& h) {
  std::vector<std::pair<Polynomial, long>> out;
  for (std::size_t i = 0; i < d.t(); ++i)
    if (h[i].has_inner()) out.emplace_back(charpoly_exact(h[i].C), static_cast<long>(d.parts()[i].size()));
  return out;
}

inline std::size_t total_degree(const Decomposition& d, const CoherentList& h) { return expected_order(d, h); }

inline void finish_product(FactoredCharpoly& out, const RealPolynomial& product, const SpectraOptions& opts,
                           std::size_t degree) {
  out.product_numeric = to_doubles(product);
  double residual = 0;
  Polynomial rounded = round_coefficients(product, residual);
  out.rounding_residual = residual;
  if (residual > opts.tol)
    throw PrecisionError("coefficient rounding residual " + std::to_string(residual) + " exceeds " +
                         std::to_string(opts.tol));
  if (rounded.degree() != static_cast<int>(degree) || rounded.leading() != 1)
    throw ConsistencyError("theorem product has degree " + std::to_string(rounded.degree()) + ", expected " +
                           std::to_string(degree));
  out.product_exact = std::move(rounded);
}

}  // namespace detail

/// prod_{j=1}^{n} phi(B + sum_i theta_i^j Ebb_i, x) for cylinders without inner
/// vertices. Each factor is a |B| x |B| real characteristic polynomial; the
/// product is accumulated in MPFR and rounded to integers.
inline FactoredCharpoly charpoly_no_inner(const Decomposition& d, const CoherentList& h, const SpectraOptions& opts = {}) {
  detail::require_pairing(d, h);
  if (h.any_inner()) throw RegimeError("charpoly_no_inner: a cylinder has inner vertices");
  const std::size_t n = d.order(), b = h.base_size(), total = n * b;
  const unsigned start =
      128 + static_cast<unsigned>(total) * detail::bit_length(2.0 + double(detail::construct_degree_bound(d, h)));

  return detail::with_precision_retry(start, opts, [&](unsigned bits) {
    FactoredCharpoly out;
    out.regime = "no_inner";
    out.precision_bits = bits;
    std::vector<RealPolynomial> factors(n);
    parallel_for(n, opts.jobs, [&](std::size_t jj) {
      Matrix<Real> m(b, b, Real(0));
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q) m(p, q) = Real(static_cast<long>(h.base()(p, q)));
      for (std::size_t i = 0; i < d.t(); ++i) {
        const Real theta = d.theta_real(i, jj + 1);
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t q = 0; q < b; ++q)
            if (h[i].Ebb(p, q)) m(p, q) += theta;
      }
      factors[jj] = charpoly_real(m);
    });
    for (const auto& f : factors) {
      out.factors.push_back(detail::to_doubles(f));
      out.factors_exact.push_back(detail::round_if_integral(f, opts.tol));
    }
    detail::finish_product(out, detail::product_of(factors), opts, total);
    return out;
  });
}

/// Regular regime: every part G_i is d_i-regular. The per-j factor
/// phi(B + sum_i (d_i R_d(C_i) + theta_i^j (Ebb_i + R_a(C_i))), x) is a rational
/// function; it is cleared by Phi^{|B|} with Phi = prod_i phi(C_i, x), the
/// cleared determinant is interpolated from MPFR evaluations at integer points,
/// and the product is finally multiplied by prod_i phi(C_i, x)^{m_i - n|B|}.
inline FactoredCharpoly charpoly_regular(const Decomposition& d, const CoherentList& h, const SpectraOptions& opts = {}) {
  detail::require_pairing(d, h);
  if (!d.regular_degrees()) throw RegimeError("charpoly_regular: some part is not regular");
  const auto& degs = *d.regular_degrees();
  const std::size_t n = d.order(), b = h.base_size(), t = d.t();
  std::size_t inner_total = 0;
  for (const auto& c : h) inner_total += c.inner_size();
  const std::size_t K = b * (inner_total + 1);  // degree bound of each cleared factor
  const std::size_t total = detail::total_degree(d, h);

  const detail::InnerTables tables(h);
  std::vector<detail::PointData> points;
  for (std::size_t k = 0; k <= K; ++k) points.push_back(tables.at(h, Integer(static_cast<unsigned long>(k))));
  const Polynomial phi_all = detail::inner_charpoly_product(h);

  const double r = double(detail::construct_degree_bound(d, h));
  const unsigned start = 128 + static_cast<unsigned>(total + n * K) * detail::bit_length(2.0 + r) +
                         static_cast<unsigned>(K + 1) * detail::bit_length(double(K) + 2.0);

  return detail::with_precision_retry(start, opts, [&](unsigned bits) {
    FactoredCharpoly out;
    out.regime = "regular";
    out.precision_bits = bits;
    out.prefactor = detail::prefactor_of(d, h);
    out.factor_denominator = phi_all.pow(static_cast<unsigned>(b));

    std::vector<Real> nodes;
    for (std::size_t k = 0; k <= K; ++k) nodes.emplace_back(static_cast<unsigned long>(k));
    std::vector<RealPolynomial> factors(n);
    parallel_for(n, opts.jobs, [&](std::size_t jj) {
      std::vector<Real> theta;
      for (std::size_t i = 0; i < t; ++i) theta.push_back(d.theta_real(i, jj + 1));
      std::vector<Real> values;
      for (std::size_t k = 0; k <= K; ++k) {
        const auto& pd = points[k];
        Matrix<Real> m(b, b, Real(0));
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t q = 0; q < b; ++q) {
            Integer fixed = pd.F * (Integer(p == q ? static_cast<long>(k) : 0) - h.base()(p, q));
            for (std::size_t i = 0; i < t; ++i)
              fixed -= Integer(static_cast<unsigned long>(degs[i])) * pd.diag_part[i](p, q);
            Real v = to_real(fixed);
            for (std::size_t i = 0; i < t; ++i) v -= theta[i] * to_real(pd.link[i](p, q));
            m(p, q) = v;
          }
        values.push_back(determinant(m));
      }
      factors[jj] = interpolate(nodes, values);
    });
    for (const auto& f : factors) {
      out.factors.push_back(detail::to_doubles(f));
      out.factors_exact.push_back(detail::round_if_integral(f, opts.tol));
    }

    RealPolynomial q = detail::product_of(factors);
    for (std::size_t i = 0; i < t; ++i) {
      if (!h[i].has_inner()) continue;
      const long e = static_cast<long>(d.parts()[i].size()) - static_cast<long>(n * b);
      const RealPolynomial phi = to_real(charpoly_exact(h[i].C));
      if (e > 0) {
        q *= phi.pow(static_cast<unsigned>(e));
      } else if (e < 0) {
        auto [quot, rem] = divmod(q, phi.pow(static_cast<unsigned>(-e)));
        Real scale(1), worst(0);
        for (const auto& c : q.coeffs()) scale = std::max(scale, Real(abs_value(c)));
        for (const auto& c : rem.coeffs()) worst = std::max(worst, Real(abs_value(c)));
        if (worst > scale * boost::multiprecision::pow(Real(2), -static_cast<int>(bits / 2)))
          throw PrecisionError("cleared factor product is not divisible by phi(C_" + std::to_string(i) + ")");
        q = quot;
      }
    }
    detail::finish_product(out, q, opts, total);
    return out;
  });
}

/// General regime, exact: prod_i phi(C_i, x)^{m_i} times
/// det(I_n (x) (xI - B) - sum_i (G_i (x) (Ebb_i + R_a(C_i)) + D_i (x) R_d(C_i)))
/// sampled at N + 1 consecutive integers above the construct's maximum degree
/// (so above every pole) and recovered by exact interpolation.
inline Polynomial charpoly_general(const Decomposition& d, const CoherentList& h, const SpectraOptions& opts = {}) {
  detail::require_pairing(d, h);
  const std::size_t n = d.order(), b = h.base_size(), t = d.t(), nb = n * b;
  const std::size_t total = detail::total_degree(d, h);
  const detail::InnerTables tables(h);
  std::vector<std::vector<std::size_t>> part_degrees;
  for (const auto& g : d.parts()) part_degrees.push_back(g.degrees());

  const std::size_t first = detail::construct_degree_bound(d, h) + 1;
  const std::size_t scan_limit = first + total + 1 + 64;
  std::vector<std::pair<std::size_t, detail::PointData>> samples;
  for (std::size_t x0 = first; samples.size() < total + 1; ++x0) {
    if (x0 >= scan_limit)
      throw SamplingError("charpoly_general: not enough pole-free sample points in [" + std::to_string(first) + ", " +
                          std::to_string(scan_limit) + ")");
    auto pd = tables.at(h, Integer(static_cast<unsigned long>(x0)));
    if (pd.F == 0) continue;
    samples.emplace_back(x0, std::move(pd));
  }

  std::vector<Rational> xs(samples.size()), ys(samples.size());
  parallel_for(samples.size(), opts.jobs, [&](std::size_t k) {
    const auto& [x0, pd] = samples[k];
    Matrix<Integer> m(nb, nb, Integer(0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q) {
          Integer v = pd.F * (Integer(p == q ? static_cast<unsigned long>(x0) : 0UL) - h.base()(p, q));
          for (std::size_t i = 0; i < t; ++i)
            v -= Integer(static_cast<unsigned long>(part_degrees[i][u])) * pd.diag_part[i](p, q);
          m(u * b + p, u * b + q) = v;
        }
    for (std::size_t i = 0; i < t; ++i)
      for (const auto& [u, v] : d.parts()[i].edges())
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t q = 0; q < b; ++q) {
            m(u * b + p, v * b + q) -= pd.link[i](p, q);
            m(v * b + p, u * b + q) -= pd.link[i](p, q);
          }
    Integer num = determinant(m);
    for (std::size_t i = 0; i < t; ++i) {
      Integer f;
      mpz_pow_ui(f.get_mpz_t(), pd.phi[i].get_mpz_t(), d.parts()[i].size());
      num *= f;
    }
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), pd.F.get_mpz_t(), nb);
    Rational value(num, den);
    value.canonicalize();
    xs[k] = Rational(Integer(static_cast<unsigned long>(x0)));
    ys[k] = std::move(value);
  });
  Polynomial p = interpolate(xs, ys);
  if (p.degree() != static_cast<int>(total) || p.leading() != 1 || !has_integer_coefficients(p))
    throw ConsistencyError("charpoly_general: interpolated polynomial is not a monic integer polynomial of degree " +
                           std::to_string(total));
  return p;
}

}  // namespace cylspec
