#pragma once

#include <cstddef>
#include <vector>

#include "eulerbern/bernstein.hpp"
#include "eulerbern/euler.hpp"
#include "eulerbern/fermint.hpp"
#include "eulerbern/poly.hpp"

namespace eulerbern {

/// One factor B_{k,n}(x)^multiplicity of a Bernstein product.
struct BernsteinFactor {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t multiplicity = 1;

  friend bool operator==(const BernsteinFactor&, const BernsteinFactor&) = default;
};

/// prod_i B_{k_i,n_i}(x)^{m_i}; the empty product is the constant 1.
struct ProductSpec {
  std::vector<BernsteinFactor> factors;

  Poly expand() const {
    Poly out = Poly::constant(1);
    for (const auto& f : factors) {
      if (f.multiplicity == 0) continue;
      out *= pow(bernstein_poly({f.k, f.n}), f.multiplicity);
      if (out.is_zero()) break;
    }
    return out;
  }

  /// Sum of n_i m_i, the degree of the expanded product when no factor vanishes.
  std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto& f : factors) d += f.n * f.multiplicity;
    return d;
  }
};

/// Brute-force value of the integral: expand the whole product in the
/// monomial basis, then apply the Euler-moment rule.
inline Rational oracle_integral(const ProductSpec& spec, EulerCache& cache = EulerCache::shared()) {
  return integrate(spec.expand(), cache).value;
}

}  // namespace eulerbern
