#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kal1 {

/// Element of GF(2^m) in polynomial basis; coefficient i of the polynomial lives in bit i.
struct FieldElement {
      std::uint16_t value = 0;

      constexpr bool is_zero() const { return value == 0; }
      constexpr auto operator<=>(const FieldElement&) const = default;
};

/**
* Arithmetic context of GF(2^m), 4 <= m <= 16, built over a fixed irreducible
* reduction polynomial. Multiplication and inversion go through exp/log tables
* of a generator of the multiplicative group, so the reduction polynomial does
* not need to be primitive.
*
* Immutable after construction.
*/
class FieldContext final {
   public:
      /// Uses the pinned default reduction polynomial for m.
      explicit FieldContext(unsigned m);
      FieldContext(unsigned m, std::uint32_t reduction_poly);

      static std::uint32_t default_reduction_poly(unsigned m);
      /// Trial division by every polynomial of degree 1..deg/2.
      static bool is_irreducible_binary(std::uint32_t poly);

      unsigned degree() const { return m_m; }
      std::uint32_t reduction_poly() const { return m_poly; }
      std::uint32_t size() const { return std::uint32_t(1) << m_m; }

      FieldElement element(std::uint32_t v) const;
      bool contains(FieldElement a) const { return a.value < size(); }

      static constexpr FieldElement zero() { return FieldElement{0}; }
      static constexpr FieldElement one() { return FieldElement{1}; }

      static constexpr FieldElement add(FieldElement a, FieldElement b) {
         return FieldElement{static_cast<std::uint16_t>(a.value ^ b.value)};
      }

      FieldElement mul(FieldElement a, FieldElement b) const;
      FieldElement square(FieldElement a) const { return mul(a, a); }
      /// Throws DivisionByZero for a = 0.
      FieldElement inv(FieldElement a) const;
      FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
      FieldElement pow(FieldElement a, std::uint64_t e) const;
      /// The unique b with b^2 = a (squaring is a bijection in characteristic 2).
      FieldElement sqrt(FieldElement a) const;

   private:
      unsigned m_m;
      std::uint32_t m_poly;
      std::uint32_t m_order;  // 2^m - 1
      std::vector<std::uint16_t> m_exp;
      std::vector<std::uint32_t> m_log;
};

/// Polynomial over GF(2^m); coeffs[i] multiplies x^i. Always normalised (no zero leading terms).
class Poly final {
   public:
      Poly() = default;
      explicit Poly(std::vector<FieldElement> coeffs);

      static Poly constant(FieldElement c);
      static Poly monomial(FieldElement c, std::size_t degree);
      static Poly x() { return monomial(FieldContext::one(), 1); }

      /// -1 for the zero polynomial.
      int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
      bool is_zero() const { return m_coeffs.empty(); }
      FieldElement coeff(std::size_t i) const { return i < m_coeffs.size() ? m_coeffs[i] : FieldElement{}; }
      FieldElement leading() const { return m_coeffs.empty() ? FieldElement{} : m_coeffs.back(); }
      std::span<const FieldElement> coeffs() const { return m_coeffs; }

      bool operator==(const Poly&) const = default;

   private:
      void normalize();

      std::vector<FieldElement> m_coeffs;
};

FieldElement poly_eval(const FieldContext& f, std::span<const FieldElement> coeffs, FieldElement x);
FieldElement poly_eval(const FieldContext& f, const Poly& p, FieldElement x);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const FieldContext& f, const Poly& a, const Poly& b);
Poly poly_scale(const FieldContext& f, const Poly& a, FieldElement c);

struct PolyDivision {
      Poly quotient;
      Poly remainder;
};

/// Throws DivisionByZero when the divisor is zero.
PolyDivision poly_divmod(const FieldContext& f, const Poly& a, const Poly& b);
Poly poly_mod(const FieldContext& f, const Poly& a, const Poly& modulus);
Poly poly_mulmod(const FieldContext& f, const Poly& a, const Poly& b, const Poly& modulus);
Poly poly_make_monic(const FieldContext& f, const Poly& a);
Poly poly_derivative(const FieldContext& f, const Poly& a);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly poly_gcd(const FieldContext& f, const Poly& a, const Poly& b);

struct EeaResult {
      Poly u;
      Poly v;
      Poly d;
};

/**
* Extended Euclid on (a, b), stopped as soon as the running remainder has
* degree <= stop_degree. The result always satisfies u*a + v*b = d.
* With stop_degree < 0 it runs to completion and d is a (non-monic) gcd.
*/
EeaResult poly_eea(const FieldContext& f, const Poly& a, const Poly& b, int stop_degree = -1);

/// Inverse of a modulo an irreducible modulus; nullopt when gcd(a, modulus) != 1.
std::optional<Poly> poly_inv_mod(const FieldContext& f, const Poly& a, const Poly& modulus);

/// Ben-Or test: gcd(x^(q^i) - x, p) = 1 for every i <= deg(p)/2, q = 2^m.
bool poly_is_irreducible(const FieldContext& f, const Poly& p);

/// sqrt(x) mod g = x^(2^(m*t - 1)) mod g for irreducible g of degree t.
Poly poly_sqrt_x_mod(const FieldContext& f, const Poly& g);

/// Square root modulo irreducible g by splitting s into even and odd parts:
/// s = E(x)^2 + x O(x)^2, so sqrt(s) = E + sqrt(x) O.
Poly poly_sqrt_mod(const FieldContext& f, const Poly& s, const Poly& g, const Poly& sqrt_x);

/// Square root modulo irreducible g as s^(2^(m*t - 1)) by repeated squaring.
Poly poly_sqrt_mod_by_power(const FieldContext& f, const Poly& s, const Poly& g);

}  // namespace kal1
