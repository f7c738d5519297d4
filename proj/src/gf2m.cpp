#include <kal1/gf2m.hpp>

#include <kal1/error.hpp>

#include <bit>
#include <string>
#include <utility>

namespace kal1 {

namespace {

std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t poly) {
   std::uint32_t r = 0;
   while(b != 0) {
      if(b & 1) {
         r ^= a;
      }
      b >>= 1;
      a <<= 1;
      if(a & (std::uint32_t(1) << m)) {
         a ^= poly;
      }
   }
   return r;
}

}  // namespace

std::uint32_t FieldContext::default_reduction_poly(unsigned m) {
   switch(m) {
      case 4:
         return 0x13;  // x^4 + x + 1
      case 5:
         return 0x25;  // x^5 + x^2 + 1
      case 6:
         return 0x43;  // x^6 + x + 1
      case 7:
         return 0x83;  // x^7 + x + 1
      case 8:
         return 0x11B;  // x^8 + x^4 + x^3 + x + 1
      case 9:
         return 0x211;  // x^9 + x^4 + 1
      case 10:
         return 0x409;  // x^10 + x^3 + 1
      case 11:
         return 0x805;  // x^11 + x^2 + 1
      case 12:
         return 0x1009;  // x^12 + x^3 + 1
      case 13:
         return 0x201B;  // x^13 + x^4 + x^3 + x + 1
      case 14:
         return 0x402B;  // x^14 + x^5 + x^3 + x + 1
      case 15:
         return 0x8003;  // x^15 + x + 1
      case 16:
         return 0x1002D;  // x^16 + x^5 + x^3 + x^2 + 1
      default:
         fail(ErrorCode::Parameter, "field degree m must be in [4, 16], got " + std::to_string(m));
   }
}

bool FieldContext::is_irreducible_binary(std::uint32_t poly) {
   if(poly < 2) {
      return false;
   }
   const int deg = static_cast<int>(std::bit_width(poly)) - 1;
   for(std::uint32_t d = 2; static_cast<int>(std::bit_width(d)) - 1 <= deg / 2; ++d) {
      // binary polynomial remainder of poly by d
      std::uint32_t r = poly;
      const int dd = static_cast<int>(std::bit_width(d)) - 1;
      for(int i = deg; i >= dd; --i) {
         if(r & (std::uint32_t(1) << i)) {
            r ^= d << (i - dd);
         }
      }
      if(r == 0) {
         return false;
      }
   }
   return true;
}

FieldContext::FieldContext(unsigned m) : FieldContext(m, default_reduction_poly(m)) {}

FieldContext::FieldContext(unsigned m, std::uint32_t reduction_poly) :
      m_m(m), m_poly(reduction_poly), m_order((std::uint32_t(1) << m) - 1) {
   require(m >= 4 && m <= 16, ErrorCode::Parameter, "field degree m must be in [4, 16]");
   require((reduction_poly >> m) == 1 && (reduction_poly & 1) == 1,
           ErrorCode::Parameter,
           "reduction polynomial must have degree m and a nonzero constant term");
   require(is_irreducible_binary(reduction_poly), ErrorCode::Parameter, "reduction polynomial is reducible");

   m_exp.resize(2 * static_cast<std::size_t>(m_order));
   m_log.assign(size(), 0);

   for(std::uint32_t gen = 2; gen < size(); ++gen) {
      std::uint32_t v = 1;
      std::uint32_t i = 0;
      bool cycled_early = false;
      for(; i < m_order; ++i) {
         if(i > 0 && v == 1) {
            cycled_early = true;
            break;
         }
         m_exp[i] = static_cast<std::uint16_t>(v);
         v = clmul_reduce(v, gen, m, reduction_poly);
      }
      if(!cycled_early && v == 1) {
         break;
      }
   }
   for(std::uint32_t i = 0; i < m_order; ++i) {
      m_exp[i + m_order] = m_exp[i];
      m_log[m_exp[i]] = i;
   }
}

FieldElement FieldContext::element(std::uint32_t v) const {
   require(v < size(), ErrorCode::Parameter, "value outside GF(2^m)");
   return FieldElement{static_cast<std::uint16_t>(v)};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
   if(a.is_zero() || b.is_zero()) {
      return zero();
   }
   return FieldElement{m_exp[m_log[a.value] + m_log[b.value]]};
}

FieldElement FieldContext::inv(FieldElement a) const {
   require(!a.is_zero(), ErrorCode::DivisionByZero, "inverse of zero in GF(2^m)");
   return FieldElement{m_exp[(m_order - m_log[a.value]) % m_order]};
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
   if(e == 0) {
      return one();
   }
   if(a.is_zero()) {
      return zero();
   }
   return FieldElement{m_exp[(static_cast<std::uint64_t>(m_log[a.value]) * (e % m_order)) % m_order]};
}

FieldElement FieldContext::sqrt(FieldElement a) const {
   if(a.is_zero()) {
      return zero();
   }
   // the order 2^m - 1 is odd, so halving the log is always possible
   std::uint32_t l = m_log[a.value];
   if(l & 1) {
      l += m_order;
   }
   return FieldElement{m_exp[l / 2]};
}

Poly::Poly(std::vector<FieldElement> coeffs) : m_coeffs(std::move(coeffs)) {
   normalize();
}

void Poly::normalize() {
   while(!m_coeffs.empty() && m_coeffs.back().is_zero()) {
      m_coeffs.pop_back();
   }
}

Poly Poly::constant(FieldElement c) {
   return Poly(std::vector<FieldElement>{c});
}

Poly Poly::monomial(FieldElement c, std::size_t degree) {
   std::vector<FieldElement> v(degree + 1);
   v[degree] = c;
   return Poly(std::move(v));
}

FieldElement poly_eval(const FieldContext& f, std::span<const FieldElement> coeffs, FieldElement x) {
   FieldElement acc{};
   for(std::size_t i = coeffs.size(); i-- > 0;) {
      acc = FieldContext::add(f.mul(acc, x), coeffs[i]);
   }
   return acc;
}

FieldElement poly_eval(const FieldContext& f, const Poly& p, FieldElement x) {
   return poly_eval(f, p.coeffs(), x);
}

Poly poly_add(const Poly& a, const Poly& b) {
   const auto n = std::max(a.coeffs().size(), b.coeffs().size());
   std::vector<FieldElement> r(n);
   for(std::size_t i = 0; i < n; ++i) {
      r[i] = FieldContext::add(a.coeff(i), b.coeff(i));
   }
   return Poly(std::move(r));
}

Poly poly_mul(const FieldContext& f, const Poly& a, const Poly& b) {
   if(a.is_zero() || b.is_zero()) {
      return Poly();
   }
   const auto ac = a.coeffs();
   const auto bc = b.coeffs();
   std::vector<FieldElement> r(ac.size() + bc.size() - 1);
   for(std::size_t i = 0; i < ac.size(); ++i) {
      if(ac[i].is_zero()) {
         continue;
      }
      for(std::size_t j = 0; j < bc.size(); ++j) {
         r[i + j] = FieldContext::add(r[i + j], f.mul(ac[i], bc[j]));
      }
   }
   return Poly(std::move(r));
}

Poly poly_scale(const FieldContext& f, const Poly& a, FieldElement c) {
   std::vector<FieldElement> r(a.coeffs().begin(), a.coeffs().end());
   for(auto& x : r) {
      x = f.mul(x, c);
   }
   return Poly(std::move(r));
}

PolyDivision poly_divmod(const FieldContext& f, const Poly& a, const Poly& b) {
   require(!b.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
   if(a.degree() < b.degree()) {
      return {Poly(), a};
   }
   std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
   const auto bc = b.coeffs();
   const int db = b.degree();
   const FieldElement lead_inv = f.inv(b.leading());
   std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - db + 1));

   for(int i = a.degree(); i >= db; --i) {
      const FieldElement c = rem[static_cast<std::size_t>(i)];
      if(c.is_zero()) {
         continue;
      }
      const FieldElement q = f.mul(c, lead_inv);
      quot[static_cast<std::size_t>(i - db)] = q;
      for(int j = 0; j <= db; ++j) {
         auto& slot = rem[static_cast<std::size_t>(i - db + j)];
         slot = FieldContext::add(slot, f.mul(q, bc[static_cast<std::size_t>(j)]));
      }
   }
   return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const FieldContext& f, const Poly& a, const Poly& modulus) {
   if(a.degree() < modulus.degree()) {
      return a;
   }
   return poly_divmod(f, a, modulus).remainder;
}

Poly poly_mulmod(const FieldContext& f, const Poly& a, const Poly& b, const Poly& modulus) {
   return poly_mod(f, poly_mul(f, a, b), modulus);
}

Poly poly_make_monic(const FieldContext& f, const Poly& a) {
   if(a.is_zero()) {
      return a;
   }
   return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_derivative(const FieldContext& f, const Poly& a) {
   (void)f;
   // d/dx x^i = i x^(i-1); only odd i survive in characteristic 2
   if(a.degree() < 1) {
      return Poly();
   }
   std::vector<FieldElement> r(static_cast<std::size_t>(a.degree()));
   for(std::size_t i = 1; i < a.coeffs().size(); i += 2) {
      r[i - 1] = a.coeff(i);
   }
   return Poly(std::move(r));
}

Poly poly_gcd(const FieldContext& f, const Poly& a, const Poly& b) {
   Poly r0 = a;
   Poly r1 = b;
   while(!r1.is_zero()) {
      Poly r2 = poly_mod(f, r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r2);
   }
   return poly_make_monic(f, r0);
}

EeaResult poly_eea(const FieldContext& f, const Poly& a, const Poly& b, int stop_degree) {
   // invariant: u0*a + v0*b = r0 and u1*a + v1*b = r1
   Poly r0 = a, r1 = b;
   Poly u0 = Poly::constant(FieldContext::one()), u1;
   Poly v0, v1 = Poly::constant(FieldContext::one());

   if(r0.degree() <= stop_degree && stop_degree >= 0) {
      return {u0, v0, r0};
   }
   while(!r1.is_zero() && (stop_degree < 0 || r1.degree() > stop_degree)) {
      auto [q, r2] = poly_divmod(f, r0, r1);
      Poly u2 = poly_add(u0, poly_mul(f, q, u1));
      Poly v2 = poly_add(v0, poly_mul(f, q, v1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      u0 = std::move(u1);
      u1 = std::move(u2);
      v0 = std::move(v1);
      v1 = std::move(v2);
   }
   if(stop_degree < 0 && r1.is_zero()) {
      return {u0, v0, r0};
   }
   return {u1, v1, r1};
}

std::optional<Poly> poly_inv_mod(const FieldContext& f, const Poly& a, const Poly& modulus) {
   const Poly reduced = poly_mod(f, a, modulus);
   if(reduced.is_zero()) {
      return std::nullopt;
   }
   auto [u, v, d] = poly_eea(f, reduced, modulus);
   if(d.degree() != 0) {
      return std::nullopt;
   }
   return poly_mod(f, poly_scale(f, u, f.inv(d.leading())), modulus);
}

bool poly_is_irreducible(const FieldContext& f, const Poly& p) {
   const int d = p.degree();
   if(d < 1) {
      return false;
   }
   if(d == 1) {
      return true;
   }
   const Poly monic = poly_make_monic(f, p);
   const Poly x = Poly::x();
   Poly h = x;
   for(int i = 1; i <= d / 2; ++i) {
      for(unsigned s = 0; s < f.degree(); ++s) {
         h = poly_mulmod(f, h, h, monic);
      }
      if(poly_gcd(f, poly_add(h, x), monic).degree() != 0) {
         return false;
      }
   }
   return true;
}

Poly poly_sqrt_x_mod(const FieldContext& f, const Poly& g) {
   const std::size_t squarings = static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(g.degree()) - 1;
   Poly r = poly_mod(f, Poly::x(), g);
   for(std::size_t i = 0; i < squarings; ++i) {
      r = poly_mulmod(f, r, r, g);
   }
   return r;
}

Poly poly_sqrt_mod(const FieldContext& f, const Poly& s, const Poly& g, const Poly& sqrt_x) {
   const Poly reduced = poly_mod(f, s, g);
   const auto c = reduced.coeffs();
   std::vector<FieldElement> even((c.size() + 1) / 2), odd(c.size() / 2);
   for(std::size_t i = 0; i < c.size(); ++i) {
      (i % 2 == 0 ? even[i / 2] : odd[i / 2]) = f.sqrt(c[i]);
   }
   return poly_add(Poly(std::move(even)), poly_mulmod(f, sqrt_x, Poly(std::move(odd)), g));
}

Poly poly_sqrt_mod_by_power(const FieldContext& f, const Poly& s, const Poly& g) {
   const std::size_t squarings = static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(g.degree()) - 1;
   Poly r = poly_mod(f, s, g);
   for(std::size_t i = 0; i < squarings; ++i) {
      r = poly_mulmod(f, r, r, g);
   }
   return r;
}

}  // namespace kal1
