#include <kal1/goppa.hpp>

#include <kal1/error.hpp>

#include <string>
#include <utility>

namespace kal1 {

namespace {

/// s_j = sum over i in supp(e) of alpha_i^j / g(alpha_i), j < t.
std::vector<FieldElement> field_syndrome(const GoppaCode& code, std::span<const std::size_t> positions) {
   const auto& f = code.field();
   std::vector<FieldElement> s(code.params().t);
   for(auto i : positions) {
      FieldElement term = code.inv_g_at_support()[i];
      for(auto& sj : s) {
         sj = FieldContext::add(sj, term);
         term = f.mul(term, code.support()[i]);
      }
   }
   return s;
}

std::vector<FieldElement> unpack_syndrome(const GoppaCode& code, const BitVector& synd) {
   const unsigned m = code.field().degree();
   std::vector<FieldElement> s(code.params().t);
   for(std::size_t j = 0; j < s.size(); ++j) {
      std::uint16_t v = 0;
      for(unsigned b = 0; b < m; ++b) {
         if(synd.get(j * m + b)) {
            v = static_cast<std::uint16_t>(v | (1u << b));
         }
      }
      s[j] = FieldElement{v};
   }
   return s;
}

[[noreturn]] void decoding_failure(const std::string& why) {
   fail(ErrorCode::DecodingFailure, "decode: " + why);
}

}  // namespace

void CodeParams::validate() const {
   require(m >= 4 && m <= 16, ErrorCode::Parameter, "m must be in [4, 16]");
   require(n >= 1 && n <= (std::size_t(1) << m), ErrorCode::Parameter, "n must satisfy 1 <= n <= 2^m");
   require(t >= 2, ErrorCode::Parameter, "t must be at least 2");
   require(m * t < n, ErrorCode::Parameter, "m*t must be smaller than n");
   require(k == n - m * t,
           ErrorCode::Parameter,
           "k must equal n - m*t (expected " + std::to_string(n - m * t) + ", got " + std::to_string(k) + ")");
}

GoppaCode::GoppaCode(CodeParams params,
                     std::shared_ptr<const FieldContext> field,
                     std::vector<FieldElement> support,
                     Poly goppa_poly) :
      m_params(params), m_field(std::move(field)), m_support(std::move(support)), m_goppa(std::move(goppa_poly)) {
   m_params.validate();
   require(m_field && m_field->degree() == m_params.m, ErrorCode::Parameter, "field degree differs from m");
   require(m_support.size() == m_params.n, ErrorCode::Parameter, "support length differs from n");
   require(m_goppa.degree() == static_cast<int>(m_params.t), ErrorCode::Parameter, "Goppa polynomial degree differs from t");

   std::vector<bool> seen(m_field->size(), false);
   for(auto a : m_support) {
      require(m_field->contains(a), ErrorCode::Parameter, "support element outside the field");
      require(!seen[a.value], ErrorCode::Parameter, "support elements are not distinct");
      seen[a.value] = true;
   }
   m_goppa = poly_make_monic(*m_field, m_goppa);
   require(poly_is_irreducible(*m_field, m_goppa), ErrorCode::Parameter, "Goppa polynomial is reducible");

   m_inv_g.reserve(m_support.size());
   for(auto a : m_support) {
      const FieldElement ga = poly_eval(*m_field, m_goppa, a);
      require(!ga.is_zero(), ErrorCode::Parameter, "Goppa polynomial vanishes on the support");
      m_inv_g.push_back(m_field->inv(ga));
   }
   m_sqrt_x = poly_sqrt_x_mod(*m_field, m_goppa);
}

GoppaCode generate_code(const CodeParams& params, Rng& rng) {
   params.validate();
   return generate_code(params, std::make_shared<const FieldContext>(params.m), rng);
}

GoppaCode generate_code(const CodeParams& params, std::shared_ptr<const FieldContext> field, Rng& rng) {
   params.validate();
   require(field && field->degree() == params.m, ErrorCode::Parameter, "field degree differs from m");

   const Permutation shuffle = random_permutation(field->size(), rng);
   std::vector<FieldElement> support(params.n);
   for(std::size_t i = 0; i < params.n; ++i) {
      support[i] = FieldElement{static_cast<std::uint16_t>(shuffle[i])};
   }

   for(;;) {
      std::vector<FieldElement> coeffs(params.t + 1);
      for(std::size_t i = 0; i < params.t; ++i) {
         coeffs[i] = FieldElement{static_cast<std::uint16_t>(rng.uniform(field->size()))};
      }
      coeffs[params.t] = FieldContext::one();
      Poly g(std::move(coeffs));
      if(poly_is_irreducible(*field, g)) {
         return GoppaCode(params, std::move(field), std::move(support), std::move(g));
      }
   }
}

ParityCheckMatrix parity_check(const GoppaCode& code) {
   const auto& p = code.params();
   const auto& f = code.field();
   ParityCheckMatrix h;
   h.over_field.assign(p.t, std::vector<FieldElement>(p.n));
   h.binary = BinaryMatrix(p.m * p.t, p.n);

   for(std::size_t i = 0; i < p.n; ++i) {
      FieldElement entry = code.inv_g_at_support()[i];
      for(std::size_t j = 0; j < p.t; ++j) {
         h.over_field[j][i] = entry;
         for(unsigned b = 0; b < p.m; ++b) {
            if((entry.value >> b) & 1) {
               h.binary.set(j * p.m + b, i);
            }
         }
         entry = f.mul(entry, code.support()[i]);
      }
   }
   h.binary_t = h.binary.transpose();
   return h;
}

BitVector syndrome(const ParityCheckMatrix& h, const BitVector& e) {
   return vec_mul(e, h.binary_t);
}

BitVector decode(const GoppaCode& code, const BitVector& synd) {
   const auto& p = code.params();
   const auto& f = code.field();
   require(synd.size() == p.m * p.t, ErrorCode::DimensionMismatch, "decode: syndrome length differs from m*t");

   BitVector error(p.n);
   if(synd.is_zero()) {
      return error;
   }

   const Poly& g = code.goppa_poly();
   const auto s = unpack_syndrome(code, synd);

   // S(x) = sum 1/(x - alpha_i) mod g; 1/(x - a) = (g(x) - g(a)) / (x - a) * g(a)^-1,
   // so coefficient j is sum_{l > j} g_l * s_{l-1-j}.
   std::vector<FieldElement> sc(p.t);
   for(std::size_t j = 0; j < p.t; ++j) {
      for(std::size_t l = j + 1; l <= p.t; ++l) {
         sc[j] = FieldContext::add(sc[j], f.mul(g.coeff(l), s[l - 1 - j]));
      }
   }
   const Poly syndrome_poly(std::move(sc));

   const auto inverse = poly_inv_mod(f, syndrome_poly, g);
   if(!inverse) {
      decoding_failure("syndrome polynomial is not invertible modulo g");
   }

   Poly sigma;
   const Poly tau_sq = poly_add(*inverse, Poly::x());
   if(tau_sq.is_zero()) {
      sigma = Poly::x();
   } else {
      const Poly tau = poly_sqrt_mod(f, tau_sq, g, code.sqrt_x());
      // a = b * tau mod g with deg a <= t/2
      const auto eea = poly_eea(f, g, tau, static_cast<int>(p.t / 2));
      const Poly& a = eea.d;
      const Poly& b = eea.v;
      sigma = poly_add(poly_mul(f, a, a), poly_mul(f, Poly::x(), poly_mul(f, b, b)));
   }

   if(sigma.degree() < 1 || static_cast<std::size_t>(sigma.degree()) > p.t) {
      decoding_failure("error locator degree out of range");
   }

   std::vector<std::size_t> positions;
   for(std::size_t i = 0; i < p.n; ++i) {
      if(poly_eval(f, sigma, code.support()[i]).is_zero()) {
         positions.push_back(i);
         error.set(i);
      }
   }
   if(positions.size() != static_cast<std::size_t>(sigma.degree())) {
      decoding_failure("error locator does not split over the support");
   }
   if(field_syndrome(code, positions) != s) {
      decoding_failure("recovered error does not reproduce the syndrome");
   }
   return error;
}

}  // namespace kal1
