#pragma once

#include <kal1/binmat.hpp>
#include <kal1/gf2m.hpp>
#include <kal1/rng.hpp>

#include <cstddef>
#include <memory>
#include <vector>

namespace kal1 {

/// Binary Goppa code parameters. Valid sets satisfy n <= 2^m, t >= 2, k = n - m*t >= 1.
struct CodeParams {
      std::size_t n = 0;
      std::size_t k = 0;
      std::size_t t = 0;
      unsigned m = 0;

      /// Throws ParameterError describing the first violated constraint.
      void validate() const;
      std::size_t redundancy() const { return n - k; }

      bool operator==(const CodeParams&) const = default;
};

/**
* Irreducible binary Goppa code: n distinct support elements of GF(2^m) and a
* monic irreducible Goppa polynomial of degree t (which therefore has no
* roots in the field).
*/
class GoppaCode final {
   public:
      /// Validates the invariants; throws ParameterError on violation.
      GoppaCode(CodeParams params,
                std::shared_ptr<const FieldContext> field,
                std::vector<FieldElement> support,
                Poly goppa_poly);

      const CodeParams& params() const { return m_params; }
      const FieldContext& field() const { return *m_field; }
      std::shared_ptr<const FieldContext> field_ptr() const { return m_field; }
      const std::vector<FieldElement>& support() const { return m_support; }
      const Poly& goppa_poly() const { return m_goppa; }

      /// 1/g(alpha_i) for every support position.
      const std::vector<FieldElement>& inv_g_at_support() const { return m_inv_g; }
      /// sqrt(x) mod g, used by the decoder's square-root step.
      const Poly& sqrt_x() const { return m_sqrt_x; }

   private:
      CodeParams m_params;
      std::shared_ptr<const FieldContext> m_field;
      std::vector<FieldElement> m_support;
      Poly m_goppa;
      std::vector<FieldElement> m_inv_g;
      Poly m_sqrt_x;
};

/**
* over_field is t x n with entry (j, i) = alpha_i^j / g(alpha_i).
* binary is the (m*t) x n expansion: row j*m + b holds bit b (coefficient of
* x^b) of over_field row j, so coefficient 0 is the topmost of each m-row group.
*/
struct ParityCheckMatrix {
      std::vector<std::vector<FieldElement>> over_field;
      BinaryMatrix binary;
      BinaryMatrix binary_t;
};

/**
* Draws a code in a pinned order: the support is the first n entries of a
* Fisher-Yates shuffle of all 2^m field elements; then g is drawn as a monic
* polynomial with t uniform lower coefficients (constant term first) until one
* is irreducible.
*/
GoppaCode generate_code(const CodeParams& params, Rng& rng);
GoppaCode generate_code(const CodeParams& params, std::shared_ptr<const FieldContext> field, Rng& rng);

ParityCheckMatrix parity_check(const GoppaCode& code);

/// e * binary^T, length m*t.
BitVector syndrome(const ParityCheckMatrix& h, const BitVector& e);

/**
* Patterson decoding. Returns the unique error of weight <= t with the given
* syndrome, or throws DecodingFailure.
*/
BitVector decode(const GoppaCode& code, const BitVector& synd);

}  // namespace kal1
