#pragma once

#include <kal1/binmat.hpp>
#include <kal1/kal1.hpp>
#include <kal1/rng.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace kal1 {

/// Find e with wt(e) <= t and e * h^T = s, where h is (n-k) x n.
struct IsdInstance {
      BinaryMatrix h;
      BitVector s;
      std::size_t t = 0;
};

inline constexpr std::size_t IsdDefaultMaxLength = 64;

struct IsdOptions {
      std::size_t max_iters = 10000;
      /// Iterations are dealt round-robin; worker w draws from rng.fork(w) (or rng itself when workers == 1).
      unsigned workers = 1;
      /// Required for n > IsdDefaultMaxLength.
      bool allow_large = false;
      /// Solution cosets of dimension up to this are searched exhaustively.
      std::size_t max_kernel_dim = 12;
};

struct IsdResult {
      std::optional<BitVector> error;
      /// 1-based index of the successful iteration, or the number run when nothing was found.
      std::size_t iterations = 0;
};

/**
* Prange information-set decoding. Each iteration draws a uniform set J of
* n-k columns (partial Fisher-Yates), solves h_J x = s, and accepts the
* lightest solution supported on J if its weight is <= t. Rank-deficient h_J
* is handled by searching the solution coset, so an iteration succeeds
* exactly when some weight <= t solution is supported on J. With several
* workers the result is the success with the smallest iteration index, which
* is reproducible for a fixed seed and worker count.
*/
IsdResult prange_isd(const IsdInstance& inst, const IsdOptions& opts, Rng& rng);

/// Public parity-check view (n-k) x n of an n x (n-k) transposed matrix.
inline BinaryMatrix parity_view(const BinaryMatrix& transposed) {
   return transposed.transpose();
}

struct RankReport {
      std::size_t n = 0;
      std::size_t k = 0;
      std::size_t rank_h_cyclic_t = 0;
      std::size_t rank_h_prime_t = 0;
      std::size_t rank_h_secondary_t = 0;
      std::size_t rank_cyclic_block = 0;
      std::size_t rank_identity_block = 0;
      bool subadditive = false;
      /// Some n-k rows of H_cyclic^T are independent, so an attacker has an information set.
      bool full_rank_submatrix = false;

      std::string to_text() const;
};

RankReport rank_report(const ExpandedCyclicKey& pk_expanded, const Kal1PrivateKey& sk);

}  // namespace kal1
