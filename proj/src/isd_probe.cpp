#include <kal1/isd_probe.hpp>

#include <kal1/error.hpp>

#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

namespace kal1 {

namespace {

/// One Prange iteration. Returns the lightest weight <= t solution supported on the drawn set.
std::optional<BitVector> prange_iteration(const IsdInstance& inst, const IsdOptions& opts, Rng& rng) {
   const std::size_t rows = inst.h.rows();
   const std::size_t n = inst.h.cols();

   std::vector<std::size_t> cols(n);
   std::iota(cols.begin(), cols.end(), 0);
   for(std::size_t i = 0; i < rows; ++i) {
      const std::size_t j = i + rng.uniform(static_cast<std::uint32_t>(n - i));
      std::swap(cols[i], cols[j]);
   }

   // augmented [h_J | s]
   BinaryMatrix a(rows, rows + 1);
   for(std::size_t r = 0; r < rows; ++r) {
      for(std::size_t c = 0; c < rows; ++c) {
         if(inst.h.get(r, cols[c])) {
            a.set(r, c);
         }
      }
      if(inst.s.get(r)) {
         a.set(r, rows);
      }
   }

   std::vector<std::size_t> pivot_cols;
   std::size_t rank = 0;
   for(std::size_t c = 0; c < rows && rank < rows; ++c) {
      std::size_t p = rank;
      while(p < rows && !a.get(p, c)) {
         ++p;
      }
      if(p == rows) {
         continue;
      }
      a.swap_rows(p, rank);
      for(std::size_t r = 0; r < rows; ++r) {
         if(r != rank && a.get(r, c)) {
            a.xor_row_into(rank, r);
         }
      }
      pivot_cols.push_back(c);
      ++rank;
   }
   for(std::size_t r = rank; r < rows; ++r) {
      if(a.get(r, rows)) {
         return std::nullopt;
      }
   }

   std::vector<bool> is_pivot(rows, false);
   for(auto c : pivot_cols) {
      is_pivot[c] = true;
   }
   std::vector<std::size_t> free_cols;
   for(std::size_t c = 0; c < rows; ++c) {
      if(!is_pivot[c]) {
         free_cols.push_back(c);
      }
   }

   // particular solution (free variables zero) and one kernel vector per free column, over local indices
   BitVector particular(rows);
   for(std::size_t i = 0; i < rank; ++i) {
      if(a.get(i, rows)) {
         particular.set(pivot_cols[i]);
      }
   }
   std::vector<BitVector> kernel;
   if(free_cols.size() <= opts.max_kernel_dim) {
      for(auto f : free_cols) {
         BitVector v(rows);
         v.set(f);
         for(std::size_t i = 0; i < rank; ++i) {
            if(a.get(i, f)) {
               v.set(pivot_cols[i]);
            }
         }
         kernel.push_back(std::move(v));
      }
   }

   BitVector best = particular;
   std::size_t best_weight = particular.weight();
   const std::size_t combos = std::size_t(1) << kernel.size();
   BitVector cur = particular;
   for(std::size_t g = 1; g < combos; ++g) {
      // Gray code walk: flip the kernel vector of the lowest set bit of g
      cur ^= kernel[static_cast<std::size_t>(std::countr_zero(g))];
      const std::size_t w = cur.weight();
      if(w < best_weight) {
         best = cur;
         best_weight = w;
      }
   }
   if(best_weight > inst.t) {
      return std::nullopt;
   }

   BitVector e(n);
   for(auto i : best.support()) {
      e.set(cols[i]);
   }
   return e;
}

void check_solution(const IsdInstance& inst, const BitVector& e) {
   require(e.weight() <= inst.t && vec_mul(e, inst.h.transpose()) == inst.s,
           ErrorCode::DecodingFailure,
           "ISD produced an invalid solution");
}

}  // namespace

IsdResult prange_isd(const IsdInstance& inst, const IsdOptions& opts, Rng& rng) {
   const std::size_t rows = inst.h.rows();
   const std::size_t n = inst.h.cols();
   require(inst.s.size() == rows, ErrorCode::DimensionMismatch, "syndrome length differs from the row count");
   require(rows <= n, ErrorCode::DimensionMismatch, "parity-check matrix has more rows than columns");
   require(inst.t <= rows, ErrorCode::Parameter, "t must not exceed n-k");
   require(n <= IsdDefaultMaxLength || opts.allow_large,
           ErrorCode::Parameter,
           "ISD probe refuses n > " + std::to_string(IsdDefaultMaxLength) + " without an explicit override");
   require(opts.workers >= 1, ErrorCode::Parameter, "at least one worker is required");

   if(inst.s.is_zero()) {
      return IsdResult{BitVector(n), 0};
   }
   if(inst.t == 0) {
      return IsdResult{std::nullopt, 0};
   }

   if(opts.workers == 1) {
      for(std::size_t it = 0; it < opts.max_iters; ++it) {
         if(auto e = prange_iteration(inst, opts, rng)) {
            check_solution(inst, *e);
            return IsdResult{std::move(e), it + 1};
         }
      }
      return IsdResult{std::nullopt, opts.max_iters};
   }

   std::atomic<std::size_t> best_index{std::numeric_limits<std::size_t>::max()};
   std::mutex mutex;
   std::optional<BitVector> best;
   std::vector<Rng> streams;
   for(unsigned w = 0; w < opts.workers; ++w) {
      streams.push_back(rng.fork(w));
   }
   {
      std::vector<std::jthread> threads;
      for(unsigned w = 0; w < opts.workers; ++w) {
         threads.emplace_back([&, w] {
            for(std::size_t it = w; it < opts.max_iters && it < best_index.load(); it += opts.workers) {
               if(auto e = prange_iteration(inst, opts, streams[w])) {
                  const std::lock_guard lock(mutex);
                  if(it < best_index.load()) {
                     best_index = it;
                     best = std::move(e);
                  }
                  return;
               }
            }
         });
      }
   }
   if(best) {
      check_solution(inst, *best);
      return IsdResult{std::move(best), best_index.load() + 1};
   }
   return IsdResult{std::nullopt, opts.max_iters};
}

std::string RankReport::to_text() const {
   std::ostringstream os;
   os << "n: " << n << '\n'
      << "k: " << k << '\n'
      << "rank H_cyclic^T: " << rank_h_cyclic_t << '\n'
      << "rank H'^T: " << rank_h_prime_t << '\n'
      << "rank H_secondary^T: " << rank_h_secondary_t << '\n'
      << "rank cyclic block: " << rank_cyclic_block << '\n'
      << "rank identity block: " << rank_identity_block << '\n'
      << "subadditivity rank(H'^T + H_secondary^T) <= rank(H'^T) + rank(H_secondary^T): "
      << (subadditive ? "holds" : "VIOLATED") << '\n'
      << "full-rank (n-k)x(n-k) submatrix available to ISD: " << (full_rank_submatrix ? "yes" : "no") << '\n';
   return os.str();
}

RankReport rank_report(const ExpandedCyclicKey& pk_expanded, const Kal1PrivateKey& sk) {
   const auto& p = pk_expanded.params;
   const std::size_t r = p.redundancy();
   const BinaryMatrix secondary = h_secondary_t(pk_expanded, sk);

   RankReport rep;
   rep.n = p.n;
   rep.k = p.k;
   rep.rank_h_cyclic_t = bm_rank(pk_expanded.h_cyclic_t);
   rep.rank_h_prime_t = bm_rank(sk.h_prime.h_prime_t);
   rep.rank_h_secondary_t = bm_rank(secondary);
   rep.rank_cyclic_block = bm_rank(pk_expanded.h_cyclic_t.block(0, 0, p.k, r));
   rep.rank_identity_block = bm_rank(pk_expanded.h_cyclic_t.block(p.k, 0, r, r));
   rep.subadditive = rep.rank_h_cyclic_t <= rep.rank_h_prime_t + rep.rank_h_secondary_t;
   rep.full_rank_submatrix = rep.rank_h_cyclic_t == r;
   return rep;
}

}  // namespace kal1
