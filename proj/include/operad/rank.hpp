#ifndef OPERAD_RANK_HPP
#define OPERAD_RANK_HPP

#include <cstddef>

#include "operad/prime_field.hpp"
#include "operad/sparse_matrix.hpp"

namespace operad {

struct RankOptions {
  // Switch from sparse to dense elimination once the active submatrix has
  // more than this fraction of nonzeros. The consequence matrices have far
  // more rows than columns, and past about 1% density the Markowitz search
  // costs more than the dense phase saves.
  double dense_threshold = 0.01;
};

struct RankStats {
  std::size_t rank = 0;
  std::size_t sparse_pivots = 0;
  std::size_t dense_rows = 0;     // rows handed to the dense phase
  std::size_t dense_columns = 0;  // active columns at the switch
};

// Rank of m reduced mod p. Sparse Gaussian elimination with Markowitz pivoting:
// the pivot minimizes row length times column count, ties going to the lowest
// column and then the lowest row. Pivot rows are dropped as soon as they are
// used. Deterministic for a given matrix and threshold.
RankStats rank_mod_p_stats(const SparseRowMatrix& m, const PrimeField& field, const RankOptions& options = {});

inline std::size_t rank_mod_p(const SparseRowMatrix& m, const PrimeField& field, const RankOptions& options = {}) {
  return rank_mod_p_stats(m, field, options).rank;
}

}  // namespace operad

#endif  // OPERAD_RANK_HPP
