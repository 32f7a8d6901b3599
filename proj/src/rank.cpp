#include "operad/rank.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <vector>

namespace operad {

namespace {

struct Cell {
  std::uint32_t col;
  std::uint64_t val;
};

class Eliminator {
 public:
  Eliminator(const SparseRowMatrix& m, const PrimeField& field)
      : f_(field),
        col_rows_(m.columns()),
        col_count_(m.columns(), 0),
        col_best_(m.columns()),
        dirty_(m.columns(), true) {
    rows_.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<Cell> row;
      for (const auto& e : m.row(i)) {
        const std::uint64_t v = f_.reduce(e.value);
        if (v != 0) row.push_back({e.column, v});
      }
      const auto r = static_cast<std::uint32_t>(rows_.size());
      for (const auto& c : row) {
        col_rows_[c.col].push_back(r);
        if (col_count_[c.col]++ == 0) ++active_cols_;
      }
      nnz_ += row.size();
      if (!row.empty()) ++active_rows_;
      rows_.push_back(std::move(row));
    }
  }

  RankStats run(double threshold) {
    RankStats stats;
    while (active_rows_ > 0) {
      const double density =
          static_cast<double>(nnz_) / (static_cast<double>(active_rows_) * static_cast<double>(active_cols_));
      if (density > threshold) {
          stats.dense_rows = active_rows_;
        stats.dense_columns = active_cols_;
        stats.rank += dense_phase();
        break;
      }
      const auto [row, col] = choose_pivot();
      eliminate(row, col);
      ++stats.rank;
      ++stats.sparse_pivots;
    }
    return stats;
  }

 private:
  const Cell* find(std::uint32_t r, std::uint32_t col) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const Cell& c, std::uint32_t v) { return c.col < v; });
    return it != row.end() && it->col == col ? &*it : nullptr;
  }

  void decrement(std::uint32_t col) {
    if (--col_count_[col] == 0) --active_cols_;
  }
  void increment(std::uint32_t col) {
    if (col_count_[col]++ == 0) ++active_cols_;
  }

  // Minimum (length, row) over the live rows of column col. Drops stale
  // entries from the column list when it has grown well past its count.
  std::pair<std::size_t, std::uint32_t> best_in_column(std::uint32_t col) {
    auto& list = col_rows_[col];
    if (list.size() > 2 * static_cast<std::size_t>(col_count_[col]) + 8) {
      std::vector<std::uint32_t> live;
      for (auto r : list) {
        if (find(r, col)) live.push_back(r);
      }
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      list.swap(live);
    }
    std::pair<std::size_t, std::uint32_t> best{std::numeric_limits<std::size_t>::max(), 0};
    for (auto r : list) {
      if (!find(r, col)) continue;
      best = std::min(best, std::pair<std::size_t, std::uint32_t>{rows_[r].size(), r});
    }
    return best;
  }

  // Exact Markowitz search over all active columns. Each column caches its
  // shortest live row; the cache is refreshed only for columns touched since.
  std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
    const auto cols = static_cast<std::uint32_t>(col_count_.size());
    // (cost, column, row), compared lexicographically.
    std::tuple<std::uint64_t, std::uint32_t, std::uint32_t> best{std::numeric_limits<std::uint64_t>::max(), 0, 0};
    for (std::uint32_t j = 0; j < cols; ++j) {
      const std::uint64_t count = col_count_[j];
      if (count == 0) continue;
      if (dirty_[j]) {
        col_best_[j] = best_in_column(j);
        dirty_[j] = false;
      }
      const auto& [len, r] = col_best_[j];
      best = std::min(best, std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>{len * count, j, r});
    }
    return {std::get<2>(best), std::get<1>(best)};
  }

  void eliminate(std::uint32_t pr, std::uint32_t pc) {
    std::vector<Cell> pivot = std::move(rows_[pr]);
    rows_[pr].clear();
    --active_rows_;
    nnz_ -= pivot.size();
    for (const auto& c : pivot) {
      decrement(c.col);
      dirty_[c.col] = true;
    }

    std::uint64_t lead = 0;
    for (const auto& c : pivot) {
      if (c.col == pc) lead = c.val;
    }
    const auto normalize = f_.scaler(f_.inv(lead));
    for (auto& c : pivot) c.val = normalize(c.val);

    std::vector<std::uint32_t> list = std::move(col_rows_[pc]);
    col_rows_[pc].clear();
    std::vector<Cell> merged;
    for (auto r : list) {
      const Cell* hit = r == pr ? nullptr : find(r, pc);
      if (!hit) continue;
      const auto scale = f_.scaler(hit->val);
      auto& row = rows_[r];
      merged.clear();
      merged.reserve(row.size() + pivot.size());
      std::size_t a = 0, b = 0;
      for (const auto& c : row) dirty_[c.col] = true;
      while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].col < pivot[b].col)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || pivot[b].col < row[a].col) {
          // Fill-in.
          merged.push_back({pivot[b].col, f_.neg(scale(pivot[b].val))});
          increment(pivot[b].col);
          col_rows_[pivot[b].col].push_back(r);
          dirty_[pivot[b].col] = true;
          ++nnz_;
          ++b;
        } else {
          const std::uint64_t v = f_.sub(row[a].val, scale(pivot[b].val));
          if (v != 0) {
            merged.push_back({row[a].col, v});
          } else {
            decrement(row[a].col);
            --nnz_;
          }
          ++a;
          ++b;
        }
      }
      row.swap(merged);
      if (row.empty()) --active_rows_;
    }
  }

  // Elimination over the remaining active columns, keeping the pivot rows in
  // reduced echelon form. A pivot row is then zero on every other pivot
  // column, so reducing an incoming row costs (its pivot-column entries) x
  // (free columns) rather than touching the whole echelon.
  std::size_t dense_phase() {
    std::vector<std::uint32_t> dense_index(col_count_.size(), 0);
    std::uint32_t width = 0;
    for (std::size_t j = 0; j < col_count_.size(); ++j) {
      if (col_count_[j] > 0) dense_index[j] = width++;
    }
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> pivot_of(width, kNone);
    std::vector<std::uint32_t> free_cols(width);
    for (std::uint32_t k = 0; k < width; ++k) free_cols[k] = k;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::uint64_t> buf(width);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> hits;
    for (auto& row : rows_) {
      if (row.empty()) continue;
      if (free_cols.empty()) break;
      std::fill(buf.begin(), buf.end(), 0);
      hits.clear();
      for (const auto& c : row) {
        const std::uint32_t k = dense_index[c.col];
        if (pivot_of[k] == kNone) {
          buf[k] = c.val;
        } else {
          hits.emplace_back(pivot_of[k], c.val);
        }
      }
      std::vector<Cell>().swap(row);
      for (const auto& [pi, v] : hits) {
        const auto scale = f_.scaler(v);
        const auto& p = pivots[pi];
        for (auto k : free_cols) {
          if (p[k] != 0) buf[k] = f_.sub(buf[k], scale(p[k]));
        }
      }
      std::size_t at = 0;
      while (at < free_cols.size() && buf[free_cols[at]] == 0) ++at;
      if (at == free_cols.size()) continue;
      const std::uint32_t c = free_cols[at];
      free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(at));
      const auto normalize = f_.scaler(f_.inv(buf[c]));
      std::vector<std::uint64_t> fresh(width, 0);
      fresh[c] = 1;
      for (auto k : free_cols) {
        if (buf[k] != 0) fresh[k] = normalize(buf[k]);
      }
      for (auto& p : pivots) {
        if (p[c] == 0) continue;
        const auto scale = f_.scaler(p[c]);
        for (auto k : free_cols) {
          if (fresh[k] != 0) p[k] = f_.sub(p[k], scale(fresh[k]));
        }
        p[c] = 0;
      }
      pivot_of[c] = static_cast<std::uint32_t>(pivots.size());
      pivots.push_back(std::move(fresh));
    }
    return pivots.size();
  }

  const PrimeField& f_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<std::pair<std::size_t, std::uint32_t>> col_best_;
  std::vector<bool> dirty_;
  std::size_t active_rows_ = 0;
  std::size_t active_cols_ = 0;
  std::size_t nnz_ = 0;
};

}  // namespace

RankStats rank_mod_p_stats(const SparseRowMatrix& m, const PrimeField& field, const RankOptions& options) {
  Eliminator e(m, field);
  return e.run(options.dense_threshold);
}

}  // namespace operad
