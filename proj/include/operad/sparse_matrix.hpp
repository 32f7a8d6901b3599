#ifndef OPERAD_SPARSE_MATRIX_HPP
#define OPERAD_SPARSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace operad {

struct SparseEntry {
  std::uint32_t column = 0;
  std::int64_t value = 0;

  friend auto operator<=>(const SparseEntry&, const SparseEntry&) = default;
};

using SparseRow = std::vector<SparseEntry>;

// Integer matrix stored row-compressed. Rows are sorted by column and hold no
// zero entries.
class SparseRowMatrix {
 public:
  SparseRowMatrix() = default;
  SparseRowMatrix(int degree, std::size_t columns) : degree_(degree), columns_(columns) {}

  // Appends a row; throws if it is unsorted, has a zero or an out-of-range column.
  void add_row(std::span<const SparseEntry> row);

  int degree() const noexcept { return degree_; }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return offsets_.size() - 1; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  std::span<const SparseEntry> row(std::size_t i) const {
    return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
  }

  // True when every entry is +1 or -1.
  bool has_unit_entries() const;

  // Text dump: header "cols=<c> rows=<r> degree=<n>", then one line per row,
  // "<row_index> col:entry col:entry ...".
  void write_triples(std::ostream& out) const;
  static SparseRowMatrix read_triples(std::istream& in);

 private:
  int degree_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<SparseEntry> entries_;
};

}  // namespace operad

#endif  // OPERAD_SPARSE_MATRIX_HPP
