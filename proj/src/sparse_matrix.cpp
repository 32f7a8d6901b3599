#include "operad/sparse_matrix.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "operad/error.hpp"

namespace operad {

void SparseRowMatrix::add_row(std::span<const SparseEntry> row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].value == 0) throw Error("sparse row: explicit zero entry");
    if (row[k].column >= columns_) throw Error("sparse row: column out of range");
    if (k > 0 && row[k - 1].column >= row[k].column) throw Error("sparse row: columns not increasing");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  offsets_.push_back(entries_.size());
}

bool SparseRowMatrix::has_unit_entries() const {
  for (const auto& e : entries_) {
    if (e.value != 1 && e.value != -1) return false;
  }
  return true;
}

void SparseRowMatrix::write_triples(std::ostream& out) const {
  out << "cols=" << columns_ << " rows=" << rows() << " degree=" << degree_ << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    out << i;
    for (const auto& e : row(i)) out << ' ' << e.column << ':' << e.value;
    out << '\n';
  }
}

SparseRowMatrix SparseRowMatrix::read_triples(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error("matrix dump: missing header");
  std::size_t cols = 0, rows = 0;
  int degree = 0;
  if (std::sscanf(header.c_str(), "cols=%zu rows=%zu degree=%d", &cols, &rows, &degree) != 3) {
    throw Error("matrix dump: malformed header");
  }
  SparseRowMatrix m(degree, cols);
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) throw Error("matrix dump: truncated");
    std::istringstream ls(line);
    std::size_t index = 0;
    ls >> index;
    if (index != i) throw Error("matrix dump: row index out of sequence");
    SparseRow row;
    std::string cell;
    while (ls >> cell) {
      const auto colon = cell.find(':');
      if (colon == std::string::npos) throw Error("matrix dump: malformed entry '" + cell + "'");
      row.push_back({static_cast<std::uint32_t>(std::stoul(cell.substr(0, colon))),
                     static_cast<std::int64_t>(std::stoll(cell.substr(colon + 1)))});
    }
    m.add_row(row);
  }
  return m;
}

}  // namespace operad
