#include "operad/consequences.hpp"

#include <algorithm>
#include <limits>

#include "operad/error.hpp"
#include "operad/prime_field.hpp"
#include "operad/rank.hpp"

namespace operad {

namespace {

// Index maps from degree d to degree d + 1 for the moves that introduce the
// new variable x = d + 1.
struct MoveTables {
  int degree = 0;
  std::vector<std::uint32_t> left;   // x * m
  std::vector<std::uint32_t> right;  // m * x
  std::vector<std::uint32_t> subst;  // [i * 2d + 2(v-1) + side]: v <- v*x, v <- x*v

  int move_count() const { return 2 + 2 * degree; }

  std::uint32_t apply(int move, std::uint32_t i) const {
    if (move == 0) return left[i];
    if (move == 1) return right[i];
    return subst[static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * degree) +
                 static_cast<std::size_t>(move - 2)];
  }
};

MoveTables build_moves(int d) {
  const auto& from = MonomialBasis::of(d);
  const auto& to = MonomialBasis::of(d + 1);
  MoveTables t;
  t.degree = d;
  const auto size = from.size();
  t.left.resize(size);
  t.right.resize(size);
  t.subst.resize(size * static_cast<std::size_t>(2 * d));
  const Monomial x = Monomial::variable(d + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    const Monomial m = from.at({i});
    t.left[i] = static_cast<std::uint32_t>(to.index(graft(x, m)).value);
    t.right[i] = static_cast<std::uint32_t>(to.index(graft(m, x)).value);
    for (Label v = 1; v <= d; ++v) {
      const Monomial var = Monomial::variable(v);
      const std::size_t base = i * static_cast<std::size_t>(2 * d) + static_cast<std::size_t>(2 * (v - 1));
      t.subst[base] = static_cast<std::uint32_t>(to.index(substitute(m, v, Monomial::product(var, x))).value);
      t.subst[base + 1] = static_cast<std::uint32_t>(to.index(substitute(m, v, Monomial::product(x, var))).value);
    }
  }
  return t;
}

// Action of S_d on column indices of degree d.
class Relabeler {
 public:
  explicit Relabeler(int d) : perms_(factorial(d)), words_(all_permutations(d)) {
    if (perms_ <= 5040) {
      compose_.resize(perms_ * perms_);
      for (std::uint64_t pi = 0; pi < perms_; ++pi) {
        for (std::uint64_t r = 0; r < perms_; ++r) compose_[pi * perms_ + r] = static_cast<std::uint16_t>(compose(pi, r));
      }
    }
  }

  std::uint64_t permutation_count() const { return perms_; }

  // Relabels row by permutation pi into out, sorted and with a positive leading entry.
  void apply(const SparseRow& row, std::uint64_t pi, SparseRow& out) const {
    out.resize(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::uint64_t col = row[k].column;
      const std::uint64_t shape = col / perms_, r = col % perms_;
      const std::uint64_t image = compose_.empty() ? compose(pi, r) : compose_[pi * perms_ + r];
      out[k] = {static_cast<std::uint32_t>(shape * perms_ + image), row[k].value};
    }
    std::sort(out.begin(), out.end());
    if (!out.empty() && out.front().value < 0) {
      for (auto& e : out) e.value = -e.value;
    }
  }

  // Lexicographically least sign-normalized row in the orbit of row.
  SparseRow canonical(const SparseRow& row) const {
    SparseRow best, tmp;
    for (std::uint64_t pi = 0; pi < perms_; ++pi) {
      apply(row, pi, tmp);
      if (pi == 0 || tmp < best) best.swap(tmp);
    }
    return best;
  }

 private:
  std::uint64_t compose(std::uint64_t pi, std::uint64_t r) const {
    const auto& p = words_[pi];
    const auto& w = words_[r];
    std::vector<Label> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = p[static_cast<std::size_t>(w[i] - 1)];
    return permutation_rank(out);
  }

  std::uint64_t perms_;
  std::vector<std::vector<Label>> words_;
  std::vector<std::uint16_t> compose_;
};

void sort_unique(std::vector<SparseRow>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

SparseRow identity_row(const Identity& id) {
  if (id.empty()) throw Error("identity_row: empty identity");
  if (!id.is_multilinear()) throw Error("identity_row: identity is not multilinear: " + to_string(id));
  const auto& basis = MonomialBasis::of(id.degree());
  SparseRow row;
  for (const auto& t : id.terms()) {
    row.push_back({static_cast<std::uint32_t>(basis.index(t.monomial).value), t.coefficient});
  }
  std::sort(row.begin(), row.end());
  return row;
}

SparseRowMatrix expand_consequences(std::span<const Identity> ids, int n) {
  if (n < 1) throw Error("expand_consequences: degree must be positive");
  const std::uint64_t columns = dim_free(n);
  if (columns > std::numeric_limits<std::uint32_t>::max()) throw Error("expand_consequences: degree too large");
  SparseRowMatrix out(n, static_cast<std::size_t>(columns));
  if (ids.empty()) return out;

  int lowest = n;
  for (const auto& id : ids) {
    if (id.empty()) throw Error("expand_consequences: empty identity");
    if (!id.is_multilinear()) throw Error("expand_consequences: identity is not multilinear: " + to_string(id));
    if (id.degree() > n) {
      throw Error("expand_consequences: degree " + std::to_string(n) + " is below the degree of " + to_string(id));
    }
    lowest = std::min(lowest, id.degree());
  }

  // Only orbit representatives are carried between degrees. The moves commute
  // with relabelings of the old variables, so closing the moved
  // representatives under S_{d+1} gives the same rows as moving every row.
  std::vector<SparseRow> reps;
  for (int d = lowest; d <= n; ++d) {
    const Relabeler relabel(d);
    std::vector<SparseRow> next;
    if (d > lowest) {
      const MoveTables moves = build_moves(d - 1);
      SparseRow moved;
      for (const auto& rep : reps) {
        for (int mv = 0; mv < moves.move_count(); ++mv) {
          moved.clear();
          for (const auto& e : rep) moved.push_back({moves.apply(mv, e.column), e.value});
          next.push_back(relabel.canonical(moved));
        }
      }
    }
    for (const auto& id : ids) {
      if (id.degree() == d) next.push_back(relabel.canonical(identity_row(id)));
    }
    sort_unique(next);
    reps = std::move(next);
  }

  const Relabeler relabel(n);
  std::vector<SparseRow> orbit(relabel.permutation_count());
  for (const auto& rep : reps) {
    for (std::uint64_t pi = 0; pi < relabel.permutation_count(); ++pi) relabel.apply(rep, pi, orbit[pi]);
    auto copy = orbit;
    sort_unique(copy);
    for (const auto& row : copy) out.add_row(row);
  }
  return out;
}

std::uint64_t operad_dim_mod_p(std::span<const Identity> ids, int n, std::uint64_t p) {
  std::vector<Identity> usable;
  for (const auto& id : ids) {
    if (id.degree() <= n) usable.push_back(id);
  }
  const SparseRowMatrix m = expand_consequences(usable, n);
  return dim_free(n) - rank_mod_p(m, PrimeField(p));
}

}  // namespace operad
