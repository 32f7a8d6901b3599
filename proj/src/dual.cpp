#include "operad/dual.hpp"

#include <numeric>

#include "operad/error.hpp"

namespace operad {

namespace {

const std::vector<std::string> kNames = {"x", "y", "z"};
constexpr std::size_t kWords = 6;  // permutations of three letters

std::vector<RationalVector> reduced_echelon(std::vector<RationalVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t k = 0; k < width; ++k) rows[i][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

int diagonal_sign(std::size_t index) {
  const Monomial m = monomial_at(3, {index});
  return pairing(m, m);
}

// Relabels a degree-3 vector by the permutation word pi.
RationalVector act(const RationalVector& v, const std::vector<Label>& pi) {
  RationalVector out(v.size());
  const bool words = v.size() == kWords;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (words) {
      const auto w = permutation_unrank(3, i);
      std::vector<Label> image(3);
      for (std::size_t k = 0; k < 3; ++k) image[k] = pi[static_cast<std::size_t>(w[k] - 1)];
      out[permutation_rank(image)] = v[i];
    } else {
      out[monomial_index(relabel(monomial_at(3, {i}), pi)).value] = v[i];
    }
  }
  return out;
}

// A subset of the basis whose S_3-orbits span the same space, chosen greedily
// in echelon order.
std::vector<RationalVector> orbit_generators(const std::vector<RationalVector>& basis) {
  const auto perms = all_permutations(3);
  std::vector<RationalVector> chosen, orbit;
  RelationSpace spanned;
  for (const auto& b : basis) {
    if (spanned.contains(b)) continue;
    chosen.push_back(b);
    for (const auto& pi : perms) orbit.push_back(act(b, pi));
    spanned = RelationSpace(orbit);
  }
  return chosen;
}

// Clears denominators and common factors, keeping the sign.
std::vector<std::int64_t> integer_coefficients(const RationalVector& v) {
  boost::multiprecision::cpp_int lcm = 1, gcd = 0;
  for (const auto& x : v) {
    if (x != 0) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  }
  std::vector<boost::multiprecision::cpp_int> scaled;
  for (const auto& x : v) {
    scaled.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
    gcd = boost::multiprecision::gcd(gcd, scaled.back());
  }
  std::vector<std::int64_t> out;
  for (const auto& s : scaled) out.push_back(gcd == 0 ? 0 : static_cast<std::int64_t>(s / gcd));
  return out;
}

Monomial mirror(const Monomial& m) {
  if (m.is_variable()) return m;
  return Monomial::product(mirror(m.right()), mirror(m.left()));
}

}  // namespace

RelationSpace::RelationSpace(std::vector<RationalVector> generators) {
  for (const auto& g : generators) {
    if (g.size() != generators.front().size()) throw Error("relation space: vectors of different lengths");
  }
  basis_ = reduced_echelon(std::move(generators));
}

bool RelationSpace::contains(const RationalVector& v) const {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
  auto rows = basis_;
  rows.push_back(v);
  return reduced_echelon(std::move(rows)).size() == basis_.size();
}

bool RelationSpace::contains(const RelationSpace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& v) { return contains(v); });
}

int pairing(const Monomial& a, const Monomial& b) {
  if (a.degree() != 3 || b.degree() != 3) throw Error("pairing: monomials must have degree 3");
  if (!a.is_multilinear() || !b.is_multilinear()) throw Error("pairing: monomials must be multilinear");
  if (a != b) return 0;
  const int sign = permutation_sign(a.labels());
  // (ab)c is node(node(leaf, leaf), leaf).
  const bool left_normed = !a.shape().left().is_leaf();
  return left_normed ? sign : -sign;
}

RationalVector to_vector(const Identity& id) {
  if (id.degree() != 3 || !id.is_multilinear()) {
    throw Error("dual: identity must be multilinear of degree 3: " + to_string(id));
  }
  RationalVector v(kCubicDim);
  for (const auto& t : id.terms()) v[monomial_index(t.monomial).value] += t.coefficient;
  return v;
}

RelationSpace relation_space(std::span<const Identity> ids) {
  std::vector<RationalVector> orbit;
  const auto perms = all_permutations(3);
  for (const auto& id : ids) {
    const RationalVector v = to_vector(id);
    for (const auto& pi : perms) orbit.push_back(act(v, pi));
  }
  return RelationSpace(std::move(orbit));
}

RelationSpace annihilator(const RelationSpace& r) {
  // Rows d_i * r_i; the annihilator is their null space.
  std::vector<RationalVector> rows;
  for (const auto& b : r.basis()) {
    RationalVector row(kCubicDim);
    for (std::size_t i = 0; i < kCubicDim; ++i) row[i] = b[i] * diagonal_sign(i);
    rows.push_back(std::move(row));
  }
  rows = reduced_echelon(std::move(rows));
  std::vector<std::size_t> pivot_col;
  for (const auto& row : rows) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<RationalVector> null_basis;
  for (std::size_t free = 0; free < kCubicDim; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    RationalVector v(kCubicDim);
    v[free] = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) v[pivot_col[k]] = -rows[k][free];
    null_basis.push_back(std::move(v));
  }
  return RelationSpace(std::move(null_basis));
}

std::vector<Identity> DualPresentation::identities() const {
  std::vector<Identity> out;
  if (associative) out.push_back(parse_identity("(x*y)*z - x*(y*z) = 0"));
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::string DualPresentation::to_string() const {
  std::string out = associative ? "associative" : "";
  for (const auto& id : extra) out += (out.empty() ? "" : "; ") + operad::to_string(id);
  return out.empty() ? "free" : out;
}

DualPresentation dual_relations(std::span<const Identity> ids) {
  const RelationSpace dual = annihilator(relation_space(ids));
  const Identity assoc = parse_identity("(x*y)*z - x*(y*z) = 0");
  const RelationSpace assoc_space = relation_space(std::span(&assoc, 1));

  DualPresentation out;
  const TreeShape left_normed = TreeShape::node(TreeShape::node(TreeShape::leaf(), TreeShape::leaf()), TreeShape::leaf());
  if (dual.contains(assoc_space)) {
    out.associative = true;
    // Modulo associativity both shapes of a label word coincide; index 0..5
    // is the a(bc) block and 6..11 the (ab)c block.
    std::vector<RationalVector> words;
    for (const auto& b : dual.basis()) {
      RationalVector w(kWords);
      for (std::size_t i = 0; i < kWords; ++i) w[i] = b[i] + b[i + kWords];
      words.push_back(std::move(w));
    }
    const RelationSpace image(std::move(words));
    for (const auto& g : orbit_generators(image.basis())) {
      const auto coeffs = integer_coefficients(g);
      std::vector<Term> terms;
      for (std::size_t i = 0; i < kWords; ++i) {
        if (coeffs[i] != 0) terms.push_back({coeffs[i], Monomial(left_normed, permutation_unrank(3, i))});
      }
      out.extra.emplace_back(std::move(terms), kNames);
    }
  } else {
    for (const auto& g : orbit_generators(dual.basis())) {
      const auto coeffs = integer_coefficients(g);
      std::vector<Term> terms;
      for (std::size_t i = 0; i < kCubicDim; ++i) {
        if (coeffs[i] != 0) terms.push_back({coeffs[i], monomial_at(3, {i})});
      }
      out.extra.emplace_back(std::move(terms), kNames);
    }
  }
  return out;
}

Identity opposite(const Identity& id) {
  std::vector<Term> terms;
  for (const auto& t : id.terms()) terms.push_back({t.coefficient, mirror(t.monomial)});
  return Identity(std::move(terms), id.names());
}

}  // namespace operad
