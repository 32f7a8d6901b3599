#ifndef OPERAD_MONOMIAL_HPP
#define OPERAD_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace operad {

// Variables are positive integers. Names live in the identity layer.
using Label = int;

// Binary tree shape (association type) of a nonassociative monomial.
//
// Shapes with the same number of leaves are totally ordered: node(l, r) is
// compared by the leaf count of l first, then by l, then by r. This is the
// order in which enumerate_shapes() generates them and it fixes the column
// order of every consequence matrix.
class TreeShape {
 public:
  TreeShape();  // a single leaf

  static TreeShape leaf() { return TreeShape(); }
  static TreeShape node(const TreeShape& left, const TreeShape& right);

  bool is_leaf() const noexcept { return code_.size() == 1; }
  int leaf_count() const noexcept { return leaves_; }
  TreeShape left() const;
  TreeShape right() const;

  // Preorder encoding, 'n' for an inner node and 'l' for a leaf.
  const std::string& code() const noexcept { return code_; }

  friend bool operator==(const TreeShape& a, const TreeShape& b) noexcept {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b);

 private:
  explicit TreeShape(std::string code);

  std::string code_;
  int leaves_ = 1;
};

// All shapes with n leaves in canonical order; there are catalan(n - 1) of them.
std::vector<TreeShape> enumerate_shapes(int n);

std::uint64_t catalan(int n);
std::uint64_t factorial(int n);

// Number of multilinear nonassociative monomials of degree n: catalan(n-1) * n!.
std::uint64_t dim_free(int n);

// A fully parenthesized product of variables. Labels are read off the leaves
// left to right. Nothing here requires the labels to be distinct; the
// multilinear operations check it explicitly.
class Monomial {
 public:
  Monomial(TreeShape shape, std::vector<Label> labels);

  static Monomial variable(Label v);
  // Product in the free magma; no disjointness check.
  static Monomial product(const Monomial& a, const Monomial& b);

  const TreeShape& shape() const noexcept { return shape_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  int degree() const noexcept { return static_cast<int>(labels_.size()); }
  bool is_variable() const noexcept { return shape_.is_leaf(); }

  Monomial left() const;
  Monomial right() const;

  bool is_multilinear() const;
  // Multiplicity of each variable, keyed by label.
  std::map<Label, int> multiplicities() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.shape_ == b.shape_ && a.labels_ == b.labels_;
  }
  // Canonical order: shape first, then the label word lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  TreeShape shape_;
  std::vector<Label> labels_;
};

// Debug rendering with numeric labels and minimal parentheses, e.g. "x1*(x2*x3)".
std::string to_string(const Monomial& m);

// m1 * m2 for monomials with disjoint label sets.
Monomial graft(const Monomial& m1, const Monomial& m2);

// Replaces the single leaf labeled v by s.
Monomial substitute(const Monomial& m, Label v, const Monomial& s);

// Applies the permutation pi (a bijection on the variable set of m) to the labels.
Monomial relabel(const Monomial& m, const std::map<Label, Label>& pi);
// Same, with images[v - 1] the image of label v. Must be a permutation of 1..k
// covering every label of m.
Monomial relabel(const Monomial& m, std::span<const Label> images);

// Lexicographic rank of a permutation word of 1..n.
std::uint64_t permutation_rank(std::span<const Label> word);
std::vector<Label> permutation_unrank(int n, std::uint64_t rank);
int permutation_sign(std::span<const Label> word);
// All permutations of 1..n in lexicographic order.
std::vector<std::vector<Label>> all_permutations(int n);

struct MonomialIndex {
  std::uint64_t value = 0;
  friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

// Bijection between multilinear monomials on 1..n and 0..dim_free(n)-1.
// index = shape_index * n! + permutation_rank(labels).
class MonomialBasis {
 public:
  explicit MonomialBasis(int n);

  // Shared instance for degree n; constructed once and never mutated.
  static const MonomialBasis& of(int n);

  int degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return shapes_.size() * perms_; }
  std::uint64_t permutation_count() const noexcept { return perms_; }
  const std::vector<TreeShape>& shapes() const noexcept { return shapes_; }

  std::size_t shape_index(const TreeShape& s) const;
  MonomialIndex index(const Monomial& m) const;
  Monomial at(MonomialIndex i) const;

 private:
  int n_;
  std::uint64_t perms_;
  std::vector<TreeShape> shapes_;
  std::unordered_map<std::string, std::size_t> shape_lookup_;
};

MonomialIndex monomial_index(const Monomial& m);
Monomial monomial_at(int degree, MonomialIndex index);

}  // namespace operad

#endif  // OPERAD_MONOMIAL_HPP
