#include "operad/monomial.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "operad/error.hpp"

namespace operad {

namespace {

// End (one past) of the subtree starting at pos in a preorder code.
std::size_t subtree_end(const std::string& code, std::size_t pos) {
  int pending = 1;
  while (pending > 0) {
    pending += code[pos] == 'n' ? 1 : -1;
    ++pos;
  }
  return pos;
}

int count_leaves(const std::string& code, std::size_t begin, std::size_t end) {
  return static_cast<int>(std::count(code.begin() + static_cast<std::ptrdiff_t>(begin),
                                     code.begin() + static_cast<std::ptrdiff_t>(end), 'l'));
}

std::strong_ordering compare_shapes(const std::string& a, std::size_t pa, const std::string& b,
                                    std::size_t pb) {
  const std::size_t ea = subtree_end(a, pa);
  const std::size_t eb = subtree_end(b, pb);
  if (auto c = count_leaves(a, pa, ea) <=> count_leaves(b, pb, eb); c != 0) return c;
  if (a[pa] == 'l') return std::strong_ordering::equal;
  const std::size_t la = pa + 1, lb = pb + 1;
  const std::size_t ra = subtree_end(a, la), rb = subtree_end(b, lb);
  if (auto c = count_leaves(a, la, ra) <=> count_leaves(b, lb, rb); c != 0) return c;
  if (auto c = compare_shapes(a, la, b, lb); c != 0) return c;
  return compare_shapes(a, ra, b, rb);
}

}  // namespace

TreeShape::TreeShape() : code_("l"), leaves_(1) {}

TreeShape::TreeShape(std::string code) : code_(std::move(code)) {
  leaves_ = count_leaves(code_, 0, code_.size());
}

TreeShape TreeShape::node(const TreeShape& left, const TreeShape& right) {
  return TreeShape("n" + left.code_ + right.code_);
}

TreeShape TreeShape::left() const {
  if (is_leaf()) throw Error("a leaf has no left subtree");
  return TreeShape(code_.substr(1, subtree_end(code_, 1) - 1));
}

TreeShape TreeShape::right() const {
  if (is_leaf()) throw Error("a leaf has no right subtree");
  return TreeShape(code_.substr(subtree_end(code_, 1)));
}

std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b) {
  return compare_shapes(a.code_, 0, b.code_, 0);
}

std::vector<TreeShape> enumerate_shapes(int n) {
  if (n < 1) throw Error("enumerate_shapes: degree must be positive");
  std::vector<std::vector<TreeShape>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {TreeShape::leaf()};
  for (int m = 2; m <= n; ++m) {
    auto& out = by_size[static_cast<std::size_t>(m)];
    for (int k = 1; k < m; ++k) {
      for (const auto& l : by_size[static_cast<std::size_t>(k)]) {
        for (const auto& r : by_size[static_cast<std::size_t>(m - k)]) {
          out.push_back(TreeShape::node(l, r));
        }
      }
    }
  }
  return by_size[static_cast<std::size_t>(n)];
}

std::uint64_t catalan(int n) {
  if (n < 0) throw Error("catalan: negative argument");
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    // C(k+1) = C(k) * 2(2k+1) / (k+2), exact at every step.
    c = c * static_cast<std::uint64_t>(2 * (2 * k + 1)) / static_cast<std::uint64_t>(k + 2);
  }
  return c;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t dim_free(int n) {
  if (n < 1) throw Error("dim_free: degree must be positive");
  if (n > 15) throw Error("dim_free: degree too large for 64-bit counts");
  return catalan(n - 1) * factorial(n);
}

Monomial::Monomial(TreeShape shape, std::vector<Label> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != shape_.leaf_count()) {
    throw Error("monomial: label count does not match the shape");
  }
  for (Label v : labels_) {
    if (v < 0) throw Error("monomial: labels must be non-negative");
  }
}

Monomial Monomial::variable(Label v) { return Monomial(TreeShape::leaf(), {v}); }

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
  std::vector<Label> labels(a.labels_);
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  return Monomial(TreeShape::node(a.shape_, b.shape_), std::move(labels));
}

Monomial Monomial::left() const {
  TreeShape l = shape_.left();
  const auto k = static_cast<std::size_t>(l.leaf_count());
  return Monomial(std::move(l), std::vector<Label>(labels_.begin(), labels_.begin() + k));
}

Monomial Monomial::right() const {
  TreeShape r = shape_.right();
  const auto k = labels_.size() - static_cast<std::size_t>(r.leaf_count());
  return Monomial(std::move(r), std::vector<Label>(labels_.begin() + k, labels_.end()));
}

bool Monomial::is_multilinear() const {
  std::vector<Label> sorted(labels_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::map<Label, int> Monomial::multiplicities() const {
  std::map<Label, int> out;
  for (Label v : labels_) ++out[v];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(),
                                                b.labels_.begin(), b.labels_.end());
}

std::string to_string(const Monomial& m) {
  if (m.is_variable()) return "x" + std::to_string(m.labels()[0]);
  const Monomial r = m.right();
  std::string rs = to_string(r);
  if (!r.is_variable()) rs = "(" + rs + ")";
  return to_string(m.left()) + "*" + rs;
}

Monomial graft(const Monomial& m1, const Monomial& m2) {
  std::set<Label> seen(m1.labels().begin(), m1.labels().end());
  for (Label v : m2.labels()) {
    if (seen.count(v)) throw Error("graft: label sets overlap at variable " + std::to_string(v));
  }
  return Monomial::product(m1, m2);
}

Monomial substitute(const Monomial& m, Label v, const Monomial& s) {
  const auto labels = m.labels();
  const auto hits = std::count(labels.begin(), labels.end(), v);
  if (hits == 0) throw Error("substitute: variable " + std::to_string(v) + " does not occur");
  if (hits > 1) throw Error("substitute: variable " + std::to_string(v) + " occurs repeatedly");
  for (Label w : s.labels()) {
    if (w != v && std::count(labels.begin(), labels.end(), w)) {
      throw Error("substitute: label " + std::to_string(w) + " collides");
    }
  }
  const auto leaf = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), v) - labels.begin());

  // Locate the leaf-th 'l' in the preorder code and splice in s's shape.
  const std::string& code = m.shape().code();
  std::size_t pos = 0, seen = 0;
  for (; pos < code.size(); ++pos) {
    if (code[pos] == 'l' && seen++ == leaf) break;
  }
  std::string spliced = code.substr(0, pos) + s.shape().code() + code.substr(pos + 1);

  std::vector<Label> out(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(leaf));
  out.insert(out.end(), s.labels().begin(), s.labels().end());
  out.insert(out.end(), labels.begin() + static_cast<std::ptrdiff_t>(leaf) + 1, labels.end());

  // Rebuild the shape from its code through the public constructors.
  std::vector<TreeShape> stack;
  for (auto it = spliced.rbegin(); it != spliced.rend(); ++it) {
    if (*it == 'l') {
      stack.push_back(TreeShape::leaf());
    } else {
      TreeShape l = std::move(stack.back());
      stack.pop_back();
      TreeShape r = std::move(stack.back());
      stack.pop_back();
      stack.push_back(TreeShape::node(l, r));
    }
  }
  return Monomial(std::move(stack.back()), std::move(out));
}

Monomial relabel(const Monomial& m, const std::map<Label, Label>& pi) {
  std::set<Label> domain, image;
  for (auto [from, to] : pi) {
    domain.insert(from);
    image.insert(to);
  }
  const auto vars = m.multiplicities();
  std::set<Label> var_set;
  for (auto [v, _] : vars) var_set.insert(v);
  if (domain != var_set || image != var_set || pi.size() != var_set.size()) {
    throw Error("relabel: not a permutation of the variable set");
  }
  std::vector<Label> out;
  out.reserve(m.labels().size());
  for (Label v : m.labels()) out.push_back(pi.at(v));
  return Monomial(m.shape(), std::move(out));
}

Monomial relabel(const Monomial& m, std::span<const Label> images) {
  const std::set<Label> img(images.begin(), images.end());
  if (img.size() != images.size() ||
      (!img.empty() && (*img.begin() != 1 || *img.rbegin() != static_cast<Label>(images.size())))) {
    throw Error("relabel: images do not form a permutation");
  }
  std::vector<Label> out;
  out.reserve(m.labels().size());
  for (Label v : m.labels()) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) {
      throw Error("relabel: label " + std::to_string(v) + " outside the permutation domain");
    }
    out.push_back(images[static_cast<std::size_t>(v - 1)]);
  }
  return Monomial(m.shape(), std::move(out));
}

std::uint64_t permutation_rank(std::span<const Label> word) {
  const int n = static_cast<int>(word.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)];
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

std::vector<Label> permutation_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<Label> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Label> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    word.push_back(*it);
    pool.erase(it);
  }
  return word;
}

int permutation_sign(std::span<const Label> word) {
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<Label>> all_permutations(int n) {
  std::vector<Label> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<std::vector<Label>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

MonomialBasis::MonomialBasis(int n) : n_(n), perms_(factorial(n)), shapes_(enumerate_shapes(n)) {
  for (std::size_t i = 0; i < shapes_.size(); ++i) shape_lookup_.emplace(shapes_[i].code(), i);
}

const MonomialBasis& MonomialBasis::of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<MonomialBasis>(n);
  return *slot;
}

std::size_t MonomialBasis::shape_index(const TreeShape& s) const {
  auto it = shape_lookup_.find(s.code());
  if (it == shape_lookup_.end()) throw Error("shape has the wrong number of leaves");
  return it->second;
}

MonomialIndex MonomialBasis::index(const Monomial& m) const {
  if (m.degree() != n_) throw Error("monomial_index: degree mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (Label v : m.labels()) {
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)]) {
      throw Error("monomial_index: monomial is not multilinear on 1.." + std::to_string(n_));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return {shape_index(m.shape()) * perms_ + permutation_rank(m.labels())};
}

Monomial MonomialBasis::at(MonomialIndex i) const {
  if (i.value >= size()) throw Error("monomial index out of range");
  return Monomial(shapes_[i.value / perms_], permutation_unrank(n_, i.value % perms_));
}

MonomialIndex monomial_index(const Monomial& m) { return MonomialBasis::of(m.degree()).index(m); }

Monomial monomial_at(int degree, MonomialIndex index) { return MonomialBasis::of(degree).at(index); }

}  // namespace operad
