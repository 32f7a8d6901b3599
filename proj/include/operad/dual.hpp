#ifndef OPERAD_DUAL_HPP
#define OPERAD_DUAL_HPP

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "operad/identity.hpp"

namespace operad {

using Rational = boost::multiprecision::cpp_rational;
// A vector in the 12-dimensional space of multilinear degree-3 monomials,
// indexed by MonomialIndex.
using RationalVector = std::vector<Rational>;

inline constexpr std::size_t kCubicDim = 12;

// A subspace of the degree-3 space, held as a reduced row echelon basis.
class RelationSpace {
 public:
  RelationSpace() = default;
  // Spans the given vectors (each of length 12).
  explicit RelationSpace(std::vector<RationalVector> generators);

  const std::vector<RationalVector>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool contains(const RationalVector& v) const;
  bool contains(const RelationSpace& other) const;

  friend bool operator==(const RelationSpace& a, const RelationSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<RationalVector> basis_;
};

// Diagonal pairing on degree-3 monomials: sgn(labels) on the (ab)c shape,
// -sgn(labels) on the a(bc) shape, zero off the diagonal.
int pairing(const Monomial& a, const Monomial& b);

RationalVector to_vector(const Identity& id);

// Span of all S_3 relabelings of the given degree-3 multilinear identities.
RelationSpace relation_space(std::span<const Identity> ids);

// Orthogonal complement under pairing().
RelationSpace annihilator(const RelationSpace& r);

// Generators of the dual operad's relations. When the six associativity
// relations lie in the dual relation space they are reported through the
// associative flag and the rest is given on left-normed monomials.
struct DualPresentation {
  bool associative = false;
  std::vector<Identity> extra;

  // Full identity list for the consequence engine.
  std::vector<Identity> identities() const;
  // "associative; x*y*z + x*z*y = 0"
  std::string to_string() const;
};

DualPresentation dual_relations(std::span<const Identity> ids);

// The opposite algebra's identity: every product a*b becomes b*a.
Identity opposite(const Identity& id);

}  // namespace operad

#endif  // OPERAD_DUAL_HPP
