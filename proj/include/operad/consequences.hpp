#ifndef OPERAD_CONSEQUENCES_HPP
#define OPERAD_CONSEQUENCES_HPP

#include <cstdint>
#include <span>

#include "operad/identity.hpp"
#include "operad/sparse_matrix.hpp"

namespace operad {

// The coefficient row of a multilinear identity on 1..k, indexed by MonomialIndex.
SparseRow identity_row(const Identity& id);

// Matrix M(n) whose rows span the degree-n multilinear part of the T-ideal
// generated by ids. Its corank is dim P(n).
//
// Rows of degree d + 1 come from rows of degree d by multiplying with the new
// variable on either side or by substituting v <- v*x or v <- x*v, followed by
// closure under all relabelings. Rows are deduplicated up to sign and listed
// orbit by orbit in a fixed order, so the output is deterministic.
SparseRowMatrix expand_consequences(std::span<const Identity> ids, int n);

// dim_free(n) - rank of M(n) mod p: an upper bound for the characteristic-zero
// dimension. Identities of degree above n are skipped, so P(1) and P(2) of a
// cubic operad come out free.
std::uint64_t operad_dim_mod_p(std::span<const Identity> ids, int n, std::uint64_t p);

}  // namespace operad

#endif  // OPERAD_CONSEQUENCES_HPP
