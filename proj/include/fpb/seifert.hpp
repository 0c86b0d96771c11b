#ifndef FPB_SEIFERT_HPP
#define FPB_SEIFERT_HPP

#include <string>

#include "fpb/bigint.hpp"
#include "fpb/code.hpp"

namespace fpb {

/// Seifert matrix of a flat plumbing basket in the basis k_i = (disk chord
/// q_i -> p_i) + (core of band i, p_i -> q_i). Stored 0-based: entry (j, i)
/// is v_{j+1,i+1}. Always strictly lower triangular with entries in {-1,0,1}.
using SeifertMatrix = IntMatrix;

/// Reads off each pair of labels i < j from foot order:
///   i j i j  ->  v_{j,i} = -1
///   j i j i  ->  v_{j,i} = +1
///   nested or disjoint  ->  0
SeifertMatrix seifert_matrix(const FlatBasketCode& code);

/// V + V^T.
IntMatrix symmetrized(const SeifertMatrix& v);

/// Rows of signed integers, one row per line.
std::string format_matrix(const IntMatrix& m);

}  // namespace fpb

#endif  // FPB_SEIFERT_HPP
