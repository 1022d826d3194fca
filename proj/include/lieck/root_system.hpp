#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieck/bigint.hpp"
#include "lieck/cartan_type.hpp"

namespace lieck {

/// Coordinates in the simple-root basis.
using RootVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

std::string format_vec(const RootVec& v);

/// Integer Gram matrix (alpha_i, alpha_j) in Bourbaki numbering. Short roots
/// have squared length 2; long roots 4 (B, C, F) or 6 (G2).
IntMatrix gram_matrix(const CartanType& t);

struct RootSystem {
  CartanType cartan_type;
  std::vector<RootVec> simple_roots;
  /// Positive roots by increasing height, then the negatives in the same order.
  std::vector<RootVec> all_roots;
  /// A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  IntMatrix cartan_matrix;
  IntMatrix gram;

  int rank() const { return cartan_type.rank; }
  std::vector<RootVec> positive_roots() const;
  std::int64_t inner(const RootVec& x, const RootVec& y) const;
  bool contains(const RootVec& v) const;
};

/// Reflection closure of the simple roots. Throws InvalidArgument when t
/// violates the family rank bounds.
RootSystem build_root_system(const CartanType& t);

RootVec highest_root(const RootSystem& rs);
int height(const RootVec& v);
/// x >= y in the dominance order (x - y has non-negative coordinates).
bool dominates(const RootVec& x, const RootVec& y);

struct Bond {
  int i = 0;
  int j = 0;
  /// A_ij * A_ji; the affine A_1 bond is 4 by this convention.
  int multiplicity = 0;
};

/// Node 0 is the affine node alpha_0 = -theta; node i >= 1 is alpha_i.
struct ExtendedDiagram {
  RootSystem base;
  RootVec lowest_root;
  std::vector<int> marks;
  std::vector<Bond> adjacency;
  /// Generalized Cartan matrix over rank+1 nodes.
  IntMatrix cartan_matrix;

  int node_count() const { return static_cast<int>(marks.size()); }
  std::vector<int> neighbours(int node) const;
};

ExtendedDiagram extended_diagram(const RootSystem& rs);

std::string diagram_text(const ExtendedDiagram& d);
std::string diagram_dot(const ExtendedDiagram& d);

/// Dimension of the irreducible module with highest weight lambda (fundamental
/// weight coordinates). Throws InternalError if the Weyl quotient is not exact.
BigInt weyl_dim(const CartanType& t, const std::vector<int>& highest_weight);
BigInt weyl_dim(const RootSystem& rs, const std::vector<int>& highest_weight);

/// A root set with an integer Gram matrix in arbitrary coordinates; used for
/// the covering check on inputs that are not produced by build_root_system.
struct RootData {
  std::vector<RootVec> roots;
  IntMatrix gram;
  int dimension() const { return static_cast<int>(gram.size()); }
};

RootData root_data(const RootSystem& rs);
RootData direct_sum(const RootData& x, const RootData& y);
bool is_indecomposable(const RootData& rd);

/// Rank over Q of a list of integer vectors.
int vector_rank(const std::vector<RootVec>& vs);

/// True iff Delta is the union of its intersections with two proper
/// subspaces. Throws InvalidArgument for decomposable or non-spanning input.
bool two_hyperplane_cover_check(const RootSystem& rs);
bool two_hyperplane_cover_check(const RootData& rd);

}  // namespace lieck
