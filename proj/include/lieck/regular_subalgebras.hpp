#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lieck/cartan_type.hpp"
#include "lieck/root_system.hpp"

namespace lieck {

/// Semisimple summands plus a torus; summands are normalized and sorted.
struct SubalgebraType {
  std::vector<CartanType> summands;
  int torus_rank = 0;

  int semisimple_rank() const;
  std::string to_string() const;
  friend auto operator<=>(const SubalgebraType&, const SubalgebraType&) = default;
  friend bool operator==(const SubalgebraType&, const SubalgebraType&) = default;
};

struct SubalgebraRecord {
  CartanType ambient;
  SubalgebraType type;
  /// One entry per way the type was reached, e.g. "ext-2" or "plain-1;A3:ext-1".
  std::vector<std::string> provenance;
  bool regular = true;
};

/// D2 -> A1+A1, D3 -> A3, B1/C1 -> A1, C2 -> B2, D1 -> torus.
SubalgebraType normalize(const std::vector<CartanType>& raw, int torus_rank = 0);

/// Connected components of the diagram on the given nodes of an extended
/// diagram, identified from bond multiplicities and root lengths.
std::vector<CartanType> identify_components(const ExtendedDiagram& d, const std::vector<int>& nodes);

/// Delete a set of nodes from the extended diagram (node 0 is affine).
SubalgebraType delete_extended_nodes(const CartanType& t, const std::vector<int>& nodes);

std::vector<SubalgebraRecord> borel_de_siebenthal_step(const CartanType& t);
std::vector<SubalgebraRecord> regular_closure(const CartanType& t, int depth);
bool closure_contains_summand(const std::vector<SubalgebraRecord>& closure, const CartanType& s);

enum class RankVerdict { BoundHolds, ExceptionChain, Violation, NotApplicable };
std::string to_string(RankVerdict v);

struct RankBoundResult {
  RankVerdict verdict = RankVerdict::NotApplicable;
  std::string detail;
};

/// Proposition-style bound 2 rank(h) <= rank(g) + 1 for simple non-regular h,
/// with the B_{p-1} in D_p chains as the only admissible exceptions.
RankBoundResult rank_bound_check(const CartanType& g, const CartanType& h, bool h_is_regular);

struct MaximalRankRow {
  int row = 0;
  std::string ambient_text;
  std::string sub_text;
  std::string rank_text;
  std::string note;
  // interpretation
  std::string ambient;  // e.g. "so(2*l+1)"
  std::vector<std::string> sub;
  int l_min = 2, l_max = 8;
  std::string k_lo = "1", k_hi = "l";
  bool uses_k = true;
  bool expect_confirmed = true;  // false for rows known to disagree
  bool derived = false;          // a corrected reading, not a printed row
};

struct MaximalRankStatus {
  MaximalRankRow row;
  bool confirmed = false;
  int instances = 0;
  std::vector<std::string> mismatches;
};

std::vector<MaximalRankRow> load_table5(const std::filesystem::path& path);
/// Maps so(N), sp(N), sl(N), gl(N) notation to a type; invalid readings
/// (sp of odd size) return an empty optional with `why` set.
std::optional<SubalgebraType> classical_notation_type(const std::string& text, std::string& why);
std::vector<MaximalRankStatus> maximal_rank_table_check(const std::vector<MaximalRankRow>& rows,
                                                        int l_max = 8);

}  // namespace lieck
