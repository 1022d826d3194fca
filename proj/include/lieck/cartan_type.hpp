#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lieck {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Thrown when a Cartan type, spec string or data record violates its contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for conditions that indicate a bug rather than bad input
/// (e.g. a Weyl dimension quotient that does not divide exactly).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

/// A complex simple type X_rank. The struct itself is plain data so that
/// degenerate labels such as D2 or B1 can be carried by the catalog; use
/// make() or validate() where a genuinely simple type is required.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Validated construction; throws InvalidArgument naming the bound violated.
  static CartanType make(Family family, int rank);
  /// Parses "B4", "E8", "A12" (case-insensitive family letter).
  static CartanType parse(std::string_view text);

  bool is_valid() const noexcept;
  void validate() const;
  bool is_classical() const noexcept;
  bool is_simply_laced() const noexcept;

  /// Complex dimension of the simple algebra (uses the classical formulas
  /// for every rank, so B1/D2 labels still get a number).
  std::int64_t dimension() const;
  /// |Delta| from the closed-form count table. Test oracle only; the root
  /// system itself is generated by reflection closure.
  std::int64_t root_count_formula() const;

  std::string to_string() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Every valid simple type of rank <= max_rank (classical) plus G2, F4, E6-E8
/// when their rank fits.
std::vector<CartanType> all_types_up_to(int max_rank);

}  // namespace lieck
