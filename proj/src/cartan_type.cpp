#include "lieck/cartan_type.hpp"

#include <cctype>
#include <charconv>

namespace lieck {

char family_letter(Family f) { return static_cast<char>(f); }

std::optional<Family> family_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

CartanType CartanType::make(Family family, int rank) {
  CartanType t{family, rank};
  t.validate();
  return t;
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("bad type spec '" + std::string(text) + "'");
  auto fam = family_from_letter(text.front());
  if (!fam) throw InvalidArgument("unknown family in type spec '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidArgument("bad rank in type spec '" + std::string(text) + "'");
  return make(*fam, rank);
}

bool CartanType::is_valid() const noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void CartanType::validate() const {
  if (is_valid()) return;
  std::string bound;
  switch (family) {
    case Family::A: bound = "rank >= 1"; break;
    case Family::B: bound = "rank >= 2"; break;
    case Family::C: bound = "rank >= 2"; break;
    case Family::D: bound = "rank >= 3"; break;
    case Family::E: bound = "rank in {6,7,8}"; break;
    case Family::F: bound = "rank = 4"; break;
    case Family::G: bound = "rank = 2"; break;
  }
  throw InvalidArgument("invalid Cartan type " + to_string() + ": family " +
                        std::string(1, family_letter(family)) + " requires " + bound);
}

bool CartanType::is_classical() const noexcept {
  return family == Family::A || family == Family::B || family == Family::C ||
         family == Family::D;
}

bool CartanType::is_simply_laced() const noexcept {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::int64_t CartanType::dimension() const {
  const std::int64_t l = rank;
  switch (family) {
    case Family::A: return l * (l + 2);
    case Family::B:
    case Family::C: return l * (2 * l + 1);
    case Family::D: return l * (2 * l - 1);
    case Family::E: return l == 6 ? 78 : l == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::int64_t CartanType::root_count_formula() const {
  const std::int64_t l = rank;
  switch (family) {
    case Family::A: return l * (l + 1);
    case Family::B:
    case Family::C: return 2 * l * l;
    case Family::D: return 2 * l * (l - 1);
    case Family::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::string CartanType::to_string() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

std::vector<CartanType> all_types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int l = 1; l <= max_rank; ++l) {
      CartanType t{f, l};
      if (t.is_valid()) out.push_back(t);
    }
  }
  if (max_rank >= 2) out.push_back({Family::G, 2});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back({Family::E, l});
  return out;
}

}  // namespace lieck
