// Textual group specifications: "C:n", "D:2n", "Q:4n", "F:p:q[:r]", "S:n",
// "A:n" and "P:(X)x(Y)[x(Z)...]" for direct products.

#ifndef ENGEL_SPEC_HPP_
#define ENGEL_SPEC_HPP_

#include "engel/group.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace engel {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { cyclic, dihedral, quaternion, frobenius, symmetric, alternating, product };

struct GroupSpec {
  Family                     family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec>     factors;  // product only

  bool operator==(GroupSpec const&) const = default;
};

// Throws SpecError naming the offending parameter.
GroupSpec parse_group_spec(std::string_view text);

// Canonical form; parse_group_spec(to_string(s)) == s.
std::string to_string(GroupSpec const& spec);

std::string family_name(Family family);

// |G| without building the table.
std::uint64_t spec_order(GroupSpec const& spec);

FiniteGroup build_group(GroupSpec const& spec);

// Convenience constructors.
GroupSpec cyclic_spec(std::uint64_t n);
GroupSpec dihedral_spec(std::uint64_t two_n);
GroupSpec quaternion_spec(std::uint64_t four_n);
GroupSpec frobenius_spec(std::uint64_t p, std::uint64_t q);
GroupSpec symmetric_spec(std::uint64_t n);
GroupSpec alternating_spec(std::uint64_t n);
GroupSpec product_spec(std::vector<GroupSpec> factors);

}  // namespace engel

#endif  // ENGEL_SPEC_HPP_
