// Left braces on G and their correspondence with regular subgroups of Hol(G).

#ifndef BRACEFORGE_BRACE_HPP_
#define BRACEFORGE_BRACE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

// g -> lambda_g, indexed by element_index(g).
struct RegularSubgroup {
  GroupSpec spec;
  std::vector<Automorphism> lambda;

  const Automorphism& at(const GroupElement& g) const { return lambda[element_index(spec, g)]; }
  bool operator==(const RegularSubgroup&) const = default;
};

// mul[a][b] is the index of a.b, with elements indexed by element_index.
struct Brace {
  GroupSpec spec;
  std::vector<std::vector<std::uint32_t>> mul;

  bool operator==(const Brace&) const = default;
};

// ContractError unless h is regular.
RegularSubgroup lambda_table(const GroupSpec& spec, const Subgroup& h);
Subgroup to_subgroup(const RegularSubgroup& r);

// a.b = a + lambda_a(b)
Brace brace_from_regular(const RegularSubgroup& r);
// lambda_a(b) = -a + a.b; ContractError when the brace is invalid.
RegularSubgroup regular_from_brace(const Brace& b);

// (B, .) is a group with identity 0 and a(b + c) = ab - a + ac.
bool verify_brace(const Brace& b);
// lambda_0 = 1, lambda_{g + lambda_g(k)} = lambda_g lambda_k and
// lambda_g^-1 = lambda_{lambda_g^-1(-g)}.
bool verify_lambda_cocycle(const RegularSubgroup& r);

// {g : lambda_g = 1}, sorted.
std::vector<GroupElement> kernel_of_lambda(const RegularSubgroup& r);

// "BRACEFORGE-BRACE 1", the group, then one "g -> matrix" line per element.
std::string format_brace_file(const RegularSubgroup& r);
RegularSubgroup parse_brace_file(std::string_view text);

}  // namespace braceforge

#endif  // BRACEFORGE_BRACE_HPP_
