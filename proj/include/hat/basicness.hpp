#pragma once

// Basic pairs: every proper normal quotient is K_1, K_2 or a cycle.

#include <optional>
#include <string>
#include <vector>

#include "hat/quotients.hpp"

namespace hat {

enum class BasicType { Quasiprimitive, Biquasiprimitive, Cycle };
std::string to_string(BasicType t);

/// One report per nontrivial normal subgroup, deduplicated by block
/// partition, ordered by decreasing number of blocks. Each report acts by
/// the kernel. Throws CapExceeded when the group is over `cap`.
std::vector<QuotientReport> proper_normal_quotients(const GGPair& pair,
                                                    std::size_t cap = kDefaultElementCap);

struct BasicVerdict {
  bool basic = false;
  std::vector<QuotientReport> witnesses;  // non-degenerate proper quotients
  std::optional<BasicType> basic_type;
  std::vector<QuotientReport> quotients;  // all proper quotients
};

BasicVerdict is_basic(const GGPair& pair, std::size_t cap = kDefaultElementCap);

struct BasicQuotient {
  PermGroup kernel;  // trivial when the pair itself is basic
  std::size_t blocks = 0;
  std::vector<FamilySpec> matches;  // every candidate family pair isomorphic to it
};

/// Candidate family pairs with the given vertex count and group order.
std::vector<FamilySpec> candidate_specs(std::size_t vertices, std::size_t group_order);

enum class OnUnidentified { Throw, Report };

/// The basic normal quotients of the pair (including the pair itself when
/// basic), each identified among the family pairs. A basic quotient that
/// matches no candidate throws UnidentifiedQuotient, or with
/// OnUnidentified::Report is listed with no matches.
std::vector<BasicQuotient> basic_quotient_set(const GGPair& pair,
                                              std::size_t cap = kDefaultElementCap,
                                              OnUnidentified mode = OnUnidentified::Throw);

/// Predicted basicness of a family pair: the basic type, or nullopt when the
/// pair is predicted not to be basic.
std::optional<BasicType> predicted_basic_type(const FamilySpec& spec);

/// Basic normal quotients predicted for a family pair.
std::vector<FamilySpec> predicted_basic_quotients(const FamilySpec& spec);

bool is_prime(int n);

}  // namespace hat
