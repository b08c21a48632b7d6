#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace chv {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, Torus };
enum class Twist { None, Two, Three };

const char* family_name(Family f);
const char* twist_name(Twist t);

// A group label: family, rank, and (for the families that admit one) a
// Galois twist of order 2 or 3.
struct GroupSpec {
  Family family = Family::A;
  int rank = 1;
  Twist twist = Twist::None;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws InvalidSpec unless the (family, rank, twist) combination is
// admissible: A >= 1, B >= 1, C >= 2, D >= 4, E6/E7/E8/F4/G2 at their fixed
// ranks, Torus >= 1; order-2 twists for A (rank >= 2), D and E6 only; the
// order-3 twist for D4 only.
void validate_spec(const GroupSpec& s);

// Grammar: [23]?(A|B|C|D)<digits> | 2?E6 | E7 | E8 | F4 | G2 | T<digits>,
// uppercase, no whitespace. render_spec is its inverse.
GroupSpec parse_spec(const std::string& text);
std::string render_spec(const GroupSpec& s);

// Degrees, dimension and twist eigenvalues of one catalog entry. The
// eigenvalue list is aligned with the degree list; untwisted entries carry
// the trivial root everywhere.
struct GroupDatum {
  GroupSpec spec;
  long dim = 0;
  std::vector<int> degrees;
  std::vector<RootOfUnity> eigenvalues;

  long degree_sum() const;
  int rank() const { return static_cast<int>(degrees.size()); }
};

GroupDatum lookup(const GroupSpec& s);

// q = p^s with p prime (found by trial division), s >= 1. Only q < 2^32 is
// accepted so the factor scan stays bounded.
struct PrimePowerQ {
  long long p = 0;
  int s = 0;
  long long q = 0;
};

PrimePowerQ make_prime_power(long long q);  // throws NotPrimePower

// Checks the field is compatible with the twist: order-2 twists need an even
// exponent, the order-3 twist needs 3 | s. Throws TwistFieldMismatch.
void validate_field(const GroupSpec& s, const PrimePowerQ& q);

// Every admissible spec with rank <= max_rank, twisted forms included, in a
// stable family-major order.
std::vector<GroupSpec> all_specs(int max_rank);

// Full catalog as JSON: per-family rank bounds plus one record per entry up
// to max_rank with dim, degrees and {numerator, order} eigenvalue pairs.
std::string catalog_json(int max_rank);

}  // namespace chv
