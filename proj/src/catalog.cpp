#include "catalog.hpp"

#include <nlohmann/json.hpp>

#include <numeric>

#include "errors.hpp"

namespace chv {

using ordered_json = nlohmann::ordered_json;

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::Torus: return "T";
  }
  return "?";
}

const char* twist_name(Twist t) {
  switch (t) {
    case Twist::None: return "none";
    case Twist::Two: return "twist2";
    case Twist::Three: return "twist3";
  }
  return "?";
}

namespace {

bool fixed_rank_family(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 ||
         f == Family::F4 || f == Family::G2;
}

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return -1;
  }
}

int min_rank(Family f, Twist t) {
  switch (f) {
    case Family::A: return t == Twist::Two ? 2 : 1;
    case Family::B: return 1;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::Torus: return 1;
    default: return fixed_rank(f);
  }
}

}  // namespace

void validate_spec(const GroupSpec& s) {
  const std::string what = std::string(family_name(s.family)) + " rank " +
                           std::to_string(s.rank) + " " + twist_name(s.twist);
  if (fixed_rank_family(s.family)) {
    if (s.rank != fixed_rank(s.family))
      throw InvalidSpec("fixed-rank family with wrong rank: " + what);
  } else if (s.rank < min_rank(s.family, Twist::None)) {
    throw InvalidSpec("rank below the family minimum: " + what);
  }
  switch (s.twist) {
    case Twist::None:
      break;
    case Twist::Two:
      if (s.family == Family::A) {
        if (s.rank < 2) throw InvalidSpec("order-2 twist needs A rank >= 2");
      } else if (s.family != Family::D && s.family != Family::E6) {
        throw InvalidSpec("order-2 twist not admissible: " + what);
      }
      break;
    case Twist::Three:
      if (s.family != Family::D || s.rank != 4)
        throw InvalidSpec("order-3 twist only exists for D rank 4");
      break;
  }
}

GroupSpec parse_spec(const std::string& text) {
  size_t i = 0;
  Twist twist = Twist::None;
  if (i < text.size() && (text[i] == '2' || text[i] == '3')) {
    twist = text[i] == '2' ? Twist::Two : Twist::Three;
    ++i;
  }
  if (i >= text.size()) throw ParseError("empty group label");

  GroupSpec s;
  s.twist = twist;
  char c = text[i];
  auto need_digits = [&](size_t from) {
    if (from >= text.size()) throw ParseError("missing rank in '" + text + "'");
    long rank = 0;
    for (size_t j = from; j < text.size(); ++j) {
      if (text[j] < '0' || text[j] > '9')
        throw ParseError("trailing characters in '" + text + "'");
      rank = rank * 10 + (text[j] - '0');
      if (rank > 10000) throw ParseError("rank out of range in '" + text + "'");
    }
    // "0" is grammatical (the admissibility check rejects it); "01" is not.
    if (text[from] == '0' && text.size() - from > 1)
      throw ParseError("rank with leading zero in '" + text + "'");
    return static_cast<int>(rank);
  };

  switch (c) {
    case 'A': s.family = Family::A; s.rank = need_digits(i + 1); break;
    case 'B': s.family = Family::B; s.rank = need_digits(i + 1); break;
    case 'C': s.family = Family::C; s.rank = need_digits(i + 1); break;
    case 'D': s.family = Family::D; s.rank = need_digits(i + 1); break;
    case 'E': {
      if (twist == Twist::Three) throw ParseError("'3' prefix only combines with D");
      if (i + 2 != text.size()) throw ParseError("malformed label '" + text + "'");
      char d = text[i + 1];
      if (d == '6') { s.family = Family::E6; s.rank = 6; }
      else if (d == '7') { s.family = Family::E7; s.rank = 7; }
      else if (d == '8') { s.family = Family::E8; s.rank = 8; }
      else throw ParseError("malformed label '" + text + "'");
      if (twist == Twist::Two && s.family != Family::E6)
        throw ParseError("'2' prefix does not combine with " + text.substr(i));
      break;
    }
    case 'F':
      if (twist != Twist::None || text != "F4") throw ParseError("malformed label '" + text + "'");
      s.family = Family::F4; s.rank = 4;
      break;
    case 'G':
      if (twist != Twist::None || text != "G2") throw ParseError("malformed label '" + text + "'");
      s.family = Family::G2; s.rank = 2;
      break;
    case 'T':
      if (twist != Twist::None) throw ParseError("tori do not twist: '" + text + "'");
      s.family = Family::Torus; s.rank = need_digits(i + 1);
      break;
    default:
      throw ParseError("malformed label '" + text + "'");
  }
  validate_spec(s);
  return s;
}

std::string render_spec(const GroupSpec& s) {
  validate_spec(s);
  std::string out;
  if (s.twist == Twist::Two) out += "2";
  if (s.twist == Twist::Three) out += "3";
  out += family_name(s.family);
  if (!fixed_rank_family(s.family)) out += std::to_string(s.rank);
  return out;
}

long GroupDatum::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0L);
}

GroupDatum lookup(const GroupSpec& s) {
  validate_spec(s);
  GroupDatum d;
  d.spec = s;
  const int n = s.rank;
  switch (s.family) {
    case Family::A:
      d.dim = static_cast<long>(n) * (n + 2);
      for (int j = 2; j <= n + 1; ++j) d.degrees.push_back(j);
      break;
    case Family::B:
    case Family::C:
      d.dim = static_cast<long>(n) * (2 * n + 1);
      for (int j = 1; j <= n; ++j) d.degrees.push_back(2 * j);
      break;
    case Family::D:
      d.dim = static_cast<long>(n) * (2 * n - 1);
      if (s.twist == Twist::Three) {
        d.degrees = {2, 4, 4, 6};
      } else {
        d.degrees.push_back(n);
        for (int j = 1; j <= n - 1; ++j) d.degrees.push_back(2 * j);
      }
      break;
    case Family::G2: d.dim = 14; d.degrees = {2, 6}; break;
    case Family::F4: d.dim = 52; d.degrees = {2, 6, 8, 12}; break;
    case Family::E6: d.dim = 78; d.degrees = {2, 5, 6, 8, 9, 12}; break;
    case Family::E7: d.dim = 133; d.degrees = {2, 6, 8, 10, 12, 14, 18}; break;
    case Family::E8: d.dim = 248; d.degrees = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    case Family::Torus:
      d.dim = n;
      d.degrees.assign(static_cast<size_t>(n), 1);
      break;
  }

  d.eigenvalues.assign(d.degrees.size(), RootOfUnity::one());
  switch (s.twist) {
    case Twist::None:
      break;
    case Twist::Two:
      if (s.family == Family::A) {
        // -1 exactly on the even degrees d_j = j + 1, i.e. at odd positions.
        for (int j = 1; j <= n; ++j)
          if (j % 2 == 1) d.eigenvalues[static_cast<size_t>(j) - 1] = RootOfUnity(1, 2);
      } else if (s.family == Family::D) {
        // -1 on the degree-n invariant, listed first.
        d.eigenvalues[0] = RootOfUnity(1, 2);
      } else {
        // E6: -1 on the degree-5 and degree-9 invariants.
        d.eigenvalues[1] = RootOfUnity(1, 2);
        d.eigenvalues[4] = RootOfUnity(1, 2);
      }
      break;
    case Twist::Three:
      // Degrees (2, 4, 4, 6); the two degree-4 invariants carry the
      // primitive cube roots.
      d.eigenvalues[1] = RootOfUnity(1, 3);
      d.eigenvalues[2] = RootOfUnity(2, 3);
      break;
  }
  return d;
}

PrimePowerQ make_prime_power(long long q) {
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q > (1LL << 32)) throw NotPrimePower("q too large (above 2^32)");
  long long p = 0;
  for (long long c = 2; c * c <= q; ++c) {
    if (q % c == 0) { p = c; break; }
  }
  if (p == 0) p = q;  // q itself prime
  long long rest = q;
  int s = 0;
  while (rest % p == 0) { rest /= p; ++s; }
  if (rest != 1)
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  return PrimePowerQ{p, s, q};
}

void validate_field(const GroupSpec& s, const PrimePowerQ& q) {
  if (s.twist == Twist::Two && q.s % 2 != 0)
    throw TwistFieldMismatch("order-2 twist needs an even field exponent, got " +
                             std::to_string(q.q) + " = " + std::to_string(q.p) + "^" +
                             std::to_string(q.s));
  if (s.twist == Twist::Three && q.s % 3 != 0)
    throw TwistFieldMismatch("order-3 twist needs a field exponent divisible by 3, got " +
                             std::to_string(q.q) + " = " + std::to_string(q.p) + "^" +
                             std::to_string(q.s));
}

std::vector<GroupSpec> all_specs(int max_rank) {
  if (max_rank < 1) throw BadArgument("max_rank must be positive");
  std::vector<GroupSpec> out;
  auto add = [&](Family f, int rank, Twist t) {
    GroupSpec s{f, rank, t};
    if (rank <= max_rank) out.push_back(s);
  };
  for (int n = 1; n <= max_rank; ++n) add(Family::A, n, Twist::None);
  for (int n = 2; n <= max_rank; ++n) add(Family::A, n, Twist::Two);
  for (int n = 1; n <= max_rank; ++n) add(Family::B, n, Twist::None);
  for (int n = 2; n <= max_rank; ++n) add(Family::C, n, Twist::None);
  for (int n = 4; n <= max_rank; ++n) add(Family::D, n, Twist::None);
  for (int n = 4; n <= max_rank; ++n) add(Family::D, n, Twist::Two);
  add(Family::D, 4, Twist::Three);
  add(Family::E6, 6, Twist::None);
  add(Family::E6, 6, Twist::Two);
  add(Family::E7, 7, Twist::None);
  add(Family::E8, 8, Twist::None);
  add(Family::F4, 4, Twist::None);
  add(Family::G2, 2, Twist::None);
  for (int n = 1; n <= max_rank; ++n) add(Family::Torus, n, Twist::None);
  return out;
}

std::string catalog_json(int max_rank) {
  ordered_json families = ordered_json::array();
  auto fam = [&](const char* f, const char* t, int lo, ordered_json hi) {
    families.push_back({{"family", f}, {"twist", t}, {"min_rank", lo}, {"max_rank", hi}});
  };
  fam("A", "none", 1, nullptr);
  fam("A", "twist2", 2, nullptr);
  fam("B", "none", 1, nullptr);
  fam("C", "none", 2, nullptr);
  fam("D", "none", 4, nullptr);
  fam("D", "twist2", 4, nullptr);
  fam("D", "twist3", 4, 4);
  fam("E6", "none", 6, 6);
  fam("E6", "twist2", 6, 6);
  fam("E7", "none", 7, 7);
  fam("E8", "none", 8, 8);
  fam("F4", "none", 4, 4);
  fam("G2", "none", 2, 2);
  fam("T", "none", 1, nullptr);

  ordered_json entries = ordered_json::array();
  for (const GroupSpec& s : all_specs(max_rank)) {
    GroupDatum d = lookup(s);
    ordered_json eig = ordered_json::array();
    for (const RootOfUnity& r : d.eigenvalues)
      eig.push_back({{"numerator", r.num}, {"order", r.ord}});
    entries.push_back({{"spec", render_spec(s)},
                       {"family", family_name(s.family)},
                       {"rank", s.rank},
                       {"twist", twist_name(s.twist)},
                       {"dim", d.dim},
                       {"degrees", d.degrees},
                       {"eigenvalues", eig}});
  }
  ordered_json out{{"max_rank", max_rank}, {"families", families}, {"entries", entries}};
  return out.dump();
}

}  // namespace chv
