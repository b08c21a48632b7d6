#include "chevalley.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

#include "catalog.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "series.hpp"
#include "verify.hpp"

using chv::Rational;
using ordered_json = nlohmann::ordered_json;

struct chv_group {
  chv::GroupSpec spec;
  chv::GroupDatum datum;
};

namespace {

thread_local std::string g_last_error;

chv_status fail(chv_status st, const char* what) {
  g_last_error = what;
  return st;
}

// Maps the C++ error taxonomy onto status codes; must stay total.
template <typename Fn>
chv_status guarded(Fn&& fn) {
  try {
    fn();
    return CHV_OK;
  } catch (const chv::ParseError& e) {
    return fail(CHV_ERR_PARSE, e.what());
  } catch (const chv::InvalidSpec& e) {
    return fail(CHV_ERR_INVALID_SPEC, e.what());
  } catch (const chv::NotPrimePower& e) {
    return fail(CHV_ERR_NOT_PRIME_POWER, e.what());
  } catch (const chv::TwistFieldMismatch& e) {
    return fail(CHV_ERR_TWIST_FIELD, e.what());
  } catch (const chv::NotRational& e) {
    return fail(CHV_ERR_NOT_RATIONAL, e.what());
  } catch (const chv::NonIntegral& e) {
    return fail(CHV_ERR_NON_INTEGRAL, e.what());
  } catch (const chv::BudgetExceeded& e) {
    return fail(CHV_ERR_BUDGET, e.what());
  } catch (const chv::EvenCharacteristic& e) {
    return fail(CHV_ERR_EVEN_CHAR, e.what());
  } catch (const chv::BadArgument& e) {
    return fail(CHV_ERR_BAD_ARG, e.what());
  } catch (const chv::InternalCheckFailure& e) {
    return fail(CHV_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(CHV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CHV_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw chv::BadArgument(what);
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

chv::PrimePowerQ field_for(const chv_group* g, int64_t q) {
  chv::PrimePowerQ pp = chv::make_prime_power(q);
  chv::validate_field(g->spec, pp);
  return pp;
}

ordered_json group_info(const chv_group* g) {
  ordered_json eig = ordered_json::array();
  for (const chv::RootOfUnity& r : g->datum.eigenvalues)
    eig.push_back({{"numerator", r.num}, {"order", r.ord}});
  return ordered_json{{"spec", chv::render_spec(g->spec)},
                      {"family", chv::family_name(g->spec.family)},
                      {"rank", g->spec.rank},
                      {"twist", chv::twist_name(g->spec.twist)},
                      {"dim", g->datum.dim},
                      {"degrees", g->datum.degrees},
                      {"eigenvalues", eig}};
}

}  // namespace

extern "C" {

const char* chv_status_name(chv_status st) {
  switch (st) {
    case CHV_OK: return "ok";
    case CHV_ERR_PARSE: return "parse";
    case CHV_ERR_INVALID_SPEC: return "invalid-spec";
    case CHV_ERR_NOT_PRIME_POWER: return "not-prime-power";
    case CHV_ERR_TWIST_FIELD: return "twist-field-mismatch";
    case CHV_ERR_NOT_RATIONAL: return "not-rational";
    case CHV_ERR_NON_INTEGRAL: return "non-integral";
    case CHV_ERR_BUDGET: return "budget-exceeded";
    case CHV_ERR_EVEN_CHAR: return "even-characteristic";
    case CHV_ERR_BAD_ARG: return "bad-argument";
    case CHV_ERR_VERIFY: return "verification-failed";
    case CHV_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* chv_last_error(void) { return g_last_error.c_str(); }

void chv_string_free(char* s) { std::free(s); }

chv_status chv_group_parse(const char* label, chv_group** out) {
  return guarded([&] {
    require(label != nullptr && out != nullptr, "null pointer");
    chv::GroupSpec spec = chv::parse_spec(label);
    *out = new chv_group{spec, chv::lookup(spec)};
  });
}

void chv_group_free(chv_group* g) { delete g; }

chv_status chv_group_render(const chv_group* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    *out = dup_string(chv::render_spec(g->spec));
  });
}

chv_status chv_group_info_json(const chv_group* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    *out = dup_string(group_info(g).dump());
  });
}

chv_status chv_catalog_json(int max_rank, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = dup_string(chv::catalog_json(max_rank));
  });
}

chv_status chv_group_check_field(const chv_group* g, int64_t q) {
  return guarded([&] {
    require(g != nullptr, "null pointer");
    field_for(g, q);
  });
}

chv_status chv_group_order(const chv_group* g, int64_t q, int ext, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    *out = dup_string(chv::group_order(g->datum, field_for(g, q), ext).get_str());
  });
}

chv_status chv_count_json(const chv_group* g, int64_t q, int ext, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    chv::PrimePowerQ pp = field_for(g, q);
    chv::BigInt order = chv::group_order(g->datum, pp, ext);
    ordered_json j{{"group", chv::render_spec(g->spec)},
                   {"q", q},
                   {"i", ext},
                   {"order", order.get_str()},
                   {"bg_count", rational_json(chv::bg_count(g->datum, pp, ext))}};
    *out = dup_string(j.dump());
  });
}

chv_status chv_count_series_json(const chv_group* g, int64_t q, int ext, int64_t cutoff,
                                 char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    require(cutoff >= 0 && cutoff <= 1'000'000, "cutoff outside [0, 10^6]");
    chv::PrimePowerQ pp = field_for(g, q);
    chv::PartialSumResult p =
        chv::bg_partial_sum(g->datum, pp, ext, static_cast<long>(cutoff));
    Rational closed = chv::bg_count(g->datum, pp, ext);
    ordered_json j{{"group", chv::render_spec(g->spec)},
                   {"q", q},
                   {"i", ext},
                   {"cutoff", cutoff},
                   {"partial", rational_json(p.value)},
                   {"tail_bound", rational_json(p.tail_bound)},
                   {"closed_form", rational_json(closed)},
                   {"within_tail_bound", (closed - p.value).abs() <= p.tail_bound},
                   {"nested_checked", p.nested_checked}};
    *out = dup_string(j.dump());
  });
}

chv_status chv_betti_json(const chv_group* g, int max_half, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    ordered_json arr = ordered_json::array();
    for (const chv::BigInt& b : chv::betti_numbers(g->datum, max_half)) {
      if (b.fits_slong_p() && b.get_si() <= (1LL << 53) - 1) {
        arr.push_back(b.get_si());
      } else {
        arr.push_back(b.get_str());
      }
    }
    *out = dup_string(arr.dump());
  });
}

chv_status chv_zeta_json(const chv_group* g, int64_t q, int order, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    chv::PrimePowerQ pp = field_for(g, q);
    chv::PowerSeries z = chv::zeta_series(g->datum, pp, order);
    ordered_json coeffs = ordered_json::array();
    for (int m = 0; m <= z.order(); ++m) coeffs.push_back(rational_json(z[m]));
    ordered_json j{{"group", chv::render_spec(g->spec)},
                   {"q", q},
                   {"M", order},
                   {"mode", "exp"},
                   {"coefficients", coeffs}};
    *out = dup_string(j.dump());
  });
}

chv_status chv_zeta_euler_json(const chv_group* g, int64_t q, int order,
                               int64_t weight_cutoff, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null pointer");
    chv::PrimePowerQ pp = field_for(g, q);
    chv::EulerProductResult prod =
        chv::euler_product_truncated(g->datum, pp, order, weight_cutoff);
    chv::DiscrepancyResult disc =
        chv::euler_exp_discrepancy(g->datum, pp, order, weight_cutoff);
    ordered_json coeffs = ordered_json::array();
    for (int m = 0; m <= prod.series.order(); ++m)
      coeffs.push_back(rational_json(prod.series[m]));
    ordered_json diffs = ordered_json::array();
    ordered_json majs = ordered_json::array();
    for (size_t m = 0; m < disc.diffs.size(); ++m) {
      diffs.push_back(rational_json(disc.diffs[m]));
      majs.push_back(rational_json(disc.majorants[m]));
    }
    ordered_json j{{"group", chv::render_spec(g->spec)},
                   {"q", q},
                   {"M", order},
                   {"mode", "euler"},
                   {"W", weight_cutoff},
                   {"factor_count", prod.factor_count},
                   {"coefficients", coeffs},
                   {"discrepancies", diffs},
                   {"tail_majorants", majs}};
    *out = dup_string(j.dump());
  });
}

chv_status chv_oracle_json(const char* family, int n, int64_t q, int threads, int64_t budget,
                           char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null pointer");
    long long b = budget <= 0 ? 100'000'000LL : budget;
    std::string fam(family);
    long long count = 0;
    if (fam == "sl") {
      count = chv::sl_order_bruteforce(n, q, threads, b);
    } else if (fam == "sp") {
      count = chv::sp_order_bruteforce(n, q, threads, b);
    } else if (fam == "so") {
      count = chv::so_order_bruteforce(n, q, threads, b);
    } else {
      throw chv::BadArgument("unknown oracle family '" + fam + "'");
    }
    ordered_json j{{"family", fam}, {"n", n}, {"q", q}, {"order", count}};
    *out = dup_string(j.dump());
  });
}

chv_status chv_verify_json(const char* suites, int max_rank, int64_t max_q, char** out) {
  long long failures = 0;
  chv_status st = guarded([&] {
    require(suites != nullptr && out != nullptr, "null pointer");
    std::vector<std::string> names;
    std::string cur;
    for (const char* p = suites;; ++p) {
      if (*p == ',' || *p == '\0') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
        if (*p == '\0') break;
      } else {
        cur += *p;
      }
    }
    std::vector<chv::SuiteResult> results = chv::run_verify(names, max_rank, max_q);
    ordered_json arr = ordered_json::array();
    for (const chv::SuiteResult& r : results) {
      failures += r.failures;
      arr.push_back({{"suite", r.suite},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"notes", r.notes}});
    }
    *out = dup_string(arr.dump());
  });
  if (st == CHV_OK && failures > 0)
    return fail(CHV_ERR_VERIFY, "verification suites reported failures");
  return st;
}

}  // extern "C"
