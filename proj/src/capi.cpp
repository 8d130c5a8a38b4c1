#include <wzwblocks.h>

#include <wzwblocks/cohomology.hpp>
#include <wzwblocks/errors.hpp>
#include <wzwblocks/lattice.hpp>
#include <wzwblocks/moduli.hpp>
#include <wzwblocks/selfcheck.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

struct wzw_report {
  wzw::BlocksReport report;
};

struct wzw_selfcheck {
  wzw::VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

wzw_status fail(wzw_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Maps the library's exception taxonomy onto status codes; nothing may
// escape across the C boundary.
template <typename Fn>
wzw_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WZW_OK;
  } catch (const wzw::parity_error& ex) {
    return fail(WZW_ERR_PARITY, ex.what());
  } catch (const wzw::stability_error& ex) {
    return fail(WZW_ERR_STABILITY, ex.what());
  } catch (const wzw::oracle_error& ex) {
    return fail(WZW_ERR_INTERNAL, ex.what());
  } catch (const std::invalid_argument& ex) {
    return fail(WZW_ERR_INVALID, ex.what());
  } catch (const std::exception& ex) {
    return fail(WZW_ERR_INTERNAL, ex.what());
  } catch (...) {
    return fail(WZW_ERR_INTERNAL, "unknown error");
  }
}

// Caller-owned copy; released with wzw_string_free.
char* dup_string(const std::string& value) {
  char* out = static_cast<char*>(std::malloc(value.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, value.c_str(), value.size() + 1);
  return out;
}

wzw_status require(bool ok, const char* message) {
  return ok ? WZW_OK : fail(WZW_ERR_INVALID, message);
}

wzw_hint to_c_hint(wzw::SmoothHint hint) {
  switch (hint) {
    case wzw::SmoothHint::Yes:
      return WZW_HINT_YES;
    case wzw::SmoothHint::No:
      return WZW_HINT_NO;
    default:
      return WZW_HINT_UNKNOWN;
  }
}

const wzw::SuiteResult* suite_at(const wzw_selfcheck* sc, int32_t suite) {
  if (sc == nullptr || suite < 0 ||
      static_cast<std::size_t>(suite) >= sc->report.suites.size()) {
    return nullptr;
  }
  return &sc->report.suites[static_cast<std::size_t>(suite)];
}

}  // namespace

extern "C" {

const char* wzw_version(void) { return "1.0.0"; }

const char* wzw_status_name(wzw_status status) {
  switch (status) {
    case WZW_OK:
      return "ok";
    case WZW_ERR_INVALID:
      return "invalid";
    case WZW_ERR_PARITY:
      return "parity";
    case WZW_ERR_STABILITY:
      return "stability";
    case WZW_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* wzw_last_error(void) { return g_last_error.c_str(); }

void wzw_string_free(char* s) { std::free(s); }

wzw_status wzw_intersect(int64_t e, int64_t a1, int64_t b1, int64_t a2, int64_t b2, char** out) {
  if (wzw_status st = require(out != nullptr, "intersect: out is null")) return st;
  return guarded([&] {
    const wzw::RuledSurface surface{e};
    *out = dup_string(surface.intersect({a1, b1}, {a2, b2}).str());
  });
}

wzw_status wzw_canonical_class(int64_t e, char** ka, char** kb) {
  if (wzw_status st = require(ka != nullptr && kb != nullptr, "canonical_class: out is null")) {
    return st;
  }
  return guarded([&] {
    const wzw::Divisor k = wzw::RuledSurface{e}.canonical_class();
    char* a = dup_string(k.a.str());
    try {
      *kb = dup_string(k.b.str());
    } catch (...) {
      std::free(a);
      throw;
    }
    *ka = a;
  });
}

wzw_status wzw_adjunction_genus(int64_t e, int64_t a, int64_t b, char** out) {
  if (wzw_status st = require(out != nullptr, "adjunction_genus: out is null")) return st;
  return guarded([&] {
    *out = dup_string(wzw::RuledSurface{e}.adjunction_genus({a, b}).str());
  });
}

wzw_status wzw_parity_ok(int64_t e, int64_t a, int64_t b, int* out) {
  if (wzw_status st = require(out != nullptr, "parity_ok: out is null")) return st;
  return guarded([&] { *out = wzw::RuledSurface{e}.parity_ok({a, b}) ? 1 : 0; });
}

wzw_status wzw_smooth_member_hint(int64_t e, int64_t a, int64_t b, wzw_hint* out) {
  if (wzw_status st = require(out != nullptr, "smooth_member_hint: out is null")) return st;
  return guarded([&] { *out = to_c_hint(wzw::RuledSurface{e}.smooth_member_hint({a, b})); });
}

wzw_status wzw_check_stability(int64_t e, int64_t c, int* out) {
  if (wzw_status st = require(out != nullptr, "check_stability: out is null")) return st;
  return guarded([&] { *out = wzw::check_stability(wzw::RuledSurface{e}, c) ? 1 : 0; });
}

wzw_status wzw_cohomology_table(int64_t e, int64_t a, int64_t b, char** h0, char** h1, char** h2) {
  if (wzw_status st = require(h0 != nullptr && h1 != nullptr && h2 != nullptr,
                              "cohomology_table: out is null")) {
    return st;
  }
  return guarded([&] {
    const wzw::CohomologyTable table = wzw::cohomology_table(wzw::RuledSurface{e}, {a, b});
    char* s0 = dup_string(table.h0.str());
    char* s1 = nullptr;
    try {
      s1 = dup_string(table.h1.str());
      *h2 = dup_string(table.h2.str());
    } catch (...) {
      std::free(s0);
      std::free(s1);
      throw;
    }
    *h0 = s0;
    *h1 = s1;
  });
}

wzw_status wzw_chi_rr(int64_t e, int64_t a, int64_t b, char** out) {
  if (wzw_status st = require(out != nullptr, "chi_rr: out is null")) return st;
  return guarded([&] {
    *out = dup_string(wzw::chi_rr(wzw::RuledSurface{e}, {a, b}).str());
  });
}

wzw_status wzw_report_compute(int64_t e, int64_t c, int64_t a, int64_t b, wzw_report** out) {
  if (wzw_status st = require(out != nullptr, "report_compute: out is null")) return st;
  return guarded([&] {
    wzw::BlocksReport report = wzw::conformal_block_dim(wzw::RuledSurface{e}, c, {a, b});
    *out = new wzw_report{std::move(report)};
  });
}

void wzw_report_free(wzw_report* report) { delete report; }

wzw_status wzw_report_value(const wzw_report* report, wzw_report_field field, char** out) {
  if (wzw_status st =
          require(report != nullptr && out != nullptr, "report_value: null argument")) {
    return st;
  }
  const wzw::Int* value = nullptr;
  switch (field) {
    case WZW_FIELD_GENUS:
      value = &report->report.genus;
      break;
    case WZW_FIELD_N:
      value = &report->report.n;
      break;
    case WZW_FIELD_D1:
      value = &report->report.d1;
      break;
    case WZW_FIELD_D2:
      value = &report->report.d2;
      break;
    case WZW_FIELD_ELL:
      value = &report->report.twist_ell;
      break;
    case WZW_FIELD_M_CLOSED:
      value = &report->report.m_closed;
      break;
    case WZW_FIELD_M_GRR:
      value = &report->report.m_grr;
      break;
    case WZW_FIELD_DIM:
      value = &report->report.dim_blocks;
      break;
  }
  if (value == nullptr) return fail(WZW_ERR_INVALID, "report_value: unknown field");
  return guarded([&] { *out = dup_string(value->str()); });
}

wzw_status wzw_report_smooth_hint(const wzw_report* report, wzw_hint* out) {
  if (wzw_status st =
          require(report != nullptr && out != nullptr, "report_smooth_hint: null argument")) {
    return st;
  }
  *out = to_c_hint(report->report.smooth_hint);
  return WZW_OK;
}

wzw_status wzw_selfcheck_run(int32_t grid, wzw_selfcheck** out) {
  if (wzw_status st = require(out != nullptr, "selfcheck_run: out is null")) return st;
  return guarded([&] {
    wzw::VerifyReport report = wzw::run_selfcheck(grid);
    *out = new wzw_selfcheck{std::move(report)};
  });
}

void wzw_selfcheck_free(wzw_selfcheck* sc) { delete sc; }

int wzw_selfcheck_passed(const wzw_selfcheck* sc) {
  return sc != nullptr && sc->report.all_passed() ? 1 : 0;
}

int32_t wzw_selfcheck_suite_count(const wzw_selfcheck* sc) {
  return sc == nullptr ? 0 : static_cast<int32_t>(sc->report.suites.size());
}

const char* wzw_selfcheck_suite_name(const wzw_selfcheck* sc, int32_t suite) {
  const wzw::SuiteResult* result = suite_at(sc, suite);
  return result == nullptr ? nullptr : result->name.c_str();
}

int64_t wzw_selfcheck_suite_cases(const wzw_selfcheck* sc, int32_t suite) {
  const wzw::SuiteResult* result = suite_at(sc, suite);
  return result == nullptr ? -1 : result->cases;
}

int64_t wzw_selfcheck_suite_failures(const wzw_selfcheck* sc, int32_t suite) {
  const wzw::SuiteResult* result = suite_at(sc, suite);
  return result == nullptr ? -1 : result->failures;
}

int32_t wzw_selfcheck_counterexample_count(const wzw_selfcheck* sc, int32_t suite) {
  const wzw::SuiteResult* result = suite_at(sc, suite);
  return result == nullptr ? 0 : static_cast<int32_t>(result->counterexamples.size());
}

const char* wzw_selfcheck_counterexample(const wzw_selfcheck* sc, int32_t suite, int32_t index) {
  const wzw::SuiteResult* result = suite_at(sc, suite);
  if (result == nullptr || index < 0 ||
      static_cast<std::size_t>(index) >= result->counterexamples.size()) {
    return nullptr;
  }
  return result->counterexamples[static_cast<std::size_t>(index)].c_str();
}

}  // extern "C"
