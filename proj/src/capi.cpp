// Copyright 2026 The majsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majsep/majsep.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "majsep/construct.hpp"
#include "majsep/criteria.hpp"
#include "majsep/error.hpp"
#include "majsep/io.hpp"
#include "majsep/qstate.hpp"
#include "majsep/search.hpp"

struct majsep_state {
  majsep::DensityMatrix rho;
};

struct majsep_report {
  majsep::SeparabilityReport report;
};

struct majsep_construction {
  majsep::SeparableConstruction construction;
  majsep_state state;
};

struct majsep_search {
  std::vector<majsep::SearchRecord> records;
};

namespace {

thread_local std::string g_last_error;

majsep_status status_from(majsep::ErrorCode code) {
  using majsep::ErrorCode;
  switch (code) {
    case ErrorCode::BadParameter: return MAJSEP_ERR_BAD_PARAMETER;
    case ErrorCode::NotHermitian: return MAJSEP_ERR_NOT_HERMITIAN;
    case ErrorCode::NoConvergence: return MAJSEP_ERR_NO_CONVERGENCE;
    case ErrorCode::InvalidState: return MAJSEP_ERR_INVALID_STATE;
    case ErrorCode::BadPartition: return MAJSEP_ERR_BAD_PARTITION;
    case ErrorCode::SumMismatch: return MAJSEP_ERR_SUM_MISMATCH;
    case ErrorCode::NotMajorized: return MAJSEP_ERR_NOT_MAJORIZED;
    case ErrorCode::DegenerateInput: return MAJSEP_ERR_DEGENERATE_INPUT;
    case ErrorCode::TooLarge: return MAJSEP_ERR_TOO_LARGE;
    case ErrorCode::Parse: return MAJSEP_ERR_PARSE;
    case ErrorCode::Io: return MAJSEP_ERR_IO;
    case ErrorCode::SelfCheckFailed: return MAJSEP_ERR_SELF_CHECK;
  }
  return MAJSEP_ERR_INTERNAL;
}

majsep_status fail(majsep_status status, std::string msg) {
  g_last_error = std::move(msg);
  return status;
}

// Runs `body` translating every exception into a status code.
template <class Body>
majsep_status guarded(Body&& body) noexcept {
  try {
    body();
    return MAJSEP_OK;
  } catch (const majsep::Error& e) {
    return fail(status_from(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MAJSEP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MAJSEP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MAJSEP_ERR_INTERNAL, "unknown error");
  }
}

#define MAJSEP_REQUIRE(ptr)                                                 do {                                                                        if ((ptr) == nullptr)                                                       return fail(MAJSEP_ERR_NULL_ARGUMENT, "argument '" #ptr "' is null");   } while (0)

majsep_status emit(majsep::DensityMatrix rho, majsep_state** out) {
  *out = new majsep_state{std::move(rho)};
  return MAJSEP_OK;
}

majsep_status copy_out(const std::vector<double>& values, double* out,
                       std::size_t cap, std::size_t* len) {
  if (len != nullptr) *len = values.size();
  if (out == nullptr && cap == 0) return MAJSEP_OK;
  if (cap < values.size() || out == nullptr) {
    return fail(MAJSEP_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(cap) + " values, need " +
                    std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), out);
  return MAJSEP_OK;
}

majsep_search_record to_c(const majsep::SearchRecord& r) {
  return {r.index,       r.seed,
          r.dim_a,       r.dim_b,
          r.rank,        r.ppt_min_eig,
          r.majorization_a_gap, r.majorization_b_gap,
          r.is_candidate ? 1 : 0, r.is_near_miss ? 1 : 0};
}

majsep::SeparableConstruction build_construction(const std::vector<double>& r,
                                                 const std::vector<double>& s) {
  return majsep::theorem2_construct(majsep::Spectrum(r), majsep::Spectrum(s));
}

}  // namespace

extern "C" {

const char* majsep_version(void) { return "1.0.0"; }

const char* majsep_status_name(majsep_status status) {
  switch (status) {
    case MAJSEP_OK: return "OK";
    case MAJSEP_ERR_BAD_PARAMETER: return "BadParameter";
    case MAJSEP_ERR_NOT_HERMITIAN: return "NotHermitian";
    case MAJSEP_ERR_NO_CONVERGENCE: return "NoConvergence";
    case MAJSEP_ERR_INVALID_STATE: return "InvalidState";
    case MAJSEP_ERR_BAD_PARTITION: return "BadPartition";
    case MAJSEP_ERR_SUM_MISMATCH: return "SumMismatch";
    case MAJSEP_ERR_NOT_MAJORIZED: return "NotMajorized";
    case MAJSEP_ERR_DEGENERATE_INPUT: return "DegenerateInput";
    case MAJSEP_ERR_TOO_LARGE: return "TooLarge";
    case MAJSEP_ERR_PARSE: return "Parse";
    case MAJSEP_ERR_IO: return "Io";
    case MAJSEP_ERR_SELF_CHECK: return "SelfCheckFailed";
    case MAJSEP_ERR_NULL_ARGUMENT: return "NullArgument";
    case MAJSEP_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case MAJSEP_ERR_OUT_OF_RANGE: return "OutOfRange";
    case MAJSEP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* majsep_last_error(void) { return g_last_error.c_str(); }

const char* majsep_verdict_name(majsep_verdict verdict) {
  return verdict == MAJSEP_CONSISTENT_WITH_SEPARABILITY
             ? majsep::to_string(majsep::Verdict::ConsistentWithSeparability)
             : majsep::to_string(majsep::Verdict::ProvenInseparable);
}

majsep_status majsep_state_create(const size_t* dims, size_t ndims, size_t split,
                                  const double* re, const double* im,
                                  majsep_state** out) {
  MAJSEP_REQUIRE(dims);
  MAJSEP_REQUIRE(re);
  MAJSEP_REQUIRE(im);
  MAJSEP_REQUIRE(out);
  if (ndims == 0) return fail(MAJSEP_ERR_BAD_PARAMETER, "at least one subsystem needed");
  return guarded([&] {
    std::vector<std::size_t> d(dims, dims + ndims);
    std::size_t n = 1;
    for (auto x : d) {
      if (x == 0 || x > majsep::kDefaultDimCap || n * x > majsep::kDefaultDimCap) {
        throw majsep::Error(majsep::ErrorCode::BadParameter,
                            "subsystem dimensions must be positive with product <= " +
                                std::to_string(majsep::kDefaultDimCap));
      }
      n *= x;
    }
    std::vector<majsep::Complex> entries(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries[i] = {re[i], im[i]};
    emit(majsep::DensityMatrix(majsep::ComplexMatrix(n, std::move(entries)),
                               std::move(d), split),
         out);
  });
}

majsep_status majsep_state_parse(const char* text, majsep_state** out) {
  MAJSEP_REQUIRE(text);
  MAJSEP_REQUIRE(out);
  return guarded([&] { emit(majsep::parse_matrix_file(text), out); });
}

majsep_status majsep_state_load(const char* path, majsep_state** out) {
  MAJSEP_REQUIRE(path);
  MAJSEP_REQUIRE(out);
  return guarded([&] { emit(majsep::load_matrix_file(path), out); });
}

majsep_status majsep_state_werner(size_t d, double p, majsep_state** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { emit(majsep::werner_state(d, p), out); });
}

majsep_status majsep_state_cat(size_t n, size_t d, double eps, majsep_state** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { emit(majsep::cat_mixed_state(n, d, eps), out); });
}

majsep_status majsep_state_example1(double p, majsep_state** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { emit(majsep::example1_state(p), out); });
}

majsep_status majsep_state_isospectral(majsep_state** rho, majsep_state** sigma) {
  MAJSEP_REQUIRE(rho);
  MAJSEP_REQUIRE(sigma);
  return guarded([&] {
    auto [r, s] = majsep::isospectral_pair();
    auto first = std::make_unique<majsep_state>(majsep_state{std::move(r)});
    auto second = std::make_unique<majsep_state>(majsep_state{std::move(s)});
    *rho = first.release();
    *sigma = second.release();
  });
}

majsep_status majsep_state_random(size_t dim_a, size_t dim_b, size_t rank,
                                  uint64_t seed, majsep_state** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    emit(majsep::random_density_matrix({dim_a, dim_b}, 1, rank, seed), out);
  });
}

majsep_status majsep_state_random_separable(size_t dim_a, size_t dim_b,
                                            size_t terms, uint64_t seed,
                                            majsep_state** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    emit(majsep::random_separable_state(dim_a, dim_b, terms, seed), out);
  });
}

void majsep_state_destroy(majsep_state* state) { delete state; }

size_t majsep_state_dim(const majsep_state* state) {
  return state != nullptr ? state->rho.dim() : 0;
}

majsep_status majsep_state_dims(const majsep_state* state, size_t* dims, size_t cap,
                                size_t* ndims, size_t* split) {
  MAJSEP_REQUIRE(state);
  const auto& d = state->rho.dims();
  if (ndims != nullptr) *ndims = d.size();
  if (split != nullptr) *split = state->rho.split();
  if (dims == nullptr && cap == 0) return MAJSEP_OK;
  if (dims == nullptr || cap < d.size()) {
    return fail(MAJSEP_ERR_BUFFER_TOO_SMALL, "dims buffer too small");
  }
  std::copy(d.begin(), d.end(), dims);
  return MAJSEP_OK;
}

majsep_status majsep_state_entries(const majsep_state* state, double* re, double* im,
                                   size_t cap) {
  MAJSEP_REQUIRE(state);
  MAJSEP_REQUIRE(re);
  MAJSEP_REQUIRE(im);
  const auto entries = state->rho.matrix().entries();
  if (cap < entries.size()) {
    return fail(MAJSEP_ERR_BUFFER_TOO_SMALL,
                "entry buffers need " + std::to_string(entries.size()) + " values");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    re[i] = entries[i].real();
    im[i] = entries[i].imag();
  }
  return MAJSEP_OK;
}

majsep_status majsep_state_format(const majsep_state* state, char* buf, size_t cap,
                                  size_t* needed) {
  MAJSEP_REQUIRE(state);
  std::string text;
  const auto st = guarded([&] { text = majsep::format_matrix_file(state->rho); });
  if (st != MAJSEP_OK) return st;
  if (needed != nullptr) *needed = text.size() + 1;
  if (buf == nullptr && cap == 0) return MAJSEP_OK;
  if (buf == nullptr || cap < text.size() + 1) {
    return fail(MAJSEP_ERR_BUFFER_TOO_SMALL, "text buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return MAJSEP_OK;
}

majsep_status majsep_analyze(const majsep_state* state, double tol,
                             majsep_report** out) {
  MAJSEP_REQUIRE(state);
  MAJSEP_REQUIRE(out);
  if (!(tol >= 0.0)) return fail(MAJSEP_ERR_BAD_PARAMETER, "tolerance must be >= 0");
  return guarded([&] {
    *out = new majsep_report{majsep::analyze(state->rho, tol)};
  });
}

void majsep_report_destroy(majsep_report* report) { delete report; }

majsep_status majsep_report_get_summary(const majsep_report* report,
                                        majsep_report_summary* out) {
  MAJSEP_REQUIRE(report);
  MAJSEP_REQUIRE(out);
  const auto& r = report->report;
  auto first = [](const majsep::MajorizationVerdict& v) {
    return v.first_violation ? static_cast<long>(*v.first_violation) : -1L;
  };
  out->verdict = r.verdict == majsep::Verdict::ConsistentWithSeparability
                     ? MAJSEP_CONSISTENT_WITH_SEPARABILITY
                     : MAJSEP_PROVEN_INSEPARABLE;
  out->majorization_a = r.majorization_a.holds ? 1 : 0;
  out->majorization_b = r.majorization_b.holds ? 1 : 0;
  out->first_violation_a = first(r.majorization_a);
  out->first_violation_b = first(r.majorization_b);
  out->entropy_ok = r.entropy.ok ? 1 : 0;
  out->entropy_a = r.entropy.entropy_a;
  out->entropy_b = r.entropy.entropy_b;
  out->entropy_ab = r.entropy.entropy_ab;
  out->ppt_ok = r.ppt.ok ? 1 : 0;
  out->ppt_min_eigenvalue = r.ppt.min_eigenvalue;
  return MAJSEP_OK;
}

majsep_status majsep_report_spectrum(const majsep_report* report,
                                     majsep_spectrum_kind kind, double* out,
                                     size_t cap, size_t* len) {
  MAJSEP_REQUIRE(report);
  const auto& r = report->report;
  const majsep::Spectrum* s = nullptr;
  switch (kind) {
    case MAJSEP_SPECTRUM_GLOBAL: s = &r.global_spectrum; break;
    case MAJSEP_SPECTRUM_A: s = &r.spectrum_a; break;
    case MAJSEP_SPECTRUM_B: s = &r.spectrum_b; break;
    default: return fail(MAJSEP_ERR_BAD_PARAMETER, "unknown spectrum kind");
  }
  return copy_out({s->values().begin(), s->values().end()}, out, cap, len);
}

majsep_status majsep_report_prefix_gaps(const majsep_report* report, majsep_side side,
                                        double* out, size_t cap, size_t* len) {
  MAJSEP_REQUIRE(report);
  const auto& r = report->report;
  if (side != MAJSEP_SIDE_A && side != MAJSEP_SIDE_B) {
    return fail(MAJSEP_ERR_BAD_PARAMETER, "unknown side");
  }
  return copy_out(side == MAJSEP_SIDE_A ? r.majorization_a.prefix_gaps
                                        : r.majorization_b.prefix_gaps,
                  out, cap, len);
}

majsep_status majsep_werner_threshold(size_t d, double* out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { *out = majsep::werner_majorization_threshold(d); });
}

majsep_status majsep_cat_threshold(size_t n, size_t d, double* out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { *out = majsep::cat_violation_threshold(n, d); });
}

majsep_status majsep_werner_entropy_boundary(double* out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { *out = majsep::bisect_werner_entropy(); });
}

majsep_status majsep_construct(const double* r, size_t nr, const double* s, size_t ns,
                               majsep_construction** out) {
  MAJSEP_REQUIRE(r);
  MAJSEP_REQUIRE(s);
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    auto c = build_construction({r, r + nr}, {s, s + ns});
    majsep_state st{c.state};
    *out = new majsep_construction{std::move(c), std::move(st)};
  });
}

majsep_status majsep_construct_from_file(const char* path, majsep_construction** out) {
  MAJSEP_REQUIRE(path);
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    const auto spectra = majsep::load_spectra_file(path);
    auto c = build_construction(spectra.r, spectra.s);
    majsep_state st{c.state};
    *out = new majsep_construction{std::move(c), std::move(st)};
  });
}

void majsep_construction_destroy(majsep_construction* c) { delete c; }

const majsep_state* majsep_construction_state(const majsep_construction* c) {
  return c != nullptr ? &c->state : nullptr;
}

size_t majsep_construction_term_count(const majsep_construction* c) {
  return c != nullptr ? c->construction.terms.size() : 0;
}

majsep_status majsep_construction_term(const majsep_construction* c, size_t i,
                                       double* weight, size_t* b_index, double* a_re,
                                       double* a_im, size_t cap, size_t* dim_a) {
  MAJSEP_REQUIRE(c);
  const auto& terms = c->construction.terms;
  if (i >= terms.size()) {
    return fail(MAJSEP_ERR_OUT_OF_RANGE, "term index " + std::to_string(i) +
                                             " out of range");
  }
  const auto& t = terms[i];
  if (weight != nullptr) *weight = t.weight;
  if (b_index != nullptr) *b_index = t.b_index;
  if (dim_a != nullptr) *dim_a = t.a_vector.size();
  if (a_re == nullptr && a_im == nullptr && cap == 0) return MAJSEP_OK;
  if (a_re == nullptr || a_im == nullptr || cap < t.a_vector.size()) {
    return fail(MAJSEP_ERR_BUFFER_TOO_SMALL, "A-vector buffers too small");
  }
  for (std::size_t k = 0; k < t.a_vector.size(); ++k) {
    a_re[k] = t.a_vector[k].real();
    a_im[k] = t.a_vector[k].imag();
  }
  return MAJSEP_OK;
}

majsep_status majsep_theorem3_global_spectrum(double q, double phi, double out[2]) {
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    const auto s = majsep::theorem3_global_spectrum(q, phi);
    out[0] = s[0];
    out[1] = s[1];
  });
}

majsep_status majsep_theorem3_feasibility(double p, int* feasible, double roots[2]) {
  MAJSEP_REQUIRE(feasible);
  return guarded([&] {
    const auto r = majsep::theorem3_feasibility(p);
    *feasible = r ? 1 : 0;
    if (r && roots != nullptr) {
      roots[0] = r->first;
      roots[1] = r->second;
    }
  });
}

majsep_status majsep_theorem3_onset(double* out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { *out = majsep::theorem3_infeasibility_onset(); });
}

majsep_status majsep_search_run(size_t dim_a, size_t dim_b, size_t rank, size_t samples,
                                uint64_t seed, unsigned threads, majsep_search** out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] {
    majsep::SearchConfig config{dim_a, dim_b, rank, samples, seed, threads};
    *out = new majsep_search{majsep::run_search(config)};
  });
}

void majsep_search_destroy(majsep_search* search) { delete search; }

size_t majsep_search_count(const majsep_search* search) {
  return search != nullptr ? search->records.size() : 0;
}

majsep_status majsep_search_record_at(const majsep_search* search, size_t i,
                                      majsep_search_record* out) {
  MAJSEP_REQUIRE(search);
  MAJSEP_REQUIRE(out);
  if (i >= search->records.size()) {
    return fail(MAJSEP_ERR_OUT_OF_RANGE, "record index out of range");
  }
  *out = to_c(search->records[i]);
  return MAJSEP_OK;
}

majsep_status majsep_search_evaluate(size_t dim_a, size_t dim_b, size_t rank,
                                     uint64_t seed, majsep_search_record* out) {
  MAJSEP_REQUIRE(out);
  return guarded([&] { *out = to_c(majsep::evaluate_sample(dim_a, dim_b, rank, seed)); });
}

}  // extern "C"
