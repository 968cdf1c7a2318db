// Copyright 2026 The untelegraph Authors
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

#include "untelegraph/untelegraph.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "attacks.hpp"
#include "errors.hpp"
#include "estimator.hpp"
#include "formulas.hpp"
#include "linalg.hpp"
#include "qecm.hpp"
#include "weingarten.hpp"

namespace ut = untelegraph;

struct ut_unitary {
  ut::UnitaryMatrix u;
};

struct ut_scheme {
  ut::HaarScheme s;
};

struct ut_weingarten {
  ut::WeingartenTable table;
};

struct ut_moment_report {
  ut::MomentReport report;
};

namespace {

thread_local std::string last_error;

ut_status fail(ut_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body` and maps library exceptions to status codes. Order matters:
// the specific classes derive from the std categories below them.
struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
ut_status guarded(F&& body) {
  try {
    body();
    return UT_OK;
  } catch (const BufferTooSmall& e) {
    return fail(UT_ERR_BUFFER, e.what());
  } catch (const ut::UnsupportedAttackError& e) {
    return fail(UT_ERR_UNSUPPORTED, e.what());
  } catch (const ut::ParameterError& e) {
    return fail(UT_ERR_PARAMETER, e.what());
  } catch (const ut::CapacityError& e) {
    return fail(UT_ERR_CAPACITY, e.what());
  } catch (const ut::PreconditionError& e) {
    return fail(UT_ERR_PRECONDITION, e.what());
  } catch (const ut::SingularGramError& e) {
    return fail(UT_ERR_SINGULAR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UT_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(UT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UT_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ut::ParameterError(what);
}

void require_capacity(bool ok, const char* what) {
  if (!ok) throw BufferTooSmall(what);
}

template <typename T>
void set(T* out, T value) {
  if (out) *out = value;
}

ut_status write_string(const std::string& s, char* buf, std::size_t len, std::size_t* needed) {
  set(needed, s.size() + 1);
  if (!buf) return UT_OK;
  if (len < s.size() + 1) return fail(UT_ERR_BUFFER, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return UT_OK;
}

ut::AttackSpec to_spec(const ut_attack_spec* spec) {
  require(spec != nullptr, "attack spec is null");
  ut::AttackSpec out;
  switch (spec->kind) {
    case UT_ATTACK_BIT_SINGLE: out.kind = ut::AttackKind::kBitSingle; break;
    case UT_ATTACK_BIT_MAJORITY: out.kind = ut::AttackKind::kBitMajority; break;
    case UT_ATTACK_MULTI_ARGMAX: out.kind = ut::AttackKind::kMultiArgmax; break;
    case UT_ATTACK_DISTINGUISH: out.kind = ut::AttackKind::kDistinguish; break;
    case UT_ATTACK_GENERIC_POVM: out.kind = ut::AttackKind::kGenericPovm; break;
    default: throw ut::ParameterError("unknown attack kind");
  }
  out.scheme = ut::HaarScheme(spec->r, spec->n);
  out.copies = spec->t;
  out.m0 = spec->m0;
  out.m1 = spec->m1;
  if (out.kind == ut::AttackKind::kGenericPovm) {
    const std::size_t dim = out.scheme.dim();
    if (spec->povm_outcomes == 0) {
      out.povm = ut::Povm::computational_basis(dim);
    } else {
      ut::RngStream rng(spec->povm_seed, 0);
      out.povm = ut::Povm::random(dim, spec->povm_outcomes, rng);
    }
  }
  out.validate();
  return out;
}

ut::LogBase to_base(ut_log_base base) {
  if (base == UT_LOG_BINARY) return ut::LogBase::kBinary;
  if (base == UT_LOG_NATURAL) return ut::LogBase::kNatural;
  throw ut::ParameterError("unknown log base");
}

void to_clamped(const ut::ClampedBound& b, ut_clamped* out) {
  require(out != nullptr, "output is null");
  out->value = b.value;
  out->raw = b.raw;
  out->vacuous = b.vacuous ? 1 : 0;
}

ut_status exact_value(const ut::ExactValue& v, double* value, char* rational, std::size_t len,
                      std::size_t* needed) {
  set(value, v.value);
  if (!rational && !needed) return UT_OK;
  return write_string(v.rational(), rational, len, needed);
}

}  // namespace

extern "C" {

const char* ut_last_error(void) { return last_error.c_str(); }

const char* ut_status_name(ut_status status) {
  switch (status) {
    case UT_OK: return "ok";
    case UT_ERR_PARAMETER: return "parameter";
    case UT_ERR_CAPACITY: return "capacity";
    case UT_ERR_UNSUPPORTED: return "unsupported";
    case UT_ERR_PRECONDITION: return "precondition";
    case UT_ERR_SINGULAR: return "singular";
    case UT_ERR_BUFFER: return "buffer";
    case UT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ut_version(void) { return "0.1.0"; }

ut_status ut_unitary_sample_haar(size_t dim, uint64_t seed, uint64_t stream, ut_unitary** out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    ut::RngStream rng(seed, stream);
    *out = new ut_unitary{ut::sample_haar_unitary(dim, rng)};
  });
}

void ut_unitary_free(ut_unitary* u) { delete u; }

size_t ut_unitary_dim(const ut_unitary* u) { return u ? u->u.dim() : 0; }

ut_status ut_unitary_entry(const ut_unitary* u, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    require(u != nullptr, "unitary is null");
    require(row < u->u.dim() && col < u->u.dim(), "entry index out of range");
    const auto z = u->u.matrix()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    set(re, z.real());
    set(im, z.imag());
  });
}

ut_status ut_unitary_defect(const ut_unitary* u, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null argument");
    *out = u->u.unitarity_defect();
  });
}

ut_status ut_scheme_create(size_t r, size_t n, ut_scheme** out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = new ut_scheme{ut::HaarScheme(r, n)};
  });
}

void ut_scheme_free(ut_scheme* s) { delete s; }
size_t ut_scheme_rank(const ut_scheme* s) { return s ? s->s.rank() : 0; }
size_t ut_scheme_messages(const ut_scheme* s) { return s ? s->s.messages() : 0; }
size_t ut_scheme_dim(const ut_scheme* s) { return s ? s->s.dim() : 0; }

ut_status ut_scheme_roundtrip(const ut_scheme* s, const ut_unitary* key, size_t message,
                              double* probabilities, size_t len) {
  return guarded([&] {
    require(s != nullptr && key != nullptr && probabilities != nullptr, "null argument");
    require_capacity(len >= s->s.messages(), "probability buffer shorter than n");
    const auto dist = ut::decrypt_distribution(s->s, ut::encrypt(s->s, message, key->u), key->u);
    for (Eigen::Index m = 0; m < dist.size(); ++m) probabilities[m] = dist(m);
  });
}

ut_status ut_scheme_correctness(const ut_scheme* s, size_t samples, uint64_t seed, double* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = ut::correctness_check(s->s, samples, seed);
  });
}

ut_status ut_attack_kind_parse(const char* name, ut_attack_kind* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto kind = ut::parse_attack_kind(name);
    if (!kind) throw ut::ParameterError(std::string("unknown attack: ") + name);
    *out = static_cast<ut_attack_kind>(static_cast<int>(*kind));
  });
}

const char* ut_attack_kind_name(ut_attack_kind kind) {
  switch (kind) {
    case UT_ATTACK_BIT_SINGLE: return "bit-single";
    case UT_ATTACK_BIT_MAJORITY: return "bit-majority";
    case UT_ATTACK_MULTI_ARGMAX: return "multi-argmax";
    case UT_ATTACK_DISTINGUISH: return "distinguish";
    case UT_ATTACK_GENERIC_POVM: return "generic-povm";
  }
  return "unknown";
}

ut_attack_spec ut_attack_spec_default(void) {
  ut_attack_spec spec{};
  spec.kind = UT_ATTACK_BIT_SINGLE;
  spec.r = 1;
  spec.n = 2;
  spec.t = 1;
  spec.m0 = 0;
  spec.m1 = 1;
  return spec;
}

ut_status ut_attack_validate(const ut_attack_spec* spec) {
  return guarded([&] { to_spec(spec); });
}

ut_status ut_attack_describe(const ut_attack_spec* spec, char* buf, size_t len, size_t* needed) {
  std::string text;
  const ut_status status = guarded([&] { text = to_spec(spec).describe(); });
  if (status != UT_OK) return status;
  return write_string(text, buf, len, needed);
}

ut_status ut_attack_success(const ut_attack_spec* spec, const ut_unitary* key, double* out) {
  return guarded([&] {
    require(key != nullptr && out != nullptr, "null argument");
    *out = ut::evaluate_attack(to_spec(spec), key->u);
  });
}

ut_status ut_estimate(const ut_attack_spec* spec, uint64_t samples, uint64_t seed,
                      size_t chunk_size, unsigned threads, ut_value_estimate* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    ut::EstimateOptions options;
    if (chunk_size != 0) options.chunk_size = chunk_size;
    options.threads = threads;
    const auto est = ut::estimate(to_spec(spec), samples, seed, options);
    out->mean = est.mean;
    out->std_error = est.std_error;
    out->samples = est.n_samples;
    out->seed = est.master_seed;
  });
}

ut_status ut_confidence_interval(const ut_value_estimate* est, double z, double* lo, double* hi) {
  return guarded([&] {
    require(est != nullptr, "estimate is null");
    ut::ValueEstimate v;
    v.mean = est->mean;
    v.std_error = est->std_error;
    const auto [a, b] = ut::confidence_interval(v, z);
    set(lo, a);
    set(hi, b);
  });
}

ut_status ut_bit_exact_value(size_t r, double* value, char* rational, size_t len,
                             size_t* needed) {
  ut::ExactValue v;
  const ut_status status = guarded([&] { v = ut::bit_exact_value(r); });
  if (status != UT_OK) return status;
  return exact_value(v, value, rational, len, needed);
}

ut_status ut_distinguish_exact_value(size_t r, double* value, char* rational, size_t len,
                                     size_t* needed) {
  ut::ExactValue v;
  const ut_status status = guarded([&] { v = ut::distinguish_exact_value(r); });
  if (status != UT_OK) return status;
  return exact_value(v, value, rational, len, needed);
}

ut_status ut_bit_asymptotic_brackets(size_t d, double* lower, double* asymptote, double* upper) {
  return guarded([&] {
    const auto b = ut::bit_asymptotic_brackets(d);
    set(lower, b.lower);
    set(asymptote, b.asymptote);
    set(upper, b.upper);
  });
}

ut_status ut_majority_exact_value(double p, size_t t, double* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = ut::majority_exact_value(p, t);
  });
}

ut_status ut_majority_brackets(double delta, size_t t, double* lower, double* upper) {
  return guarded([&] {
    const auto b = ut::majority_brackets(delta, t);
    set(lower, b.lower);
    set(upper, b.upper);
  });
}

ut_status ut_multimessage_series(size_t r, size_t n, double tol, double* value,
                                 double* tail_bound, size_t* shells) {
  return guarded([&] {
    const auto s = ut::multimessage_series(r, n, tol);
    set(value, s.value);
    set(tail_bound, s.tail_bound);
    set(shells, s.shells);
  });
}

ut_status ut_telegraphing_lower_from_distinguish(size_t r, size_t n, double* value,
                                                 double* asymptotic) {
  return guarded([&] {
    const auto v = ut::telegraphing_lower_from_distinguish(r, n);
    set(value, v.value);
    set(asymptotic, v.asymptotic);
  });
}

ut_status ut_ute_upper_bound_bit(size_t d, double* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = ut::ute_upper_bound_bit(d);
  });
}

ut_status ut_ute_upper_bound_tcopy(size_t r, size_t t, ut_clamped* out) {
  return guarded([&] { to_clamped(ut::ute_upper_bound_tcopy(r, t), out); });
}

ut_status ut_collusion_upper_bound(size_t r, size_t q, size_t n, ut_clamped* out) {
  return guarded([&] { to_clamped(ut::collusion_upper_bound(r, q, n), out); });
}

ut_status ut_equivalence_gap(size_t d, size_t n_messages, uint64_t receivers, double eta,
                             ut_log_base base, double* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = ut::equivalence_gap(d, n_messages, receivers, eta, to_base(base));
  });
}

ut_status ut_min_receivers_for_gap(size_t d, size_t n_messages, double eta, double target,
                                   ut_log_base base, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = ut::min_receivers_for_gap(d, n_messages, eta, target, to_base(base));
  });
}

ut_status ut_general_lower_bounds(size_t d, size_t m, size_t n_messages, size_t t,
                                  double* telegraphing, double* cloning_1_to_2,
                                  double* cloning_t_to_t1) {
  return guarded([&] {
    const auto b = ut::general_lower_bounds(d, m, n_messages, t);
    set(telegraphing, b.telegraphing);
    set(cloning_1_to_2, b.cloning_1_to_2);
    set(cloning_t_to_t1, b.cloning_t_to_t1);
  });
}

ut_status ut_haar_tcopy_brackets(size_t r, size_t t, double* lower, ut_clamped* upper) {
  return guarded([&] {
    const auto b = ut::haar_tcopy_brackets(r, t);
    set(lower, b.lower);
    if (upper) to_clamped(b.upper, upper);
  });
}

ut_status ut_regularized_incomplete_beta(double x, double a, double b, double* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = ut::regularized_incomplete_beta(x, a, b);
  });
}

ut_status ut_weingarten_create(size_t k, size_t d, ut_weingarten** out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    *out = new ut_weingarten{ut::WeingartenTable(k, d)};
  });
}

void ut_weingarten_free(ut_weingarten* w) { delete w; }

size_t ut_weingarten_order(const ut_weingarten* w) { return w ? w->table.group().order() : 0; }

ut_status ut_weingarten_value(const ut_weingarten* w, const int* perm, size_t k, double* out) {
  return guarded([&] {
    require(w != nullptr && perm != nullptr && out != nullptr, "null argument");
    require(k == w->table.k(), "permutation degree differs from the table");
    ut::Permutation p(perm, perm + k);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i) {
      require(sorted[i] == static_cast<int>(i), "not a permutation of 0..k-1");
    }
    *out = w->table.weingarten(p);
  });
}

ut_status ut_weingarten_residual(const ut_weingarten* w, double* out) {
  return guarded([&] {
    require(w != nullptr && out != nullptr, "null argument");
    *out = w->table.inversion_residual();
  });
}

ut_status ut_exact_twirl_coefficients(const ut_weingarten* w, const double* x_re,
                                      const double* x_im, size_t dim, double* coeff_re,
                                      double* coeff_im, size_t n_coeff) {
  return guarded([&] {
    require(w != nullptr && x_re != nullptr && coeff_re != nullptr, "null argument");
    require_capacity(n_coeff >= w->table.group().order(), "coefficient buffer shorter than k!");
    const auto n = static_cast<Eigen::Index>(dim);
    ut::ComplexMatrix x(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto at = static_cast<std::size_t>(i * n + j);
        x(i, j) = ut::Complex(x_re[at], x_im ? x_im[at] : 0.0);
      }
    }
    const auto twirl = ut::exact_twirl(w->table, x);
    for (std::size_t i = 0; i < twirl.coefficients.size(); ++i) {
      coeff_re[i] = twirl.coefficients[i].real();
      if (coeff_im) coeff_im[i] = twirl.coefficients[i].imag();
    }
  });
}

ut_status ut_second_moment_check(size_t d, double tolerance, ut_second_moment_report* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    const auto r = ut::second_moment_check(d, tolerance);
    *out = {r.d, r.c_identity, r.c_flip, r.expected_identity, r.expected_flip,
            r.max_entry_deviation, r.pass ? 1 : 0};
  });
}

ut_status ut_lemma_bracket_check(size_t k, size_t d, size_t trials, uint64_t seed,
                                 double tolerance, ut_bracket_report* out) {
  return guarded([&] {
    require(out != nullptr, "output is null");
    const auto r = ut::lemma_bracket_check(k, d, trials, seed, tolerance);
    *out = ut_bracket_report{};
    out->k = r.k;
    out->d = r.d;
    out->trials = r.trials;
    out->seed = r.seed;
    out->upper_gap_min = *std::min_element(r.upper_gap_min.begin(), r.upper_gap_min.end());
    out->lower_gap_min = *std::min_element(r.lower_gap_min.begin(), r.lower_gap_min.end());
    out->min_eigenvalue = r.min_eigenvalue;
    out->pass = r.pass ? 1 : 0;
    if (r.cp_pass) {
      out->has_cp = 1;
      out->cp_upper_min = *r.cp_upper_min;
      out->cp_lower_min = *r.cp_lower_min;
      out->cp_pass = *r.cp_pass ? 1 : 0;
    }
  });
}

ut_status ut_choi_bracket(size_t k, size_t d, ut_choi_route route, double* upper_min,
                          double* lower_min) {
  return guarded([&] {
    require(route == UT_CHOI_GROUP_ALGEBRA || route == UT_CHOI_DENSE, "unknown Choi route");
    const auto b = ut::choi_bracket(
        k, d, route == UT_CHOI_DENSE ? ut::ChoiRoute::kDense : ut::ChoiRoute::kGroupAlgebra);
    set(upper_min, b.upper_min);
    set(lower_min, b.lower_min);
  });
}

ut_status ut_moment_deviation_check(size_t r, size_t n, const size_t* parts, size_t n_parts,
                                    size_t random_trials, uint64_t seed, ut_moment_report** out) {
  return guarded([&] {
    require(out != nullptr && parts != nullptr, "null argument");
    const std::vector<std::size_t> p(parts, parts + n_parts);
    *out = new ut_moment_report{ut::mixed_moment_deviation_check(r, n, p, random_trials, seed)};
  });
}

void ut_moment_report_free(ut_moment_report* report) { delete report; }

ut_status ut_moment_report_summary(const ut_moment_report* report, size_t* k,
                                   double* bound_factor, double* max_ratio, int* pass,
                                   size_t* n_probes) {
  return guarded([&] {
    require(report != nullptr, "report is null");
    const auto& r = report->report;
    set(k, r.k);
    set(bound_factor, r.bound_factor);
    set(max_ratio, r.max_ratio);
    set(pass, r.pass ? 1 : 0);
    set(n_probes, r.probes.size());
  });
}

ut_status ut_moment_report_probe(const ut_moment_report* report, size_t i, const char** label,
                                 double* trace_p, double* haar_value, double* deviation,
                                 double* ratio, int* within_bound) {
  return guarded([&] {
    require(report != nullptr, "report is null");
    require(i < report->report.probes.size(), "probe index out of range");
    const auto& p = report->report.probes[i];
    set(label, p.label.c_str());
    set(trace_p, p.trace_p);
    set(haar_value, p.haar_value);
    set(deviation, p.deviation);
    set(ratio, p.ratio);
    set(within_bound, p.within_bound ? 1 : 0);
  });
}

}  // extern "C"
