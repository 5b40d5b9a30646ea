#include "majidx/majidx.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "majidx/bijections.hpp"
#include "majidx/error.hpp"
#include "majidx/harness.hpp"
#include "majidx/mis.hpp"
#include "majidx/qpoly.hpp"
#include "majidx/serialize.hpp"
#include "majidx/words.hpp"

struct mj_seq {
  std::vector<int64_t> v;
};

struct mj_segmentation {
  majidx::Word sigma;
  majidx::Segmentation segments;
};

struct mj_phi_result {
  majidx::Word sigma;
  majidx::PhiResult result;
};

struct mj_poly {
  majidx::QPolynomial p;
};

struct mj_report {
  majidx::VerificationReport r;
};

namespace {

thread_local std::string last_error;

struct NullArgument {};

template <class T>
void need(const T* p) {
  if (p == nullptr) throw NullArgument{};
}

template <class Fn>
mj_status guard(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return MJ_OK;
  } catch (const NullArgument&) {
    last_error = "null argument";
    return MJ_INVALID_ARGUMENT;
  } catch (const majidx::InputError& e) {
    last_error = e.what();
    return MJ_INPUT_ERROR;
  } catch (const majidx::InvariantViolation& e) {
    last_error = std::string("internal invariant violated: ") + e.what();
    return MJ_INTERNAL_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MJ_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MJ_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mj_seq* make_seq(std::vector<int64_t> v) { return new mj_seq{std::move(v)}; }

mj_seq* make_seq(const majidx::Word& w) { return make_seq(std::vector<int64_t>(w.letters().begin(), w.letters().end())); }

mj_seq* make_seq(std::span<const std::size_t> idx) { return make_seq(std::vector<int64_t>(idx.begin(), idx.end())); }

majidx::Word word(const mj_seq* s) {
  need(s);
  return majidx::Word(s->v);
}

majidx::Partition partition(const mj_seq* s, int64_t bound) {
  need(s);
  return majidx::Partition(s->v, bound);
}

int64_t max_part(const mj_seq* s) {
  need(s);
  int64_t m = 0;
  for (int64_t x : s->v) m = std::max(m, x);
  return m;
}

std::vector<std::size_t> sizes(const mj_seq* s, const char* what) {
  need(s);
  std::vector<std::size_t> out;
  for (int64_t x : s->v) {
    if (x < 0) throw majidx::InputError(std::string(what) + " must be nonnegative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace

extern "C" {

const char* mj_last_error(void) { return last_error.c_str(); }

void mj_string_free(char* s) { std::free(s); }

// ---- sequences ------------------------------------------------------------

mj_status mj_seq_create(const int64_t* data, size_t len, mj_seq** out) {
  return guard([&] {
    need(out);
    if (len > 0) need(data);
    *out = make_seq(std::vector<int64_t>(data, data + len));
  });
}

mj_status mj_seq_parse_word(const char* text, mj_seq** out) {
  return guard([&] {
    need(text);
    need(out);
    *out = make_seq(majidx::parse_letters(text, true));
  });
}

mj_status mj_seq_parse_list(const char* text, mj_seq** out) {
  return guard([&] {
    need(text);
    need(out);
    *out = make_seq(majidx::parse_letters(text, false));
  });
}

size_t mj_seq_size(const mj_seq* s) { return s ? s->v.size() : 0; }

const int64_t* mj_seq_data(const mj_seq* s) { return s ? s->v.data() : nullptr; }

mj_status mj_seq_to_text(const mj_seq* s, char** out) {
  return guard([&] {
    need(s);
    need(out);
    *out = dup(majidx::format_letters(s->v));
  });
}

mj_status mj_seq_to_json(const mj_seq* s, char** out) {
  return guard([&] {
    need(s);
    need(out);
    *out = dup(majidx::json(s->v).dump());
  });
}

void mj_seq_free(mj_seq* s) { delete s; }

// ---- statistics -------------------------------------------------------------

mj_status mj_maj(const mj_seq* w, int64_t* out) {
  return guard([&] {
    need(w);
    need(out);
    *out = majidx::maj(std::span<const int64_t>(w->v));
  });
}

mj_status mj_inv(const mj_seq* w, int64_t* out) {
  return guard([&] {
    need(w);
    need(out);
    *out = majidx::inv(std::span<const int64_t>(w->v));
  });
}

mj_status mj_des(const mj_seq* w, mj_seq** out) {
  return guard([&] {
    need(w);
    need(out);
    *out = make_seq(majidx::descent_set(std::span<const int64_t>(w->v)).indices);
  });
}

mj_status mj_ides(const mj_seq* w, mj_seq** out) {
  return guard([&] {
    need(out);
    *out = make_seq(majidx::inverse_descent_set(word(w)).indices);
  });
}

mj_status mj_d_k(const mj_seq* w, size_t k, int64_t* out) {
  return guard([&] {
    need(w);
    need(out);
    *out = majidx::d_k(std::span<const int64_t>(w->v), k);
  });
}

mj_status mj_inversion_sequence(const mj_seq* w, mj_seq** out) {
  return guard([&] {
    need(out);
    *out = make_seq(majidx::inversion_sequence(word(w)));
  });
}

mj_status mj_insert(const mj_seq* w, size_t k, int64_t r, mj_seq** out) {
  return guard([&] {
    need(out);
    *out = make_seq(majidx::insert_at(word(w), k, r));
  });
}

// ---- MIS ------------------------------------------------------------------

mj_status mj_mis(const mj_seq* sigma, int64_t r, mj_mis_algorithm alg, mj_seq** out) {
  return guard([&] {
    need(out);
    const majidx::Word s = word(sigma);
    if (r <= 0) throw majidx::InputError("mis: letter must be positive");
    if (s.contains(r)) throw majidx::InputError("mis: letter " + std::to_string(r) + " already in word");
    majidx::MISequence m;
    switch (alg) {
      case MJ_MIS_LG: m = majidx::major_increments(s, r); break;
      case MJ_MIS_ORACLE: m = majidx::mis_oracle(s, r); break;
      case MJ_MIS_L:
        if (!s.empty() && r < s.max_letter())
          throw majidx::InputError("algorithm L requires r greater than every letter");
        m = s.empty() ? majidx::MISequence({0}) : majidx::algorithm_l(s);
        break;
      case MJ_MIS_G:
        if (!s.empty() && r > s.min_letter())
          throw majidx::InputError("algorithm G requires r less than every letter");
        m = s.empty() ? majidx::MISequence({0}) : majidx::algorithm_g(s);
        break;
      default: throw majidx::InputError("unknown MIS algorithm");
    }
    *out = make_seq(std::vector<int64_t>(m.entries().begin(), m.entries().end()));
  });
}

mj_status mj_segments(const mj_seq* sigma, int64_t r, mj_segmentation** out) {
  return guard([&] {
    need(out);
    majidx::Word s = word(sigma);
    majidx::Segmentation seg = majidx::segment(s, r);
    *out = new mj_segmentation{std::move(s), std::move(seg)};
  });
}

size_t mj_segmentation_count(const mj_segmentation* s) { return s ? s->segments.size() : 0; }

mj_status mj_segmentation_get(const mj_segmentation* s, size_t index, int* kind, size_t* first, size_t* last) {
  return guard([&] {
    need(s);
    if (index >= s->segments.size()) throw majidx::InputError("segment index out of range");
    const majidx::Segment& seg = s->segments[index];
    if (kind) *kind = seg.kind == majidx::SegmentKind::lesser ? 0 : 1;
    if (first) *first = seg.first;
    if (last) *last = seg.last;
  });
}

mj_status mj_segmentation_to_text(const mj_segmentation* s, char** out) {
  return guard([&] {
    need(s);
    need(out);
    *out = dup(majidx::format_segmentation(s->segments, s->sigma));
  });
}

mj_status mj_segmentation_to_json(const mj_segmentation* s, char** out) {
  return guard([&] {
    need(s);
    need(out);
    *out = dup(majidx::to_json(s->segments, s->sigma).dump());
  });
}

void mj_segmentation_free(mj_segmentation* s) { delete s; }

// ---- bijections -------------------------------------------------------------

mj_status mj_phi(const mj_seq* theta, const mj_seq* pi, const mj_seq* sigma, mj_phi_result** out) {
  return guard([&] {
    need(out);
    majidx::Word s = word(sigma);
    majidx::PhiResult res = majidx::phi(word(theta), word(pi), s);
    *out = new mj_phi_result{std::move(s), std::move(res)};
  });
}

mj_status mj_phi_inverse(const mj_seq* theta, const mj_seq* pi, const mj_seq* lambda, mj_phi_result** out) {
  return guard([&] {
    need(out);
    const majidx::Word t = word(theta);
    const majidx::Partition p = partition(lambda, std::max<int64_t>(max_part(lambda), static_cast<int64_t>(t.size())));
    majidx::PhiResult res = majidx::phi_inverse_traced(t, word(pi), p);
    majidx::Word s = res.trace.steps.empty() ? t : res.trace.steps.back().sigma;
    *out = new mj_phi_result{std::move(s), std::move(res)};
  });
}

mj_status mj_phi_result_word(const mj_phi_result* r, mj_seq** out) {
  return guard([&] {
    need(r);
    need(out);
    *out = make_seq(r->sigma);
  });
}

mj_status mj_phi_result_partition(const mj_phi_result* r, mj_seq** out) {
  return guard([&] {
    need(r);
    need(out);
    const auto parts = r->result.partition.parts();
    *out = make_seq(std::vector<int64_t>(parts.begin(), parts.end()));
  });
}

mj_status mj_phi_result_to_json(const mj_phi_result* r, char** out) {
  return guard([&] {
    need(r);
    need(out);
    const majidx::json j = {{"sigma", majidx::to_json(r->sigma)},
                            {"partition", majidx::to_json(r->result.partition)},
                            {"trace", majidx::to_json(r->result.trace)}};
    *out = dup(j.dump());
  });
}

mj_status mj_phi_result_trace_text(const mj_phi_result* r, char** out) {
  return guard([&] {
    need(r);
    need(out);
    std::string s;
    for (const majidx::TraceStep& st : r->result.trace.steps)
      s += "i=" + std::to_string(st.i) + " k=" + std::to_string(st.k) + " m=" + std::to_string(st.m) +
           " t=" + std::to_string(st.t) + " sigma=" + majidx::format_word(st.sigma) + "\n";
    *out = dup(s);
  });
}

void mj_phi_result_free(mj_phi_result* r) { delete r; }

mj_status mj_psi(int64_t b, int64_t a, const mj_seq* tau, mj_seq** out) {
  return guard([&] {
    need(out);
    const majidx::Partition lambda = majidx::psi(b, a, word(tau));
    *out = make_seq(std::vector<int64_t>(lambda.parts().begin(), lambda.parts().end()));
  });
}

mj_status mj_psi_inverse(int64_t b, int64_t a, const mj_seq* lambda, mj_seq** out) {
  return guard([&] {
    need(out);
    if (b < 0) throw majidx::InputError("psi_inverse: b must be nonnegative");
    *out = make_seq(majidx::psi_inverse(b, a, partition(lambda, std::max(max_part(lambda), b))));
  });
}

mj_status mj_omega(const mj_seq* q, const mj_seq* tau, mj_seq** out) {
  return guard([&] {
    need(out);
    const std::vector<std::size_t> qs = sizes(q, "Q entries");
    *out = make_seq(majidx::omega(qs, word(tau)));
  });
}

mj_status mj_build(const mj_seq* order, const mj_seq* targets, mj_seq** out) {
  return guard([&] {
    need(order);
    need(targets);
    need(out);
    *out = make_seq(majidx::build_by_increments(order->v, targets->v));
  });
}

mj_status mj_inv_to_maj(const mj_seq* sigma, const mj_seq* order, mj_seq** out) {
  return guard([&] {
    need(out);
    *out = make_seq(majidx::inv_to_maj(word(sigma), word(order)));
  });
}

mj_status mj_maj_to_inv(const mj_seq* tau, const mj_seq* order, mj_seq** out) {
  return guard([&] {
    need(out);
    *out = make_seq(majidx::maj_to_inv(word(tau), word(order)));
  });
}

// ---- q-polynomials ----------------------------------------------------------

mj_status mj_qfactorial(size_t n, mj_poly** out) {
  return guard([&] {
    need(out);
    *out = new mj_poly{majidx::q_factorial(n)};
  });
}

mj_status mj_qbinomial(size_t n, size_t k, mj_poly** out) {
  return guard([&] {
    need(out);
    *out = new mj_poly{majidx::q_binomial(n, k)};
  });
}

mj_status mj_qmultinomial(size_t n, const mj_seq* parts, mj_poly** out) {
  return guard([&] {
    need(out);
    const std::vector<std::size_t> p = sizes(parts, "multinomial parts");
    *out = new mj_poly{majidx::q_multinomial(n, p)};
  });
}

mj_status mj_partition_gf(size_t b, size_t a, mj_poly** out) {
  return guard([&] {
    need(out);
    *out = new mj_poly{majidx::partition_gf(b, a)};
  });
}

int64_t mj_poly_degree(const mj_poly* p) { return p ? p->p.degree() : -1; }

mj_status mj_poly_coefficient(const mj_poly* p, size_t d, char** out) {
  return guard([&] {
    need(p);
    need(out);
    *out = dup(p->p.coefficient(d).str());
  });
}

mj_status mj_poly_to_text(const mj_poly* p, char** out) {
  return guard([&] {
    need(p);
    need(out);
    *out = dup(p->p.to_string());
  });
}

mj_status mj_poly_to_json(const mj_poly* p, char** out) {
  return guard([&] {
    need(p);
    need(out);
    *out = dup(majidx::to_json(p->p).dump());
  });
}

void mj_poly_free(mj_poly* p) { delete p; }

// ---- verification -------------------------------------------------------------

mj_run_config mj_run_config_default(void) {
  const majidx::RunConfig d;
  return mj_run_config{d.n_max, d.seed, d.sample_count, d.parallelism};
}

mj_status mj_suite_from_name(const char* name, int* suite) {
  return guard([&] {
    need(name);
    need(suite);
    const auto s = majidx::suite_from_name(name);
    if (!s) throw majidx::InputError(std::string("unknown suite '") + name + "'");
    *suite = static_cast<int>(*s);
  });
}

mj_status mj_verify(int suite, const mj_run_config* cfg, mj_report** out) {
  return guard([&] {
    need(cfg);
    need(out);
    if (suite < 0 || static_cast<std::size_t>(suite) >= majidx::all_suites().size())
      throw majidx::InputError("unknown suite id " + std::to_string(suite));
    majidx::RunConfig c;
    c.n_max = cfg->n_max;
    c.seed = cfg->seed;
    c.sample_count = cfg->sample_count;
    c.parallelism = cfg->parallelism;
    *out = new mj_report{majidx::verify(static_cast<majidx::Suite>(suite), c)};
  });
}

int mj_report_passed(const mj_report* r) { return r && r->r.passed() ? 1 : 0; }

uint64_t mj_report_cases_checked(const mj_report* r) { return r ? r->r.cases_checked : 0; }

uint64_t mj_report_failures_total(const mj_report* r) { return r ? r->r.failures_total : 0; }

mj_status mj_report_to_text(const mj_report* r, char** out) {
  return guard([&] {
    need(r);
    need(out);
    *out = dup(majidx::format_report_text(r->r));
  });
}

mj_status mj_report_to_json(const mj_report* r, char** out) {
  return guard([&] {
    need(r);
    need(out);
    *out = dup(majidx::to_json(r->r).dump());
  });
}

void mj_report_free(mj_report* r) { delete r; }

}  // extern "C"
