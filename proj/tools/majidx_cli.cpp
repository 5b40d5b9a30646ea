// Command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "majidx/majidx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CallFailed {
  mj_status status;
};

void check(mj_status s) {
  if (s != MJ_OK) throw CallFailed{s};
}

struct SeqDeleter {
  void operator()(mj_seq* s) const { mj_seq_free(s); }
};
struct PolyDeleter {
  void operator()(mj_poly* p) const { mj_poly_free(p); }
};
struct PhiDeleter {
  void operator()(mj_phi_result* r) const { mj_phi_result_free(r); }
};
struct SegDeleter {
  void operator()(mj_segmentation* s) const { mj_segmentation_free(s); }
};
struct ReportDeleter {
  void operator()(mj_report* r) const { mj_report_free(r); }
};
using Seq = std::unique_ptr<mj_seq, SeqDeleter>;

std::string take(char* s) {
  std::string out(s);
  mj_string_free(s);
  return out;
}

Seq parse_word(const std::string& text) {
  mj_seq* s = nullptr;
  check(mj_seq_parse_word(text.c_str(), &s));
  return Seq(s);
}

Seq parse_list(const std::string& text) {
  mj_seq* s = nullptr;
  check(mj_seq_parse_list(text.c_str(), &s));
  return Seq(s);
}

std::string seq_text(const mj_seq* s) {
  char* out = nullptr;
  check(mj_seq_to_text(s, &out));
  return take(out);
}

std::string seq_json(const mj_seq* s) {
  char* out = nullptr;
  check(mj_seq_to_json(s, &out));
  return take(out);
}

// Partitions print comma-separated so they can be pasted back into --lambda.
std::string partition_text(const mj_seq* s) {
  std::string out;
  for (std::size_t i = 0; i < mj_seq_size(s); ++i) out += (i ? "," : "") + std::to_string(mj_seq_data(s)[i]);
  return out;
}

void print_seq(const mj_seq* s, bool json) { std::cout << (json ? seq_json(s) : seq_text(s)) << "\n"; }

void print_partition(const mj_seq* s, bool json) {
  std::cout << (json ? seq_json(s) : partition_text(s)) << "\n";
}

void print_poly(mj_poly* raw, bool json) {
  std::unique_ptr<mj_poly, PolyDeleter> p(raw);
  char* out = nullptr;
  check(json ? mj_poly_to_json(p.get(), &out) : mj_poly_to_text(p.get(), &out));
  std::cout << take(out) << "\n";
}

void print_phi(mj_phi_result* raw, bool json, bool show_word) {
  std::unique_ptr<mj_phi_result, PhiDeleter> r(raw);
  char* out = nullptr;
  if (json) {
    check(mj_phi_result_to_json(r.get(), &out));
    std::cout << take(out) << "\n";
    return;
  }
  mj_seq* part = nullptr;
  check(mj_phi_result_partition(r.get(), &part));
  Seq p(part);
  if (show_word) {
    mj_seq* w = nullptr;
    check(mj_phi_result_word(r.get(), &w));
    Seq word(w);
    std::cout << "sigma: " << seq_text(word.get()) << "\n";
  }
  std::cout << "partition: " << partition_text(p.get()) << "\n";
  check(mj_phi_result_trace_text(r.get(), &out));
  std::cout << take(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Major index and inversion number: statistics, insertion bijections and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  // stat
  auto* stat = app.add_subcommand("stat", "maj, inv, des or ides of a word");
  std::string stat_name, stat_word;
  stat->add_option("statistic", stat_name)->required()->check(CLI::IsMember({"maj", "inv", "des", "ides"}));
  stat->add_option("word", stat_word)->required();

  // mis
  auto* mis = app.add_subcommand("mis", "Major increment sequence MIS(word, r)");
  std::string mis_word, mis_alg = "lg";
  std::int64_t mis_r = 0;
  mis->add_option("word", mis_word)->required();
  mis->add_option("r", mis_r)->required();
  mis->add_option("--algorithm", mis_alg)->check(CLI::IsMember({"lg", "oracle", "l", "g"}));

  // segments
  auto* seg = app.add_subcommand("segments", "Lesser/greater segments of a word relative to r");
  std::string seg_word;
  std::int64_t seg_r = 0;
  seg->add_option("word", seg_word)->required();
  seg->add_option("r", seg_r)->required();

  // phi / phi-inv
  std::string theta, pi, sigma, lambda;
  auto* phi = app.add_subcommand("phi", "Shuffle of (theta, pi) -> partition and insertion trace");
  phi->add_option("--theta", theta)->required();
  phi->add_option("--pi", pi)->required();
  phi->add_option("--sigma", sigma)->required();
  auto* phi_inv = app.add_subcommand("phi-inv", "Partition -> shuffle of (theta, pi)");
  phi_inv->add_option("--theta", theta)->required();
  phi_inv->add_option("--pi", pi)->required();
  phi_inv->add_option("--lambda", lambda)->required();

  // psi / psi-inv
  std::int64_t b = 0, a = 0;
  std::string psi_word;
  auto* psi = app.add_subcommand("psi", "Shuffle of (1..b, b+1..b+a) -> partition of right-counts");
  psi->add_option("--b", b)->required();
  psi->add_option("--a", a)->required();
  psi->add_option("word", psi_word)->required();
  auto* psi_inv = app.add_subcommand("psi-inv", "Partition -> shuffle of (1..b, b+1..b+a)");
  psi_inv->add_option("--b", b)->required();
  psi_inv->add_option("--a", a)->required();
  psi_inv->add_option("--lambda", lambda)->required();

  // omega
  auto* omega = app.add_subcommand("omega", "Inverse descent class bijection sending inv to maj");
  std::string omega_q, omega_word;
  omega->add_option("--q", omega_q)->required();
  omega->add_option("word", omega_word)->required();

  // build
  auto* build = app.add_subcommand("build", "Insert letters so each insertion raises maj by its target");
  std::string order, targets;
  build->add_option("--order", order)->required();
  build->add_option("--targets", targets)->required();

  // inv2maj / maj2inv
  std::string conv_word;
  auto* inv2maj = app.add_subcommand("inv2maj", "Permutation -> permutation with maj equal to its inv");
  inv2maj->add_option("--order", order)->required();
  inv2maj->add_option("word", conv_word)->required();
  auto* maj2inv = app.add_subcommand("maj2inv", "Inverse of inv2maj for the same order");
  maj2inv->add_option("--order", order)->required();
  maj2inv->add_option("word", conv_word)->required();

  // qpoly
  auto* qpoly = app.add_subcommand("qpoly", "q-analogue polynomials");
  qpoly->require_subcommand(1);
  std::size_t qn = 0, qk = 0;
  std::string qparts;
  auto* qfact = qpoly->add_subcommand("qfact", "[n]_q!");
  qfact->add_option("n", qn)->required();
  auto* qbinom = qpoly->add_subcommand("qbinom", "q-binomial [n choose k]");
  qbinom->add_option("n", qn)->required();
  qbinom->add_option("k", qk)->required();
  auto* qmulti = qpoly->add_subcommand("qmultinom", "q-multinomial [n; a1,...,ak]");
  qmulti->add_option("n", qn)->required();
  qmulti->add_option("parts", qparts)->required();
  auto* partgf = qpoly->add_subcommand("partgf", "Generating function of partitions in P(b, a)");
  partgf->add_option("b", qn)->required();
  partgf->add_option("a", qk)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  mj_run_config cfg = mj_run_config_default();
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"mis", "theorem11", "garsia-gessel", "macmahon", "insertion", "lemma41", "idc"}));
  verify->add_option("--n", cfg.n_max, "Largest word length swept");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--samples", cfg.sample_count, "Random cases per sampled size");
  verify->add_option("--jobs", cfg.parallelism, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    mj_seq* out = nullptr;
    if (stat->parsed()) {
      Seq w = parse_word(stat_word);
      if (stat_name == "maj" || stat_name == "inv") {
        std::int64_t v = 0;
        check(stat_name == "maj" ? mj_maj(w.get(), &v) : mj_inv(w.get(), &v));
        std::cout << v << "\n";
      } else {
        check(stat_name == "des" ? mj_des(w.get(), &out) : mj_ides(w.get(), &out));
        print_seq(Seq(out).get(), json);
      }
    } else if (mis->parsed()) {
      const mj_mis_algorithm alg = mis_alg == "oracle" ? MJ_MIS_ORACLE
                                   : mis_alg == "l"    ? MJ_MIS_L
                                   : mis_alg == "g"    ? MJ_MIS_G
                                                       : MJ_MIS_LG;
      check(mj_mis(parse_word(mis_word).get(), mis_r, alg, &out));
      print_seq(Seq(out).get(), json);
    } else if (seg->parsed()) {
      mj_segmentation* s = nullptr;
      check(mj_segments(parse_word(seg_word).get(), seg_r, &s));
      std::unique_ptr<mj_segmentation, SegDeleter> owned(s);
      char* text = nullptr;
      check(json ? mj_segmentation_to_json(s, &text) : mj_segmentation_to_text(s, &text));
      std::cout << take(text) << "\n";
    } else if (phi->parsed()) {
      mj_phi_result* r = nullptr;
      check(mj_phi(parse_word(theta).get(), parse_word(pi).get(), parse_word(sigma).get(), &r));
      print_phi(r, json, false);
    } else if (phi_inv->parsed()) {
      mj_phi_result* r = nullptr;
      check(mj_phi_inverse(parse_word(theta).get(), parse_word(pi).get(), parse_list(lambda).get(), &r));
      print_phi(r, json, true);
    } else if (psi->parsed()) {
      check(mj_psi(b, a, parse_word(psi_word).get(), &out));
      print_partition(Seq(out).get(), json);
    } else if (psi_inv->parsed()) {
      check(mj_psi_inverse(b, a, parse_list(lambda).get(), &out));
      print_seq(Seq(out).get(), json);
    } else if (omega->parsed()) {
      check(mj_omega(parse_list(omega_q).get(), parse_word(omega_word).get(), &out));
      print_seq(Seq(out).get(), json);
    } else if (build->parsed()) {
      check(mj_build(parse_list(order).get(), parse_list(targets).get(), &out));
      print_seq(Seq(out).get(), json);
    } else if (inv2maj->parsed() || maj2inv->parsed()) {
      Seq w = parse_word(conv_word);
      Seq o = parse_list(order);
      check(inv2maj->parsed() ? mj_inv_to_maj(w.get(), o.get(), &out) : mj_maj_to_inv(w.get(), o.get(), &out));
      print_seq(Seq(out).get(), json);
    } else if (qpoly->parsed()) {
      mj_poly* p = nullptr;
      if (qfact->parsed())
        check(mj_qfactorial(qn, &p));
      else if (qbinom->parsed())
        check(mj_qbinomial(qn, qk, &p));
      else if (qmulti->parsed())
        check(mj_qmultinomial(qn, parse_list(qparts).get(), &p));
      else
        check(mj_partition_gf(qn, qk, &p));
      print_poly(p, json);
    } else if (verify->parsed()) {
      int id = 0;
      check(mj_suite_from_name(suite.c_str(), &id));
      mj_report* raw = nullptr;
      check(mj_verify(id, &cfg, &raw));
      std::unique_ptr<mj_report, ReportDeleter> report(raw);
      char* text = nullptr;
      check(json ? mj_report_to_json(raw, &text) : mj_report_to_text(raw, &text));
      std::cout << take(text) << (json ? "\n" : "");
      return mj_report_passed(raw) ? kExitOk : kExitFailed;
    }
  } catch (const CallFailed& e) {
    std::cerr << "error: " << mj_last_error() << "\n";
    return e.status == MJ_INTERNAL_ERROR ? kExitFailed : kExitUsage;
  }
  return kExitOk;
}
