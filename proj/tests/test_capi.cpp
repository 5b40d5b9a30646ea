#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "majidx/majidx.h"

namespace {

struct Seq {
  mj_seq* p = nullptr;
  ~Seq() { mj_seq_free(p); }
  std::vector<int64_t> values() const { return {mj_seq_data(p), mj_seq_data(p) + mj_seq_size(p)}; }
};

Seq word(const char* text) {
  Seq s;
  REQUIRE(mj_seq_parse_word(text, &s.p) == MJ_OK);
  return s;
}

Seq list(const char* text) {
  Seq s;
  REQUIRE(mj_seq_parse_list(text, &s.p) == MJ_OK);
  return s;
}

std::string take(char* s) {
  std::string out(s);
  mj_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("sequences") {
  const int64_t data[] = {4, 2, 6};
  Seq s;
  REQUIRE(mj_seq_create(data, 3, &s.p) == MJ_OK);
  CHECK(s.values() == std::vector<int64_t>{4, 2, 6});
  char* text = nullptr;
  REQUIRE(mj_seq_to_text(s.p, &text) == MJ_OK);
  CHECK(take(text) == "4 2 6");
  REQUIRE(mj_seq_to_json(s.p, &text) == MJ_OK);
  CHECK(take(text) == "[4,2,6]");
  CHECK(word("426351").values() == std::vector<int64_t>{4, 2, 6, 3, 5, 1});
  CHECK(list("10,2").values() == std::vector<int64_t>{10, 2});
  Seq bad;
  CHECK(mj_seq_parse_word("4 x", &bad.p) == MJ_INPUT_ERROR);
  CHECK(std::strlen(mj_last_error()) > 0);
  CHECK(mj_seq_create(nullptr, 2, &bad.p) == MJ_INVALID_ARGUMENT);
  Seq empty;
  CHECK(mj_seq_create(nullptr, 0, &empty.p) == MJ_OK);
  CHECK(mj_seq_size(empty.p) == 0u);
}

TEST_CASE("statistics") {
  Seq w = word("4 2 6 3 5 1");
  int64_t v = 0;
  REQUIRE(mj_maj(w.p, &v) == MJ_OK);
  CHECK(v == 9);
  REQUIRE(mj_inv(word("6257431").p, &v) == MJ_OK);
  CHECK(v == 15);
  REQUIRE(mj_d_k(w.p, 4, &v) == MJ_OK);
  CHECK(v == 1);
  CHECK(mj_d_k(w.p, 9, &v) == MJ_INPUT_ERROR);
  Seq des, ides, is, ins;
  REQUIRE(mj_des(w.p, &des.p) == MJ_OK);
  CHECK(des.values() == std::vector<int64_t>{1, 3, 5});
  REQUIRE(mj_ides(word("5123674").p, &ides.p) == MJ_OK);
  CHECK(ides.values() == std::vector<int64_t>{4});
  REQUIRE(mj_inversion_sequence(word("6257431").p, &is.p) == MJ_OK);
  CHECK(is.values() == std::vector<int64_t>{0, 1, 1, 2, 3, 5, 3});
  REQUIRE(mj_insert(w.p, 3, 7, &ins.p) == MJ_OK);
  CHECK(ins.values() == std::vector<int64_t>{4, 2, 7, 6, 3, 5, 1});
  Seq dup;
  CHECK(mj_insert(w.p, 3, 6, &dup.p) == MJ_INPUT_ERROR);
  CHECK(mj_maj(nullptr, &v) == MJ_INVALID_ARGUMENT);
}

TEST_CASE("major increment sequences") {
  Seq w = word("426351");
  for (mj_mis_algorithm alg : {MJ_MIS_LG, MJ_MIS_ORACLE, MJ_MIS_L}) {
    Seq out;
    REQUIRE(mj_mis(w.p, 7, alg, &out.p) == MJ_OK);
    CHECK(out.values() == std::vector<int64_t>{4, 3, 5, 2, 6, 1, 0});
  }
  Seq g;
  REQUIRE(mj_mis(word("5 2 7 4").p, 1, MJ_MIS_G, &g.p) == MJ_OK);
  CHECK(g.values() == std::vector<int64_t>{2, 1, 3, 0, 4});
  Seq bad;
  CHECK(mj_mis(w.p, 4, MJ_MIS_L, &bad.p) == MJ_INPUT_ERROR);
  CHECK(mj_mis(w.p, 4, MJ_MIS_G, &bad.p) == MJ_INPUT_ERROR);
  CHECK(mj_mis(w.p, 6, MJ_MIS_LG, &bad.p) == MJ_INPUT_ERROR);
  Seq empty_word, e;
  REQUIRE(mj_seq_parse_word("", &empty_word.p) == MJ_OK);
  REQUIRE(mj_mis(empty_word.p, 3, MJ_MIS_LG, &e.p) == MJ_OK);
  CHECK(e.values() == std::vector<int64_t>{0});
}

TEST_CASE("segments") {
  mj_segmentation* s = nullptr;
  REQUIRE(mj_segments(word("1762834").p, 5, &s) == MJ_OK);
  CHECK(mj_segmentation_count(s) == 5u);
  int kind = -1;
  size_t first = 0, last = 0;
  REQUIRE(mj_segmentation_get(s, 1, &kind, &first, &last) == MJ_OK);
  CHECK(kind == 1);
  CHECK(first == 2u);
  CHECK(last == 3u);
  CHECK(mj_segmentation_get(s, 5, &kind, &first, &last) == MJ_INPUT_ERROR);
  char* text = nullptr;
  REQUIRE(mj_segmentation_to_text(s, &text) == MJ_OK);
  CHECK(take(text) == "1 | 7 6 | 2 | 8 | 3 4");
  REQUIRE(mj_segmentation_to_json(s, &text) == MJ_OK);
  CHECK(take(text).find("\"greater\"") != std::string::npos);
  mj_segmentation_free(s);
}

TEST_CASE("phi and phi_inverse") {
  mj_phi_result* r = nullptr;
  REQUIRE(mj_phi(word("5274").p, word("631").p, word("5276341").p, &r) == MJ_OK);
  Seq part;
  REQUIRE(mj_phi_result_partition(r, &part.p) == MJ_OK);
  CHECK(part.values() == std::vector<int64_t>{0, 3, 4});
  char* text = nullptr;
  REQUIRE(mj_phi_result_to_json(r, &text) == MJ_OK);
  const std::string j = take(text);
  CHECK(j.find("\"partition\":[0,3,4]") != std::string::npos);
  CHECK(j.find("\"k\":5") != std::string::npos);
  REQUIRE(mj_phi_result_trace_text(r, &text) == MJ_OK);
  CHECK(take(text).find("i=3 k=5 m=4 t=4") != std::string::npos);
  mj_phi_result_free(r);

  REQUIRE(mj_phi_inverse(word("5274").p, word("631").p, list("0,3,4").p, &r) == MJ_OK);
  Seq sigma;
  REQUIRE(mj_phi_result_word(r, &sigma.p) == MJ_OK);
  CHECK(sigma.values() == std::vector<int64_t>{5, 2, 7, 6, 3, 4, 1});
  mj_phi_result_free(r);

  CHECK(mj_phi(word("12").p, word("3").p, word("213").p, &r) == MJ_INPUT_ERROR);
  CHECK(mj_phi_inverse(word("5274").p, word("631").p, list("0,3,5").p, &r) == MJ_INPUT_ERROR);
  CHECK(mj_phi_inverse(word("5274").p, word("631").p, list("0,3").p, &r) == MJ_INPUT_ERROR);
}

TEST_CASE("psi, omega and the insertion bijection") {
  Seq p, w, o, b, t, s;
  REQUIRE(mj_psi(4, 3, word("5126374").p, &p.p) == MJ_OK);
  CHECK(p.values() == std::vector<int64_t>{1, 2, 4});
  REQUIRE(mj_psi_inverse(4, 3, list("4,2,1").p, &w.p) == MJ_OK);
  CHECK(w.values() == std::vector<int64_t>{5, 1, 2, 6, 3, 7, 4});
  REQUIRE(mj_omega(list("4").p, word("5126374").p, &o.p) == MJ_OK);
  CHECK(o.values() == std::vector<int64_t>{5, 1, 2, 3, 6, 7, 4});
  REQUIRE(mj_build(list("4,2,7,3,6,1,5").p, list("0,1,1,2,3,5,3").p, &b.p) == MJ_OK);
  CHECK(b.values() == std::vector<int64_t>{6, 4, 5, 3, 7, 2, 1});
  REQUIRE(mj_inv_to_maj(word("6257431").p, list("1,2,3,4,5,6,7").p, &t.p) == MJ_OK);
  CHECK(t.values() == std::vector<int64_t>{5, 4, 7, 2, 6, 3, 1});
  REQUIRE(mj_maj_to_inv(t.p, list("1,2,3,4,5,6,7").p, &s.p) == MJ_OK);
  CHECK(s.values() == std::vector<int64_t>{6, 2, 5, 7, 4, 3, 1});
  Seq bad;
  CHECK(mj_omega(list("4").p, word("5412367").p, &bad.p) == MJ_INPUT_ERROR);
  CHECK(mj_omega(list("-1").p, word("123").p, &bad.p) == MJ_INPUT_ERROR);
  CHECK(mj_psi_inverse(-1, 2, list("0,0").p, &bad.p) == MJ_INPUT_ERROR);
}

TEST_CASE("polynomials") {
  mj_poly* p = nullptr;
  char* text = nullptr;
  REQUIRE(mj_qfactorial(3, &p) == MJ_OK);
  REQUIRE(mj_poly_to_text(p, &text) == MJ_OK);
  CHECK(take(text) == "1 + 2q + 2q^2 + q^3");
  CHECK(mj_poly_degree(p) == 3);
  mj_poly_free(p);
  REQUIRE(mj_qbinomial(4, 2, &p) == MJ_OK);
  REQUIRE(mj_poly_to_json(p, &text) == MJ_OK);
  CHECK(take(text) == R"({"coeffs":[1,1,2,1,1]})");
  mj_poly_free(p);
  REQUIRE(mj_qmultinomial(4, list("2,2").p, &p) == MJ_OK);
  REQUIRE(mj_poly_coefficient(p, 2, &text) == MJ_OK);
  CHECK(take(text) == "2");
  mj_poly_free(p);
  REQUIRE(mj_partition_gf(2, 2, &p) == MJ_OK);
  CHECK(mj_poly_degree(p) == 4);
  mj_poly_free(p);
  REQUIRE(mj_qfactorial(30, &p) == MJ_OK);
  REQUIRE(mj_poly_coefficient(p, 217, &text) == MJ_OK);
  CHECK(take(text).size() > 19u);
  mj_poly_free(p);
  CHECK(mj_qbinomial(2, 3, &p) == MJ_INPUT_ERROR);
  CHECK(mj_qmultinomial(4, list("2,1").p, &p) == MJ_INPUT_ERROR);
}

TEST_CASE("verification") {
  int id = -1;
  REQUIRE(mj_suite_from_name("mis", &id) == MJ_OK);
  CHECK(mj_suite_from_name("bogus", &id) == MJ_INPUT_ERROR);
  mj_run_config cfg = mj_run_config_default();
  CHECK(cfg.n_max == 7);
  CHECK(cfg.seed == 1913u);
  cfg.n_max = 5;
  mj_report* r = nullptr;
  REQUIRE(mj_verify(id, &cfg, &r) == MJ_OK);
  CHECK(mj_report_passed(r) == 1);
  CHECK(mj_report_cases_checked(r) == 153u);
  CHECK(mj_report_failures_total(r) == 0u);
  char* text = nullptr;
  REQUIRE(mj_report_to_json(r, &text) == MJ_OK);
  CHECK(take(text).find("\"verdict\":\"pass\"") != std::string::npos);
  REQUIRE(mj_report_to_text(r, &text) == MJ_OK);
  CHECK(take(text).find("verdict: PASS") != std::string::npos);
  mj_report_free(r);
  cfg.n_max = 0;
  CHECK(mj_verify(id, &cfg, &r) == MJ_INPUT_ERROR);
  CHECK(mj_verify(42, &cfg, &r) == MJ_INPUT_ERROR);
  CHECK(mj_verify(id, nullptr, &r) == MJ_INVALID_ARGUMENT);
}

TEST_CASE("last error clears on success") {
  Seq bad;
  CHECK(mj_seq_parse_word("x", &bad.p) == MJ_INPUT_ERROR);
  CHECK(std::string(mj_last_error()) != "");
  Seq ok = word("12");
  CHECK(std::string(mj_last_error()).empty());
}

}  // TEST_SUITE
