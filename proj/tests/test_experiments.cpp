#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "garside/experiments.hpp"
#include "support.hpp"

using namespace garside;
using namespace testing_support;

TEST_CASE("decimal rendering") {
  CHECK(format_decimal(68.0 / 22.0) == "3.09091");
  CHECK(format_decimal(2.0) == "2");
  CHECK(format_decimal(1.0 / 3.0) == "0.333333");
  CHECK(format_decimal(21.2) == "21.2");
}

TEST_CASE("CSV and JSON") {
  std::ostringstream empty;
  write_csv(empty, {});
  CHECK(empty.str() ==
        "structure,n,i,classes,max_sss,max_sc,max_ratio,cmean_sss,cmean_sc,"
        "cmean_ratio,emean_sss,emean_sc,emean_ratio\n");
  ClassStatisticsRow row;
  row.structure = "artin";
  row.n         = 4;
  row.classes   = 9;
  row.max_ratio = 2;
  row.cmean_sss = 22.0 / 9.0;
  CHECK(csv_line(row) == "artin,4,0,9,0,0,2,2.44444,0,0,0,0,0");
  const auto j = row_to_json(row);
  CHECK(j["classes"] == 9);
  CHECK(j["structure"] == "artin");
}

TEST_CASE("summary statistics by hand") {
  ArtinStructure           g(3);
  std::vector<ClassRecord> r{{Element(g), 4, 2, false},
                             {Element(g), 1, 1, false},
                             {Element(g), 3, 1, false},
                             {Element(g), 9, 9, true}};
  const auto row = summarize(g, 0, r);
  CHECK(row.classes == 3);
  CHECK(row.skipped == 1);
  CHECK(row.max_sss == 4);
  CHECK(row.max_sc == 2);
  CHECK(row.max_ratio == doctest::Approx(3));
  CHECK(row.cmean_sss == doctest::Approx(8.0 / 3));
  CHECK(row.cmean_ratio == doctest::Approx(6.0 / 3));
  CHECK(row.emean_sss == doctest::Approx((16.0 + 1 + 9) / 8));
  CHECK(row.emean_sc == doctest::Approx((8.0 + 1 + 3) / 8));
  CHECK(row.emean_ratio == doctest::Approx((4.0 * 2 + 1 + 3 * 3) / 8));
}

TEST_CASE("classes partition the length one elements") {
  // Independent check on B4 and BKL_5: the SSS sets of Delta^i s cover every
  // proper simple exactly once, and each record's sizes match fresh runs.
  for (auto kind : {BraidKind::artin, BraidKind::bkl}) {
    const auto g = make_braid_structure(kind, kind == BraidKind::artin ? 4 : 5);
    for (long i : {0L, 1L}) {
      const auto  records = enumerate_length_one_classes(*g, i);
      std::size_t total   = 0;
      std::set<Element> seen;
      for (const auto& r : records) {
        CHECK_FALSE(r.exhausted);
        const auto sss = compute_sss(r.representative);
        CHECK(sss.size() == r.sss_size);
        CHECK(compute_scg(r.representative).vertices.size() == r.sc_size);
        CHECK(in_sc(r.representative));
        for (const auto& y : sss) {
          CHECK(y.inf() == i);
          CHECK(y.canonical_length() == 1);
          CHECK(seen.insert(y).second);
        }
        total += sss.size();
      }
      CHECK(total == g->simples().size() - 2);
    }
  }
}

TEST_CASE("budget exhaustion is flagged") {
  ArtinStructure g(5);
  Budget         tight;
  tight.max_vertices = 2;
  const auto records = enumerate_length_one_classes(g, 0, tight);
  const auto row     = summarize(g, 0, records);
  CHECK(row.skipped > 0);
  CHECK(row.classes + row.skipped == records.size());
}

TEST_CASE("Artin n = 4 row") {
  ArtinStructure g(4);
  const auto row = summarize(g, 0, enumerate_length_one_classes(g, 0));
  CHECK(csv_line(row) ==
        "artin,4,0,9,4,4,2,2.44444,2.22222,1.11111,3.09091,2.72727,1.18182");
}

TEST_CASE("Artin i = 1 through the mu bijection") {
  // Delta s -> d(s) pairs classes with i = 1 and i = 0 of equal sizes.
  for (int n : {4, 5}) {
    ArtinStructure g(n);
    const auto     a = summarize(g, 0, enumerate_length_one_classes(g, 0));
    const auto     b = summarize(g, 1, enumerate_length_one_classes(g, 1));
    CHECK(a.classes == b.classes);
    CHECK(a.max_sss == b.max_sss);
    CHECK(a.max_sc == b.max_sc);
    CHECK(format_decimal(a.emean_ratio) == format_decimal(b.emean_ratio));
  }
}

TEST_CASE("thread count does not change a row") {
  const auto g = make_braid_structure(BraidKind::bkl, 6);
  Budget     four;
  four.threads = 4;
  CHECK(csv_line(summarize(*g, 1, enumerate_length_one_classes(*g, 1))) ==
        csv_line(summarize(*g, 1, enumerate_length_one_classes(*g, 1, four))));
}
