#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fano/catalog.hpp"

using fano::CatalogEntry;
using fano::Rational;

namespace {

std::vector<CatalogEntry> load_string(const std::string& text) {
  std::istringstream in(text);
  return fano::load_catalog(in);
}

std::string slurp(const char* path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("well-formed records parse field by field") {
  const auto entries = load_string(
      "P2\t2\t1\t0\t0\t-\t-\t3\tprojective-space\n"
      "M5\t3\t8\t0\t3\t1\t-\t7\tnone\n"
      "frac\t3\t7/2\t1/2\t5/2\t-\t-\t-\t-\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "P2");
  CHECK(entries[0].n == 2);
  CHECK(entries[0].oracle == fano::OracleTag::ProjectiveSpace);
  CHECK(entries[0].line == 1);
  CHECK(entries[1].p_n2 == 1);
  CHECK(!entries[1].p_n3.has_value());
  CHECK(entries[1].expected_h0 == Rational(7));
  CHECK(entries[2].d == Rational(7, 2));
  CHECK(entries[2].r == Rational(5, 2));
  CHECK(!entries[2].expected_h0.has_value());
  CHECK(entries[2].oracle == fano::OracleTag::None);
}

TEST_CASE("blank lines and comment lines are skipped, line numbers kept") {
  const auto entries = load_string(
      "# classical types\n"
      "\n"
      "P1\t1\t1\t0\t0\t-\t-\t2\tprojective-space\n"
      "\n"
      "dP3\t2\t3\t0\t2\t-\t-\t4\tnone\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].line == 3);
  CHECK(entries[1].line == 5);
}

TEST_CASE("empty input yields an empty catalog") {
  CHECK(load_string("").empty());
  CHECK(load_string("# only a comment\n").empty());
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_WITH_AS(load_string("P1\t1\t1\t0\t0\t-\t-\t2\n"),
                       doctest::Contains("line 1"), fano::ParseError);
  CHECK_THROWS_WITH_AS(load_string("ok\t1\t1\t0\t0\t-\t-\t2\tnone\nP1\t1\t1\n"),
                       doctest::Contains("line 2"), fano::ParseError);
  CHECK_THROWS_AS(load_string("P1\tx\t1\t0\t0\t-\t-\t2\tnone\n"), fano::ParseError);
  CHECK_THROWS_AS(load_string("P1\t1\t1.5\t0\t0\t-\t-\t2\tnone\n"), fano::ParseError);
  CHECK_THROWS_AS(load_string("P1\t1\t1\t0\t0\t-\t-\t2\tquadrics\n"), fano::ParseError);
  CHECK_THROWS_AS(load_string("\t1\t1\t0\t0\t-\t-\t2\tnone\n"), fano::ParseError);
  CHECK_THROWS_AS(fano::load_catalog_file("/nonexistent/catalog.tsv"), fano::ParseError);
}

TEST_CASE("validation errors name the failing invariant") {
  // d = 0 violates d >= 1
  CHECK_THROWS_WITH_AS(load_string("bad\t3\t0\t0\t0\t-\t-\t-\t-\n"),
                       doctest::Contains("d >= 1"), fano::ValidationError);
  // expected_h0 must be >= 1 when present
  CHECK_THROWS_WITH_AS(load_string("bad\t3\t1\t0\t0\t-\t-\t0\t-\n"),
                       doctest::Contains("expected_h0 >= 1"), fano::ValidationError);
  // coindex out of range
  CHECK_THROWS_AS(load_string("bad\t3\t1\t0\t4\t-\t-\t-\t-\n"), fano::ValidationError);
  // case ii records must carry p_n2
  CHECK_THROWS_WITH_AS(load_string("bad\t3\t8\t0\t3\t-\t-\t-\t-\n"),
                       doctest::Contains("requires p_n2"), fano::ValidationError);
  // case iii records must carry both plurigenera
  CHECK_THROWS_AS(load_string("bad\t4\t24\t0\t4\t1\t-\t-\t-\n"), fano::ValidationError);
  CHECK_THROWS_AS(load_string("bad\t3\t8\t0\t3\t-1\t-\t-\t-\n"), fano::ValidationError);
}

TEST_CASE("serialize(load(text)) is the identity on canonical text") {
  const std::string canonical =
      "P2\t2\t1\t0\t0\t-\t-\t3\tprojective-space\n"
      "M5\t3\t8\t0\t3\t1\t-\t7\tnone\n"
      "frac\t3\t7/2\t1/2\t5/2\t-\t-\t-\tnone\n";
  CHECK(fano::serialize_catalog(load_string(canonical)) == canonical);
  // comments, blank lines and "-" oracle normalize away
  const std::string noisy = "# c\n\nP2\t2\t1\t0\t0\t-\t-\t3\tprojective-space\nx\t1\t1\t0\t0\t-\t-\t-\t-\n";
  CHECK(fano::serialize_catalog(load_string(noisy)) ==
        "P2\t2\t1\t0\t0\t-\t-\t3\tprojective-space\nx\t1\t1\t0\t0\t-\t-\t-\tnone\n");
}

TEST_CASE("crosscheck validates values and polynomials, recording failures as data") {
  const auto entries = load_string(
      "P4\t4\t1\t0\t0\t-\t-\t5\tprojective-space\n"
      "Q3\t3\t2\t0\t1\t-\t-\t5\tquadric\n"
      "M7\t3\t12\t0\t3\t1\t-\t9\tnone\n"
      "wrong-h0\t3\t12\t0\t3\t1\t-\t8\tnone\n"
      "wrong-oracle\t3\t3\t0\t2\t-\t-\t5\tquadric\n"
      "spurious-p2\t3\t2\t0\t1\t1\t-\t5\tnone\n");
  const fano::CrosscheckReport rep = fano::crosscheck(entries);
  REQUIRE(rep.rows.size() == 6);
  CHECK(rep.failures == 2);
  CHECK_FALSE(rep.all_passed());

  CHECK(rep.rows[0].pass);
  CHECK(rep.rows[0].poly_checked);
  CHECK(rep.rows[0].poly_match);
  CHECK(rep.rows[0].computed_h0 == Rational(5));

  CHECK(rep.rows[1].pass);
  CHECK(rep.rows[2].pass);
  CHECK(rep.rows[2].computed_h0 == Rational(9));

  CHECK_FALSE(rep.rows[3].pass);
  CHECK(rep.rows[3].h0_checked);
  CHECK_FALSE(rep.rows[3].h0_match);
  CHECK(rep.rows[3].note.find("h0 mismatch") != std::string::npos);

  CHECK_FALSE(rep.rows[4].pass);
  CHECK(rep.rows[4].h0_match);  // h0 = 5 happens to agree
  CHECK_FALSE(rep.rows[4].poly_match);

  CHECK(rep.rows[5].pass);  // p_n2 ignored below floor(r) = 3, h0 = 5 as the quadric
}

TEST_CASE("the bundled catalog passes crosscheck and round-trips") {
  const auto entries = fano::load_catalog_file(CATALOG_FILE);
  CHECK(entries.size() >= 25);
  const fano::CrosscheckReport rep = fano::crosscheck(entries);
  for (const fano::CrosscheckRow& row : rep.rows) {
    INFO(row.name, ": ", row.note);
    CHECK(row.pass);
  }
  CHECK(rep.all_passed());
  CHECK(fano::serialize_catalog(entries) == slurp(CATALOG_FILE));
}
