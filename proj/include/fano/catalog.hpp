#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/hilbert.hpp"

namespace fano {

/* Independent reference construction an entry can be checked against,
   beyond the expected h0 value. */
enum class OracleTag { None, ProjectiveSpace, Quadric };
const char* to_string(OracleTag t);

/* One catalog record: a classical numerical type plus optional expected
   values.  The file format is one record per line, nine tab-separated
   fields: name, n, d, delta, r, p_n2, p_n3, expected_h0, oracle; absent
   optionals are written "-".  Rationals are "p/q" or integer literals. */
struct CatalogEntry {
  std::string name;
  int n = 1;
  Rational d = 1;
  Rational delta = 0;
  Rational r = 0;
  std::optional<long> p_n2;
  std::optional<long> p_n3;
  std::optional<Rational> expected_h0;
  OracleTag oracle = OracleTag::None;
  long line = 0;  // source line, for diagnostics

  HilbertModel model() const;
};

/* Blank lines and lines starting with '#' are skipped.  Throws ParseError
   (malformed record, with line number) or ValidationError (well-formed
   record violating an invariant, with line number and entry name). */
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

/* Canonical text form; load followed by serialize normalizes whitespace
   and comments away but preserves every field exactly. */
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

struct CrosscheckRow {
  std::string name;
  std::optional<Rational> computed_h0;
  std::optional<Rational> expected_h0;
  bool h0_checked = false;
  bool h0_match = true;
  bool poly_checked = false;
  bool poly_match = true;
  bool pass = false;
  std::string note;  // empty when pass
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  std::size_t failures = 0;
  bool all_passed() const { return failures == 0; }
};

/* For each entry: build the Hilbert polynomial via the matching case,
   compare h0 against expected_h0 when present, and compare the full
   coefficient vector against the binomial construction named by the
   oracle tag.  Construction errors are recorded in the row, never
   thrown. */
CrosscheckReport crosscheck(const std::vector<CatalogEntry>& entries);

}  // namespace fano
