#include "fano/catalog.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

namespace {

std::string at_line(long line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = s.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, tab - start));
    start = tab + 1;
  }
}

long parse_long(const std::string& field, const char* what, long line) {
  long value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(at_line(line) + what + " must be an integer, got '" + field + "'");
  return value;
}

Rational parse_rational(const std::string& field, const char* what, long line) {
  try {
    return Rational::from_string(field);
  } catch (const ParseError&) {
    throw ParseError(at_line(line) + what + " must be an integer or 'p/q', got '" + field +
                     "'");
  }
}

OracleTag parse_oracle(const std::string& field, long line) {
  if (field == "-" || field == "none") return OracleTag::None;
  if (field == "projective-space") return OracleTag::ProjectiveSpace;
  if (field == "quadric") return OracleTag::Quadric;
  throw ParseError(at_line(line) + "unknown oracle tag '" + field +
                   "' (expected none, projective-space or quadric)");
}

void validate(const CatalogEntry& e) {
  const std::string where = at_line(e.line) + "entry '" + e.name + "': ";
  try {
    (void)FanoInvariants::from_coindex(e.n, e.d, e.delta, e.r);
  } catch (const Error& err) {
    throw ValidationError(where + err.what());
  }
  if (e.expected_h0 && *e.expected_h0 < Rational(1))
    throw ValidationError(where + "expected_h0 must satisfy expected_h0 >= 1");
  if (e.p_n2 && *e.p_n2 < 0)
    throw ValidationError(where + "p_n2 must satisfy p_n2 >= 0");
  if (e.p_n3 && *e.p_n3 < 0)
    throw ValidationError(where + "p_n3 must satisfy p_n3 >= 0");
  const long fl = e.r.floor_long();
  if (e.n >= 3 && fl == 3 && !e.p_n2)
    throw ValidationError(where + "floor(r) = 3 requires p_n2");
  if (e.n >= 3 && fl == 4 && !(e.p_n2 && e.p_n3))
    throw ValidationError(where + "floor(r) = 4 requires p_n2 and p_n3");
}

CatalogEntry parse_entry(const std::string& record, long line) {
  const std::vector<std::string> f = split_tabs(record);
  if (f.size() != 9)
    throw ParseError(at_line(line) + "expected 9 tab-separated fields, got " +
                     std::to_string(f.size()));
  CatalogEntry e;
  e.line = line;
  e.name = f[0];
  if (e.name.empty()) throw ParseError(at_line(line) + "empty name field");
  e.n = static_cast<int>(parse_long(f[1], "n", line));
  e.d = parse_rational(f[2], "d", line);
  e.delta = parse_rational(f[3], "delta", line);
  e.r = parse_rational(f[4], "r", line);
  if (f[5] != "-") e.p_n2 = parse_long(f[5], "p_n2", line);
  if (f[6] != "-") e.p_n3 = parse_long(f[6], "p_n3", line);
  if (f[7] != "-") e.expected_h0 = parse_rational(f[7], "expected_h0", line);
  e.oracle = parse_oracle(f[8], line);
  validate(e);
  return e;
}

}  // namespace

const char* to_string(OracleTag t) {
  switch (t) {
    case OracleTag::None: return "none";
    case OracleTag::ProjectiveSpace: return "projective-space";
    case OracleTag::Quadric: return "quadric";
  }
  return "?";
}

HilbertModel CatalogEntry::model() const {
  return HilbertModel{FanoInvariants::from_coindex(n, d, delta, r), p_n2, p_n3};
}

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string record;
  long line = 0;
  while (std::getline(in, record)) {
    ++line;
    if (!record.empty() && record.back() == '\r') record.pop_back();
    if (record.empty() || record[0] == '#') continue;
    entries.push_back(parse_entry(record, line));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file '" + path + "'");
  return load_catalog(in);
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  for (const CatalogEntry& e : entries) {
    out << e.name << '\t' << e.n << '\t' << e.d.str() << '\t' << e.delta.str() << '\t'
        << e.r.str() << '\t';
    out << (e.p_n2 ? std::to_string(*e.p_n2) : "-") << '\t';
    out << (e.p_n3 ? std::to_string(*e.p_n3) : "-") << '\t';
    out << (e.expected_h0 ? e.expected_h0->str() : "-") << '\t';
    out << to_string(e.oracle) << '\n';
  }
  return out.str();
}

CrosscheckReport crosscheck(const std::vector<CatalogEntry>& entries) {
  CrosscheckReport report;
  report.rows.reserve(entries.size());
  for (const CatalogEntry& e : entries) {
    CrosscheckRow row;
    row.name = e.name;
    row.expected_h0 = e.expected_h0;
    try {
      const HilbertResult res = build(e.model());
      row.computed_h0 = res.h0;
      if (e.expected_h0) {
        row.h0_checked = true;
        row.h0_match = (res.h0 == *e.expected_h0);
        if (!row.h0_match)
          row.note = "h0 mismatch: computed " + res.h0.str() + ", expected " +
                     e.expected_h0->str();
      }
      if (e.oracle != OracleTag::None) {
        row.poly_checked = true;
        const Poly oracle = e.oracle == OracleTag::ProjectiveSpace
                                ? binomial_hilbert(e.n, 0)
                                : quadric_hilbert(e.n);
        row.poly_match = (res.p == oracle);
        if (!row.poly_match) {
          if (!row.note.empty()) row.note += "; ";
          row.note += "polynomial differs from oracle: computed " + res.p.str() +
                      ", oracle " + oracle.str();
        }
      }
      row.pass = row.h0_match && row.poly_match;
    } catch (const Error& err) {
      row.pass = false;
      row.note = std::string("construction failed: ") + err.what();
    }
    if (!row.pass) ++report.failures;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace fano
