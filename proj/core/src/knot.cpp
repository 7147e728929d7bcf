#include "dualknot/knot.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <sstream>

namespace dualknot {

std::string FieldSpec::key() const {
  switch (characteristic) {
    case 0:
      return "c0";
    case 2:
      return "f2";
    default:
      return "c" + std::to_string(characteristic);
  }
}

InvariantPair::InvariantPair(Int m, Int r) : M(std::move(m)), R(std::move(r)) {
  if (R < abs_int(M) || (R - M) % 2 != 0)
    throw std::invalid_argument("invariant pair (M, R) = (" + M.get_str() +
                                ", " + R.get_str() +
                                ") violates R = |M| + 2h");
}

const InvariantPair* KnotRecord::invariant(const FieldSpec& field) const {
  auto it = invariants.find(field.key());
  return it == invariants.end() ? nullptr : &it->second;
}

Int alexander_eval(const std::vector<Int>& coeffs, const Int& t) {
  if (coeffs.empty())
    throw std::invalid_argument("empty Alexander coefficient sequence");
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

// Fraction-free (Bareiss) determinant of an exact integer matrix.
Int bareiss_det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int determinant_from_seifert(const IntMatrix& V) {
  const std::size_t n = V.size();
  for (const auto& row : V)
    if (row.size() != n)
      throw std::invalid_argument("Seifert matrix is not square");
  IntMatrix sym(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i][j] = V[i][j] + V[j][i];
  return abs_int(bareiss_det(std::move(sym)));
}

Int knot_determinant(const KnotRecord& k) {
  std::optional<Int> result;
  auto take = [&](Int v, const char* source) {
    if (result && *result != v)
      throw std::runtime_error("knot '" + k.name +
                               "': determinant sources disagree (" +
                               result->get_str() + " vs " + v.get_str() +
                               " from " + source + ")");
    result = std::move(v);
  };
  if (k.seifert_matrix)
    take(determinant_from_seifert(*k.seifert_matrix), "Seifert matrix");
  if (k.alexander_coeffs)
    take(abs_int(alexander_eval(*k.alexander_coeffs, Int(-1))),
         "Alexander coefficients");
  if (k.det_direct) take(abs_int(*k.det_direct), "direct value");
  if (!result)
    throw std::runtime_error("knot '" + k.name + "': no determinant data");
  return *result;
}

KnotRecord mirror(const KnotRecord& k) {
  KnotRecord m = k;
  m.invariants.clear();
  for (const auto& [key, pair] : k.invariants)
    m.invariants.emplace(key, pair.mirrored());
  return m;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  for (const auto& row : split(text, ';')) {
    std::vector<Int> r;
    for (const auto& entry : split(trim(row), ' '))
      if (!entry.empty()) r.push_back(int_from_string(entry));
    m.push_back(std::move(r));
  }
  return m;
}

const char* kColumns[8] = {"name", "seifert_matrix", "det",   "nu_c0",
                           "r_c0", "nu_f2",          "r_f2", "excluded"};

// Builds one record from the eight column values; throws on any violation.
KnotRecord build_record(const std::vector<std::string>& f) {
  KnotRecord rec;
  rec.name = trim(f[0]);
  if (rec.name.empty()) throw std::invalid_argument("empty knot name");
  if (!trim(f[1]).empty()) rec.seifert_matrix = parse_matrix(f[1]);
  if (!trim(f[2]).empty()) rec.det_direct = int_from_string(trim(f[2]));

  auto pair_of = [&](int mi, int ri, const char* key, bool f2) {
    std::string ms = trim(f[mi]), rs = trim(f[ri]);
    if (ms.empty() != rs.empty())
      throw std::invalid_argument(std::string("columns ") + kColumns[mi] +
                                  "/" + kColumns[ri] + " must be both "
                                  "present or both absent");
    if (ms.empty()) return;
    InvariantPair p(int_from_string(ms), int_from_string(rs));
    if (f2 && !p.sgmme_admissible())
      throw std::invalid_argument("characteristic-2 pair (" + p.M.get_str() +
                                  ", " + p.R.get_str() +
                                  ") not divisible by 4");
    rec.invariants.emplace(key, std::move(p));
  };
  pair_of(3, 4, "c0", false);
  pair_of(5, 6, "f2", true);

  std::string ex = trim(f[7]);
  if (ex == "true")
    rec.exclusion_flag = true;
  else if (ex == "false" || ex.empty())
    rec.exclusion_flag = false;
  else
    throw std::invalid_argument("excluded must be true or false, got '" + ex +
                                "'");

  // Determinant sources must agree already at ingestion.
  if (rec.seifert_matrix || rec.alexander_coeffs || rec.det_direct)
    knot_determinant(rec);
  return rec;
}

}  // namespace

IngestResult ingest_table_csv(std::istream& in) {
  IngestResult out;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      auto cols = split(t, ',');
      bool ok = cols.size() == 8;
      for (std::size_t i = 0; ok && i < 8; ++i)
        ok = trim(cols[i]) == kColumns[i];
      if (!ok)
        out.errors.push_back({lineno, "bad header: expected "
                                      "name,seifert_matrix,det,nu_c0,r_c0,"
                                      "nu_f2,r_f2,excluded"});
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 8) {
      out.errors.push_back({lineno, "expected 8 fields, got " +
                                        std::to_string(fields.size())});
      continue;
    }
    try {
      out.records.push_back(build_record(fields));
    } catch (const std::exception& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
  if (!header_seen) out.errors.push_back({0, "empty table"});
  return out;
}

IngestResult ingest_table_json(std::istream& in) {
  IngestResult out;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    out.errors.push_back({0, std::string("JSON parse error: ") + e.what()});
    return out;
  }
  if (!doc.is_array()) {
    out.errors.push_back({0, "JSON table must be an array of row objects"});
    return out;
  }
  int idx = 0;
  for (const auto& row : doc) {
    ++idx;
    try {
      if (!row.is_object()) throw std::invalid_argument("row is not an object");
      std::vector<std::string> fields(8);
      for (int i = 0; i < 8; ++i) {
        if (!row.contains(kColumns[i])) continue;
        const auto& v = row[kColumns[i]];
        if (v.is_null())
          fields[i] = "";
        else if (v.is_string())
          fields[i] = v.get<std::string>();
        else if (v.is_boolean())
          fields[i] = v.get<bool>() ? "true" : "false";
        else if (v.is_number_integer())
          fields[i] = std::to_string(v.get<long long>());
        else
          throw std::invalid_argument(std::string("bad value for column ") +
                                      kColumns[i]);
      }
      out.records.push_back(build_record(fields));
    } catch (const std::exception& e) {
      out.errors.push_back({idx, e.what()});
    }
  }
  return out;
}

IngestResult ingest_table(std::istream& in) {
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  if (c == '[') return ingest_table_json(in);
  return ingest_table_csv(in);
}

}  // namespace dualknot
