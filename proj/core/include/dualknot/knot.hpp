#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualknot/bigint.hpp"

namespace dualknot {

/// Coefficient field descriptor: characteristic 0, 2, or an odd prime.
/// The sgmme flag opts into the characteristic-2 refinement (nu and r
/// divisible by four, M-surgery ambiguity resolved per bundle class) and is
/// meaningful only when characteristic == 2.
struct FieldSpec {
  unsigned characteristic = 2;
  bool sgmme = false;

  FieldSpec(unsigned ch = 2, bool sg = false) : characteristic(ch), sgmme(sg) {
    if (sgmme && characteristic != 2)
      throw std::invalid_argument("sgmme flag requires characteristic 2");
  }

  /// Table key: "c0" for characteristic 0, "f2" for characteristic 2.
  std::string key() const;

  static FieldSpec char0(bool sg = false) { return FieldSpec(0, sg); }
  static FieldSpec f2(bool sg = false) { return FieldSpec(2, sg); }
};

/// The per-field invariant pair (M, R) = (nu_sharp, r) with R = |M| + 2h
/// for some h >= 0. Construction validates the parity constraint.
struct InvariantPair {
  Int M;
  Int R;

  InvariantPair(Int m, Int r);
  InvariantPair(long m, long r) : InvariantPair(Int(m), Int(r)) {}

  /// Skips the parity validation; for fault injection only.
  static InvariantPair unchecked(Int m, Int r) {
    InvariantPair p(0L, 0L);
    p.M = std::move(m);
    p.R = std::move(r);
    return p;
  }

  Int h() const { return (R - abs_int(M)) / 2; }

  /// The characteristic-2 refinement: both M and R divisible by 4.
  bool sgmme_admissible() const { return M % 4 == 0 && R % 4 == 0; }

  InvariantPair mirrored() const { return InvariantPair(-M, R); }

  friend bool operator==(const InvariantPair& a, const InvariantPair& b) {
    return a.M == b.M && a.R == b.R;
  }
};

using IntMatrix = std::vector<std::vector<Int>>;

/// A knot's identity and the classical data the theorems consume. The
/// exclusion flag marks the three instanton L-space knots of genus <= 2
/// (U, T_{2,3}, T_{2,5}) that every verdict must skip.
struct KnotRecord {
  std::string name;
  std::optional<IntMatrix> seifert_matrix;
  std::optional<std::vector<Int>> alexander_coeffs;  // any t-power normalization
  std::optional<Int> det_direct;
  std::map<std::string, InvariantPair> invariants;  // keyed by FieldSpec::key()
  bool exclusion_flag = false;

  const InvariantPair* invariant(const FieldSpec& field) const;
};

/// Evaluates a coefficient sequence as a polynomial at t (Horner).
Int alexander_eval(const std::vector<Int>& coeffs, const Int& t);

/// |det(V + V^T)| = |Delta_K(-1)| for a Seifert matrix V. The empty 0x0
/// matrix (unknot) gives 1. Throws on non-square input.
Int determinant_from_seifert(const IntMatrix& V);

/// The knot determinant |Delta_K(-1)| from the best available source.
/// Cross-checks every present source and throws std::runtime_error on
/// disagreement or when no source is present.
Int knot_determinant(const KnotRecord& k);

/// The mirror record: every invariant pair (M, R) -> (-M, R), determinant
/// data and exclusion flag unchanged.
KnotRecord mirror(const KnotRecord& k);

struct IngestError {
  int line;  // 1-based, header is line 1; 0 for stream-level errors
  std::string message;
};

struct IngestResult {
  std::vector<KnotRecord> records;
  std::vector<IngestError> errors;
};

/// Parses the CSV knot table:
///   name,seifert_matrix,det,nu_c0,r_c0,nu_f2,r_f2,excluded
/// Matrix rows are ';'-separated, entries ' '-separated; empty fields mean
/// absent. Rows violating R = |M| + 2h, the characteristic-2
/// divisibility-by-4 constraint, or determinant consistency are rejected
/// and reported; valid rows are retained.
IngestResult ingest_table_csv(std::istream& in);

/// JSON mirror of the same schema: an array of objects with the CSV column
/// names ("seifert_matrix" as the same ';'/' ' encoded string).
IngestResult ingest_table_json(std::istream& in);

/// Dispatches on the first non-space byte ('[' selects JSON).
IngestResult ingest_table(std::istream& in);

}  // namespace dualknot
