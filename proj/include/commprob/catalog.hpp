#pragma once

#include "commprob/group.hpp"
#include "commprob/rational.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace commprob {

/// One catalog group with its cached invariants. Tables are rebuilt on
/// demand by `group()` so a large catalog stays small in memory.
struct CatalogEntry {
  std::string name;
  /// Group-spec text when the grammar can express it, else "builtin:<tag>".
  std::string spec;
  std::size_t order = 0;
  Rational cp;
  std::size_t classes = 0;
  bool abelian = false;
  bool simple = false;
  bool solvable = false;
  std::function<FiniteGroup()> builder;

  FiniteGroup group() const { return builder(); }
};

/// The order-21 group C_7 semidirect C_3 (x -> x^2 action).
FiniteGroup frobenius21();
/// PSL(2,7) on the 8 points of the projective line over F_7. Construction
/// asserts order 168 and simplicity.
FiniteGroup psl27();

/// cyclic(n) for n <= 64, dihedral(n) for 3 <= n <= 64, sym and alt up to
/// degree 7, q8, the order-21 group, PSL(2,7), and every direct product
/// of two non-trivial members (aliases sym(1), sym(2), alt(1..3)
/// excluded as factors). Everything is restricted to order <= max_order and
/// sorted by name. Each cp is checked by all three exact methods.
std::vector<CatalogEntry> builtin_catalog(std::size_t max_order, const Limits& limits = {});

struct SpectrumValue {
  Rational cp;
  std::vector<std::string> witnesses;
  /// s with cp = 1/2 + 1/2^(2s+1), for values in (1/2, 5/8].
  std::optional<unsigned> dyadic_s;
};

struct SpectrumReport {
  /// Strictly descending.
  std::vector<SpectrumValue> values;
  std::optional<Rational> max_nonabelian;
  std::vector<std::string> max_nonabelian_witnesses;
};

SpectrumReport spectrum(const std::vector<CatalogEntry>& catalog);
inline SpectrumReport spectrum(std::size_t max_order, const Limits& limits = {}) {
  return spectrum(builtin_catalog(max_order, limits));
}

/// Returns s if `value` = 1/2 + 1/2^(2s+1) for some s >= 0.
std::optional<unsigned> dyadic_exponent(const Rational& value);

enum class ExportFormat { Csv, Json };

/// CSV header "cp_num,cp_den,witnesses"; witnesses are joined with ';'.
void export_spectrum(const SpectrumReport& report, ExportFormat format, std::ostream& out);
/// Throws Error("IO") if the file cannot be written.
void export_spectrum(const SpectrumReport& report, ExportFormat format, const std::string& path);

/// Columns name, order, cp_num, cp_den, classes, abelian, simple, solvable.
void export_catalog(const std::vector<CatalogEntry>& catalog, ExportFormat format, std::ostream& out);

}  // namespace commprob
