#include "commprob/catalog.hpp"

#include "commprob/commprob.hpp"
#include "commprob/errors.hpp"
#include "commprob/json_io.hpp"
#include "commprob/structure.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

namespace commprob {

FiniteGroup frobenius21() {
  FiniteGroup acting = cyclic(3);
  FiniteGroup normal = cyclic(7);
  // g acts as h -> 2^g h (mod 7).
  std::vector<std::vector<Element>> action(3, std::vector<Element>(7));
  for (std::size_t g = 0; g < 3; ++g) {
    std::size_t factor = std::size_t{1} << g;
    for (std::size_t h = 0; h < 7; ++h) action[g][h] = static_cast<Element>((factor * h) % 7);
  }
  return semidirect_product(acting, normal, action);
}

FiniteGroup psl27() {
  // Points 1..7 are 0..6 in F_7 and point 8 is infinity:
  // x -> x + 1 and x -> -1/x.
  std::vector<Permutation> gens{
      Permutation::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7}}),
      Permutation::from_cycles(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}}),
  };
  FiniteGroup g = closure(gens, 8).renamed("psl(2,7)");
  if (g.order() != 168) throw InvalidTable("PSL(2,7) generators produced order " + std::to_string(g.order()));
  if (!is_simple(g)) throw InvalidTable("PSL(2,7) generators produced a non-simple group");
  return g;
}

namespace {

struct Base {
  std::string name;
  std::string spec;
  std::size_t order;
  std::function<FiniteGroup()> make;
  bool factor;
};

std::size_t factorial_size(unsigned n) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

CatalogEntry analyse(std::string name, std::string spec, std::function<FiniteGroup()> make, const Limits& limits) {
  FiniteGroup g = make();
  CpReport r = cp(g, true);
  CatalogEntry e;
  e.name = std::move(name);
  e.spec = std::move(spec);
  e.order = g.order();
  e.cp = r.cp;
  e.classes = r.classes;
  e.abelian = r.classes == g.order();
  e.simple = is_simple(g, limits);
  e.solvable = e.abelian || is_solvable(g);
  e.builder = std::move(make);
  return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.order_cap) {
    throw OrderCapExceeded("catalog order " + std::to_string(max_order) + " exceeds the cap " +
                           std::to_string(limits.order_cap));
  }
  std::vector<Base> bases;
  for (std::size_t n = 1; n <= 64; ++n) {
    bases.push_back({"cyclic(" + std::to_string(n) + ")", "", n, [n, limits] { return cyclic(n, limits); }, n >= 2});
  }
  for (std::size_t n = 3; n <= 64; ++n) {
    bases.push_back({"dihedral(" + std::to_string(n) + ")", "", 2 * n, [n, limits] { return dihedral(n, limits); }, true});
  }
  for (unsigned n = 1; n <= std::min(7U, limits.max_symmetric_degree); ++n) {
    bases.push_back({"sym(" + std::to_string(n) + ")", "", factorial_size(n),
                     [n, limits] { return symmetric(n, limits); }, n >= 3});
    bases.push_back({"alt(" + std::to_string(n) + ")", "", n >= 2 ? factorial_size(n) / 2 : 1,
                     [n, limits] { return alternating(n, limits); }, n >= 4});
  }
  bases.push_back({"q8", "", 8, [] { return quaternion(); }, true});
  bases.push_back({"sdp(cyclic(7),cyclic(3))", "builtin:frobenius21", 21, [] { return frobenius21(); }, true});
  bases.push_back({"psl(2,7)", "builtin:psl27", 168, [] { return psl27(); }, true});
  for (auto& b : bases) {
    if (b.spec.empty()) b.spec = b.name;
  }

  std::vector<CatalogEntry> out;
  for (const auto& b : bases) {
    if (b.order <= max_order) out.push_back(analyse(b.name, b.spec, b.make, limits));
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (!bases[i].factor) continue;
    for (std::size_t j = i; j < bases.size(); ++j) {
      if (!bases[j].factor || bases[i].order * bases[j].order > max_order) continue;
      const Base& a = bases[i];
      const Base& b = bases[j];
      std::string name = "prod(" + a.name + "," + b.name + ")";
      bool parseable = a.spec.rfind("builtin:", 0) != 0 && b.spec.rfind("builtin:", 0) != 0;
      std::string spec = parseable ? name : "builtin:" + name;
      auto make = [ma = a.make, mb = b.make, limits] { return direct_product(ma(), mb(), limits); };
      out.push_back(analyse(name, spec, make, limits));
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) { return x.name < y.name; });
  return out;
}

std::optional<unsigned> dyadic_exponent(const Rational& value) {
  Rational excess = value - Rational(1, 2);
  if (excess.sign() <= 0 || excess.num() != 1) return std::nullopt;
  BigInt den = excess.den();
  unsigned bits = 0;
  while (den > 1) {
    if (den % 2 != 0) return std::nullopt;
    den /= 2;
    ++bits;
  }
  if (bits % 2 == 0) return std::nullopt;
  return (bits - 1) / 2;
}

SpectrumReport spectrum(const std::vector<CatalogEntry>& catalog) {
  std::map<Rational, std::vector<std::string>, std::greater<>> by_value;
  SpectrumReport report;
  for (const auto& e : catalog) {
    by_value[e.cp].push_back(e.name);
    if (!e.abelian) {
      if (!report.max_nonabelian || e.cp > *report.max_nonabelian) {
        report.max_nonabelian = e.cp;
        report.max_nonabelian_witnesses.clear();
      }
      if (e.cp == *report.max_nonabelian) report.max_nonabelian_witnesses.push_back(e.name);
    }
  }
  for (auto& [value, names] : by_value) {
    std::sort(names.begin(), names.end());
    SpectrumValue v{value, names, std::nullopt};
    if (value > Rational(1, 2) && value <= Rational(5, 8)) v.dyadic_s = dyadic_exponent(value);
    report.values.push_back(std::move(v));
  }
  std::sort(report.max_nonabelian_witnesses.begin(), report.max_nonabelian_witnesses.end());
  return report;
}

void export_spectrum(const SpectrumReport& report, ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::Json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  out << "cp_num,cp_den,witnesses\n";
  for (const auto& v : report.values) {
    std::string joined;
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i > 0) joined += ';';
      joined += v.witnesses[i];
    }
    out << v.cp.num() << ',' << v.cp.den() << ',' << csv_field(joined) << '\n';
  }
}

void export_spectrum(const SpectrumReport& report, ExportFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("IO", "cannot open " + path + " for writing");
  export_spectrum(report, format, file);
  if (!file) throw Error("IO", "failed writing " + path);
}

void export_catalog(const std::vector<CatalogEntry>& catalog, ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::Json) {
    Json arr = Json::array();
    for (const auto& e : catalog) arr.push_back(to_json(e));
    out << arr.dump(2) << '\n';
    return;
  }
  out << "name,order,cp_num,cp_den,classes,abelian,simple,solvable\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& e : catalog) {
    out << csv_field(e.name) << ',' << e.order << ',' << e.cp.num() << ',' << e.cp.den() << ',' << e.classes << ','
        << flag(e.abelian) << ',' << flag(e.simple) << ',' << flag(e.solvable) << '\n';
  }
}

}  // namespace commprob
