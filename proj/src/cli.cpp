#include "commprob/cli.hpp"

#include "commprob/bounds.hpp"
#include "commprob/catalog.hpp"
#include "commprob/commprob.hpp"
#include "commprob/errors.hpp"
#include "commprob/group_spec.hpp"
#include "commprob/json_io.hpp"
#include "commprob/partitions.hpp"
#include "commprob/structure.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace commprob::cli {

namespace {

enum class Format { Text, Json, Csv };

struct CliConfig {
  std::size_t order_cap = Limits{}.order_cap;
  std::size_t normal_enum_cap = Limits{}.normal_enum_cap;
  Format format = Format::Text;
  bool verify = false;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::size_t max_order = 128;
  std::size_t max_n = 20;
  std::string out_path;
  bool catalog = false;
  std::string spec;

  Limits limits() const {
    Limits l;
    l.order_cap = order_cap;
    l.normal_enum_cap = normal_enum_cap;
    return l;
  }
};

void print_error(std::ostream& err, const std::string& kind, const std::string& message,
                 std::optional<std::size_t> position = std::nullopt) {
  Json j{{"error", kind}, {"message", message}};
  if (position) j["position"] = *position;
  err << j.dump() << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_cp(const CliConfig& cfg, std::ostream& out) {
  FiniteGroup g = build_group(cfg.spec, cfg.limits());
  CpReport r = cp(g, cfg.verify);
  switch (cfg.format) {
    case Format::Json: out << to_json(r).dump() << '\n'; break;
    case Format::Csv:
      out << "group,order,pairs,classes,cp_num,cp_den\n"
          << csv_field(r.group) << ',' << r.order << ',' << r.pairs << ',' << r.classes << ',' << r.cp.num() << ','
          << r.cp.den() << '\n';
      break;
    case Format::Text:
      out << "group:   " << r.group << '\n'
          << "order:   " << r.order << '\n'
          << "pairs:   " << r.pairs << '\n'
          << "classes: " << r.classes << '\n'
          << "cp:      " << r.cp.pretty() << '\n'
          << "methods: " << (r.methods_agree ? "pairs, centralizer sum and class count agree" : "class count")
          << '\n';
      break;
  }
  return kOk;
}

int cmd_classes(const CliConfig& cfg, std::ostream& out) {
  FiniteGroup g = build_group(cfg.spec, cfg.limits());
  ClassDecomposition cd = conjugacy_classes(g);
  switch (cfg.format) {
    case Format::Json: out << to_json(cd).dump() << '\n'; break;
    case Format::Csv:
      out << "class,size,element_order,representative\n";
      for (std::size_t k = 0; k < cd.classes.size(); ++k) {
        Element rep = cd.classes[k].front();
        out << k << ',' << cd.classes[k].size() << ',' << g.element_order(rep) << ',' << csv_field(g.label(rep))
            << '\n';
      }
      break;
    case Format::Text:
      out << "group:        " << g.name() << '\n' << "class_number: " << cd.class_number() << '\n' << "class_sizes: ";
      for (std::size_t s : cd.class_sizes()) out << ' ' << s;
      out << '\n';
      for (std::size_t k = 0; k < cd.classes.size(); ++k) {
        Element rep = cd.classes[k].front();
        out << "  [" << k << "] size " << cd.classes[k].size() << ", order " << g.element_order(rep) << ", e.g. "
            << g.label(rep) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  Limits limits = cfg.limits();
  FiniteGroup g = build_group(cfg.spec, limits);
  std::vector<BoundReport> reports = run_suite(g, limits);
  auto condition = [](const BoundReport& r) -> std::string {
    return r.equality_condition ? yes_no(*r.equality_condition) : "null";
  };
  switch (cfg.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "theorem,subject,applicable,lhs,rhs,holds,equality,equality_condition,external_claim\n";
      for (const auto& r : reports) {
        out << bound_name(r.id) << ',' << csv_field(r.subject) << ',' << yes_no(r.applicable) << ',' << r.lhs << ','
            << r.rhs << ',' << yes_no(r.holds) << ',' << yes_no(r.equality) << ',' << condition(r) << ','
            << yes_no(r.external_claim) << '\n';
      }
      break;
    case Format::Text: {
      out << "group: " << g.name() << " (order " << g.order() << ")\n";
      out << std::left << std::setw(24) << "check" << std::setw(26) << "subject" << std::setw(12) << "lhs"
          << std::setw(12) << "rhs" << std::setw(8) << "holds" << std::setw(10) << "equality"
          << "condition\n";
      for (const auto& r : reports) {
        out << std::left << std::setw(24) << bound_name(r.id) << std::setw(26) << r.subject;
        if (!r.applicable) {
          out << "n/a\n";
          continue;
        }
        out << std::setw(12) << r.lhs.str() << std::setw(12) << r.rhs.str() << std::setw(8)
            << (r.holds ? "yes" : (r.external_claim ? "FINDING" : "NO")) << std::setw(10)
            << (r.equality ? "yes" : "no") << condition(r) << '\n';
      }
      out << (all_hold(reports) ? "all applicable checks hold\n" : "SOME CHECKS FAILED\n");
      break;
    }
  }
  return all_hold(reports) ? kOk : kCheckFailed;
}

int cmd_spectrum(const CliConfig& cfg, std::ostream& out) {
  std::vector<CatalogEntry> catalog = builtin_catalog(cfg.max_order, cfg.limits());
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) throw Error("IO", "cannot open " + cfg.out_path + " for writing");
    sink = &file;
  }
  if (cfg.catalog) {
    export_catalog(catalog, cfg.format == Format::Json ? ExportFormat::Json : ExportFormat::Csv, *sink);
  } else {
    SpectrumReport report = spectrum(catalog);
    if (cfg.format == Format::Text) {
      *sink << "catalog groups: " << catalog.size() << " (order <= " << cfg.max_order << ")\n";
      *sink << "distinct values: " << report.values.size() << '\n';
      if (report.max_nonabelian) {
        *sink << "max non-abelian value: " << report.max_nonabelian->pretty() << '\n';
      }
      for (const auto& v : report.values) {
        *sink << std::left << std::setw(14) << v.cp.str() << std::setw(5) << v.witnesses.size() << v.witnesses.front();
        if (v.witnesses.size() > 1) *sink << ", ...";
        if (v.dyadic_s) *sink << "  [1/2 + 1/2^" << 2 * *v.dyadic_s + 1 << "]";
        *sink << '\n';
      }
    } else {
      export_spectrum(report, cfg.format == Format::Json ? ExportFormat::Json : ExportFormat::Csv, *sink);
    }
  }
  if (file.is_open() && !file) throw Error("IO", "failed writing " + cfg.out_path);
  return kOk;
}

int cmd_estimate(const CliConfig& cfg, std::ostream& out) {
  FiniteGroup g = build_group(cfg.spec, cfg.limits());
  McEstimate m = mc_estimate(g, cfg.samples, cfg.seed);
  switch (cfg.format) {
    case Format::Json: {
      Json j{{"group", g.name()}};
      j.update(to_json(m));
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "group,samples,hits,seed,estimate,ci_low,ci_high\n"
          << csv_field(g.name()) << ',' << m.samples << ',' << m.hits << ',' << m.seed << ',' << m.estimate << ','
          << m.ci_low << ',' << m.ci_high << '\n';
      break;
    case Format::Text:
      out << "group:    " << g.name() << '\n'
          << "samples:  " << m.samples << " (seed " << m.seed << ", mt19937_64)\n"
          << "hits:     " << m.hits << '\n'
          << "estimate: " << m.estimate.pretty() << '\n'
          << std::fixed << std::setprecision(6) << "99% CI:   [" << m.ci_low.to_double() << ", "
          << m.ci_high.to_double() << "]\n";
      break;
  }
  return kOk;
}

int cmd_partitions(const CliConfig& cfg, std::ostream& out) {
  PartitionTable t = build_partition_table(cfg.max_n);
  if (cfg.format == Format::Json) {
    out << to_json(t).dump() << '\n';
  } else if (cfg.format == Format::Csv) {
    write_partition_csv(t, out);
  } else {
    out << std::right << std::setw(5) << "n" << std::setw(16) << "p" << std::setw(12) << "q" << std::setw(16) << "r"
        << std::setw(16) << "s" << '\n';
    for (std::size_t n = 0; n <= t.max_n; ++n) {
      out << std::setw(5) << n << std::setw(16) << t.p[n] << std::setw(12) << t.q[n] << std::setw(16) << t.r[n]
          << std::setw(16) << t.s[n] << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const char* env = std::getenv("COMMPROB_ORDER_CAP")) {
    try {
      std::size_t used = 0;
      cfg.order_cap = std::stoul(env, &used);
      if (used != std::string(env).size() || cfg.order_cap == 0) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      print_error(err, "UsageError", std::string("COMMPROB_ORDER_CAP is not a positive integer: ") + env);
      return kUsage;
    }
  }

  CLI::App app{"Exact commuting probability of finite groups", "commprob"};
  app.fallthrough();
  app.require_subcommand(1);
  std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--order-cap", cfg.order_cap, "Largest group order to construct")->check(CLI::PositiveNumber);
  app.add_option("--normal-cap", cfg.normal_enum_cap, "Largest order for normal-subgroup enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verify", cfg.verify, "Cross-check cp with all three exact methods");

  auto* cp_cmd = app.add_subcommand("cp", "Exact commuting probability");
  cp_cmd->add_option("spec", cfg.spec, "Group spec")->required();
  auto* classes_cmd = app.add_subcommand("classes", "Conjugacy class sizes");
  classes_cmd->add_option("spec", cfg.spec, "Group spec")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate every bound on the group");
  verify_cmd->add_option("spec", cfg.spec, "Group spec")->required();
  auto* spectrum_cmd = app.add_subcommand("spectrum", "cp spectrum of the built-in catalog");
  spectrum_cmd->add_option("--max-order", cfg.max_order, "Largest catalog order")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--out", cfg.out_path, "Write to this file instead of stdout");
  spectrum_cmd->add_flag("--catalog", cfg.catalog, "Export the catalog table instead of the spectrum");
  auto* estimate_cmd = app.add_subcommand("estimate", "Monte Carlo estimate with a 99% Wilson interval");
  estimate_cmd->add_option("spec", cfg.spec, "Group spec")->required();
  estimate_cmd->add_option("--samples", cfg.samples, "Number of sampled pairs")->check(CLI::PositiveNumber);
  estimate_cmd->add_option("--seed", cfg.seed, "PRNG seed");
  auto* partitions_cmd = app.add_subcommand("partitions", "Partition counts p, q, r, s");
  partitions_cmd->alias("partition-table");
  partitions_cmd->add_option("--max", cfg.max_n, "Largest n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kUsage;
  }

  try {
    if (*cp_cmd) return cmd_cp(cfg, out);
    if (*classes_cmd) return cmd_classes(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    if (*spectrum_cmd) return cmd_spectrum(cfg, out);
    if (*estimate_cmd) return cmd_estimate(cfg, out);
    if (*partitions_cmd) return cmd_partitions(cfg, out);
  } catch (const ParseError& e) {
    print_error(err, e.kind(), e.what(), e.position());
    return kUsage;
  } catch (const OrderCapExceeded& e) {
    print_error(err, e.kind(), e.what());
    return kResourceCap;
  } catch (const MethodDisagreement& e) {
    print_error(err, e.kind(), e.what());
    return kCheckFailed;
  } catch (const FormulaMismatch& e) {
    print_error(err, e.kind(), e.what());
    return kCheckFailed;
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return kUsage;
  } catch (const std::bad_alloc&) {
    print_error(err, "OutOfMemory", "allocation failed");
    return kResourceCap;
  }
  print_error(err, "UsageError", "no subcommand given");
  return kUsage;
}

}  // namespace commprob::cli
