#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include "affcomb/enumerate.hpp"
#include "affcomb/ident.hpp"
#include "affcomb/leading.hpp"
#include "affcomb/oracle.hpp"
#include "affcomb/rootdata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace affcomb::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

using nlohmann::json;

inline json factor_list(const ColoredPartition& p) {
  json out = json::array();
  for (const auto& f : p.factors()) out.push_back(f.str());
  return out;
}

inline std::string csv_factors(const ColoredPartition& p) { return p.empty() ? "" : p.str(); }

inline std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + s + "' is not a rational number");
  }
}

inline Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) w.coords.push_back(parse_rational(item));
  return w;
}

struct BasisFlags {
  std::string kind = "fs";
  int rank = 1;
  int level = 1;

  void add_to(CLI::App* app) {
    app->add_option("--kind", kind, "fs or std")->required()->check(CLI::IsMember({"fs", "std"}));
    app->add_option("--rank", rank, "rank of C")->required()->check(CLI::PositiveNumber);
    app->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);
  }
  BasisKind basis() const { return BasisKind(parse_kind(kind), rank, level); }
};

inline int leading_terms(const BasisFlags& flags, int window, const std::string& format,
                         std::ostream& out) {
  const BasisKind basis = flags.basis();
  const DegreeWindow w(window);
  const auto terms = basis.kind == BasisKind::Fs ? fs_leading_terms(basis.rank, basis.level, w)
                                                 : std_leading_terms(basis.rank, basis.level, w);
  if (format == "json") {
    json doc{{"kind", basis.kind_name()}, {"rank", basis.rank}, {"level", basis.level},
             {"window", window},          {"count", terms.size()}};
    json rows = json::array();
    for (const auto& t : terms) {
      rows.push_back({{"split", split_of(t, w)}, {"degree", t.degree()}, {"factors", factor_list(t)}});
    }
    doc["terms"] = rows;
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "window,split,degree,factors\n";
    for (const auto& t : terms) {
      out << window << ',' << split_of(t, w) << ',' << t.degree() << ',' << csv_factors(t) << '\n';
    }
  } else {
    out << "# leading terms, " << basis.kind_name() << " " << basis.alphabet().name()
        << ", level " << basis.level << ", window " << window << ": " << terms.size() << '\n';
    for (const auto& t : terms) {
      out << std::setw(3) << split_of(t, w) << "  " << std::setw(5) << t.degree() << "  "
          << t.str() << '\n';
    }
  }
  return kOk;
}

inline int enumerate(const BasisFlags& flags, int max_degree, const std::string& format,
                     std::ostream& out) {
  const BasisLayers result = enumerate_basis(flags.basis(), max_degree);
  const BasisKind& basis = result.basis;
  if (format == "json") {
    json doc{{"kind", basis.kind_name()},
             {"rank", basis.rank},
             {"level", basis.level},
             {"max_degree", max_degree}};
    json layers = json::array();
    for (std::size_t m = 0; m < result.layers.size(); ++m) {
      json parts = json::array();
      for (const auto& p : result.layers[m]) parts.push_back(factor_list(p));
      layers.push_back({{"degree", -static_cast<long>(m)},
                        {"count", result.layers[m].size()},
                        {"partitions", parts}});
    }
    doc["layers"] = layers;
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "degree,factors\n";
    for (std::size_t m = 0; m < result.layers.size(); ++m) {
      for (const auto& p : result.layers[m]) out << -static_cast<long>(m) << ',' << csv_factors(p) << '\n';
    }
  } else {
    for (std::size_t m = 0; m < result.layers.size(); ++m) {
      out << "# degree " << -static_cast<long>(m) << ": " << result.layers[m].size() << '\n';
      for (const auto& p : result.layers[m]) out << p.str() << '\n';
    }
  }
  return kOk;
}

inline void write_series(const BasisKind& basis, const QSeries& s, std::ostream& out) {
  out << "{\"kind\":\"" << basis.kind_name() << "\",\"rank\":" << basis.rank
      << ",\"level\":" << basis.level << ",\"truncation\":" << s.truncation() << ",\"coeffs\":["
      << join(s.coeffs) << "]}\n";
}

inline int verify_coincidence(int ell, int level, int max_degree, std::ostream& out) {
  const BasisKind fs = BasisKind::fs(2 * ell, level);
  const BasisKind st = BasisKind::standard(ell, level);
  const auto lhs = enumerate_basis(fs, max_degree, Checker::Inequalities);
  const auto rhs = enumerate_basis(st, max_degree, Checker::Divisibility);
  std::size_t mismatches = 0;
  out << "# degree  fs(C" << 2 * ell << ")  std(C" << ell << ")\n";
  for (int m = 0; m <= max_degree; ++m) {
    const auto& a = lhs.layers[static_cast<std::size_t>(m)];
    const auto& b = rhs.layers[static_cast<std::size_t>(m)];
    std::vector<ColoredPartition> image;
    image.reserve(a.size());
    for (const auto& p : a) image.push_back(transport_partition(p, ell));
    std::sort(image.begin(), image.end(), PartitionLess{});
    const bool same = image == b;
    if (!same) ++mismatches;
    out << std::setw(8) << -m << "  " << std::setw(8) << a.size() << "  " << std::setw(8)
        << b.size() << (same ? "" : "  MISMATCH") << '\n';
  }
  if (mismatches == 0) {
    out << "coincidence verified: transport is a degree-preserving bijection through degree "
        << -max_degree << '\n';
    return kOk;
  }
  out << "coincidence FAILED in " << mismatches << " degree layer(s)\n";
  return kVerificationFailed;
}

inline int audit_oracle(int rank, int level, int max_window, std::ostream& out) {
  const AuditReport report = audit_windows(rank, level, max_window);
  json windows = json::array();
  for (int d = 1; d <= max_window; ++d) windows.push_back(d);
  json mismatches = json::array();
  for (const auto& mm : report.mismatches) {
    mismatches.push_back({{"window", mm.window},
                          {"multiset", mm.multiset},
                          {"degree", mm.degree},
                          {"reason", mm.reason},
                          {"term", mm.term}});
  }
  json doc{{"rank", rank},
           {"level", level},
           {"windows", windows},
           {"supports_checked", report.supports_checked},
           {"mismatches", mismatches}};
  out << doc.dump() << '\n';
  return report.ok() ? kOk : kVerificationFailed;
}

inline int verify_branching_table(int ell, int max_m, std::ostream& out) {
  bool all = true;
  out << "# m  dim L_C" << ell << "(m theta)  dim L_A" << 2 * ell - 1
      << "(2m omega1)  binom(2l+2m-1,2m)\n";
  for (int m = 1; m <= max_m; ++m) {
    const BranchingReport r = branching_dimensions(ell, m);
    all = all && r.holds();
    out << m << ' ' << r.symplectic_dim << ' ' << r.linear_dim << ' ' << r.symmetric_power_dim
        << (r.holds() ? " ok" : " MISMATCH") << '\n';
  }
  out << (all ? "branching verified" : "branching FAILED") << '\n';
  return all ? kOk : kVerificationFailed;
}

inline int rr_check(int max_m, std::ostream& out) {
  bool all = true;
  out << "# m congruence difference\n";
  for (const auto& row : rr_counts(max_m)) {
    all = all && row.congruence == row.difference;
    out << row.m << ' ' << row.congruence << ' ' << row.difference << '\n';
  }
  out << (all ? "identity verified" : "identity FAILED") << '\n';
  return all ? kOk : kVerificationFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leading terms, difference conditions and basis counts for C_l affine modules"};
  app.require_subcommand(1);

  detail::BasisFlags lt_flags;
  int window = 1;
  std::string lt_format = "text";
  auto* lt = app.add_subcommand("leading-terms", "leading terms of relations in one window");
  lt_flags.add_to(lt);
  lt->add_option("--window", window, "window d (degrees -d-1, -d)")->required()->check(CLI::PositiveNumber);
  lt->add_option("--format", lt_format)->check(CLI::IsMember({"text", "json", "csv"}));

  detail::BasisFlags en_flags;
  int en_degree = 0;
  std::string en_format = "text";
  auto* en = app.add_subcommand("enumerate", "admissible colored partitions by degree");
  en_flags.add_to(en);
  en->add_option("--max-degree", en_degree)->required()->check(CLI::NonNegativeNumber);
  en->add_option("--format", en_format)->check(CLI::IsMember({"text", "json", "csv"}));

  detail::BasisFlags se_flags;
  int se_degree = 0;
  auto* se = app.add_subcommand("series", "graded counts of admissible partitions (JSON)");
  se_flags.add_to(se);
  se->add_option("--max-degree", se_degree)->required()->check(CLI::NonNegativeNumber);

  int vc_ell = 1, vc_level = 1, vc_degree = 0;
  auto* vc = app.add_subcommand("verify-coincidence", "fs(C_2l) versus std(C_l) under transport");
  vc->add_option("--ell", vc_ell)->required()->check(CLI::PositiveNumber);
  vc->add_option("--level", vc_level)->required()->check(CLI::PositiveNumber);
  vc->add_option("--max-degree", vc_degree)->required()->check(CLI::NonNegativeNumber);

  int ao_rank = 1, ao_level = 1, ao_window = 1;
  auto* ao = app.add_subcommand("audit-oracle", "brute-force minima versus closed forms (JSON)");
  ao->add_option("--rank", ao_rank)->required()->check(CLI::PositiveNumber);
  ao->add_option("--level", ao_level)->required()->check(CLI::PositiveNumber);
  ao->add_option("--max-window", ao_window)->required()->check(CLI::PositiveNumber);

  std::string wd_family, wd_weight;
  int wd_rank = 1;
  auto* wd = app.add_subcommand("weyl-dim", "dimension of an irreducible module");
  wd->add_option("--family", wd_family)->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  wd->add_option("--rank", wd_rank)->required()->check(CLI::PositiveNumber);
  wd->add_option("--weight", wd_weight, "epsilon coordinates, e.g. 2,0 or 1/2,1/2")->required();

  int vb_ell = 1, vb_max = 1;
  auto* vb = app.add_subcommand("verify-branching", "S^2m(C^2l) stays irreducible over sp_2l");
  vb->add_option("--ell", vb_ell)->required()->check(CLI::PositiveNumber);
  vb->add_option("--max-m", vb_max)->required()->check(CLI::PositiveNumber);

  int rr_max = 1;
  auto* rr = app.add_subcommand("rr-check", "Rogers-Ramanujan partition counts");
  rr->add_option("--max", rr_max)->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"affcomb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  try {
    if (lt->parsed()) return detail::leading_terms(lt_flags, window, lt_format, out);
    if (en->parsed()) return detail::enumerate(en_flags, en_degree, en_format, out);
    if (se->parsed()) {
      const BasisKind basis = se_flags.basis();
      detail::write_series(basis, graded_series(basis, se_degree), out);
      return kOk;
    }
    if (vc->parsed()) return detail::verify_coincidence(vc_ell, vc_level, vc_degree, out);
    if (ao->parsed()) return detail::audit_oracle(ao_rank, ao_level, ao_window, out);
    if (wd->parsed()) {
      const RootSystemSpec spec(parse_family(wd_family), wd_rank);
      out << weyl_dim(spec, detail::parse_weight(wd_weight)) << '\n';
      return kOk;
    }
    if (vb->parsed()) return detail::verify_branching_table(vb_ell, vb_max, out);
    if (rr->parsed()) return detail::rr_check(rr_max, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace affcomb::cli
