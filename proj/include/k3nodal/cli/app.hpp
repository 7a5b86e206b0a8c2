#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3nodal/codes/beauville.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/no_extension.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/errors.hpp"
#include "k3nodal/k3/duval.hpp"
#include "k3nodal/k3/even_sets.hpp"
#include "k3nodal/k3/theorem.hpp"
#include "k3nodal/lattice/code_lattice.hpp"

namespace k3nodal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRefuted = 2;

namespace detail {

using nlohmann::json;

inline json weights_json(const codes::WeightDistribution& wd) {
  json out = json::object();
  for (std::size_t w = 0; w < wd.counts.size(); ++w) {
    if (wd.counts[w] != 0) {
      out[std::to_string(w)] = wd.counts[w];
    }
  }
  return out;
}

inline std::string weights_text(const codes::WeightDistribution& wd) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t w = 0; w < wd.counts.size(); ++w) {
    if (wd.counts[w] != 0) {
      out << (first ? "" : " ") << w << ':' << wd.counts[w];
      first = false;
    }
  }
  return out.str();
}

inline json generator_json(const gf2::Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.row_vectors()) {
    rows.push_back(r.to_string());
  }
  return rows;
}

inline json code_json(const codes::LinearCode& c) {
  return json{{"n", c.length()},
              {"k", c.dimension()},
              {"generator", generator_json(c.generator())},
              {"weights", weights_json(codes::weight_distribution(c))}};
}

/// Invariants of a code lattice, computed once for both output styles.
struct LatticeSummary {
  lattice::CodeLattice lattice;
  bool integral = false;
  std::optional<bool> even;
  lattice::Rational det;
  std::optional<lattice::DiscriminantGroup> discriminant;
  bool negative_definite = false;
  bool positive_definite = false;
  std::size_t norm_minus_two_unit_vectors = 0;  ///< i with 2e_i of norm -2
};

inline LatticeSummary summarize(lattice::CodeLattice L) {
  LatticeSummary s{std::move(L), false, std::nullopt, 0, std::nullopt, false, false, 0};
  s.integral = lattice::is_integral(s.lattice);
  if (s.integral) {
    s.even = lattice::is_even(s.lattice);
    s.discriminant = lattice::discriminant_group(s.lattice);
  }
  s.det = lattice::determinant(s.lattice);
  s.negative_definite = lattice::is_negative_definite(s.lattice);
  s.positive_definite = lattice::is_positive_definite(s.lattice);
  const std::size_t n = s.lattice.rank();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<lattice::Integer> v(n, 0);
    v[i] = 2;
    if (s.lattice.contains(v) && s.lattice.norm(v) == -2) {
      ++s.norm_minus_two_unit_vectors;
    }
  }
  return s;
}

inline json lattice_json(const LatticeSummary& s) {
  json j = s.lattice;
  j["integral"] = s.integral;
  j["even"] = s.even ? json(*s.even) : json(nullptr);
  j["negative_definite"] = s.negative_definite;
  j["positive_definite"] = s.positive_definite;
  j["discriminant_group"] = s.discriminant ? json(s.discriminant->to_string()) : json(nullptr);
  j["norm_minus_two_unit_vectors"] = s.norm_minus_two_unit_vectors;
  return j;
}

inline void lattice_text(std::ostream& out, const LatticeSummary& s) {
  const auto& L = s.lattice;
  out << "lattice Gamma_C(" << (L.sign() < 0 ? "-1" : "+1") << "), rank " << L.rank() << ", code dimension "
      << L.code().dimension() << '\n';
  out << "Gram matrix:\n" << lattice::format_gram(L);
  out << "determinant: " << lattice::format_rational(s.det) << '\n';
  out << "integral: " << (s.integral ? "yes" : "no") << '\n';
  if (s.even) {
    out << "even: " << (*s.even ? "yes" : "no") << '\n';
  }
  if (s.discriminant) {
    out << "discriminant group: " << s.discriminant->to_string() << '\n';
  }
  out << "definiteness: "
      << (s.negative_definite ? "negative definite" : s.positive_definite ? "positive definite" : "indefinite or degenerate")
      << '\n';
  out << "vectors 2e_i of norm -2: " << s.norm_minus_two_unit_vectors << '\n';
}

inline gf2::Matrix read_matrix_file(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return gf2::parse_matrix(stdin_stream);
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return gf2::parse_matrix(in);
}

inline json beauville_json(const codes::BeauvilleReport& r) { return json(r); }

inline void beauville_text(std::ostream& out, const codes::BeauvilleReport& r) {
  out << "D_m characterization, m = " << r.m << ", lengths " << r.m << ".." << r.n_max << " ("
      << (r.mode == codes::BeauvilleMode::Exhaustive ? "exhaustive" : "sampled") << ")\n";
  out << "     n      examined      expected    weights>=n/2   extremal   ~D_m\n";
  for (const auto& s : r.lengths) {
    char line[160];
    std::snprintf(line, sizeof line, "%6zu %13llu %13llu %15llu %10llu %6llu\n", s.n,
                  static_cast<unsigned long long>(s.examined), static_cast<unsigned long long>(s.expected),
                  static_cast<unsigned long long>(s.satisfying), static_cast<unsigned long long>(s.extremal),
                  static_cast<unsigned long long>(s.extremal_equivalent_to_D));
    out << line;
  }
  for (const auto& ce : r.counterexamples) {
    out << "counterexample at n = " << ce.n << " (" << ce.reason << "):";
    for (const auto& g : ce.generator) {
      out << ' ' << g;
    }
    out << '\n';
  }
  out << "total examined: " << r.total_examined() << '\n';
  out << (r.verified() ? "verified" : "REFUTED") << '\n';
}

inline void certificate_text(std::ostream& out, const codes::ExtensionCertificate& c) {
  out << "column-deletion certificate, m = " << c.m << ", N = " << c.N << ", " << c.pairs.size() << " pairs\n";
  out << "   k   l  row  weight\n";
  for (const auto& p : c.pairs) {
    char line[64];
    std::snprintf(line, sizeof line, "%4zu %3zu %4zu %7zu\n", p.k, p.l, p.row, p.weight);
    out << line;
  }
}

inline void theorem_text(std::ostream& out, const k3::TheoremCertificate& t) {
  out << t.statement << '\n';
  for (const auto& s : t.steps) {
    out << "  [" << (s.passed ? "ok" : "FAIL") << "] " << s.name << ": " << s.detail << '\n';
  }
  out << (t.verified() ? "verified" : "REFUTED") << '\n';
}

inline void admissibility_text(std::ostream& out, const k3::AdmissibilityReport& r) {
  out << "configuration: " << (r.config.empty() ? "(none)" : r.config) << '\n';
  for (const auto& c : r.per_type) {
    out << "  " << c.type.label() << " x" << c.count << ": " << c.delta_each << " curve(s) each, delta "
        << c.delta_total << ", mu " << c.mu_total << '\n';
  }
  out << "delta = " << r.delta << ", mu = " << r.mu << ", delta/mu = " << r.ratio_num << '/' << r.ratio_den << '\n';
  out << (r.admissible ? "admissible" : "inadmissible") << " (delta <= 16 " << (r.admissible ? "holds" : "fails")
      << ")\n";
  for (const auto& reason : r.reasons) {
    out << "  reason: " << reason << '\n';
  }
}

/// The full verification suite behind `verify all`.
struct SuiteResult {
  json report;
  bool verified = true;
};

inline SuiteResult run_suite() {
  SuiteResult res;
  json& j = res.report;
  j = json::object();

  json beauville = json::array();
  const std::pair<std::size_t, std::size_t> beauville_cases[] = {{2, 4}, {3, 6}, {4, 8}};
  for (auto [m, n_max] : beauville_cases) {
    const auto r = codes::verify_beauville(m, n_max);
    res.verified = res.verified && r.verified();
    json entry = {{"m", r.m},
                  {"n_max", r.n_max},
                  {"total_examined", r.total_examined()},
                  {"extremal", r.total_extremal()},
                  {"verified", r.verified()}};
    beauville.push_back(std::move(entry));
  }
  j["beauville"] = std::move(beauville);

  json extension = json::array();
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto c = codes::verify_no_extension(m);
    std::size_t lo = c.N, hi = 0;
    for (const auto& p : c.pairs) {
      lo = std::min(lo, p.weight);
      hi = std::max(hi, p.weight);
    }
    const bool ok = c.degenerate() || c.verified();
    res.verified = res.verified && ok;
    extension.push_back({{"m", c.m},
                         {"N", c.N},
                         {"pairs", c.pairs.size()},
                         {"min_weight", lo},
                         {"max_weight", hi},
                         {"degenerate", c.degenerate()},
                         {"verified", c.verified()}});
  }
  j["no_extension"] = std::move(extension);

  const auto kummer = summarize(lattice::kummer_lattice());
  const bool kummer_ok = kummer.integral && kummer.even.value_or(false) && kummer.negative_definite &&
                         kummer.det == 64 && kummer.discriminant &&
                         kummer.discriminant->elementary_divisors == std::vector<lattice::Integer>(6, 2) &&
                         kummer.norm_minus_two_unit_vectors == 16;
  res.verified = res.verified && kummer_ok;
  j["kummer_lattice"] = {{"det", lattice::format_rational(kummer.det)},
                         {"discriminant_group", kummer.discriminant ? kummer.discriminant->to_string() : ""},
                         {"even", kummer.even.value_or(false)},
                         {"negative_definite", kummer.negative_definite},
                         {"norm_minus_two_unit_vectors", kummer.norm_minus_two_unit_vectors},
                         {"verified", kummer_ok}};

  const auto eight = summarize(lattice::nikulin_case_lattice());
  const bool eight_ok = eight.integral && eight.even.value_or(false) && eight.negative_definite;
  res.verified = res.verified && eight_ok;
  j["even_set_8_lattice"] = {{"det", lattice::format_rational(eight.det)},
                             {"discriminant_group", eight.discriminant ? eight.discriminant->to_string() : ""},
                             {"negative_definite", eight.negative_definite},
                             {"verified", eight_ok}};

  json sizes = json::array();
  for (long k = 0; k <= 100; ++k) {
    const auto c = k3::classify_even_set(k);
    if (c.verdict != k3::EvenSetVerdict::Impossible) {
      sizes.push_back({{"k", k}, {"verdict", k3::to_string(c.verdict)}, {"euler_of_cover", c.euler_of_cover}});
    }
  }
  const bool sizes_ok = sizes.size() == 3 && sizes[1]["k"] == 8 && sizes[2]["k"] == 16;
  res.verified = res.verified && sizes_ok;
  j["even_set_sizes"] = {{"possible", sizes}, {"verified", sizes_ok}};

  const auto theorem = k3::verify_max_sixteen();
  res.verified = res.verified && theorem.verified();
  j["theorem"] = theorem;
  j["verified"] = res.verified;
  return res;
}

inline void suite_text(std::ostream& out, const SuiteResult& s) {
  const auto& j = s.report;
  for (const auto& b : j["beauville"]) {
    out << "beauville m=" << b["m"].get<int>() << " n<=" << b["n_max"].get<int>() << ": "
        << b["total_examined"].get<std::uint64_t>() << " codes, " << b["extremal"].get<std::uint64_t>()
        << " extremal, " << (b["verified"].get<bool>() ? "ok" : "FAIL") << '\n';
  }
  for (const auto& e : j["no_extension"]) {
    out << "no-extension m=" << e["m"].get<int>() << " N=" << e["N"].get<int>() << ": " << e["pairs"].get<int>()
        << " pairs, weights " << e["min_weight"].get<int>() << ".." << e["max_weight"].get<int>() << ", "
        << (e["degenerate"].get<bool>() ? "degenerate (not asserted)" : e["verified"].get<bool>() ? "ok" : "FAIL")
        << '\n';
  }
  const auto& k = j["kummer_lattice"];
  out << "kummer lattice: det " << k["det"].get<std::string>() << ", discriminant "
      << k["discriminant_group"].get<std::string>() << ", " << (k["verified"].get<bool>() ? "ok" : "FAIL") << '\n';
  const auto& e8 = j["even_set_8_lattice"];
  out << "k=8 even-set lattice: det " << e8["det"].get<std::string>() << ", discriminant "
      << e8["discriminant_group"].get<std::string>() << ", " << (e8["verified"].get<bool>() ? "ok" : "FAIL") << '\n';
  out << "even set sizes k <= 100:";
  for (const auto& p : j["even_set_sizes"]["possible"]) {
    out << ' ' << p["k"].get<int>() << " (" << p["verdict"].get<std::string>() << ")";
  }
  out << '\n';
  const auto& t = j["theorem"];
  out << t["statement"].get<std::string>() << ": " << (t["verified"].get<bool>() ? "verified" : "FAIL") << '\n';
  out << (s.verified ? "all checks verified" : "SOME CHECKS FAILED") << '\n';
}

}  // namespace detail

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 when a configuration is inadmissible or a claim is refuted, and 1 on
/// usage or I/O errors (diagnostic on `err`).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  using detail::json;
  CLI::App app{"Binary codes, code lattices and nodal-curve bounds on K3 surfaces", "k3nodal"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of tables");

  int status = kExitOk;
  auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

  // code
  auto* code = app.add_subcommand("code", "construct and inspect binary codes")->require_subcommand(1);
  std::size_t rm_degree = 1, rm_m = 4, d_m = 5;
  std::string in_path;
  auto* code_rm = code->add_subcommand("rm", "Reed-Muller code: monomial generator rows and weights");
  code_rm->add_option("--degree", rm_degree, "maximal monomial degree k")->required();
  code_rm->add_option("--m", rm_m, "dimension m of W (length 2^m)")->required();
  code_rm->callback([&] {
    const auto g = codes::reed_muller_generator(rm_degree, rm_m);
    const auto c = codes::LinearCode::from_generators(g.matrix);
    const auto wd = codes::weight_distribution(c);
    if (as_json) {
      json rows = json::array();
      for (std::size_t i = 0; i < g.monomials.size(); ++i) {
        rows.push_back({{"monomial", g.monomials[i].label()}, {"row", g.matrix.row(i).to_string()}});
      }
      emit({{"degree", rm_degree},
            {"m", rm_m},
            {"n", c.length()},
            {"k", c.dimension()},
            {"rows", rows},
            {"weights", detail::weights_json(wd)}});
      return;
    }
    out << "Reed-Muller code of order " << rm_degree << " on F_2^" << rm_m << ": length " << c.length()
        << ", dimension " << c.dimension() << '\n';
    std::size_t width = 0;
    for (const auto& f : g.monomials) {
      width = std::max(width, f.label().size());
    }
    for (std::size_t i = 0; i < g.monomials.size(); ++i) {
      const auto label = g.monomials[i].label();
      out << label << std::string(width - label.size() + 2, ' ') << g.matrix.row(i).to_string() << '\n';
    }
    out << "weights: " << detail::weights_text(wd) << '\n';
  });

  auto* code_d = code->add_subcommand("d", "the code D_m (affine-linear functions, length 2^(m-1))");
  code_d->add_option("--m", d_m, "parameter m >= 2")->required();
  code_d->callback([&] {
    const auto c = codes::code_D(d_m);
    if (as_json) {
      emit(detail::code_json(c));
    } else {
      gf2::write_matrix(out, c.generator());
    }
  });

  auto* code_weights = code->add_subcommand("weights", "weight distribution of the code spanned by a matrix file");
  code_weights->add_option("--in", in_path, "generator matrix file ('-' for stdin)")->required();
  code_weights->callback([&] {
    const auto c = codes::LinearCode::from_generators(detail::read_matrix_file(in_path, in));
    const auto wd = codes::weight_distribution(c);
    if (as_json) {
      emit({{"n", c.length()}, {"k", c.dimension()}, {"weights", detail::weights_json(wd)}});
      return;
    }
    out << "n = " << c.length() << ", k = " << c.dimension() << '\n';
    for (std::size_t w = 0; w < wd.counts.size(); ++w) {
      if (wd.counts[w] != 0) {
        out << w << ": " << wd.counts[w] << '\n';
      }
    }
  });

  auto* code_dual = code->add_subcommand("dual", "generator matrix of the dual code");
  code_dual->add_option("--in", in_path, "generator matrix file ('-' for stdin)")->required();
  code_dual->callback([&] {
    const auto c = codes::dual(codes::LinearCode::from_generators(detail::read_matrix_file(in_path, in)));
    if (as_json) {
      emit(detail::code_json(c));
    } else {
      gf2::write_matrix(out, c.generator());
    }
  });

  // lattice
  auto* lat = app.add_subcommand("lattice", "code lattices Gamma_C")->require_subcommand(1);
  bool negate = false;
  auto* lat_gamma = lat->add_subcommand("gamma", "Gram matrix and invariants of Gamma_C");
  lat_gamma->add_option("--in", in_path, "generator matrix file ('-' for stdin)")->required();
  lat_gamma->add_flag("--neg", negate, "use the form scaled by -1/2");
  lat_gamma->callback([&] {
    const auto c = codes::LinearCode::from_generators(detail::read_matrix_file(in_path, in));
    const auto s = detail::summarize(lattice::gamma_from_code(c, negate ? -1 : 1));
    if (as_json) {
      emit(detail::lattice_json(s));
    } else {
      detail::lattice_text(out, s);
    }
  });
  auto* lat_kummer = lat->add_subcommand("kummer", "the Kummer lattice Gamma_{D_5}(-1)");
  lat_kummer->callback([&] {
    const auto s = detail::summarize(lattice::kummer_lattice());
    if (as_json) {
      emit(detail::lattice_json(s));
    } else {
      detail::lattice_text(out, s);
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run verification procedures")->require_subcommand(1);
  codes::BeauvilleOptions bopts;
  std::optional<std::size_t> nmax;
  auto* v_beau = verify->add_subcommand("beauville", "check the D_m characterization over all codes");
  v_beau->add_option("--m", bopts.m, "code dimension m >= 2")->required();
  v_beau->add_option("--nmax", nmax, "largest length examined (default 2^(m-1))");
  v_beau->add_option("--samples", bopts.samples_per_length, "codes per length in sampled mode (m >= 5)");
  v_beau->add_option("--seed", bopts.seed, "seed for sampled mode");
  v_beau->add_option("--threads", bopts.threads, "worker threads (0 = all cores)");
  v_beau->callback([&] {
    if (bopts.m < 2 || bopts.m > 6) {
      throw argument_error("--m must lie in [2, 6]");
    }
    bopts.n_max = nmax.value_or(std::size_t{1} << (bopts.m - 1));
    const auto r = codes::verify_beauville(bopts);
    if (as_json) {
      emit(detail::beauville_json(r));
    } else {
      detail::beauville_text(out, r);
    }
    status = r.verified() ? kExitOk : kExitRefuted;
  });

  auto* v_17 = verify->add_subcommand("no-seventeen", "column-deletion certificate for N = 16 and the theorem chain");
  v_17->callback([&] {
    const auto cert = codes::verify_no_extension(5);
    const auto theorem = k3::verify_max_sixteen();
    if (as_json) {
      emit({{"certificate", cert}, {"theorem", theorem}});
    } else {
      detail::certificate_text(out, cert);
      detail::theorem_text(out, theorem);
    }
    status = cert.verified() && theorem.verified() ? kExitOk : kExitRefuted;
  });

  auto* v_all = verify->add_subcommand("all", "run the full verification suite");
  v_all->callback([&] {
    const auto suite = detail::run_suite();
    if (as_json) {
      emit(suite.report);
    } else {
      detail::suite_text(out, suite);
    }
    status = suite.verified ? kExitOk : kExitRefuted;
  });

  // duval
  auto* duval = app.add_subcommand("duval", "du Val configurations on K3 surfaces")->require_subcommand(1);
  std::string config_text;
  long even_k = 0;
  auto* d_check = duval->add_subcommand("check", "delta, mu and admissibility of a configuration");
  d_check->add_option("config", config_text, "terms <T><n>[x<count>], e.g. A1x16 or A2,D4x2,E7")->required();
  d_check->callback([&] {
    const auto r = k3::admissible(k3::parse_config(config_text));
    if (as_json) {
      emit(json(r));
    } else {
      detail::admissibility_text(out, r);
    }
    status = r.admissible ? kExitOk : kExitRefuted;
  });
  auto* d_even = duval->add_subcommand("classify-even-set", "possible sizes of even sets of nodal curves");
  d_even->add_option("--k", even_k, "number of curves in the even set")->required();
  d_even->callback([&] {
    const auto c = k3::classify_even_set(even_k);
    if (as_json) {
      emit(json(c));
    } else {
      out << "k = " << c.k << ": e(cover) = 48 - 3k = " << c.euler_of_cover;
      if (c.irregularity) {
        out << ", q = 2 - e/12 = " << *c.irregularity;
      } else {
        out << ", e/12 not an integer";
      }
      out << " -> " << k3::to_string(c.verdict) << '\n';
    }
    status = c.verdict == k3::EvenSetVerdict::Impossible ? kExitRefuted : kExitOk;
  });

  for (auto* sub : {code, code_rm, code_d, code_weights, code_dual, lat, lat_gamma, lat_kummer, verify, v_beau, v_17,
                    v_all, duval, d_check, d_even}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "k3nodal: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "k3nodal: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}

}  // namespace k3nodal::cli
