#include "mainswitch/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mainswitch/catalog.hpp"
#include "mainswitch/certificate.hpp"
#include "mainswitch/constructions.hpp"
#include "mainswitch/exact.hpp"
#include "mainswitch/graph6.hpp"
#include "mainswitch/search.hpp"
#include "mainswitch/spectral.hpp"

namespace mainswitch::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<double> group_eps;
  std::optional<double> main_eps;
  double eigen_tol = 1e-12;
  std::size_t workers = 1;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// graph6 text, @file.g6 or @file.sel
SignedGraph load_input(const std::string& input) {
  if (input.empty()) throw Usage("empty graph input");
  if (input.front() != '@') return SignedGraph(parse_graph6(input));
  const std::string path = input.substr(1);
  const std::string text = read_file(path);
  if (ends_with(path, ".sel")) return parse_signed_edge_list(text);
  const auto nl = text.find('\n');
  return SignedGraph(parse_graph6(nl == std::string::npos ? text : text.substr(0, nl)));
}

Graph unsigned_input(const std::string& input) {
  const SignedGraph g = load_input(input);
  if (g.negative_edges() != 0) throw Usage("this command takes an unsigned graph");
  return g.graph();
}

std::string number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::size_t default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  std::size_t w = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), w);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || w == 0) {
    throw Usage(std::string(kWorkersEnv) + " must be a positive integer");
  }
  return w;
}

nlohmann::ordered_json spectrum_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  auto groups = nlohmann::ordered_json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}, {"is_main", g.is_main},
                      {"main_mass", g.main_mass}});
  }
  j["groups"] = std::move(groups);
  j["main_count"] = r.main_count();
  j["distinct_count"] = r.distinct_count();
  return j;
}

void spectrum_text(const SpectrumReport& r, std::ostream& out) {
  out << "n " << r.n << "\n";
  out << "value multiplicity main main_mass\n";
  for (const auto& g : r.groups) {
    out << number(g.value) << " " << g.multiplicity << " " << (g.is_main ? "yes" : "no") << " "
        << number(g.main_mass) << "\n";
  }
  out << "main_count " << r.main_count() << "\n";
  out << "distinct_count " << r.distinct_count() << "\n";
}

nlohmann::ordered_json profile_json(const MainProfile& p) {
  return {{"main_count", p.main_count}, {"distinct_count", p.distinct_count}, {"all_main", p.all_main}};
}

std::string canonical_g6(const std::string& g6) { return to_graph6(canonical_form(parse_graph6(g6))); }

std::vector<Graph> read_catalog(const std::string& path, std::optional<std::size_t> max_n, std::ostream& err) {
  const std::string text = read_file(path);
  std::vector<Graph> graphs;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
    if (max_n && g.order() > *max_n) continue;
    if (!g.connected()) {
      err << path << ":" << lineno << ": skipping disconnected graph\n";
      continue;
    }
    graphs.push_back(std::move(g));
  }
  return graphs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Main eigenvalues of signed graphs and all-main switchings", "mainswitch"};
  app.require_subcommand(1);

  Config cfg;
  try {
    cfg.workers = default_workers();
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--group-eps", cfg.group_eps, "eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
  app.add_option("--main-eps", cfg.main_eps, "main projection tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eigen-tol", cfg.eigen_tol, "Jacobi stopping tolerance")->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "worker threads (default from MAINSWITCH_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "write output to this file");

  std::string input;
  bool json = false;

  auto* spectrum = app.add_subcommand("spectrum", "floating-point spectrum with main flags");
  spectrum->add_option("input", input, "graph6, @file.g6 or @file.sel")->required();
  spectrum->add_flag("--json", json);

  auto* profile = app.add_subcommand("main-profile", "exact main and distinct eigenvalue counts");
  profile->add_option("input", input, "graph6, @file.g6 or @file.sel")->required();
  profile->add_flag("--json", json);

  auto* find = app.add_subcommand("find-switching", "exhaustive search for an all-main switching");
  find->add_option("input", input, "graph6 or @file.g6")->required();

  auto* construct = app.add_subcommand("construct", "explicit all-main switching");
  construct->require_subcommand(1);
  std::size_t n = 0;
  std::size_t r = 0;
  auto* snr = construct->add_subcommand("snr", "K_{n-r} with r pendant edges at one vertex");
  snr->add_option("--n", n)->required();
  snr->add_option("--r", r)->required();
  std::string blocks;
  bool one_per_part = false;
  auto* multi = construct->add_subcommand("multipartite", "complete multipartite graph");
  multi->add_option("--blocks", blocks, "l1xT1,l2xT2,...")->required();
  multi->add_flag("--one-per-part", one_per_part, "switch one vertex in every part");

  std::optional<std::size_t> max_n;
  std::string catalog_file;
  std::string cert_file;
  bool timing = false;
  auto* verify = app.add_subcommand("verify-conjecture", "search every connected graph of a catalog");
  verify->add_option("--max-n", max_n, "largest order")->check(CLI::Range(std::size_t{2}, kCatalogMaxOrder));
  verify->add_option("--graph6-file", catalog_file, "verify these graphs instead of the generated catalog");
  verify->add_option("--certificates", cert_file, "write one certificate per success (NDJSON)");
  verify->add_flag("--timing", timing, "include elapsed seconds");

  std::string check_file;
  auto* check = app.add_subcommand("check-cert", "re-verify NDJSON certificates");
  check->add_option("file", check_file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file_out;
  if (!cfg.output.empty()) {
    file_out.open(cfg.output);
    if (!file_out) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return 2;
    }
  }
  std::ostream& os = cfg.output.empty() ? out : file_out;

  try {
    if (spectrum->parsed()) {
      const SignedGraph g = load_input(input);
      const SpectrumReport rep = classify_main(eigen_sym(RealMatrix::from(adjacency_matrix(g)), cfg.eigen_tol),
                                               cfg.group_eps, cfg.main_eps);
      if (json) {
        os << spectrum_json(rep).dump() << "\n";
      } else {
        spectrum_text(rep, os);
      }
      return 0;
    }

    if (profile->parsed()) {
      const MainProfile p = main_profile(adjacency_matrix(load_input(input)));
      if (json) {
        os << profile_json(p).dump() << "\n";
      } else {
        os << "main_count " << p.main_count << "\ndistinct_count " << p.distinct_count << "\nall_main "
           << (p.all_main ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (find->parsed()) {
      const Graph g = unsigned_input(input);
      const auto cert = find_all_main_switching(g);
      if (!cert) {
        os << "NO SWITCHING (exception)\n";
        return 1;
      }
      os << to_json_line(*cert) << "\n";
      return 0;
    }

    if (construct->parsed()) {
      ConstructionResult res;
      try {
        if (snr->parsed()) {
          res = snr_all_main_switching(n, r);
        } else {
          const MultipartiteParams p = MultipartiteParams::parse(blocks);
          res = one_per_part ? proposition_one_per_part(p) : multipartite_all_main_switching(p);
        }
      } catch (const NoAllMainSwitching&) {
        os << "NO SWITCHING (exception)\n";
        return 1;
      } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
      os << to_json_line(make_certificate(res)) << "\n";
      if (!res.verified) err << "switching is not all-main\n";
      return res.verified ? 0 : 1;
    }

    if (verify->parsed()) {
      VerificationReport rep;
      if (!catalog_file.empty()) {
        rep = verify_catalog(read_catalog(catalog_file, max_n, err), cfg.workers);
      } else {
        if (!max_n) throw Usage("verify-conjecture needs --max-n or --graph6-file");
        rep = verify_conjecture(*max_n, cfg.workers);
      }
      os << to_json(rep, timing).dump(2) << "\n";
      if (!cert_file.empty()) {
        std::ofstream cf(cert_file);
        if (!cf) throw Usage("cannot write '" + cert_file + "'");
        for (const auto& c : rep.certificates) cf << to_json_line(c) << "\n";
      }
      const auto known = known_exceptions();
      const std::set<std::string> allowed(known.begin(), known.end());
      bool unexpected = false;
      for (const auto& e : rep.exceptions) {
        if (!allowed.contains(canonical_g6(e.graph))) {
          err << "unexpected exception: " << e.graph << "\n";
          unexpected = true;
        }
      }
      return unexpected ? 1 : 0;
    }

    if (check->parsed()) {
      const std::string text = read_file(check_file);
      std::vector<Certificate> certs;
      try {
        certs = parse_certificates(text);
      } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
      bool all_ok = true;
      for (std::size_t k = 0; k < certs.size(); ++k) {
        bool ok = false;
        try {
          ok = verify_certificate(certs[k]);
        } catch (const ParseError& e) {
          err << "certificate " << k + 1 << ": " << e.what() << "\n";
        }
        os << "certificate " << k + 1 << " " << certs[k].graph << " " << (ok ? "OK" : "FAIL") << "\n";
        all_ok = all_ok && ok;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mainswitch::cli
