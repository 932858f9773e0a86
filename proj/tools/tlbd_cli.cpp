// Command line front end: projector construction, theta tables, fusion
// decompositions, basis enumeration, Markov traces and the verification
// suites.  Exit codes: 0 success, 1 domain/usage error, 2 verification
// failure.

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tlbd/errors.hpp"
#include "tlbd/json_io.hpp"
#include "tlbd/jw.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/rep.hpp"
#include "tlbd/theta.hpp"
#include "tlbd/verify.hpp"

namespace {

using namespace tlbd;

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw contract_violation("bad integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw contract_violation("empty integer list");
  return out;
}

ProjectorKind parse_kind(const std::string& s) {
  if (s == "a") return ProjectorKind::A;
  if (s == "b+") return ProjectorKind::Bplus;
  if (s == "b-") return ProjectorKind::Bminus;
  if (s == "d") return ProjectorKind::D;
  throw contract_violation("unknown projector kind '" + s + "' (use a|b+|b-|d)");
}

std::string fusion_text(const FusionVector& f) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto it = f.mult.rbegin(); it != f.mult.rend(); ++it) {
    if (!first) out << ",";
    out << it->first << ":" << it->second;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string diagram_line(const Diagram& d) {
  std::ostringstream out;
  out << "arcs=[";
  for (size_t a = 0; a < d.arcs.size(); ++a)
    out << (a ? "," : "") << "[" << d.arcs[a].first << "," << d.arcs[a].second << "]";
  out << "] dots=[";
  for (size_t a = 0; a < d.dots.size(); ++a) out << (a ? "," : "") << d.dots[a];
  out << "]";
  return out.str();
}

void print_projector_text(const TLMorphism& p, const std::string& kind, int n, int eps) {
  std::cout << "kind=" << kind << " n=" << n << " eps=" << eps << " terms=" << p.terms.size()
            << "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(p.terms.size());
  for (const auto& [d, c] : p.terms) lines.emplace_back(c.str(), diagram_line(d));
  std::sort(lines.begin(), lines.end());
  for (const auto& [coeff, diag] : lines) std::cout << coeff << "  " << diag << "\n";
}

int run_verify(const std::string& suite, int max_n) {
  struct Entry {
    std::string name;
    Report report;
  };
  std::vector<Entry> entries;
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  if (want("relations"))
    entries.push_back({"relations", verify::relations_suite(max_n > 0 ? max_n : 4)});
  if (want("schur-weyl")) {
    const int hom = max_n > 0 ? max_n : 3;
    Report r = verify::schur_weyl_suite(6, hom + 1, hom, 6);
    r.merge(verify::fusion_checks());
    entries.push_back({"schur-weyl", std::move(r)});
  }
  if (want("jw")) {
    const int n = max_n > 0 ? max_n : 5;
    entries.push_back({"jw", verify::jw_suite(n, std::min(n, 4))});
  }
  if (want("theta")) {
    const int n = max_n > 0 ? max_n : 4;
    entries.push_back({"theta", verify::theta_suite(n, n + 2)});
  }
  if (entries.empty()) {
    std::cerr << "unknown suite '" << suite << "' (use relations|jw|schur-weyl|theta|all)\n";
    return 1;
  }
  long failures = 0;
  for (const auto& [name, report] : entries) {
    for (const auto& c : report.checks)
      if (!c.pass)
        std::cout << "FAIL " << name << ": " << c.name << (c.detail.empty() ? "" : " -- ")
                  << c.detail << "\n";
    failures += report.failures();
    std::cout << "suite " << name << ": " << report.checks.size() - report.failures() << "/"
              << report.checks.size() << " checks passed "
              << (report.failures() == 0 ? "[PASS]" : "[FAIL]") << "\n";
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"type B/D Temperley-Lieb diagram calculus over Q(q)"};
  app.require_subcommand(1);
  std::string format = "text";

  // jw
  auto* jw_cmd = app.add_subcommand("jw", "print a Jones-Wenzl projector");
  std::string jw_kind = "d";
  int jw_n = 1, jw_eps = 1;
  jw_cmd->add_option("--kind", jw_kind, "a|b+|b-|d")->default_str("d");
  jw_cmd->add_option("--n", jw_n, "strand count")->required();
  jw_cmd->add_option("--eps", jw_eps, "sign +1/-1")->check(CLI::IsMember({1, -1}));
  jw_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // theta
  auto* th_cmd = app.add_subcommand("theta", "evaluate a type D theta network");
  long th_a = 0, th_b = 0, th_c = 0;
  int th_eps = 1;
  std::string th_method = "rec";
  th_cmd->add_option("a", th_a, "first label")->required();
  th_cmd->add_option("b", th_b, "second label")->required();
  th_cmd->add_option("c", th_c, "third label")->required();
  th_cmd->add_option("--eps", th_eps, "sign +1/-1")->check(CLI::IsMember({1, -1}));
  th_cmd->add_option("--method", th_method, "rec|matrix|both")
      ->check(CLI::IsMember({"rec", "matrix", "both"}));
  th_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // decompose
  auto* de_cmd = app.add_subcommand("decompose", "fuse coideal labels with irreducibles");
  std::string de_labels, de_tensor;
  int de_eps = 1;
  de_cmd->add_option("--labels", de_labels, "starting labels, e.g. \"2,-2\"")->required();
  de_cmd->add_option("--tensor", de_tensor, "highest weights to tensor, e.g. \"2,2\"")->required();
  de_cmd->add_option("--eps", de_eps, "sign +1/-1")->check(CLI::IsMember({1, -1}));
  de_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // basis
  auto* ba_cmd = app.add_subcommand("basis", "enumerate the diagram basis of a Hom-space");
  std::vector<int> ba_hom;
  ba_cmd->add_option("--hom", ba_hom, "bottom and top point counts")->expected(2)->required();
  ba_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // trace
  auto* tr_cmd = app.add_subcommand("trace", "Markov closure of the type D projector");
  int tr_n = 1, tr_eps = 1;
  tr_cmd->add_option("--n", tr_n, "strand count")->required();
  tr_cmd->add_option("--eps", tr_eps, "sign +1/-1")->check(CLI::IsMember({1, -1}));
  tr_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ve_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string ve_suite = "all";
  int ve_max_n = 0;
  ve_cmd->add_option("--suite", ve_suite, "relations|jw|schur-weyl|theta|all");
  ve_cmd->add_option("--max-n", ve_max_n, "cap the strand count (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*jw_cmd) {
      const ProjectorKind kind = parse_kind(jw_kind);
      const TLMorphism& p = jw(kind, jw_n, jw_eps);
      if (format == "json")
        std::cout << to_json(p).dump() << "\n";
      else
        print_projector_text(p, jw_kind, jw_n, jw_eps);
      return 0;
    }
    if (*th_cmd) {
      RatFunc value;
      if (th_method == "rec") {
        value = theta_recursive(th_a, th_b, th_c, th_eps);
      } else if (th_method == "matrix") {
        value = theta_matrix(th_a, th_b, th_c, th_eps);
      } else {
        value = theta_matrix(th_a, th_b, th_c, th_eps);
        RatFunc rec = theta_recursive(th_a, th_b, th_c, th_eps);
        if (!(rec == value)) {
          std::cerr << "method mismatch: matrix " << value.str() << " vs recursive " << rec.str()
                    << "\n";
          return 2;
        }
      }
      std::string at1;
      try {
        at1 = value.eval_at(Rational(1)).get_str();
      } catch (const pole_error&) {
        at1 = "pole";
      }
      if (format == "json") {
        Json row;
        row["a"] = th_a;
        row["b"] = th_b;
        row["c"] = th_c;
        row["eps"] = th_eps;
        row["theta"] = value.str();
        row["theta_at_1"] = at1;
        std::cout << Json::array({row}).dump() << "\n";
      } else {
        std::cout << th_a << " " << th_b << " " << th_c << " " << (th_eps > 0 ? "+1" : "-1")
                  << "  " << value.str() << "  [q=1: " << at1 << "]\n";
      }
      return 0;
    }
    if (*de_cmd) {
      FusionVector start;
      for (long l : parse_long_list(de_labels)) start.add(l, 1);
      std::vector<long> weights = parse_long_list(de_tensor);
      FusionVector result = fuse(start, weights);
      if (format == "json")
        std::cout << to_json(result).dump() << "\n";
      else
        std::cout << fusion_text(result) << "\n";
      return 0;
    }
    if (*ba_cmd) {
      auto basis = enumerate_basis(ba_hom[0], ba_hom[1]);
      if (format == "json") {
        Json j;
        j["hom"] = Json::array({ba_hom[0], ba_hom[1]});
        j["count"] = basis.size();
        Json diagrams = Json::array();
        for (const auto& d : basis) diagrams.push_back(to_json(d));
        j["diagrams"] = std::move(diagrams);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "count=" << basis.size() << "\n";
        for (const auto& d : basis) std::cout << diagram_line(d) << "\n";
      }
      return 0;
    }
    if (*tr_cmd) {
      RatFunc t = markov_closure(jw(ProjectorKind::D, tr_n, tr_eps));
      if (format == "json") {
        Json j;
        j["n"] = tr_n;
        j["eps"] = tr_eps;
        j["trace"] = t.str();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << t.str() << "\n";
      }
      return 0;
    }
    if (*ve_cmd) return run_verify(ve_suite, ve_max_n);
  } catch (const contract_violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
