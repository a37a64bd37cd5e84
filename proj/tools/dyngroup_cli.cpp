// dyngroup: command-line front end over the JSON data model.
//
// Exit codes: 0 ok, 1 property failure, 2 parse error / payload mismatch,
//             3 invalid Lorentz matrix, 4 degenerate momentum.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyngroup/dyngroup.hpp"
#include "dyngroup/io.hpp"
#include "dyngroup/verify.hpp"

namespace {

using dyngroup::io::json;

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kParseError = 2,
  kNotLorentz = 3,
  kDegenerate = 4,
};

struct Options {
  std::string group = "poincare";
  double tol = dyngroup::kDefaultTol;
  std::uint64_t seed = 0;
  bool check = false;
  bool json_out = false;
  bool text_out = false;
  std::string in;
  std::optional<double> boost_p;
  std::size_t cases = 0;
};

struct UsageError : dyngroup::ParseError {
  using dyngroup::ParseError::ParseError;
};

json read_input(const Options& opt) {
  std::string text;
  if (opt.in.empty() || opt.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(opt.in);
    if (!f) throw dyngroup::ParseError("cannot open " + opt.in);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw dyngroup::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

template <class V>
std::string fmt_list(const V& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(v.size()); ++i) {
    if (i) out += ", ";
    out += fmt(v[static_cast<std::size_t>(i)]);
  }
  return out + "]";
}

std::string fmt_matrix(const dyngroup::Mat4& m) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    out += "  ";
    for (int c = 0; c < 4; ++c) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%24.17g", m(r, c) == 0.0 ? 0.0 : m(r, c));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

void emit(const Options& opt, const json& report, const std::string& text) {
  if (opt.text_out) {
    std::cout << text;
  } else {
    std::cout << dyngroup::io::dump(report);
  }
}

// ---- classify ----------------------------------------------------------------

std::string orientation(dyngroup::ConnectedComponent c) {
  return dyngroup::is_orthochron(c) ? "orthochron" : "antichron";
}

int cmd_classify(const Options& opt) {
  const json in = read_input(opt);
  json report;
  std::string text;
  const bool twin = opt.group == "twin" || (in.is_object() && (in.contains("L_o") || in.contains("mu")));
  if (twin) {
    const dyngroup::TwinElement g = dyngroup::io::twin_from_json(in, opt.tol);
    const dyngroup::LorentzMatrix slot = g.lorentz_slot();
    const dyngroup::SymmetryClass sc = dyngroup::classify_symmetry(g);
    report = {{"component", std::string(to_string(slot.component()))},
              {"mu", g.mu()},
              {"orientation", orientation(slot.component())},
              {"symmetry",
               {{"tag", std::string(to_string(sc.tag))},
                {"mu", sc.mu},
                {"nu", sc.nu},
                {"parity", std::string(to_string(sc.parity))}}}};
    text = std::string(to_string(slot.component())) + ", " + orientation(slot.component()) +
           "\nsymmetry: " + std::string(to_string(sc.tag)) + " (mu=" + std::to_string(sc.mu) +
           ", nu=" + std::to_string(sc.nu) + ", parity " + std::string(to_string(sc.parity)) + ")\n";
  } else {
    const json& lj = in.is_object() ? in.at("L") : in;
    const dyngroup::LorentzMatrix l(dyngroup::io::mat4_from_json(lj, "L"), opt.tol);
    report = {{"component", std::string(to_string(l.component()))},
              {"mu", l.mu()},
              {"orientation", orientation(l.component())}};
    text = std::string(to_string(l.component())) + ", " + orientation(l.component()) + "\n";
  }
  emit(opt, report, text);
  return kOk;
}

// ---- coadjoint -----------------------------------------------------------------

const json& payload(const json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) {
    throw dyngroup::ParseError(std::string("input needs \"") + key + "\"");
  }
  return in.at(key);
}

std::string momentum_text(const dyngroup::ChargedMomentum& j) {
  std::string t;
  if (!j.q.empty()) t += "q: " + fmt_list(j.q) + "\n";
  t += "P: " + fmt_list(j.P) + "\n";
  t += "M:\n" + fmt_matrix(j.M);
  return t;
}

int cmd_coadjoint(const Options& opt) {
  using namespace dyngroup;
  const json in = read_input(opt);
  const json& ej = payload(in, "element");
  const json& mj = payload(in, "momentum");
  json report{{"group", opt.group}};
  std::string text = "group: " + opt.group + "\n";
  double residual = 0.0;

  if (opt.group == "poincare") {
    if (ej.contains("nu") || ej.contains("mu") || mj.contains("q")) {
      throw ParseError("poincare group takes no charges or discrete signs");
    }
    const PoincareElement g = io::poincare_from_json(ej, opt.tol);
    const Momentum j = io::momentum_from_json(mj, opt.tol);
    const Momentum out = coadjoint(g, j);
    report["momentum"] = io::to_json(out);
    text += momentum_text({{}, out.M, out.P});
    if (opt.check) {
      const Momentum ref = reconstruct_coadjoint(g, j);
      residual = verify_detail::max_abs(verify_detail::flatten(out) - verify_detail::flatten(ref));
    }
  } else if (opt.group == "extended" || opt.group == "eight") {
    const ExtendedElement g = io::extended_from_json(ej, opt.tol);
    if (opt.group == "extended" && g.nu != 1) throw ParseError("extended group has nu = +1 only");
    if (g.phi.empty()) throw ParseError("charged groups need at least one phi");
    const ChargedMomentum j = io::charged_from_json(mj, opt.tol);
    detail::check_same_size(g.phi.size(), j.q.size(), "phi vs q");
    const ChargedMomentum out = coadjoint_ext(g, j);
    report["momentum"] = io::to_json(out);
    text += momentum_text(out);
    if (opt.check) {
      residual = verify_detail::max_abs(verify_detail::flatten(out) -
                                        verify_detail::flatten(reconstruct_coadjoint(g, j)));
    }
  } else if (opt.group == "twin") {
    const TwinElement g = io::twin_from_json(ej, opt.tol);
    const ParticleState st = io::particle_from_json(mj, opt.tol);
    detail::check_same_size(g.charge_count(), st.momentum.q.size(), "phi vs q");
    const ParticleState out = act_on_state(g, st);
    report["momentum"] = io::to_json(out);
    text += "fold: " + std::to_string(out.fold) + "\n" + momentum_text(out.momentum);
    if (opt.check) {
      residual = verify_detail::max_abs(
          verify_detail::flatten(out.momentum) -
          verify_detail::flatten(reconstruct_coadjoint(g, st.momentum)));
    }
  } else {
    throw UsageError("unknown group " + opt.group);
  }

  int code = kOk;
  if (opt.check) {
    const bool ok = residual <= opt.tol;
    report["check"] = {{"oracle_residual", residual}, {"tolerance", opt.tol}, {"pass", ok}};
    text += "oracle residual: " + fmt(residual) + (ok ? " (pass)\n" : " (FAIL)\n");
    if (!ok) code = kPropertyFailure;
  }
  emit(opt, report, text);
  return code;
}

// ---- reduce ------------------------------------------------------------------

int cmd_reduce(const Options& opt) {
  using namespace dyngroup;
  const json in = read_input(opt);
  const json& mj = in.is_object() && in.contains("momentum") ? in.at("momentum") : in;
  const Momentum j = io::momentum_from_json(mj, opt.tol);
  const CanonicalMomentum c = canonical_reduce(j, opt.tol, opt.boost_p);
  json report = io::to_json(c);
  report["momentum"] = io::to_json(c.momentum());
  std::string text = "s: " + fmt(c.s) + "\np: " + fmt(c.p) + "\nE: " + fmt(c.E) +
                     "\ng_reducing.L:\n" + fmt_matrix(c.g_reducing.L.matrix()) +
                     "g_reducing.C: " + fmt_list(c.g_reducing.C) + "\n";
  emit(opt, report, text);
  return kOk;
}

// ---- symmetry-table ------------------------------------------------------------

int cmd_symmetry_table(const Options& opt) {
  using namespace dyngroup;
  json rows = json::array();
  std::ostringstream text;
  char line[160];
  std::snprintf(line, sizeof line, "%-3s %-3s %-15s %-31s %-9s %-9s %-9s %-9s %-9s\n", "mu", "nu",
                "parity", "symmetry", "energy", "momentum", "charge", "spin", "fold");
  text << line;
  for (const SymmetryEffect& r : symmetry_effect_table(opt.tol)) {
    const std::string tag(to_string(r.symmetry.tag));
    rows.push_back({{"mu", r.symmetry.mu},
                    {"nu", r.symmetry.nu},
                    {"parity", std::string(to_string(r.symmetry.parity))},
                    {"symmetry", tag},
                    {"energy", std::string(to_string(r.energy))},
                    {"momentum", std::string(to_string(r.linear_momentum))},
                    {"charge", std::string(to_string(r.charge))},
                    {"spin", std::string(to_string(r.spin))},
                    {"fold", std::string(to_string(r.fold))}});
    std::snprintf(line, sizeof line, "%+-3d %+-3d %-15s %-31s %-9s %-9s %-9s %-9s %-9s\n",
                  r.symmetry.mu, r.symmetry.nu, std::string(to_string(r.symmetry.parity)).c_str(),
                  tag.c_str(), std::string(to_string(r.energy)).c_str(),
                  std::string(to_string(r.linear_momentum)).c_str(),
                  std::string(to_string(r.charge)).c_str(), std::string(to_string(r.spin)).c_str(),
                  std::string(to_string(r.fold)).c_str());
    text << line;
  }
  emit(opt, json{{"rows", rows}}, text.str());
  return kOk;
}

// ---- verify --------------------------------------------------------------------

int cmd_verify(const Options& opt) {
  const auto results = dyngroup::run_verification({opt.seed, opt.tol, opt.cases});
  const bool ok = dyngroup::all_passed(results);
  json props = json::array();
  std::ostringstream text;
  char line[200];
  for (const auto& r : results) {
    props.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"max_residual", r.max_residual},
                     {"threshold", r.threshold}});
    std::snprintf(line, sizeof line, "%-4s %-30s cases=%-5zu failures=%-4zu max_residual=%-24.17g threshold=%.17g\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.failures, r.max_residual,
                  r.threshold);
    text << line;
  }
  text << (ok ? "all properties passed\n" : "PROPERTY FAILURE\n");
  emit(opt, json{{"seed", opt.seed}, {"tol", opt.tol}, {"pass", ok}, {"properties", props}},
       text.str());
  return ok ? kOk : kPropertyFailure;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--group", opt.group, "poincare | extended | eight | twin")
      ->check(CLI::IsMember({"poincare", "extended", "eight", "twin"}));
  sub->add_option("--tol", opt.tol, "validation and comparison tolerance");
  sub->add_option("--seed", opt.seed, "generator seed");
  sub->add_flag("--check", opt.check, "cross-check against the duality oracle");
  auto* j = sub->add_flag("--json", opt.json_out, "JSON output (default)");
  auto* t = sub->add_flag("--text", opt.text_out, "aligned text output");
  j->excludes(t);
  sub->add_option("--in", opt.in, "input file (default stdin)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical groups: Lorentz components, coadjoint actions, reduction, verification"};
  app.require_subcommand(1);
  Options opt;

  auto* classify = app.add_subcommand("classify", "classify a Lorentz matrix or group element");
  auto* coad = app.add_subcommand("coadjoint", "apply a coadjoint action to a momentum");
  auto* reduce = app.add_subcommand("reduce", "reduce a massive momentum to normal form");
  auto* table = app.add_subcommand("symmetry-table", "computed C/P/T/fold effect table");
  auto* verify = app.add_subcommand("verify", "run every property suite");
  for (auto* sub : {classify, coad, reduce, table, verify}) add_common(sub, opt);
  reduce->add_option("--boost-p", opt.boost_p, "boost the normal form to this momentum along z");
  verify->add_option("--cases", opt.cases, "random cases per suite (0 = defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*classify) return cmd_classify(opt);
    if (*coad) return cmd_coadjoint(opt);
    if (*reduce) return cmd_reduce(opt);
    if (*table) return cmd_symmetry_table(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const dyngroup::NotLorentzError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotLorentz;
  } catch (const dyngroup::DegenerateMomentum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const dyngroup::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const dyngroup::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
