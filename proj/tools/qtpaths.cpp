#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qtpaths/json_io.hpp"
#include "qtpaths/laurent.hpp"
#include "qtpaths/macdonald.hpp"
#include "qtpaths/paths.hpp"
#include "qtpaths/tau.hpp"
#include "qtpaths/verify.hpp"

using namespace qtp;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

IntSeq parse_seq(const std::string& s) {
  IntSeq out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad integer in sequence: '" + item + "'");
    }
    if (pos != item.size()) throw UsageError("bad integer in sequence: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "2,0,0;3" -> ((2,0,0),(3))
std::vector<IntSeq> parse_seqs(const std::string& s) {
  std::vector<IntSeq> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_seq(item));
  if (out.empty()) throw UsageError("empty sequence list");
  return out;
}

SymFunc read_input(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") text.assign(std::istreambuf_iterator<char>(std::cin), {});
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed SymFunc JSON: ") + e.what());
  }
  try {
    return symfunc_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed SymFunc JSON: ") + e.what());
  }
}

void check_window(const SymFunc& f, int window) {
  if (f.max_degree() > window)
    throw UsageError("input degree " + std::to_string(f.max_degree()) + " exceeds --window " + std::to_string(window));
}

std::string pretty_symfunc(const SymFunc& f) { return f.is_zero() ? "0" : f.to_string(); }

std::string pretty_report(const SuiteReport& r, bool timing) {
  std::ostringstream os;
  os << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << r.failures()
     << " failed)\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.pass ? "pass " : "FAIL ") << c.id << " " << c.params.dump();
    if (timing) os << "  " << c.seconds << "s";
    os << "\n";
    if (!c.pass) os << "    lhs: " << c.lhs.dump() << "\n    rhs: " << c.rhs.dump() << "\n";
  }
  return os.str();
}

int default_window() {
  const char* env = std::getenv("QTPATHS_WINDOW");
  if (!env || !*env) return 4;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("QTPATHS_WINDOW is not an integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with (q,t) path operators, modified Macdonald polynomials and the (q,t)-tau function"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  int window = 4;
  int zmax = 3;
  try {
    window = default_window();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_flag("--pretty", pretty, "Human-readable rendering instead of JSON");
  app.add_option("--window", window, "Largest source degree for operators (env QTPATHS_WINDOW, default 4)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--zmax", zmax, "Largest z-degree for tau computations")->check(CLI::NonNegativeNumber);

  std::string input = "1", basis = "p", engine = "increments";

  auto* r_apply = app.add_subcommand("r-apply", "Apply R_beta to a symmetric function");
  std::string beta;
  r_apply->add_option("--beta", beta, "Comma-separated integers, e.g. 1,-2,1,3")->required();
  r_apply->add_option("--input", input, "SymFunc JSON, a scalar, or - for stdin");
  r_apply->add_option("--engine", engine, "paths, increments or voa");
  r_apply->add_option("--basis", basis, "Output basis: p, m, e, h, s or Htilde");

  auto* q_apply = app.add_subcommand("q-apply", "Apply Q_alpha = R_{psi^-1(alpha)}");
  std::string alpha;
  q_apply->add_option("--alpha", alpha, "Comma-separated non-negative integers")->required();
  q_apply->add_option("--input", input, "SymFunc JSON, a scalar, or - for stdin");
  q_apply->add_option("--engine", engine, "paths, increments or voa");
  q_apply->add_option("--basis", basis, "Output basis");

  auto* mac = app.add_subcommand("mac", "Modified Macdonald polynomials of degree n");
  int mac_n = 0;
  mac->add_option("--n", mac_n, "Degree")->required()->check(CLI::NonNegativeNumber);
  mac->add_option("--basis", basis, "Basis for H_lambda (default s)");

  auto* tau = app.add_subcommand("tau", "The (q,t)-tau function up to z^zmax");
  std::string g1s = "1", g2s = "1";
  tau->add_option("--g1", g1s, "Weight G1 as coefficients a_0,a_1,... with a_0 = 1");
  tau->add_option("--g2", g2s, "Weight G2");

  auto* explicit_cmd = app.add_subcommand("explicit-rhs", "Closed formula for R_beta1 ... R_betam 1");
  std::string betas;
  int cap = -1;
  explicit_cmd->add_option("--betas", betas, "Factors separated by ';', e.g. 2,0,0;3")->required();
  explicit_cmd->add_option("--cap", cap, "Truncate each ratio series at this order");
  explicit_cmd->add_option("--basis", basis, "Output basis");

  auto* expansion = app.add_subcommand("expansion", "One coefficient of R_betas 1 through the coefficient formula");
  std::string lambda_s, side = "schur";
  expansion->add_option("--betas", betas, "Factors separated by ';'")->required();
  expansion->add_option("--partition", lambda_s, "Comma-separated parts")->required();
  expansion->add_option("--side", side, "schur, monomial or elementary");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite;
  int ell = 1, vn = 1, vk = 1, vl = 0;
  bool no_timing = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  verify->add_option("suite", suite, "all, a suite name, pde or ext-delta")->required();
  verify->add_option("--ell", ell, "l for the pde check");
  verify->add_option("--g1", g1s, "G1 for the pde check");
  verify->add_option("--g2", g2s, "G2 for the pde check");
  verify->add_option("--n", vn, "n for ext-delta");
  verify->add_option("--k", vk, "k for ext-delta");
  verify->add_option("--l", vl, "l for ext-delta");
  verify->add_option("--seed", seed, "Seed for random weight pairs");
  verify->add_flag("--no-timing", no_timing, "Leave elapsed times out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j, const std::string& text) {
    if (pretty) std::cout << text << "\n";
    else std::cout << j.dump() << "\n";
  };

  try {
    if (r_apply->parsed() || q_apply->parsed()) {
      SymFunc f = read_input(input);
      check_window(f, window);
      Engine en = engine_from_name(engine);
      SymFunc r = r_apply->parsed() ? R_apply(parse_seq(beta), f, en) : Q_apply(parse_seq(alpha), f, en);
      r = convert(r, basis_from_name(basis));
      emit(to_json(r), pretty_symfunc(r));
      return 0;
    }
    if (mac->parsed()) {
      if (mac_n > window) throw UsageError("--n exceeds --window");
      if (!mac->count("--basis")) basis = "s";
      const MacData& md = mac_basis(mac_n);
      Json out = Json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < md.lambdas.size(); ++i) {
        SymFunc h = convert(md.htilde[i], basis_from_name(basis));
        Json e;
        e["partition"] = md.lambdas[i].parts();
        e["htilde"] = to_json(h);
        e["eigenvalue"] = to_json(md.eigenvalue[i]);
        e["norm"] = to_json(md.norm[i]);
        out.push_back(std::move(e));
        text << "H" << md.lambdas[i].to_string() << " = " << pretty_symfunc(h) << "\n  D_0 eigenvalue "
             << md.eigenvalue[i].to_string() << ", star norm " << md.norm[i].to_string() << "\n";
      }
      emit(out, text.str());
      return 0;
    }
    if (tau->parsed()) {
      TensorSeries t = tau_build(WeightSpec::parse(g1s), WeightSpec::parse(g2s), zmax);
      std::ostringstream text;
      for (int m = 0; m <= t.zmax; ++m) {
        const auto& ps = partitions(m);
        for (std::size_t a = 0; a < ps.size(); ++a)
          for (std::size_t b = 0; b < ps.size(); ++b)
            if (!t.comp[m](a, b).is_zero())
              text << "z^" << m << " p" << ps[a].to_string() << "[X] p" << ps[b].to_string()
                   << "[Y]: " << t.comp[m](a, b).to_string() << "\n";
      }
      emit(to_json(t), text.str());
      return 0;
    }
    if (explicit_cmd->parsed()) {
      auto bs = parse_seqs(betas);
      SymFunc r = cap >= 0 ? explicit_rhs(bs, cap) : explicit_rhs(bs);
      r = convert(r, basis_from_name(basis));
      emit(to_json(r), pretty_symfunc(r));
      return 0;
    }
    if (expansion->parsed()) {
      Partition la = Partition::from_unsorted(parse_seq(lambda_s));
      QtScalar c = expansion_coeff(parse_seqs(betas), la, side_from_name(side));
      emit(to_json(c), c.to_string());
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.window = window;
      opts.zmax = zmax;
      opts.seed = seed;
      bool timing = !no_timing;
      if (suite == "pde" && (ell < 1 || ell > zmax)) throw UsageError("pde needs 1 <= --ell <= --zmax");
      if (suite == "ext-delta" && (vk < 1 || vk > vn || vl < 0))
        throw UsageError("ext-delta needs 1 <= --k <= --n and --l >= 0");
      if (suite == "pde" || suite == "ext-delta") {
        CheckResult c = suite == "pde" ? check_pde(WeightSpec::parse(g1s), WeightSpec::parse(g2s), ell, zmax)
                                       : check_ext_delta(vn, vk, vl);
        SuiteReport r;
        r.suite = suite;
        r.seconds = c.seconds;
        r.checks.push_back(std::move(c));
        emit(to_json(r, timing), pretty_report(r, timing));
        return r.pass() ? 0 : 1;
      }
      std::vector<std::string> names;
      if (suite == "all") names = suite_names();
      else if (suite == "paths-suite") names = {"engines", "explicit"};
      else names = {suite};
      for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
          throw UsageError("unknown suite: " + n);
      Json out;
      out["window"] = window;
      out["zmax"] = zmax;
      out["seed"] = seed;
      Json suites = Json::array();
      std::string text;
      bool pass = true;
      for (const auto& n : names) {
        SuiteReport r = run_suite(n, opts);
        pass = pass && r.pass();
        suites.push_back(to_json(r, timing));
        text += pretty_report(r, timing);
      }
      out["status"] = pass ? "pass" : "fail";
      out["suites"] = std::move(suites);
      emit(out, text);
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
