// hermite: periodic ternary continued fractions of cubic irrationals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermite/errors.hpp"
#include "hermite/expansion.hpp"
#include "hermite/jacobi.hpp"
#include "hermite/json_io.hpp"
#include "hermite/reference_checks.hpp"

using namespace hermite;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string poly;
  std::vector<std::string> root;
  std::optional<long long> z;
  std::string tcf;
  bool json = false;
  int digits = 10;
  std::string out;
};

RootSelector parse_selector(const std::vector<std::string>& root) {
  if (root.empty() || root[0] == "largest") return RootSelector::largest();
  if (root[0] == "smallest") return RootSelector::smallest();
  if (root[0] == "value-index") {
    if (root.size() != 2) throw UsageError("--root value-index needs an index");
    try {
      std::size_t pos = 0;
      long i = std::stol(root[1], &pos);
      if (pos != root[1].size() || i < 0) throw std::invalid_argument("");
      return RootSelector::by_value(static_cast<std::size_t>(i));
    } catch (const std::logic_error&) {
      throw UsageError("bad root index '" + root[1] + "'");
    }
  }
  throw UsageError("--root must be largest, smallest or value-index <i>");
}

std::optional<Integer> z_of(const Common& c) {
  if (!c.z) return std::nullopt;
  return Integer(std::to_string(*c.z));
}

std::string read_source(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read TCF file '" + arg + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

TernaryCF load_tcf(const std::string& arg) {
  Json j;
  try {
    j = Json::parse(read_source(arg));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("TCF JSON: ") + e.what());
  }
  return tcf_from_json(j);
}

// The TCF named by --tcf, or the expansion of --poly.
TernaryCF source_tcf(const Common& c) {
  if (!c.tcf.empty()) {
    if (!c.poly.empty()) throw UsageError("--tcf and --poly are mutually exclusive");
    return load_tcf(c.tcf);
  }
  if (c.poly.empty()) throw UsageError("one of --poly or --tcf is required");
  return expand_root(parse_cubic(c.poly), parse_selector(c.root), z_of(c)).tcf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_json(const Common& c, const Json& j) {
  Output o(c.out);
  o.os() << j.dump(2) << '\n';
}

std::string tcf_text(const TernaryCF& t) {
  std::ostringstream os;
  auto side = [&](bool first) {
    os << "{";
    std::size_t total = t.pre_period.size() + t.period.size();
    for (std::size_t i = 0; i < total; ++i) {
      if (i) os << ", ";
      if (i == t.pre_period.size()) os << "period(";
      os << to_string(first ? t[i].a : t[i].b);
    }
    if (!t.period.empty()) os << ")";
    os << "}";
  };
  os << "[";
  side(true);
  os << ", ";
  side(false);
  os << "]";
  return os.str();
}

std::string mat_text(const Mat3<Rat>& m) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "  [";
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]\n";
  }
  return os.str();
}

std::string mat_text(const Mat3<Integer>& m) {
  Mat3<Rat> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = Rat(m(i, j));
  return mat_text(r);
}

Json mat_json(const Mat3<Rat>& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json mat_json(const Mat3<Integer>& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Decimal value of the isolated root, refined until both endpoints round to
// the same digits.
std::string root_decimal(IsolatingInterval iv, int digits) {
  for (int i = 0; i < 64; ++i) {
    std::string lo = to_decimal(iv.lo, digits), hi = to_decimal(iv.hi, digits);
    if (lo == hi) return lo;
    iv = refine(iv, iv.width() / 1024);
  }
  return to_decimal(iv.midpoint(), digits);
}

// --- subcommands -----------------------------------------------------------

int run_expand(const Common& c, const ExpansionOptions& opts) {
  CubicPoly f = parse_cubic(c.poly);
  ExpansionResult r = expand_root(f, parse_selector(c.root), z_of(c), opts);
  auto notes = erratum_notes(r.expanded_poly, r.z);
  if (c.json) {
    Json j = expansion_to_json(r);
    if (!notes.empty()) j["notes"] = notes;
    print_json(c, j);
    return 0;
  }
  Output o(c.out);
  auto& os = o.os();
  os << "poly: " << to_string(r.poly) << '\n'
     << "root: " << root_decimal(r.target, c.digits) << '\n'
     << "pipeline: " << to_string(r.pipeline) << '\n'
     << "z: " << to_string(r.z) << '\n';
  if (r.shift) os << "k: " << to_string(*r.shift) << '\n';
  if (r.scale) os << "rho: " << to_string(*r.scale) << '\n';
  os << "expanded poly: " << to_string(r.expanded_poly) << '\n'
     << "couple: (" << r.couple_text.first << ", " << r.couple_text.second << ")\n"
     << "tcf: " << tcf_text(r.tcf) << '\n'
     << "certificate: charpoly(N) = " << to_string(r.certificate.charpoly) << ", z + a^2 strictly dominant\n";
  for (const auto& n : notes) os << "note: " << n << '\n';
  return 0;
}

int run_convergents(const Common& c, std::size_t n) {
  TernaryCF t = source_tcf(c);
  auto cs = convergents(t, n);
  if (c.json) {
    print_json(c, Json{{"tcf", tcf_to_json(t)}, {"convergents", convergents_to_json(cs, c.digits)}});
    return 0;
  }
  Output o(c.out);
  for (const auto& x : cs) {
    o.os() << "n = " << x.n << ": ";
    if (x.C == 0) {
      o.os() << "skipped (C = 0)\n";
      continue;
    }
    Rat a = x.A / x.C, b = x.B / x.C;
    o.os() << to_string(a) << "  " << to_string(b) << "  (" << to_decimal(a, c.digits) << ", "
           << to_decimal(b, c.digits) << ")\n";
  }
  if (cs.size() < n + 1) o.os() << "expansion is finite: stopped at n = " << cs.size() - 1 << '\n';
  return 0;
}

int run_matrices(const Common& c, std::size_t n, bool integer) {
  TernaryCF t = source_tcf(c);
  if (!t.has_index(n)) throw UsageError("--n exceeds the length of a finite expansion");
  Output o(c.out);
  auto& os = o.os();
  if (integer) {
    IntegerMatrixForm form = integer_matrix_form(t, n);
    auto x = form.sequences.first_ratio(n), y = form.sequences.second_ratio(n);
    if (c.json) {
      Json steps = Json::array();
      for (const auto& s : form.steps) steps.push_back(mat_json(s));
      print_json(c, Json{{"steps", steps},
                         {"product", mat_json(form.product)},
                         {"first_ratio", x ? Json(to_string(*x)) : Json(nullptr)},
                         {"second_ratio", y ? Json(to_string(*y)) : Json(nullptr)}});
      return 0;
    }
    for (std::size_t i = 0; i < form.steps.size(); ++i) os << "step " << i << ":\n" << mat_text(form.steps[i]);
    os << "product:\n" << mat_text(form.product);
    os << "ratios: " << (x ? to_string(*x) : "undefined") << "  " << (y ? to_string(*y) : "undefined") << '\n';
    return 0;
  }
  Mat3<Rat> prod = matrix_form(t, n);
  if (c.json) {
    Json steps = Json::array();
    for (std::size_t i = 0; i <= n; ++i) steps.push_back(mat_json(step_matrix(t[i])));
    print_json(c, Json{{"steps", steps}, {"product", mat_json(prod)}});
    return 0;
  }
  for (std::size_t i = 0; i <= n; ++i) os << "step " << i << ":\n" << mat_text(step_matrix(t[i]));
  os << "product:\n" << mat_text(prod);
  if (prod(2, 0) != 0) {
    os << "ratios: " << to_string(prod(0, 0) / prod(2, 0)) << "  " << to_string(prod(1, 0) / prod(2, 0)) << '\n';
  }
  return 0;
}

int run_approx(const Common& c, const std::string& tol_text, std::size_t n_cap) {
  Rat tol = parse_rat(tol_text);
  if (tol <= 0) throw UsageError("--tol must be positive");
  TernaryCF t = source_tcf(c);
  Evaluation e = evaluate(t, tol, n_cap);
  if (c.json) {
    print_json(c, Json{{"first", to_decimal(e.first, c.digits)},
                       {"second", to_decimal(e.second, c.digits)},
                       {"first_exact", to_string(e.first)},
                       {"second_exact", to_string(e.second)},
                       {"index", e.index},
                       {"delta", to_decimal(e.delta, 3)},
                       {"converged", e.converged}});
  } else {
    Output o(c.out);
    o.os() << to_decimal(e.first, c.digits) << ' ' << to_decimal(e.second, c.digits) << '\n'
           << "n = " << e.index << ", last change " << to_decimal(e.delta, 3)
           << (e.converged ? "" : " (tolerance not reached)") << '\n';
  }
  return e.converged ? 0 : kDomainError;
}

int run_cuberoot(const Common& c, long long d) {
  Integer zz = c.z ? Integer(std::to_string(*c.z)) : Integer(1);
  TernaryCF t = cube_root_expansion(Integer(std::to_string(d)), zz);
  if (c.json) {
    print_json(c, Json{{"d", d}, {"z", to_string(zz)}, {"tcf", tcf_to_json(t)}});
    return 0;
  }
  Output o(c.out);
  o.os() << "(d^(2/3), d^(1/3)) for d = " << d << ", z = " << to_string(zz) << '\n' << tcf_text(t) << '\n';
  return 0;
}

void print_transcript(std::ostream& os, const std::string& label, const RunTranscript& t,
                      const std::vector<std::optional<double>>* errors, int digits) {
  os << label << ": " << t.quotients.size() << " steps";
  if (t.cycle) os << ", cycle (pre-period " << t.cycle->pre_period << ", period " << t.cycle->period << ")";
  else if (t.finite) os << ", finite";
  else os << ", no cycle found";
  os << '\n';
  for (std::size_t i = 0; i < t.quotients.size(); ++i) {
    os << "  " << i << ": " << to_string(t.quotients[i].a) << ", " << to_string(t.quotients[i].b);
    if (errors && i < errors->size()) {
      if ((*errors)[i]) {
        std::ostringstream e;
        e.precision(digits > 1 ? digits - 1 : 0);
        e << std::scientific << *(*errors)[i];
        os << "  error " << e.str();
      } else {
        os << "  error -";
      }
    }
    os << '\n';
  }
}

int run_jacobi(const Common& c, bool classic, bool compare, std::size_t max_steps) {
  CubicPoly f = parse_cubic(c.poly);
  require_irreducible(f);
  if (compare || !classic) {
    Integer z;
    if (c.z) {
      z = *z_of(c);
    } else {
      z = choose_z(f, resolve_root(f, parse_selector(c.root)), 64);
    }
    if (compare) {
      RunComparison r = compare_runs(f, z, max_steps);
      if (c.json) return print_json(c, comparison_to_json(r, c.digits)), 0;
      Output o(c.out);
      print_transcript(o.os(), "modified (z = " + to_string(z) + ")", r.modified, &r.modified_errors, c.digits);
      print_transcript(o.os(), "classic", r.classic, &r.classic_errors, c.digits);
      return 0;
    }
    // Same precondition as the expansion: some real root must certify z.
    bool certified = false;
    for (const auto& iv : isolate_real_roots(f)) certified = certified || dominance_certificate(f, iv, z).verdict;
    if (!certified) throw CertificateError("z = " + to_string(z) + " is not certified for any real root");
    RunTranscript t = run_modified(f, z, max_steps);
    if (c.json) return print_json(c, transcript_to_json(t)), 0;
    Output o(c.out);
    print_transcript(o.os(), "modified (z = " + to_string(z) + ")", t, nullptr, c.digits);
    return 0;
  }
  IsolatingInterval iv = resolve_root(f, parse_selector(c.root));
  FieldElem y0 = FieldElem::generator(f);
  FieldElem x0 = invert(y0) * f.r;
  RunTranscript t = run_classic(x0, y0, iv, max_steps);
  if (c.json) return print_json(c, transcript_to_json(t)), 0;
  Output o(c.out);
  print_transcript(o.os(), "classic", t, nullptr, c.digits);
  return 0;
}

int run_verify(const Common& c) {
  auto results = verify_reference_examples();
  bool ok = true;
  if (c.json) {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      ok = ok && r.passed;
    }
    print_json(c, Json{{"passed", ok}, {"checks", arr}});
  } else {
    Output o(c.out);
    for (const auto& r : results) {
      o.os() << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
      ok = ok && r.passed;
    }
  }
  return ok ? 0 : kDomainError;
}

void add_common(CLI::App* sub, Common& c, bool poly, bool tcf) {
  if (poly) {
    sub->add_option("--poly", c.poly, "cubic with rational coefficients, e.g. \"x^3-5x^2+x-3\"");
    sub->add_option("--root", c.root, "largest | smallest | value-index <i> (0-based, ascending)")
        ->expected(1, 2);
    sub->add_option("--z", c.z, "integer parameter z (certified before use)");
  }
  if (tcf) sub->add_option("--tcf", c.tcf, "TCF as JSON text, a file, or - for stdin");
  sub->add_flag("--json", c.json, "JSON output");
  sub->add_option("--digits", c.digits, "significant digits of decimal output")
      ->check(CLI::Range(1, 200));
  sub->add_option("--out", c.out, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic ternary continued fractions of cubic irrationals"};
  app.require_subcommand(1);

  Common c;
  ExpansionOptions opts;
  std::size_t n = 0;
  bool integer = false;
  std::string tol = "1e-12";
  std::size_t n_cap = 10000;
  long long d = 0;
  bool classic = false, modified = false, compare = false;
  std::size_t max_steps = 1000;

  auto* expand = app.add_subcommand("expand", "periodic expansion of a root");
  add_common(expand, c, true, false);
  expand->get_option("--poly")->required();
  expand->add_option("--z-window", opts.z_window, "largest |z| searched")->check(CLI::PositiveNumber);
  expand->add_option("--shift-steps", opts.shift_steps, "shifts tried before giving up");

  auto* conv = app.add_subcommand("convergents", "exact convergents");
  add_common(conv, c, true, true);
  conv->add_option("--n", n, "last index")->required();

  auto* mats = app.add_subcommand("matrices", "step matrices and their product");
  add_common(mats, c, true, true);
  mats->add_option("--n", n, "last index")->required();
  mats->add_flag("--integer", integer, "integer matrix form");

  auto* approx = app.add_subcommand("approx", "evaluate a TCF to a tolerance");
  add_common(approx, c, true, true);
  approx->add_option("--tol", tol, "tolerance, e.g. 1e-12");
  approx->add_option("--n-cap", n_cap, "maximum convergent index");

  auto* cube = app.add_subcommand("cuberoot", "expansion of (d^(2/3), d^(1/3))");
  cube->add_option("--d", d, "non-cube integer")->required();
  cube->add_option("--z", c.z, "nonzero integer, default 1");
  cube->add_flag("--json", c.json, "JSON output");
  cube->add_option("--out", c.out, "write output to this file");

  auto* jac = app.add_subcommand("jacobi", "classic or modified Jacobi algorithm");
  add_common(jac, c, true, false);
  jac->get_option("--poly")->required();
  auto* g1 = jac->add_flag("--classic", classic, "floor-based algorithm from (r/a, a)");
  auto* g2 = jac->add_flag("--modified", modified, "f/g-based algorithm");
  auto* g3 = jac->add_flag("--compare", compare, "run both and report approximation errors");
  g1->excludes(g2)->excludes(g3);
  g2->excludes(g3);
  jac->add_option("--max-steps", max_steps, "step limit")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-examples", "golden checks on the worked examples");
  verify->add_flag("--json", c.json, "JSON output");
  verify->add_option("--out", c.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*expand) return run_expand(c, opts);
    if (*conv) return run_convergents(c, n);
    if (*mats) return run_matrices(c, n, integer);
    if (*approx) return run_approx(c, tol, n_cap);
    if (*cube) return run_cuberoot(c, d);
    if (*jac) {
      if (!classic && !modified && !compare) throw UsageError("choose --classic, --modified or --compare");
      return run_jacobi(c, classic, compare, max_steps);
    }
    if (*verify) return run_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
