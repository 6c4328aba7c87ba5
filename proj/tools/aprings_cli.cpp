// aprings: annihilating polynomials, tables of marks, spectra and the
// reference checks from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aprings/annihilator.hpp"
#include "aprings/error.hpp"
#include "aprings/expression.hpp"
#include "aprings/group.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"
#include "aprings/spectrum.hpp"
#include "aprings/verify_suite.hpp"

using namespace aprings;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// annihilator

struct QSource {
  RootSpec spec;
  std::string preset;  // empty for explicit specs
  unsigned k = 1;
};

QSource resolve_q(const std::string& arg, unsigned k) {
  QSource q;
  q.k = k;
  if (starts_with(arg, "preset:")) {
    q.preset = arg.substr(7);
    if (q.preset == "x2-1") {
      q.spec = RootSpec::integers({-1, 1});
    } else if (q.preset == "x4-1") {
      q.spec = RootSpec::roots_of_unity(4);
    } else if (q.preset == "x2k-1") {
      if (k < 1 || k > 6) throw Error(ErrorKind::InvalidArgument, "x2k-1 needs 1 <= k <= 6");
      q.spec = RootSpec::roots_of_unity(1u << k);
    } else if (q.preset == "pfister") {
      if (k > 60) throw Error(ErrorKind::InvalidArgument, "pfister needs k <= 60");
      q.spec = RootSpec::integers({0, Integer(1) << k});
    } else {
      throw Error(ErrorKind::Parse, "unknown preset \"" + q.preset + "\" (x2-1, x4-1, x2k-1, pfister)");
    }
    return q;
  }
  const auto text = !arg.empty() && arg.front() == '{' ? arg : read_file(arg);
  q.spec = root_spec_from_json(parse_json_text(text));
  return q;
}

std::string factored(const SumSet& set) {
  std::string out;
  for (const auto& s : set.elements) {
    if (s.is_zero()) {
      out += "X";
      continue;
    }
    const auto n = s.as_rational_integer();
    if (n) {
      out += *n < 0 ? "(X + " + to_decimal(-*n) + ")" : "(X - " + to_decimal(*n) + ")";
    } else {
      out += "(X - (" + s.to_string() + "))";
    }
  }
  return out;
}

int cmd_annihilator(const std::string& q_arg, int n, const std::string& mode_arg, bool mode_given, unsigned k,
                    bool closed_form, const std::string& format) {
  const auto q = resolve_q(q_arg, k);
  SignMode mode = SignMode::Signed;
  if (mode_given) {
    mode = mode_arg == "unsigned" ? SignMode::Unsigned : SignMode::Signed;
  } else if (q.preset == "pfister") {
    mode = SignMode::Unsigned;
  }
  const auto set = root_sum_set(q.spec, n, mode);
  const auto p = poly_from_roots(set.elements);

  Json closed = nullptr;
  int status = 0;
  if (closed_form) {
    std::optional<IntPolynomial> formula;
    std::string name;
    const bool is_signed = mode == SignMode::Signed;
    if (is_signed && (q.preset == "x2-1" || (q.preset == "x2k-1" && q.k == 1))) {
      formula = lewis_polynomial(n);
      name = "lewis";
    } else if (is_signed && (q.preset == "x4-1" || (q.preset == "x2k-1" && q.k == 2))) {
      formula = quartic_p(n);
      name = "quartic";
    } else if (!is_signed && q.preset == "pfister") {
      formula = pfister_chain_polynomial(n, q.k);
      name = "pfister-chain";
    }
    if (!formula) {
      std::cerr << "error: no closed form for this generating polynomial and sign mode\n";
      return kUsage;
    }
    const bool equal = *formula == p;
    closed = Json{{"name", name}, {"equal", equal}, {"polynomial", polynomial_to_json(*formula)}};
    if (!equal) status = kVerificationFailure;
  }

  if (format == "json") {
    Json out{{"q", polynomial_to_json(q.spec.polynomial())},
             {"roots", root_spec_to_json(q.spec)},
             {"n", n},
             {"mode", to_string(mode)},
             {"sum_set", sum_set_to_json(set)},
             {"polynomial", polynomial_to_json(p)},
             {"polynomial_text", p.to_string()},
             {"degree", p.degree()}};
    if (!closed.is_null()) out["closed_form"] = closed;
    emit(out);
  } else {
    std::cout << "q(X) = " << q.spec.polynomial().to_string() << "\n";
    std::cout << "n = " << n << ", mode = " << to_string(mode) << ", |T_n| = " << set.elements.size() << "\n";
    std::cout << "p_" << n << "(X) = " << factored(set) << "\n";
    std::cout << "expanded: " << p.to_string() << "\n";
    if (!closed.is_null()) {
      std::cout << "closed form (" << closed["name"].get<std::string>() << "): "
                << (closed["equal"].get<bool>() ? "equal" : "DIFFERENT") << "\n";
    }
  }
  return status;
}

// marks

int cmd_marks(const std::string& group_arg, bool check_bundled, const std::string& format) {
  PermGroup group;
  std::string name;
  if (starts_with(group_arg, "named:")) {
    name = group_arg.substr(6);
    auto g = named_group(name);
    if (!g) throw Error(ErrorKind::Parse, "unknown named group \"" + name + "\"");
    group = std::move(*g);
  } else {
    group = perm_group_from_json(parse_json_text(read_file(group_arg)));
    name = "G";
  }
  auto table = table_of_marks(group, name);
  const bool is_a5_shape = group.order() == 60 && table.size() == 9;
  if (name == "A5" || (check_bundled && is_a5_shape)) {
    try {
      table = table.relabeled(a5_label_aliases());
    } catch (const Error&) {
    }
  }
  int status = 0;
  Json check = nullptr;
  if (check_bundled) {
    const auto bundled = bundled_a5_table();
    std::vector<std::string> a, b;
    for (const auto& c : table.classes) a.push_back(c.label);
    for (const auto& c : bundled.classes) b.push_back(c.label);
    const bool equal = a == b && table.marks == bundled.marks;
    check = Json{{"matches_bundled", equal}};
    if (!equal) status = kVerificationFailure;
  }
  if (format == "json") {
    Json out = table_to_json(table);
    if (!check.is_null()) out["check"] = check;
    emit(out);
  } else {
    std::size_t width = 4;
    for (const auto& c : table.classes) width = std::max(width, c.label.size() + 1);
    for (const auto& row : table.marks) {
      for (const auto& v : row) width = std::max(width, to_decimal(v).size() + 1);
    }
    auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    std::cout << pad("");
    for (const auto& c : table.classes) std::cout << pad(c.label);
    std::cout << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::cout << pad(table.classes[i].label);
      for (const auto& v : table.marks[i]) std::cout << pad(to_decimal(v));
      std::cout << "\n";
    }
    if (!check.is_null()) {
      std::cout << (check["matches_bundled"].get<bool>() ? "matches the bundled A5 table\n"
                                                       : "DIFFERS from the bundled A5 table\n");
    }
  }
  return status;
}

// rings

ModelPtr resolve_ring(const std::string& arg) {
  if (starts_with(arg, "preset:")) return preset_model(arg.substr(7));
  if (!arg.empty() && arg.front() == '{') return construct_model(parse_json_text(arg));
  std::ifstream probe(arg);
  if (probe) return construct_model(parse_json_text(read_file(arg)));
  return preset_model(arg);
}

int cmd_spectrum(const std::string& ring_arg, unsigned primes_up_to_bound, const std::string& format) {
  const auto ring = resolve_ring(ring_arg);
  const auto report = spectrum_report(*ring, primes_up_to_bound);
  if (format == "json") {
    emit(report);
    return 0;
  }
  std::cout << "ring: " << ring->name() << "\n";
  std::cout << "local: " << (report.at("local").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "minimal primes:\n";
  for (const auto& d : report.at("min")) std::cout << "  " << (d.contains("label") ? d.at("label").dump() : d.dump()) << "\n";
  const auto& max = report.at("max");
  if (max.contains("fundamental")) std::cout << "fundamental ideal I is maximal (index 2)\n";
  for (const auto& f : max.at("families")) {
    std::cout << "  " << f.at("symbolic").get<std::string>() << ", listed p: " << f.at("primes").dump() << "\n";
  }
  if (max.contains("enumerated")) {
    std::cout << "maximal ideals:\n";
    for (const auto& d : max.at("enumerated")) {
      std::cout << "  " << (d.contains("label") ? d.at("label").dump() : d.dump()) << "\n";
    }
  }
  if (report.contains("oracle")) std::cout << "oracle: " << report.at("oracle").dump() << "\n";
  if (report.contains("dress")) {
    for (const auto& d : report.at("dress").at("ideals")) {
      std::cout << "  " << d.at("label").get<std::string>() << (d.at("minimal").get<bool>() ? " minimal" : "")
                << (d.at("maximal").get<bool>() ? " maximal" : "") << "\n";
    }
  }
  return 0;
}

int cmd_analyze(const std::string& ring_arg, const std::string& expr, const std::string& format) {
  const auto ring = resolve_ring(ring_arg);
  const auto r = parse_element(*ring, expr);
  const auto ann = verify_annihilated(*ring, r);
  Json pred;
  try {
    pred = element_predicates(*ring, r).to_json();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unsupported) throw;
    pred = Json{{"unsupported", e.what()}};
  }
  const int status = ann.annihilated ? 0 : kVerificationFailure;
  if (format == "json") {
    emit(Json{{"ring", ring->name()},
              {"element", ring->element_to_json(r)},
              {"element_text", format_element(*ring, r)},
              {"length", integer_to_json(ann.length)},
              {"annihilator", polynomial_to_json(ann.polynomial)},
              {"annihilator_text", ann.polynomial.to_string()},
              {"annihilated", ann.annihilated},
              {"predicates", pred}});
    return status;
  }
  std::cout << "ring: " << ring->name() << "\n";
  std::cout << "element: " << format_element(*ring, r) << "\n";
  std::cout << "length: " << to_decimal(ann.length) << "\n";
  std::cout << "p_" << to_decimal(ann.length) << "(X) = " << ann.polynomial.to_string() << "\n";
  std::cout << "p_" << to_decimal(ann.length) << "(r) = 0: " << (ann.annihilated ? "yes" : "NO") << "\n";
  for (const auto& [key, value] : pred.items()) std::cout << key << ": " << value.dump() << "\n";
  return status;
}

int cmd_verify(const std::string& suite, const std::string& filter, const std::string& format) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) {
    std::cerr << "error: unknown suite \"" << suite << "\"\n";
    return kUsage;
  }
  const bool text = format != "json";
  const auto results = run_suite(suite, filter, [&](const CheckResult& r) {
    if (!text) return;
    std::printf("%s  [%2d] %-22s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.criterion, r.id.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  bool all = true;
  Json out = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    out.push_back(Json{{"id", r.id}, {"criterion", r.criterion}, {"passed", r.passed}, {"detail", r.detail}, {"tags", r.tags}});
  }
  if (!text) emit(out);
  if (text) std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " run)\n";
  return all ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aprings: annihilating polynomials and structure of AP rings"};
  app.require_subcommand(1);
  std::string format = "text";

  auto* ann = app.add_subcommand("annihilator", "construct the annihilating polynomial p_n");
  std::string q_arg, mode_arg = "signed";
  int n = 1;
  unsigned k = 1;
  bool closed_form = false;
  ann->add_option("--q", q_arg, "root spec JSON, file, or preset:x2-1|x4-1|x2k-1|pfister")->required();
  ann->add_option("--n", n, "number of summands")->required()->check(CLI::PositiveNumber);
  auto* mode_opt = ann->add_option("--mode", mode_arg, "signed or unsigned")->check(CLI::IsMember({"signed", "unsigned"}));
  ann->add_option("--k", k, "parameter of the x2k-1 and pfister presets");
  ann->add_flag("--closed-form", closed_form, "compare with the closed-form polynomial");
  ann->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* marks = app.add_subcommand("marks", "table of marks of a permutation group");
  std::string group_arg;
  bool check_bundled = false;
  marks->add_option("--group", group_arg, "named:A5|S3|C2|... or a group JSON file")->required();
  marks->add_flag("--check-paper", check_bundled, "compare with the bundled A5 table");
  marks->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* spec = app.add_subcommand("spectrum", "prime spectrum report");
  std::string ring_arg;
  unsigned prime_bound = 13;
  std::string spectrum_format = "json";
  spec->add_option("--ring", ring_arg, "preset (Z[C2], Z4[C2], burnside-A5, ...), ring JSON or file")->required();
  spec->add_option("--primes-up-to", prime_bound, "enumeration bound for maximal ideals");
  spec->add_option("--format", spectrum_format)->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "length, annihilation and predicates of an element");
  std::string expr;
  analyze->add_option("--ring", ring_arg, "ring preset, JSON or file")->required();
  analyze->add_option("--element", expr, "expression such as \"1 + g\"")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run the reference checks");
  std::string suite = "paper", filter;
  verify->add_option("--suite", suite, "suite name");
  verify->add_option("--filter", filter, "check id substring or tag");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ann) return cmd_annihilator(q_arg, n, mode_arg, mode_opt->count() > 0, k, closed_form, format);
    if (*marks) return cmd_marks(group_arg, check_bundled, format);
    if (*spec) return cmd_spectrum(ring_arg, prime_bound, spectrum_format);
    if (*analyze) return cmd_analyze(ring_arg, expr, format);
    if (*verify) return cmd_verify(suite, filter, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.is_bound()) return kBound;
    if (e.kind() == ErrorKind::NonIntegerCoefficient) return kVerificationFailure;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
