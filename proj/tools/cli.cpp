#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elliptic/asymptotics.hpp"
#include "elliptic/combinatorics.hpp"
#include "elliptic/errors.hpp"
#include "elliptic/moments.hpp"
#include "elliptic/montecarlo.hpp"
#include "elliptic/positional.hpp"
#include "elliptic/version.hpp"

namespace elliptic::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> csv_columns = {"rho", "n", "m", "exact", "normalized", "estimate", "ratio"};

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json polynomial_json(const MomentPolynomial& p) {
  // highest power first, like to_string
  json obj = json::object();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) obj[std::to_string(it->first)] = it->second.str();
  return obj;
}

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal integer with optional sign. cpp_int alone would read a leading 0
// as an octal prefix.
BigInt parse_integer(std::string digits) {
  bool negative = !digits.empty() && digits[0] == '-';
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not an integer");
  }
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt v(digits);
  return negative ? BigInt(-v) : v;
}

// rho given as an integer, a decimal or p/q is kept exactly.
struct Rho {
  std::string text;
  double value;
  Rational exact;
};

Rho parse_rho(const std::string& text) {
  Rho r{text, 0.0, 0};
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num = parse_integer(text.substr(0, slash));
      BigInt den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      r.exact = Rational(num, den);
    } else {
      std::size_t pos = 0;
      double d = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("trailing characters");
      bool plain_decimal = text.find_first_of("eEnN") == std::string::npos;
      if (plain_decimal) {
        std::string digits;
        std::size_t frac = 0;
        bool after_point = false;
        for (char c : text) {
          if (c == '.') {
            after_point = true;
          } else {
            digits.push_back(c);
            if (after_point) ++frac;
          }
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac; ++i) scale *= 10;
        r.exact = Rational(parse_integer(digits), scale);
      } else {
        if (!std::isfinite(d)) throw std::invalid_argument("not finite");
        r.exact = Rational(d);
      }
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--rho", "cannot parse '" + text + "' as a number");
  }
  r.value = r.exact.convert_to<double>();
  return r;
}

std::vector<Rho> parse_rhos(const std::vector<std::string>& texts) {
  std::vector<Rho> out;
  for (const auto& t : texts) out.push_back(parse_rho(t));
  return out;
}

struct Output {
  json record;
  std::vector<std::pair<std::string, std::string>> text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool csv_available = false;
  std::string csv_hint;
};

json provenance(std::optional<std::uint64_t> seed) {
  json p;
  p["version"] = version();
  p["seed"] = seed ? json(*seed) : json(nullptr);
  return p;
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.record.dump(2) << "\n";
  } else if (format == "csv") {
    if (!o.csv_available) throw CLI::ValidationError("--format", o.csv_hint);
    for (std::size_t i = 0; i < o.csv_header.size(); ++i) out << (i ? "," : "") << o.csv_header[i];
    out << "\n";
    for (const auto& row : o.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& [k, v] : o.text) width = std::max(width, k.size());
    for (const auto& [k, v] : o.text) out << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  }
}

// Shared by moment/word/positional: polynomial values at each rho.
void add_evaluations(Output& o, const MomentPolynomial& poly, const std::vector<Rho>& rhos,
                     std::size_t n, std::size_t m) {
  BigInt cat = (n + m) % 2 == 0 ? catalan((n + m) / 2) : BigInt(0);
  json values = json::array();
  o.csv_header = csv_columns;
  for (const auto& rho : rhos) {
    Rational exact = evaluate_exact(poly, rho.exact);
    double value = exact.convert_to<double>();
    double normalized = cat == 0 ? std::numeric_limits<double>::quiet_NaN()
                                 : (exact / Rational(cat)).convert_to<double>();
    json v;
    v["rho"] = rho.text;
    v["exact"] = rational_string(exact);
    v["value"] = value;
    v["normalized"] = number_or_null(normalized);
    if (std::abs(rho.value) > 1.0) v["warning"] = "|rho| > 1 lies outside the ensemble";
    values.push_back(v);
    o.text.emplace_back("value at rho=" + rho.text,
                        rational_string(exact) +
                            (denominator(exact) == 1 ? "" : " (" + fmt(value) + ")"));
    o.csv_rows.push_back({rho.text, std::to_string(n), std::to_string(m), fmt(value), fmt(normalized), "", ""});
  }
  if (!rhos.empty()) {
    o.record["result"]["values"] = values;
    o.csv_available = true;
  } else {
    o.csv_hint = "csv output lists evaluations; pass --rho";
  }
}

std::size_t cyclic_letter_changes(const Word& w) {
  std::size_t changes = 0;
  for (std::size_t i = 0; i < w.size(); ++i) changes += w[i] != w[(i + 1) % w.size()];
  return changes;
}

struct Common {
  std::string format = "text";
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

Output base_output(const std::string& command, json inputs, std::optional<std::uint64_t> seed = {}) {
  Output o;
  o.record["command"] = command;
  o.record["inputs"] = std::move(inputs);
  o.record["result"] = json::object();
  o.record["provenance"] = provenance(seed);
  return o;
}

std::vector<std::string> rho_texts(const std::vector<Rho>& rhos) {
  std::vector<std::string> t;
  for (const auto& r : rhos) t.push_back(r.text);
  return t;
}

// ---------------------------------------------------------------------------

Output cmd_moment(std::size_t n, std::size_t m, const std::vector<Rho>& rhos) {
  json inputs;
  inputs["n"] = n;
  inputs["m"] = m;
  if (!rhos.empty()) inputs["rho"] = rho_texts(rhos);
  Output o = base_output("moment", inputs);
  MomentPolynomial p = block_moment(n, m);
  o.record["result"]["polynomial"] = polynomial_json(p);
  o.text.emplace_back("P(rho)", p.to_string());
  add_evaluations(o, p, rhos, n, m);
  return o;
}

Output cmd_word(const std::string& text, const std::vector<Rho>& rhos, bool force_oracle) {
  Word w = Word::parse(text);
  json inputs;
  inputs["word"] = text;
  inputs["oracle"] = force_oracle;
  if (!rhos.empty()) inputs["rho"] = rho_texts(rhos);
  Output o = base_output("word", inputs);

  std::size_t n = w.count(Letter::plain), m = w.count(Letter::dagger);
  MomentPolynomial p;
  std::string method;
  if (!force_oracle && (w.size() % 2 != 0 || cyclic_letter_changes(w) <= 2)) {
    p = block_moment(n, m);
    method = "closed_form";
  } else {
    p = word_moment_oracle(w);
    method = "oracle";
  }
  o.record["result"]["polynomial"] = polynomial_json(p);
  o.record["result"]["method"] = method;
  o.text.emplace_back("P(rho)", p.to_string());
  o.text.emplace_back("method", method);
  add_evaluations(o, p, rhos, n, m);
  return o;
}

const char* transform_name(Transform t) { return t == Transform::letter_swap ? "letter_swap" : "rotate"; }

Output cmd_positional(std::size_t M, const std::vector<std::size_t>& positions, const std::vector<Rho>& rhos) {
  PositionTuple t{M, positions};
  json inputs;
  inputs["M"] = M;
  inputs["positions"] = positions;
  if (!rhos.empty()) inputs["rho"] = rho_texts(rhos);
  Output o = base_output("positional", inputs);

  CanonicalForm form = canonicalize(t);
  std::size_t evens = form.tuple.even_count();
  MomentPolynomial p = positional_moment(t);

  json transforms = json::array();
  std::string tlist;
  for (auto tr : form.transforms) {
    transforms.push_back(transform_name(tr));
    tlist += (tlist.empty() ? "" : ",") + std::string(transform_name(tr));
  }
  std::string canon;
  for (auto pos : form.tuple.positions) canon += (canon.empty() ? "" : ",") + std::to_string(pos);
  std::string method = evens <= max_closed_form_evens ? "closed_form" : "oracle";

  auto& res = o.record["result"];
  res["polynomial"] = polynomial_json(p);
  res["canonical_positions"] = form.tuple.positions;
  res["transforms"] = transforms;
  res["even_positions"] = evens;
  res["method"] = method;
  o.text.emplace_back("P(rho)", p.to_string());
  o.text.emplace_back("word", word_from_positions(t).to_string());
  o.text.emplace_back("canonical", canon.empty() ? "()" : canon);
  o.text.emplace_back("transforms", tlist.empty() ? "none" : tlist);
  o.text.emplace_back("method", method + " (r=" + std::to_string(evens) + ")");
  Word w = word_from_positions(t);
  add_evaluations(o, p, rhos, w.count(Letter::plain), w.count(Letter::dagger));
  return o;
}

const char* regime_name(Regime r) { return r == Regime::interior_saddle ? "interior_saddle" : "boundary_layer"; }

Output cmd_asymptotic(double q, const std::vector<Rho>& rhos, const std::vector<std::size_t>& vs) {
  json inputs;
  inputs["q"] = q;
  inputs["rho"] = rho_texts(rhos);
  inputs["v"] = vs;
  Output o = base_output("asymptotic", inputs);
  o.csv_header = csv_columns;
  for (const char* extra : {"q", "v", "psi", "phi", "regime"}) o.csv_header.push_back(extra);
  o.csv_available = true;

  json rows = json::array();
  for (const auto& rho : rhos) {
    double r = rho.value;
    if (!(r != 0.0 && std::abs(r) < 1.0)) {
      throw std::domain_error("asymptotic: rho must satisfy 0 < |rho| < 1");
    }
    double ar = std::abs(r);
    double psi = psi_prefactor(q, ar);
    double phi = phi_rate(q, ar);
    for (std::size_t v : vs) {
      double uq = q * static_cast<double>(v);
      double ur = std::round(uq);
      if (v == 0 || std::abs(uq - ur) > 1e-9 * std::max(1.0, uq)) {
        throw std::domain_error("asymptotic: q*v must be a positive integer (q=" + fmt(q) +
                                ", v=" + std::to_string(v) + ")");
      }
      auto u = static_cast<std::size_t>(ur);
      double estimate = rescaled_estimate(u, v, r);
      double exact = rescaled_exact(2 * u, 2 * v, r);
      double at_one = rescaled_exact(2 * u, 2 * v, 1.0);
      double ratio = exact / estimate;
      RegimeDiagnostic diag = classify_regime(q, v, ar);

      json row;
      row["rho"] = rho.text;
      row["u"] = u;
      row["v"] = v;
      row["n"] = 2 * u;
      row["m"] = 2 * v;
      row["exact"] = number_or_null(exact);
      row["normalized"] = number_or_null(exact / at_one);
      row["estimate"] = number_or_null(estimate);
      row["ratio"] = number_or_null(ratio);
      row["psi"] = psi;
      row["phi"] = phi;
      row["phi_hat"] = phi / (q + 1.0);
      row["saddle"] = saddle_point(q, ar);
      row["regime"] = regime_name(diag.regime);
      rows.push_back(row);

      std::string key = "rho=" + rho.text + " v=" + std::to_string(v);
      o.text.emplace_back(key, "exact " + fmt(exact) + "  estimate " + fmt(estimate) + "  ratio " + fmt(ratio) +
                                   "  phi " + fmt(phi) + "  " + regime_name(diag.regime));
      o.csv_rows.push_back({rho.text, std::to_string(2 * u), std::to_string(2 * v), fmt(exact),
                            fmt(exact / at_one), fmt(estimate), fmt(ratio), fmt(q), std::to_string(v),
                            fmt(psi), fmt(phi), regime_name(diag.regime)});
    }
  }
  o.record["result"]["rows"] = rows;
  o.record["result"]["plateau"] = rescaled_plateau(q);
  o.text.emplace_back("plateau at rho=1", fmt(rescaled_plateau(q)));
  return o;
}

struct ValidateArgs {
  std::string word;
  std::vector<Rho> rhos;
  std::size_t dim = 300;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double bias_tolerance = 0.05;
  std::size_t max_dim = 512;
};

Output cmd_validate(const ValidateArgs& a, bool& all_pass) {
  Word w = Word::parse(a.word);
  json inputs;
  inputs["word"] = a.word;
  inputs["rho"] = rho_texts(a.rhos);
  inputs["dim"] = a.dim;
  inputs["samples"] = a.samples;
  inputs["bias_tolerance"] = a.bias_tolerance;
  Output o = base_output("validate", inputs, a.seed);
  o.csv_header = csv_columns;
  o.csv_header.push_back("stderr");
  o.csv_header.push_back("z");
  o.csv_available = true;

  std::size_t n = w.count(Letter::plain), m = w.count(Letter::dagger);
  MomentPolynomial poly =
      w.size() % 2 != 0 || cyclic_letter_changes(w) <= 2 ? block_moment(n, m) : word_moment_oracle(w);
  BigInt cat = w.size() % 2 == 0 ? catalan(w.size() / 2) : BigInt(0);
  MonteCarloConfig config;
  config.max_dim = a.max_dim;

  all_pass = true;
  json rows = json::array();
  o.text.emplace_back("seed", std::to_string(a.seed));
  o.text.emplace_back("P(rho)", poly.to_string());
  for (const auto& rho : a.rhos) {
    EstimateResult est = estimate_word_moment(w, rho.value, a.dim, a.samples, a.seed, config);
    double exact = evaluate_exact(poly, rho.exact).convert_to<double>();
    double diff = est.mean - exact;
    // Error scale: sampling error, floored by the allowed finite-N bias / 5,
    // so |z| <= 5 is |diff| <= max(5 stderr, tol * max(1, |exact|)).
    double floor = a.bias_tolerance * std::max(1.0, std::abs(exact)) / 5.0;
    double scale = std::max(est.std_error, floor);
    double z = scale > 0 ? diff / scale : (diff == 0 ? 0.0 : std::numeric_limits<double>::infinity());
    double z_raw = est.std_error > 0 ? diff / est.std_error : std::numeric_limits<double>::quiet_NaN();
    bool pass = std::abs(z) <= 5.0;
    all_pass = all_pass && pass;
    double normalized = cat == 0 ? std::numeric_limits<double>::quiet_NaN() : est.mean / cat.convert_to<double>();
    double ratio = exact / est.mean;

    json row;
    row["rho"] = rho.text;
    row["mean"] = est.mean;
    row["stderr"] = est.std_error;
    row["imag_mean"] = est.imag_mean;
    row["imag_stderr"] = est.imag_std_error;
    row["exact"] = exact;
    row["normalized"] = number_or_null(normalized);
    row["ratio"] = number_or_null(ratio);
    row["z"] = number_or_null(z);
    row["z_raw"] = number_or_null(z_raw);
    row["pass"] = pass;
    rows.push_back(row);

    o.text.emplace_back("rho=" + rho.text, "mean " + fmt(est.mean) + " +- " + fmt(est.std_error) + "  exact " +
                                               fmt(exact) + "  z " + fmt(z) + (pass ? "  pass" : "  FAIL"));
    o.csv_rows.push_back({rho.text, std::to_string(n), std::to_string(m), fmt(exact), fmt(normalized),
                          fmt(est.mean), fmt(ratio), fmt(est.std_error), fmt(z)});
  }
  o.record["result"]["rows"] = rows;
  o.record["result"]["pass"] = all_pass;
  o.text.emplace_back("verdict", all_pass ? "pass" : "FAIL");
  return o;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic mixed moments of Gaussian elliptic matrices", "elliptic-moments"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> rho_text;

  std::size_t n = 0, m = 0;
  auto* moment = app.add_subcommand("moment", "Closed-form phi(X^n (X^dagger)^m)");
  moment->add_option("--n", n, "Number of X factors")->required();
  moment->add_option("--m", m, "Number of X^dagger factors")->required();
  moment->add_option("--rho", rho_text, "Evaluate at these rho (comma list; p/q allowed)")->delimiter(',');
  add_format(moment, common);

  std::string word_text;
  bool oracle = false;
  auto* word = app.add_subcommand("word", "Moment of an arbitrary word over x (X) and d (X^dagger)");
  word->add_option("--word", word_text, "Word, e.g. xxdxdxdd")->required();
  word->add_option("--rho", rho_text, "Evaluate at these rho")->delimiter(',');
  word->add_flag("--oracle", oracle, "Always use exhaustive enumeration");
  add_format(word, common);

  std::size_t M = 0;
  std::vector<std::size_t> positions;
  auto* positional = app.add_subcommand("positional", "Moment indexed by the positions of X in a length-2M word");
  positional->add_option("--M", M, "Half length of the word")->required();
  positional->add_option("--positions", positions, "Positions of X (comma list)")->delimiter(',');
  positional->add_option("--rho", rho_text, "Evaluate at these rho")->delimiter(',');
  add_format(positional, common);

  double q = 1.0;
  std::vector<std::size_t> vs;
  bool sweep = false;
  auto* asym = app.add_subcommand("asymptotic", "Saddle-point estimate of the rescaled moment");
  asym->add_option("--q", q, "Ray u/v (>= 1)")->required();
  asym->add_option("--rho", rho_text, "rho values in (0,1) (negative allowed)")->delimiter(',')->required();
  asym->add_option("--v", vs, "v values (comma list)")->delimiter(',')->required();
  asym->add_flag("--sweep", sweep, "Emit the table as CSV");
  add_format(asym, common);

  ValidateArgs va;
  std::optional<std::uint64_t> seed;
  auto* validate = app.add_subcommand("validate", "Monte Carlo check of a word moment");
  validate->add_option("--word", va.word, "Word over x and d")->required();
  validate->add_option("--rho", rho_text, "rho values")->delimiter(',')->required();
  validate->add_option("--dim", va.dim, "Matrix dimension N");
  validate->add_option("--samples", va.samples, "Number of matrices");
  validate->add_option("--seed", seed, "Master seed (generated and printed when absent)");
  validate->add_option("--bias-tolerance", va.bias_tolerance,
                       "Relative finite-N allowance (default 0.05)");
  validate->add_option("--max-dim", va.max_dim, "Largest accepted N");
  add_format(validate, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    std::vector<Rho> rhos = parse_rhos(rho_text);
    Output o;
    int status = exit_ok;
    if (*moment) {
      o = cmd_moment(n, m, rhos);
    } else if (*word) {
      o = cmd_word(word_text, rhos, oracle);
    } else if (*positional) {
      o = cmd_positional(M, positions, rhos);
    } else if (*asym) {
      o = cmd_asymptotic(q, rhos, vs);
      if (sweep) common.format = "csv";
    } else if (*validate) {
      va.rhos = rhos;
      va.seed = seed ? *seed : fresh_seed();
      if (!seed) err << "seed: " << va.seed << "\n";
      bool pass = true;
      o = cmd_validate(va, pass);
      status = pass ? exit_ok : exit_statistical_failure;
    }
    emit(o, common.format, out);
    return status;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return exit_capacity;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace elliptic::cli
