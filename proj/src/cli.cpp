#include "milnorinf/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "milnorinf/apps.hpp"
#include "milnorinf/error.hpp"
#include "milnorinf/euler.hpp"
#include "milnorinf/parser.hpp"
#include "milnorinf/report.hpp"

namespace milnorinf {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string input_file;
  std::string weights;
  std::string weights_h;
  std::string vars;
  std::vector<std::string> branch_points;
  bool abstract = false;
  std::string top;
  int k = 0;
  std::string eigen_sign = "plus";
  bool allow_conjectural = false;
  std::uint64_t seed = 1;
  int trials = 8;
  std::string format = "text";
  std::string witness;
  int broughton = 0;
  bool oracle = false;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int analyze(bool with_oracle);
  int check_wly();
  int tame();
  int compare();
  int ts();
  int oracle();

 private:
  bool json() const { return o_.format == "json"; }

  std::vector<std::string> texts(std::size_t count) const {
    std::vector<std::string> t = o_.inputs;
    if (!o_.input_file.empty()) {
      std::ifstream in(o_.input_file);
      if (!in) throw Error(ErrorKind::Structural, "cannot read input file '" + o_.input_file + "'");
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) t.push_back(line);
    }
    if (t.size() != count)
      throw ParseError("expected " + std::to_string(count) + " polynomial(s), got " + std::to_string(t.size()), 1, 1);
    return t;
  }

  std::optional<std::vector<std::string>> vars() const {
    if (o_.vars.empty()) return std::nullopt;
    return parse_name_list(o_.vars);
  }

  WeightSystem weights_for(const std::string& spec, std::size_t n) const {
    if (spec.empty()) return WeightSystem::usual(n);
    auto w = parse_int_list(spec);
    require(w.size() == n, ErrorKind::Structural,
            "weights list has " + std::to_string(w.size()) + " entries but there are " + std::to_string(n) +
                " variables");
    return WeightSystem(w);
  }

  MilnorOptions milnor_options() const {
    MilnorOptions m;
    m.sign = o_.eigen_sign == "minus" ? EigenSign::Minus : EigenSign::Plus;
    m.allow_conjectural = o_.allow_conjectural;
    m.probe.seed = o_.seed;
    m.probe.trials = o_.trials;
    for (const auto& b : o_.branch_points) m.branch_hints.push_back(parse_rational_list(b));
    return m;
  }

  std::optional<WitnessSequence> witness() const {
    if (o_.witness.empty()) return std::nullopt;
    return parse_witness(o_.witness);
  }

  int not_wly(const WlyAnalysis& a) {
    if (json())
      out_ << Json{{"wly", wly_json(a)}, {"error", "not WLY at infinity"}}.dump(2) << "\n";
    else
      out_ << wly_text(a) << "error        not WLY at infinity\n";
    return kExitNotWly;
  }

  const Options& o_;
  std::ostream& out_;
};

int Session::analyze(bool with_oracle) {
  MilnorOptions mo = milnor_options();
  auto wit = witness();
  MilnorReport report;
  std::vector<std::string> names;
  std::optional<Polynomial> f;
  if (o_.abstract) {
    require(!o_.top.empty(), ErrorKind::Structural, "--abstract needs --top");
    require(o_.inputs.empty() && o_.input_file.empty(), ErrorKind::Structural,
            "--abstract takes the top form through --top only");
    auto parsed = parse_polynomial(o_.top, vars());
    names = parsed.variables;
    report = total_milnor_abstract(parsed.poly, weights_for(o_.weights, names.size()), o_.k, mo);
  } else {
    auto parsed = parse_polynomial(texts(1)[0], vars());
    names = parsed.variables;
    f = parsed.poly;
    WlyAnalysis a = milnorinf::check_wly(decompose(parsed.poly, weights_for(o_.weights, names.size())));
    if (!a.is_wly) return not_wly(a);
    report = total_milnor(a, mo);
  }
  TamenessVerdict tv = tameness(report, wit ? &*wit : nullptr);
  std::optional<MilnorValue> oracle_mu;
  if (with_oracle && f) oracle_mu = oracle_total_milnor(*f);
  if (json()) {
    Json j = report_json(report, &tv, names);
    j["variables"] = names;
    if (oracle_mu) j["oracle_mu"] = to_string(*oracle_mu);
    out_ << j.dump(2) << "\n";
  } else {
    out_ << "variables    ";
    for (std::size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << names[i];
    out_ << "\n" << report_text(report, &tv, names);
    if (oracle_mu) out_ << "oracle mu    " << to_string(*oracle_mu) << "\n";
  }
  return kExitOk;
}

int Session::check_wly() {
  auto parsed = parse_polynomial(texts(1)[0], vars());
  WlyAnalysis a = milnorinf::check_wly(decompose(parsed.poly, weights_for(o_.weights, parsed.variables.size())));
  if (json())
    out_ << Json{{"weights", o_.weights.empty() ? "usual" : o_.weights},
                 {"N", std::to_string(a.dec.N)},
                 {"k", std::to_string(a.dec.k)},
                 {"wly", wly_json(a)}}
                .dump(2)
         << "\n";
  else
    out_ << wly_text(a);
  return a.is_wly ? kExitOk : kExitNotWly;
}

int Session::tame() {
  auto parsed = parse_polynomial(texts(1)[0], vars());
  WlyAnalysis a = milnorinf::check_wly(decompose(parsed.poly, weights_for(o_.weights, parsed.variables.size())));
  if (!a.is_wly) return not_wly(a);
  MilnorOptions mo = milnor_options();
  mo.allow_conjectural = true;
  MilnorReport report = total_milnor(a, mo);
  auto wit = witness();
  TamenessVerdict tv = tameness(report, wit ? &*wit : nullptr);
  std::optional<BroughtonDiagnostic> bd;
  if (o_.broughton > 0) bd = broughton_samples(parsed.poly, o_.broughton, o_.seed);
  if (json()) {
    Json j = tameness_json(tv);
    if (bd) j["broughton"] = broughton_json(*bd);
    out_ << j.dump(2) << "\n";
  } else {
    out_ << tameness_text(tv);
    if (bd) out_ << broughton_text(*bd);
  }
  return kExitOk;
}

int Session::compare() {
  auto t = texts(2);
  std::optional<std::vector<std::string>> names = vars();
  if (!names) names = parse_polynomial("(" + t[0] + ")+(" + t[1] + ")").variables;
  Polynomial f = parse_polynomial(t[0], names).poly;
  Polynomial h = parse_polynomial(t[1], names).poly;
  EquivalenceCertificate c = monodromy_equivalence(f, h, weights_for(o_.weights, names->size()), milnor_options());
  if (json())
    out_ << certificate_json(c).dump(2) << "\n";
  else
    out_ << certificate_text(c);
  return kExitOk;
}

int Session::ts() {
  auto t = texts(2);
  MilnorOptions mo = milnor_options();
  std::vector<ThomSebastianiInput> parts;
  std::vector<Polynomial> polys;
  const char* labels[] = {"f", "h"};
  for (int i = 0; i < 2; ++i) {
    auto parsed = parse_polynomial(t[i]);
    WlyAnalysis a = milnorinf::check_wly(
        decompose(parsed.poly, weights_for(i == 0 ? o_.weights : o_.weights_h, parsed.variables.size())));
    if (!a.is_wly) return not_wly(a);
    MilnorReport r = total_milnor(a, mo);
    TamenessVerdict tv = tameness(r);
    parts.push_back({r.mu, r.nvars(), tv.status == TameStatus::Tame, labels[i]});
    polys.push_back(parsed.poly);
  }
  ThomSebastianiReport r = thom_sebastiani(parts[0], parts[1]);
  std::optional<MilnorValue> oracle_mu;
  if (o_.oracle) oracle_mu = oracle_total_milnor(direct_sum(polys[0], polys[1]));
  if (json()) {
    Json j = thom_sebastiani_json(r);
    if (oracle_mu) j["oracle_mu"] = to_string(*oracle_mu);
    out_ << j.dump(2) << "\n";
  } else {
    out_ << thom_sebastiani_text(r);
    if (oracle_mu) out_ << "oracle mu    " << to_string(*oracle_mu) << "\n";
  }
  return kExitOk;
}

int Session::oracle() {
  auto parsed = parse_polynomial(texts(1)[0], vars());
  MilnorValue mu = oracle_total_milnor(parsed.poly);
  if (json())
    out_ << Json{{"mu", to_string(mu)}}.dump(2) << "\n";
  else
    out_ << "oracle mu    " << to_string(mu) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::NonRationalBranch: return kExitNeedsHint;
    case ErrorKind::HypothesisFailure: return kExitHypothesis;
    default: return kExitError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total Milnor number at infinity of weighted Le-Yomdin polynomials", "milnorinf"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool two_inputs) {
    c->add_option("polynomial", o.inputs, two_inputs ? "polynomials f and h" : "polynomial text");
    c->add_option("--input", o.input_file, "read polynomial text from a file (one per line)");
    c->add_option("--weights", o.weights, "comma-separated positive weights (default: all 1)");
    c->add_option("--vars", o.vars, "comma-separated variable order");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto milnor_flags = [&](CLI::App* c) {
    c->add_option("--branch-point", o.branch_points, "rational branch representative, e.g. 0,-1,1,0");
    c->add_option("--eigen-sign", o.eigen_sign, "eigenspace labelling")->check(CLI::IsMember({"plus", "minus"}));
    c->add_flag("--allow-conjectural", o.allow_conjectural, "accept results that rest on the conjectural formula");
    c->add_option("--seed", o.seed, "seed of the isolated-type probe");
    c->add_option("--trials", o.trials, "trials of the isolated-type probe");
  };

  auto* analyze = app.add_subcommand("analyze", "WLY check, total Milnor number, tameness and oracle cross-check");
  common(analyze, false);
  milnor_flags(analyze);
  analyze->add_option("--witness", o.witness, "non-tameness witness x(n), comma-separated components");

  auto* milnor = app.add_subcommand("milnor", "total Milnor number");
  common(milnor, false);
  milnor_flags(milnor);
  milnor->add_flag("--abstract", o.abstract, "only the top form and k are given");
  milnor->add_option("--top", o.top, "top weighted degree form (with --abstract)");
  milnor->add_option("--k", o.k, "degree gap k (with --abstract)");

  auto* wly = app.add_subcommand("check-wly", "weighted Le-Yomdin condition at infinity");
  common(wly, false);

  auto* tame = app.add_subcommand("tame", "tameness verdict");
  common(tame, false);
  milnor_flags(tame);
  tame->add_option("--witness", o.witness, "non-tameness witness x(n), comma-separated components");
  tame->add_option("--broughton", o.broughton, "number of random linear perturbations to sample");

  auto* compare = app.add_subcommand("compare", "monodromy-at-infinity equivalence of f and h");
  common(compare, true);
  milnor_flags(compare);

  auto* ts = app.add_subcommand("ts", "Thom-Sebastiani sum of f and h on disjoint variables");
  common(ts, true);
  milnor_flags(ts);
  ts->add_option("--weights-h", o.weights_h, "weights of h (default: all 1)");
  ts->add_flag("--oracle", o.oracle, "cross-check mu of the sum with the Jacobian quotient");

  auto* oracle = app.add_subcommand("oracle", "dimension of the global Jacobian quotient");
  common(oracle, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  Session s(o, out);
  try {
    if (analyze->parsed()) return s.analyze(true);
    if (milnor->parsed()) return s.analyze(false);
    if (wly->parsed()) return s.check_wly();
    if (tame->parsed()) return s.tame();
    if (compare->parsed()) return s.compare();
    if (ts->parsed()) return s.ts();
    if (oracle->parsed()) return s.oracle();
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace milnorinf
