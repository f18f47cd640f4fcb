#include "repalg/cli.hpp"

#include "repalg/abelian.hpp"
#include "repalg/crossed.hpp"
#include "repalg/filtration.hpp"
#include "repalg/log.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/verify.hpp"
#include "repalg/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace repalg::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
  int m = 2;
  int n = 3;
  int cap = 3;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string log_level;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
  json to_json() const { return json{{"m", m}, {"n", n}, {"cap", cap}, {"seed", seed}}; }
};

// Raised for inputs that parse but make no sense (exit code 2).
struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& c) {
  if (c.m < 2) throw BadArgs("--m must be at least 2");
  if (c.n < 1) throw BadArgs("--n must be at least 1");
  if (c.cap < 1 || c.cap > kMaxCliCap) throw BadArgs("--cap must lie in 1.." + std::to_string(kMaxCliCap));
  if ((c.m * c.m - 1) * c.n > 65535) throw BadArgs("too many variables for m and n");
}

void no_csv(const RunConfig& c, const char* cmd) {
  if (c.fmt() == Format::Csv) throw BadArgs(std::string("--format csv is only available for dims and abelian-dims, not ") + cmd);
}

json envelope(const char* cmd, const RunConfig& c) { return json{{"command", cmd}, {"config", c.to_json()}}; }

std::string degree_text(int d) { return d == poly::kInfiniteDegree ? "inf" : std::to_string(d); }

// --- dims ---------------------------------------------------------------

int cmd_dims(const RunConfig& c, std::optional<int> k, std::ostream& out) {
  std::vector<int> ks;
  if (k) {
    if (*k < 1) throw BadArgs("--k must be positive");
    ks.push_back(*k);
  } else {
    for (int i = 1; i <= c.cap; ++i) ks.push_back(i);
  }
  switch (c.fmt()) {
    case Format::Text:
      out << "m=" << c.m << " n=" << c.n << "\n";
      out << "k\tdim\n";
      for (int i : ks) out << i << "\t" << algebra::dim_Tk(c.m, c.n, i) << "\n";
      break;
    case Format::Csv:
      out << "m,n,k,dim\n";
      for (int i : ks) out << c.m << "," << c.n << "," << i << "," << algebra::dim_Tk(c.m, c.n, i) << "\n";
      break;
    case Format::Json: {
      json j = envelope("dims", c);
      json rows = json::array();
      for (int i : ks) rows.push_back(json{{"k", i}, {"dim", algebra::dim_Tk(c.m, c.n, i)}});
      j["rows"] = rows;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_abelian_dims(const RunConfig& c, std::ostream& out) {
  if (c.n < 2) throw BadArgs("abelian-dims needs n >= 2");
  abelian::HAlgebraContext h(c.m, c.n, 3);
  const std::size_t t2 = h.free().basis_Tk(2).size();
  struct Row {
    const char* name;
    std::uint64_t value;
  };
  const std::vector<Row> rows = {
      {"gr1", h.gr1H_dim()},
      {"gr2", h.gr2H_dim()},
      {"gr2_formula", abelian::gr2H_dim_formula(c.m, c.n)},
      {"free_gr2", t2},
      {"relations", h.relations_R().size()},
      {"relation_rank", h.relation_rank()},
      {"lambda2_multiplicity", abelian::lambda_multiplicity_counted(c.m)},
  };
  switch (c.fmt()) {
    case Format::Text:
      out << "m=" << c.m << " n=" << c.n << "\n";
      for (const Row& r : rows) out << r.name << "\t" << r.value << "\n";
      break;
    case Format::Csv:
      out << "m,n,quantity,value\n";
      for (const Row& r : rows) out << c.m << "," << c.n << "," << r.name << "," << r.value << "\n";
      break;
    case Format::Json: {
      json j = envelope("abelian-dims", c);
      json v = json::object();
      for (const Row& r : rows) v[r.name] = r.value;
      j["values"] = v;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

// --- basis / normal form ----------------------------------------------

int cmd_basis(const RunConfig& c, const std::string& which, std::optional<int> k_opt, std::ostream& out) {
  no_csv(c, "basis");
  std::vector<std::string> labels;
  int k = k_opt.value_or(which == "Y" ? 2 : 1);
  if (which == "Y") {
    if (k != 2) throw BadArgs("Y lives in degree 2");
    if (c.n < 2) throw BadArgs("Y needs n >= 2");
    abelian::HAlgebraContext h(c.m, c.n, 3);
    for (const abelian::YElement& y : h.basis_Y()) labels.push_back(y.label());
  } else if (which == "Tk" || which == "Tk'") {
    if (k < 1 || k > c.cap) throw BadArgs("--k must lie in 1..cap");
    algebra::AlgebraContext ctx(c.m, c.n, c.cap);
    if (which == "Tk") {
      for (const poly::Monomial& mono : ctx.basis_Tk(k)) labels.push_back(ctx.name(mono));
    } else {
      for (const algebra::FactorProduct& t : ctx.basis_Tk_prime(k)) labels.push_back(ctx.name(t));
    }
  } else {
    throw BadArgs("--which must be Tk, Tk' or Y");
  }
  if (c.fmt() == Format::Json) {
    json j = envelope("basis", c);
    j["which"] = which;
    j["k"] = k;
    j["count"] = labels.size();
    j["elements"] = labels;
    out << j.dump(2) << "\n";
  } else {
    out << which << " k=" << k << " count=" << labels.size() << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << "\t" << labels[i] << "\n";
  }
  return kExitOk;
}

std::pair<int, int> parse_entry(const std::string& s, int m) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw BadArgs("--entry expects i,j");
  int i = 0, j = 0;
  try {
    std::size_t p1 = 0, p2 = 0;
    i = std::stoi(s.substr(0, comma), &p1);
    j = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw BadArgs("--entry expects i,j");
  }
  if (i < 1 || i > m || j < 1 || j > m) throw BadArgs("--entry out of range for m");
  return {i, j};
}

int cmd_normal_form(const RunConfig& c, const std::string& word_text, const std::string& entry, std::ostream& out) {
  no_csv(c, "normal-form");
  const auto [i, j] = parse_entry(entry, c.m);
  algebra::AlgebraContext ctx(c.m, c.n, c.cap);
  const words::Word w = words::parse_word(word_text, c.n);
  const poly::TruncPoly f = ctx.s_entry(w, i, j);
  if (c.fmt() == Format::Json) {
    json j2 = envelope("normal-form", c);
    j2["word"] = w.to_string();
    j2["entry"] = {i, j};
    j2["polynomial"] = ctx.format(f);
    j2["min_degree"] = f.is_zero() ? json(nullptr) : json(f.min_degree());
    out << j2.dump(2) << "\n";
  } else {
    out << "s(" << i << "," << j << ";" << w.to_string() << ") = " << ctx.format(f) << "\n";
    out << "min degree " << degree_text(f.min_degree()) << "\n";
  }
  return kExitOk;
}

// --- eta / theta --------------------------------------------------------

words::AutPair parse_aut(const std::string& text, int n, words::AutWord* parsed = nullptr) {
  const words::AutWord w = words::parse_aut_word(text);
  if (parsed) *parsed = w;
  return words::to_aut(w, n);
}

json columns_json(const std::vector<std::string>& names, const std::vector<std::string>& values) {
  json cols = json::array();
  for (std::size_t v = 0; v < names.size(); ++v) cols.push_back(json{{"generator", names[v]}, {"image", values[v]}});
  return cols;
}

void print_columns(std::ostream& out, const std::vector<std::string>& names, const std::vector<std::string>& values) {
  for (std::size_t v = 0; v < names.size(); ++v) out << names[v] << " -> " << values[v] << "\n";
}

std::vector<std::string> generator_names(const algebra::AlgebraContext& ctx) {
  std::vector<std::string> names;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) names.push_back(ctx.name(poly::Monomial::var(v)));
  return names;
}

int cmd_eta(const RunConfig& c, const std::string& aut_text, int k, std::ostream& out) {
  no_csv(c, "eta");
  if (k < 1) throw BadArgs("--k must be positive");
  if (c.cap < k + 1) throw BadArgs("eta at level k needs --cap >= k+1");
  algebra::AlgebraContext ctx(c.m, c.n, c.cap);
  const words::AutPair a = parse_aut(aut_text, c.n);
  if (!filtration::is_in_D(ctx, a, k)) throw BadArgs("automorphism is not in D(" + std::to_string(k) + ")");
  const filtration::EtaMatrix e = filtration::eta_k(ctx, a, k);
  std::vector<std::string> values;
  for (const poly::TruncPoly& f : e.columns) values.push_back(ctx.format(f));
  const std::vector<std::string> names = generator_names(ctx);
  if (c.fmt() == Format::Json) {
    json j = envelope("eta", c);
    j["aut"] = aut_text;
    j["k"] = k;
    j["columns"] = columns_json(names, values);
    out << j.dump(2) << "\n";
  } else {
    out << "eta_" << k << "(" << aut_text << "): f -> f^sigma - f in degree " << k + 1 << "\n";
    print_columns(out, names, values);
  }
  return kExitOk;
}

int cmd_theta(const RunConfig& c, const std::string& aut_text, const std::string& target, std::ostream& out) {
  no_csv(c, "theta");
  if (c.n < 2) throw BadArgs("theta needs n >= 2");
  const words::AutPair a = parse_aut(aut_text, c.n);
  std::vector<std::string> names, values;
  std::vector<std::pair<std::string, std::string>> projections;
  if (target == "free") {
    if (c.cap < 2) throw BadArgs("theta needs --cap >= 2");
    algebra::AlgebraContext ctx(c.m, c.n, c.cap);
    const crossed::Gr12Map th = crossed::theta(ctx, a);
    names = generator_names(ctx);
    for (const poly::TruncPoly& f : th.columns) values.push_back(ctx.format(f));
    projections.emplace_back("f1", crossed::to_string(crossed::project_f1(ctx, th)));
    projections.emplace_back("f2", crossed::to_string(crossed::project_f2(ctx, th)));
  } else if (target == "abelian") {
    abelian::HAlgebraContext h(c.m, c.n, 3);
    const crossed::Gr12Map th = abelian::theta_H(h, a);
    names = generator_names(h.free());
    for (const poly::TruncPoly& f : th.columns) values.push_back(h.name(h.reduce_to_Y(f)));
    projections.emplace_back("fH", crossed::to_string(abelian::project_fH(h, th)));
  } else {
    throw BadArgs("--target must be free or abelian");
  }
  projections.emplace_back("delta_x", crossed::to_string(crossed::delta_x(a)));
  if (c.fmt() == Format::Json) {
    json j = envelope("theta", c);
    j["aut"] = aut_text;
    j["target"] = target;
    j["columns"] = columns_json(names, values);
    json p = json::object();
    for (const auto& [k, v] : projections) p[k] = v;
    j["projections"] = p;
    out << j.dump(2) << "\n";
  } else {
    out << (target == "free" ? "theta(" : "theta_H(") << aut_text << ")\n";
    print_columns(out, names, values);
    for (const auto& [k, v] : projections) out << k << " = " << v << "\n";
  }
  return kExitOk;
}

// --- verify -------------------------------------------------------------

struct Row {
  std::string id;
  std::string kind;
  verify::CheckResult r;
};

int cmd_verify(const RunConfig& c, const std::string& suite, std::ostream& out) {
  no_csv(c, "verify");
  std::vector<Row> rows;
  auto acceptance = [&](int i) { rows.push_back({"C" + std::to_string(i), "acceptance", verify::criterion(i, c.seed)}); };
  auto context = [&] {
    int idx = 1;
    for (verify::CheckResult& r : verify::context_checks(c.m, c.n, c.cap, c.seed))
      rows.push_back({"X" + std::to_string(idx++), "context", std::move(r)});
  };
  auto diagnostics = [&] {
    int idx = 1;
    for (verify::CheckResult& r : verify::diagnostics(c.seed))
      rows.push_back({"D" + std::to_string(idx++), "diagnostic", std::move(r)});
  };
  if (suite == "all") {
    for (int i = 1; i <= verify::kCriteria; ++i) acceptance(i);
    context();
    diagnostics();
  } else if (suite == "acceptance") {
    for (int i = 1; i <= verify::kCriteria; ++i) acceptance(i);
  } else if (suite == "context") {
    context();
  } else if (suite == "diagnostics") {
    diagnostics();
  } else {
    int i = 0;
    try {
      std::size_t pos = 0;
      i = std::stoi(suite, &pos);
      if (pos != suite.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw BadArgs("--suite must be all, acceptance, context, diagnostics or 1.." + std::to_string(verify::kCriteria));
    }
    if (i < 1 || i > verify::kCriteria) throw BadArgs("criterion number out of range");
    acceptance(i);
  }

  std::size_t failed = 0, passed = 0;
  for (const Row& row : rows) {
    if (!row.r.gating) continue;
    (row.r.pass ? passed : failed) += 1;
  }
  if (c.fmt() == Format::Json) {
    json j = envelope("verify", c);
    j["suite"] = suite;
    json checks = json::array();
    for (const Row& row : rows)
      checks.push_back(json{{"check", row.id + " " + row.r.name},
                            {"status", row.r.pass ? "pass" : "fail"},
                            {"details", json{{"kind", row.kind}, {"gating", row.r.gating}, {"text", row.r.details}}}});
    j["checks"] = checks;
    j["summary"] = json{{"passed", passed}, {"failed", failed}};
    out << j.dump(2) << "\n";
  } else {
    for (const Row& row : rows) {
      const char* status = row.r.gating ? (row.r.pass ? "PASS" : "FAIL") : (row.r.pass ? "info:yes" : "info:no");
      out << status << "\t" << row.id << "\t" << row.r.name << "\t" << row.r.details << "\n";
    }
    out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--m", c.m, "matrix size m (default 2)");
  sub->add_option("--n", c.n, "rank n of the free group (default 3)");
  sub->add_option("--cap", c.cap, "truncation degree (default 3)");
  sub->add_option("--seed", c.seed, "random seed (default 1)");
  sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--log", c.log_level, "log level: error, warn, info, debug")
      ->check(CLI::IsMember({"error", "warn", "info", "debug"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated SL(m) representation algebras of free groups"};
  app.require_subcommand(1);
  RunConfig c;

  std::optional<int> k;
  std::string which, word, entry, aut, target = "free", suite = "all";
  int eta_k = 1;

  CLI::App* dims = app.add_subcommand("dims", "dimensions of gr^k");
  add_common(dims, c);
  dims->add_option("--k", k, "single degree");

  CLI::App* adims = app.add_subcommand("abelian-dims", "dimensions in the free abelian case");
  add_common(adims, c);

  CLI::App* basis = app.add_subcommand("basis", "list a basis");
  add_common(basis, c);
  basis->add_option("--which", which, "Tk, Tk' or Y")->required();
  basis->add_option("--k", k, "degree");

  CLI::App* nf = app.add_subcommand("normal-form", "normal form of s_ij(w)");
  add_common(nf, c);
  nf->add_option("--word", word, "word, e.g. \"[x1,x2] x3^-1\"")->required();
  nf->add_option("--entry", entry, "i,j")->required();

  CLI::App* eta = app.add_subcommand("eta", "Johnson-type image eta_k");
  add_common(eta, c);
  eta->add_option("--aut", aut, "automorphism word, e.g. \"K12 S^-1\"")->required();
  eta->add_option("--k", eta_k, "level (default 1)");

  CLI::App* theta = app.add_subcommand("theta", "crossed homomorphism theta or theta_H");
  add_common(theta, c);
  theta->add_option("--aut", aut, "automorphism word")->required();
  theta->add_option("--target", target, "free or abelian (default free)");

  CLI::App* ver = app.add_subcommand("verify", "run checks");
  add_common(ver, c);
  ver->add_option("--suite", suite, "all, acceptance, context, diagnostics or a criterion number");

  std::vector<std::string> argv_store;
  argv_store.push_back("repalg");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  }

  try {
    if (!c.log_level.empty()) log::set_level(log::parse_level(c.log_level));
    validate(c);
    if (*dims) return cmd_dims(c, k, out);
    if (*adims) return cmd_abelian_dims(c, out);
    if (*basis) return cmd_basis(c, which, k, out);
    if (*nf) return cmd_normal_form(c, word, entry, out);
    if (*eta) return cmd_eta(c, aut, eta_k, out);
    if (*theta) return cmd_theta(c, aut, target, out);
    if (*ver) return cmd_verify(c, suite, out);
  } catch (const BadArgs& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInvalidArgs;
}

}  // namespace repalg::cli
