// Command-line front end: construct and verify difference sets from Dickson
// polynomial images over GF(3^m), tabulate triple-intersection invariants,
// run the ternary digit-sum and carry-bound scans, and survey other orders.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage
// error. Every JSON report embeds (m, modulus, convention, seed, tool
// version) so runs are reproducible bit for bit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewhad/charsum.hpp"
#include "skewhad/digits.hpp"
#include "skewhad/io.hpp"

using namespace skewhad;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u expressions: "1", "-1", "g", "g^3", "-g^2", or any decimal integer
// (embedded mod 3), so scripts stay modulus-independent in intent
Felt parse_u_expr(const FieldCtx& f, const std::string& expr) {
  std::string s = expr;
  bool negate = false;
  if (!s.empty() && s[0] == '-') {
    negate = true;
    s = s.substr(1);
  }
  Felt v;
  if (!s.empty() && s[0] == 'g') {
    std::int64_t e = 1;
    if (s.size() > 1) {
      if (s[1] != '^') throw UsageError("bad u expression: " + expr);
      try {
        e = std::stoll(s.substr(2));
      } catch (...) {
        throw UsageError("bad u expression: " + expr);
      }
    }
    v = f.pow(f.generator(), e);
  } else {
    try {
      std::size_t pos = 0;
      const std::int64_t n = std::stoll(s, &pos);
      if (pos != s.size()) throw UsageError("bad u expression: " + expr);
      v = f.from_int(n);
    } catch (const UsageError&) {
      throw;
    } catch (...) {
      throw UsageError("bad u expression: " + expr);
    }
  }
  return negate ? f.neg(v) : v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_digit_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
  return out;
}

struct CtxOptions {
  std::vector<int> modulus;   // --modulus override
  std::string moduli_config;  // --moduli-config file
};

FieldCtx make_context(int m, const CtxOptions& opt) {
  if (!opt.modulus.empty()) return FieldCtx(m, opt.modulus);
  if (!opt.moduli_config.empty()) {
    const auto cfg = load_moduli_config(opt.moduli_config);
    const auto it = cfg.find(m);
    if (it == cfg.end())
      throw UsageError("moduli config has no entry for m=" + std::to_string(m));
    return FieldCtx(m, it->second);
  }
  return FieldCtx(m);
}

// polynomial given as coefficient:exponent terms, e.g. "1:7,-1:5"
std::vector<std::pair<std::string, std::int64_t>> parse_poly_terms(const std::string& s) {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  for (const auto& tok : split(s, ',')) {
    const auto pos = tok.find(':');
    if (pos == std::string::npos) throw UsageError("bad polynomial term (want coeff:exp): " + tok);
    terms.emplace_back(tok.substr(0, pos), std::stoll(tok.substr(pos + 1)));
  }
  if (terms.empty()) throw UsageError("empty polynomial");
  return terms;
}

struct BuiltFamily {
  std::string label;
  ElementSet set;
  std::optional<Felt> u;  // resolved parameter for d7 families
};

// family tokens: paley | dy1 | dy-1 | d7:<u-expr> | image:<set file> | image
BuiltFamily build_family(const FieldCtx& f, const std::string& token,
                         const std::string& poly_terms, bool squares_only) {
  if (token == "paley") return {"paley", paley_set(f), std::nullopt};
  if (token == "dy1") return {"dy1", dy_image(f, 1), std::nullopt};
  if (token == "dy-1") return {"dy-1", dy_image(f, -1), std::nullopt};
  if (token.rfind("d7:", 0) == 0) {
    const Felt u = parse_u_expr(f, token.substr(3));
    if (u == 0) throw UsageError("d7 family requires nonzero u");
    return {token, dickson_image(f, 7, u), u};
  }
  if (token.rfind("image:", 0) == 0) {
    const auto loaded = read_set_file(token.substr(6));
    if (loaded.ctx->m() != f.m() || loaded.ctx->modulus() != f.modulus())
      throw UsageError("set file context does not match the requested field");
    ElementSet copy(f);
    loaded.set.for_each([&](Felt x) { copy.insert(x); });
    return {token, copy, std::nullopt};
  }
  if (token == "image") {
    if (poly_terms.empty()) throw UsageError("image family needs --exps coeff:exp,...");
    const auto terms = parse_poly_terms(poly_terms);
    std::vector<std::pair<Felt, std::int64_t>> resolved;
    for (const auto& [cexpr, e] : terms) resolved.emplace_back(parse_u_expr(f, cexpr), e);
    auto poly = [&](Felt x) {
      Felt acc = 0;
      for (const auto& [c, e] : resolved) acc = f.add(acc, f.mul(c, f.pow(x, e)));
      return acc;
    };
    return {"image", build_image_set(f, poly, squares_only), std::nullopt};
  }
  throw UsageError("unknown family: " + token);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
}

std::string cache_directory(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SKEWHAD_CACHE_DIR")) return env;
  return {};
}

struct ConstructArgs {
  std::string family;
  int m = 0;
  std::string u_expr = "1";
  std::string mode = "shds";  // shds | pds | raw
  std::string out;
  std::string exps;
  bool no_squares = false;
  CtxOptions ctx;
};

struct VerifyArgs {
  std::string family;
  std::string set_path;
  int m = 0;
  std::string u_expr = "1";
  std::string checks;
  std::string exps;
  std::string out;
  int threads = 0;
  CtxOptions ctx;
};

struct InvariantsArgs {
  int m = 0;
  std::string families;
  std::string stat = "dist";
  std::string convention = "unordered";
  bool compare = false;
  std::string format = "json";
  std::string out;
  std::string exps;
  int threads = 0;
  bool no_cache = false;
  std::string cache_dir;
  CtxOptions ctx;
};

struct AppendixArgs {
  int m = 0;
  std::string mode = "full";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = kDefaultScanSeed;
  std::string out;
  int threads = 0;
};

struct ScanArgs {
  std::string orders;
  std::string ms;
  std::string us;
  std::string format = "json";
  std::string out;
  int threads = 0;
  CtxOptions ctx;
};

int run_construct(const ConstructArgs& a) {
  const FieldCtx f = make_context(a.m, a.ctx);
  std::string token = a.family;
  if (a.family == "d7") token = "d7:" + a.u_expr;

  if (a.mode != "shds" && a.mode != "pds" && a.mode != "raw")
    throw UsageError("--as must be shds, pds or raw");
  if (a.mode == "shds" && a.m % 2 == 0)
    throw UsageError("family '" + a.family +
                     "' with even m is not a skew Hadamard candidate; use --as pds");
  if ((a.mode == "shds" || a.mode == "pds") && a.family == "d7" && a.m % 3 == 0)
    throw UsageError("d7 requires m not divisible by 3 (the order-7 map is not a permutation)");

  const BuiltFamily fam = build_family(f, token, a.exps, !a.no_squares);
  if (a.out.empty()) throw UsageError("construct requires --out");
  write_set_file(a.out, f, fam.set);

  ordered_json j;
  j["meta"] = report_meta(&f, nullptr, nullptr);
  j["family"] = fam.label;
  j["mode"] = a.mode;
  j["cardinality"] = fam.set.cardinality();
  j["out"] = a.out;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  std::shared_ptr<FieldCtx> owned;
  std::optional<BuiltFamily> fam;
  const FieldCtx* f = nullptr;

  if (!a.set_path.empty()) {
    auto loaded = read_set_file(a.set_path);
    owned = loaded.ctx;
    f = owned.get();
    fam = BuiltFamily{"set:" + a.set_path, std::move(loaded.set), std::nullopt};
  } else {
    if (a.family.empty()) throw UsageError("verify needs --family or --set");
    if (a.m == 0) throw UsageError("verify needs --m with --family");
    owned = std::make_shared<FieldCtx>(make_context(a.m, a.ctx));
    f = owned.get();
    std::string token = a.family;
    if (a.family == "d7") token = "d7:" + a.u_expr;
    fam = build_family(*f, token, a.exps, true);
  }

  const auto checks = split(a.checks, ',');
  if (checks.empty()) throw UsageError("verify needs --checks (subset of skew,ds,pds,lemma3,eq4)");

  ordered_json report;
  report["meta"] = report_meta(f, nullptr, nullptr);
  report["family"] = fam->label;
  report["cardinality"] = fam->set.cardinality();
  ordered_json results = ordered_json::array();
  bool all_pass = true;

  std::optional<DsReport> ds;  // shared between the ds and pds checks
  auto get_ds = [&]() -> const DsReport& {
    if (!ds) ds = difference_report(*f, fam->set, a.threads);
    return *ds;
  };

  for (const auto& check : checks) {
    ordered_json r;
    r["check"] = check;
    if (check == "skew") {
      const bool pass = is_skew(*f, fam->set);
      r["pass"] = pass;
      all_pass &= pass;
    } else if (check == "ds") {
      const auto& rep = get_ds();
      const bool pass = rep.verdict == SetVerdict::difference_set;
      r["pass"] = pass;
      r["v"] = rep.v;
      r["k"] = rep.k;
      if (pass) r["lambda"] = rep.lambda;
      r["skew"] = rep.skew;
      all_pass &= pass;
    } else if (check == "pds") {
      const auto& rep = get_ds();
      const bool pass = rep.verdict == SetVerdict::partial_difference_set ||
                        rep.verdict == SetVerdict::difference_set;
      r["pass"] = pass;
      r["v"] = rep.v;
      r["k"] = rep.k;
      if (pass) {
        r["lambda"] = rep.lambda;
        r["mu"] = rep.verdict == SetVerdict::difference_set ? rep.lambda : rep.mu;
      }
      all_pass &= pass;
    } else if (check == "lemma3") {
      const auto rep = lemma_sim_congruence(*f, fam->set);
      r["pass"] = rep.all_pass;
      r["modulus"] = rep.modulus;
      r["witnesses"] = rep.witnesses;
      all_pass &= rep.all_pass;
    } else if (check == "eq4") {
      if (!fam->u) throw UsageError("eq4 needs a d7 family (it is a property of the parameter u)");
      const auto rep = s_beta_congruence(*f, *fam->u);
      r["pass"] = rep.all_pass;
      r["modulus"] = rep.modulus;
      r["witnesses"] = rep.witnesses;
      all_pass &= rep.all_pass;
    } else {
      throw UsageError("unknown check: " + check);
    }
    results.push_back(r);
  }
  report["checks"] = results;
  report["all_pass"] = all_pass;
  emit(report.dump(2), a.out);
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_invariants(const InvariantsArgs& a) {
  if (a.m == 0) throw UsageError("invariants needs --m");
  const FieldCtx f = make_context(a.m, a.ctx);
  PairConvention conv;
  if (a.convention == "unordered")
    conv = PairConvention::unordered_distinct;
  else if (a.convention == "ordered")
    conv = PairConvention::ordered_distinct;
  else
    throw UsageError("--convention must be unordered or ordered");

  const auto family_tokens = split(a.families, ',');
  if (family_tokens.empty()) throw UsageError("invariants needs --families");
  const std::string cache_dir = a.no_cache ? "" : cache_directory(a.cache_dir);

  std::vector<BuiltFamily> fams;
  for (const auto& tok : family_tokens) fams.push_back(build_family(f, tok, a.exps, true));

  ordered_json report;
  report["meta"] = report_meta(&f, &conv, nullptr);
  report["stat"] = a.stat;
  ordered_json results = ordered_json::array();
  std::vector<TripleDist> dists;

  for (const auto& fam : fams) {
    if (a.stat == "dist") {
      TripleDist dist;
      bool from_cache = false;
      std::string cache_file;
      if (!cache_dir.empty()) {
        cache_file =
            (std::filesystem::path(cache_dir) / (dist_cache_key(f, fam.set, conv) + ".json"))
                .string();
        if (std::filesystem::exists(cache_file)) {
          std::ifstream in(cache_file);
          ordered_json j;
          in >> j;
          dist = dist_from_json(j);
          dist.family_label = fam.label;
          from_cache = true;
        }
      }
      if (!from_cache) {
        dist = triple_distribution(f, fam.set, conv, fam.label, a.threads);
        if (!cache_dir.empty()) {
          std::filesystem::create_directories(cache_dir);
          std::ofstream out(cache_file);
          out << dist_to_json(f, dist).dump(2) << "\n";
        }
      }
      ordered_json r = dist_to_json(f, dist);
      r["from_cache"] = from_cache;
      results.push_back(r);
      dists.push_back(std::move(dist));
    } else if (a.stat == "minmax") {
      const auto [mn, mx] = minmax_triple(f, fam.set, conv, a.threads);
      ordered_json r;
      r["family"] = fam.label;
      r["min"] = mn;
      r["max"] = mx;
      results.push_back(r);
      TripleDist stub;  // the (min, max) pair stands in for comparison purposes
      stub.family_label = fam.label;
      stub.m = f.m();
      stub.convention = conv;
      stub.entries = {{mn, 1}, {mx, 1}};
      dists.push_back(std::move(stub));
    } else {
      throw UsageError("--stat must be dist or minmax");
    }
  }
  report["results"] = results;

  if (a.compare) {
    const auto cmp = compare_families(dists);
    ordered_json c;
    c["labels"] = cmp.labels;
    c["pairwise_distinct"] = cmp.pairwise_distinct;
    ordered_json matrix = ordered_json::array();
    for (const auto& row : cmp.equal) matrix.push_back(row);
    c["equal"] = matrix;
    report["compare"] = c;
  }

  if (a.format == "csv") {
    std::ostringstream csv;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      if (a.stat == "dist") {
        csv << dist_to_csv(f, dists[i]);
      } else {
        csv << "# family=" << dists[i].family_label << " m=" << f.m()
            << " convention=" << to_string(conv) << "\n";
        csv << "min,max\n"
            << dists[i].entries.front().first << "," << dists[i].entries.back().first << "\n";
      }
    }
    if (a.compare)
      csv << "# pairwise_distinct="
          << (compare_families(dists).pairwise_distinct ? "true" : "false") << "\n";
    emit(csv.str(), a.out);
  } else if (a.format == "json") {
    emit(report.dump(2), a.out);
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kExitOk;
}

int run_appendix(const std::string& theorem, const AppendixArgs& a) {
  if (a.m == 0) throw UsageError("appendix needs --m");
  ScanMode mode;
  if (a.mode == "full")
    mode = ScanMode::full;
  else if (a.mode == "sampled")
    mode = ScanMode::sampled;
  else
    throw UsageError("--mode must be full or sampled");

  ordered_json j;
  const std::uint64_t seed = a.seed;
  bool holds;
  if (theorem == "goal41" || theorem == "goal42") {
    const ScanReport rep = theorem == "goal41"
                               ? verify_goal41(a.m, mode, a.samples, seed)
                               : verify_goal42(a.m, mode, a.samples, seed, a.threads);
    j["meta"] = report_meta(nullptr, nullptr, mode == ScanMode::sampled ? &seed : nullptr);
    j["theorem"] = rep.theorem;
    j["m"] = rep.m;
    j["mode"] = a.mode;
    j["cases"] = rep.cases;
    j["min"] = rep.min_value;
    j["holds"] = rep.holds;
    ordered_json wit = ordered_json::array();
    for (const auto& w : rep.witnesses) {
      ordered_json e;
      e["a"] = w.a;
      if (w.b >= 0) e["b"] = w.b;
      e["value"] = w.value;
      wit.push_back(e);
    }
    j["witnesses"] = wit;
    holds = rep.holds;
  } else if (theorem == "carry-bounds") {
    const CarryAuditReport rep = carry_lemma_audit(a.m, mode, a.samples, seed, a.threads);
    j["meta"] = report_meta(nullptr, nullptr, mode == ScanMode::sampled ? &seed : nullptr);
    j["theorem"] = "carry-bounds";
    j["m"] = rep.m;
    j["mode"] = a.mode;
    j["cases"] = rep.cases;
    j["holds"] = rep.holds;
    ordered_json viol = ordered_json::array();
    for (const auto& v : rep.violations) {
      ordered_json e;
      e["lemma"] = v.lemma;
      e["a"] = v.a;
      e["b"] = v.b;
      e["carries"] = v.c;
      viol.push_back(e);
    }
    j["violations"] = viol;
    holds = rep.holds;
  } else {
    throw UsageError("unknown appendix theorem: " + theorem);
  }
  emit(j.dump(2), a.out);
  return holds ? kExitOk : kExitCheckFailed;
}

int run_scan(const ScanArgs& a) {
  const auto orders = split(a.orders, ',');
  const auto ms = split(a.ms, ',');
  const auto us = split(a.us, ',');
  if (orders.empty() || ms.empty() || us.empty())
    throw UsageError("scan needs --orders, --m and --u lists");

  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "n,m,u,is_permutation,is_skew,is_ds,is_pds\n";
  for (const auto& mtok : ms) {
    const int m = std::stoi(mtok);
    const FieldCtx f = make_context(m, a.ctx);
    for (const auto& utok : us) {
      const Felt u = parse_u_expr(f, utok);
      for (const auto& ntok : orders) {
        const int n = std::stoi(ntok);
        const bool perm = is_permutation(f, {n, u}).is_permutation;
        const ElementSet img = dickson_image(f, n, u);
        const auto rep = difference_report(f, img, a.threads);
        const bool skew = is_skew(f, img);
        const bool is_ds = rep.verdict == SetVerdict::difference_set;
        const bool is_pds = rep.verdict == SetVerdict::partial_difference_set ||
                            rep.verdict == SetVerdict::difference_set;
        ordered_json row;
        row["n"] = n;
        row["m"] = m;
        row["u"] = utok;
        row["u_index"] = u;
        row["is_permutation"] = perm;
        row["is_skew"] = skew;
        row["is_ds"] = is_ds;
        row["is_pds"] = is_pds;
        row["k"] = rep.k;
        rows.push_back(row);
        csv << n << "," << m << "," << utok << "," << perm << "," << skew << "," << is_ds << ","
            << is_pds << "\n";
      }
    }
  }
  if (a.format == "csv") {
    emit(csv.str(), a.out);
  } else if (a.format == "json") {
    ordered_json j;
    j["meta"] = report_meta(nullptr, nullptr, nullptr);
    j["rows"] = rows;
    emit(j.dump(2), a.out);
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kExitOk;
}

void add_ctx_options(CLI::App* cmd, CtxOptions& ctx) {
  cmd->add_option_function<std::string>(
      "--modulus", [&ctx](const std::string& val) { ctx.modulus = parse_digit_list(val); },
      "modulus digits, constant term first (comma separated)");
  cmd->add_option("--moduli-config", ctx.moduli_config, "JSON file mapping m to modulus digits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew Hadamard difference sets from order-7 Dickson polynomials over GF(3^m)"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a set file for a family");
  construct->add_option("--family", ca.family, "paley | dy1 | dy-1 | d7 | image")->required();
  construct->add_option("--m", ca.m, "extension degree")->required();
  construct->add_option("--u", ca.u_expr, "Dickson parameter (d7 family)");
  construct->add_option("--as", ca.mode, "shds | pds | raw (claim gate; default shds)");
  construct->add_option("--out", ca.out, "output set file")->required();
  construct->add_option("--exps", ca.exps, "image family polynomial, coeff:exp terms");
  construct->add_flag("--no-squares", ca.no_squares, "image of all nonzero x, not squares");
  add_ctx_options(construct, ca.ctx);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run checks against a family or set file");
  verify->add_option("--family", va.family, "paley | dy1 | dy-1 | d7 | image");
  verify->add_option("--set", va.set_path, "set file to verify");
  verify->add_option("--m", va.m, "extension degree (with --family)");
  verify->add_option("--u", va.u_expr, "Dickson parameter (d7 family)");
  verify->add_option("--checks", va.checks, "comma list: skew,ds,pds,lemma3,eq4")->required();
  verify->add_option("--exps", va.exps, "image family polynomial");
  verify->add_option("--out", va.out, "write the JSON report here instead of stdout");
  verify->add_option("--threads", va.threads, "worker cap (0 = hardware)");
  add_ctx_options(verify, va.ctx);

  InvariantsArgs ia;
  auto* invariants = app.add_subcommand("invariants", "triple intersection distributions");
  invariants->add_option("--m", ia.m, "extension degree")->required();
  invariants->add_option("--families", ia.families, "comma list: paley,dy1,dy-1,d7:u,image:file")
      ->required();
  invariants->add_option("--stat", ia.stat, "dist | minmax");
  invariants->add_option("--convention", ia.convention, "unordered | ordered");
  invariants->add_flag("--compare", ia.compare, "emit the pairwise distinctness matrix");
  invariants->add_option("--format", ia.format, "json | csv");
  invariants->add_option("--out", ia.out, "output path (default stdout)");
  invariants->add_option("--exps", ia.exps, "image family polynomial");
  invariants->add_option("--threads", ia.threads, "worker cap (0 = hardware)");
  invariants->add_flag("--no-cache", ia.no_cache, "recompute even if cached");
  invariants->add_option("--cache-dir", ia.cache_dir,
                         "distribution cache directory (default $SKEWHAD_CACHE_DIR)");
  add_ctx_options(invariants, ia.ctx);

  AppendixArgs pa;
  auto* appendix = app.add_subcommand("appendix", "digit-sum and carry-bound verifications");
  appendix->require_subcommand(1);
  std::string theorem;
  for (const char* name : {"goal41", "goal42", "carry-bounds"}) {
    auto* sub = appendix->add_subcommand(name);
    sub->add_option("--m", pa.m, "extension degree")->required();
    sub->add_option("--mode", pa.mode, "full | sampled");
    sub->add_option("--samples", pa.samples, "sample count (sampled mode)");
    sub->add_option("--seed", pa.seed, "RNG seed (sampled mode)");
    sub->add_option("--out", pa.out, "output path (default stdout)");
    sub->add_option("--threads", pa.threads, "worker cap (0 = hardware)");
    sub->callback([&theorem, name] { theorem = name; });
  }

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "survey Dickson orders for set properties");
  scan->add_option("--orders", sa.orders, "comma list of orders n")->required();
  scan->add_option("--m", sa.ms, "comma list of extension degrees")->required();
  scan->add_option("--u", sa.us, "comma list of u expressions")->required();
  scan->add_option("--format", sa.format, "json | csv");
  scan->add_option("--out", sa.out, "output path (default stdout)");
  scan->add_option("--threads", sa.threads, "worker cap (0 = hardware)");
  add_ctx_options(scan, sa.ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*verify) return run_verify(va);
    if (*invariants) return run_invariants(ia);
    if (*appendix) return run_appendix(theorem, pa);
    if (*scan) return run_scan(sa);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
