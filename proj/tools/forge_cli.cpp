// dilator-forge: command-line front end.
//
// Subcommands: validate, h check, f check, fix enumerate|compare|embed,
// reduce, verify run.  Exit status: 0 = no violations, 1 = violations
// found, 2 = usage or input error.  Every invocation writes a JSON
// report.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "forge/reduction.hpp"
#include "forge/suites.hpp"

using nlohmann::json;
using namespace forge;

namespace {

constexpr int kSchemaVersion = 1;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (j.is_null()) throw ParseError(path + ": empty document");
  return j;
}

DilatorPtr dilator_by_name(const std::string& name) {
  if (name == "omega") return omega_dilator();
  if (name == "top") return top_dilator();
  if (name == "const") return const_dilator();
  throw ParseError("unknown dilator: " + name + " (expected omega, top or const)");
}

// {"kind":"builtin","name":"DEC"|"BAD"} or
// {"kind":"explicit","fibers":[[[0],[1,0]], ...]} (each fiber a list of
// sequences; prefix closure is taken automatically).
FamilyPtr family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("family: missing \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "builtin") {
    std::string name = j.at("name").get<std::string>();
    if (name == "DEC") return dec_family();
    if (name == "BAD") return bad_family();
    throw ParseError("family: unknown builtin " + name);
  }
  if (kind == "explicit") {
    std::vector<TreePtr> fibers;
    for (const json& fiber : j.at("fibers")) {
      std::vector<Seq> seqs;
      for (const json& s : fiber) seqs.push_back(s.get<Seq>());
      fibers.push_back(explicit_tree(std::move(seqs)));
    }
    return explicit_family(std::move(fibers));
  }
  throw ParseError("family: unknown kind " + kind);
}

// {"size":n} or {"codes":[...],"less_pairs":[[a,b],...]}.
OrderPtr order_from_json(const json& j) {
  if (j.contains("size")) return canonical_order(j.at("size").get<std::size_t>());
  std::vector<Code> codes = j.at("codes").get<std::vector<Code>>();
  std::set<std::pair<Code, Code>> less;
  for (const json& p : j.at("less_pairs")) less.emplace(p.at(0).get<Code>(), p.at(1).get<Code>());
  return explicit_order(std::move(codes), std::move(less));
}

// {"children":[...],"sigma":c}
RawTerm term_from_json(const json& j) {
  RawTerm t;
  t.sigma = j.at("sigma").get<Code>();
  if (j.contains("children")) {
    for (const json& c : j.at("children")) t.children.push_back(term_from_json(c));
  }
  return t;
}

json term_to_json(TermPtr t) {
  json j;
  j["sigma"] = t->sigma;
  j["children"] = json::array();
  for (TermPtr c : t->children) j["children"].push_back(term_to_json(c));
  return j;
}

json violations_to_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const Violation& v : vs) arr.push_back({{"law", v.law}, {"witness", v.witness}});
  return arr;
}

void write_report(const std::string& path, json j) {
  j["schema_version"] = kSchemaVersion;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

std::uint64_t seed_fallback(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("DILATOR_FORGE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

int finish(const std::string& report_path, json body, std::size_t violation_count) {
  body["ok"] = violation_count == 0;
  write_report(report_path, std::move(body));
  return violation_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coded prae-dilators, tree-search dilators and fixed-point notation systems"};
  app.require_subcommand(1);

  std::string report_path = "forge_report.json";
  app.add_option("--report", report_path, "path of the JSON report")->capture_default_str();

  // validate
  auto* validate = app.add_subcommand("validate", "check the prae-dilator laws for a registry entry");
  std::string v_dilator = "omega";
  std::size_t v_arity = 4;
  Code v_codes = 500;
  validate->add_option("--dilator", v_dilator, "omega | top | const")->required();
  validate->add_option("--arity", v_arity, "largest arity probed");
  validate->add_option("--codes", v_codes, "largest code probed");

  // h check
  auto* h_cmd = app.add_subcommand("h", "tree-search dilators H[T,n]");
  auto* h_check = h_cmd->add_subcommand("check", "validate H[T,n] and its coded isomorphism");
  std::string h_family;
  std::string h_builtin = "DEC";
  std::size_t h_level = 0;
  std::size_t h_arity = 3;
  Code h_codes = 300;
  h_check->add_option("--family", h_family, "family JSON file");
  h_check->add_option("--builtin", h_builtin, "builtin family name (used when --family is absent)");
  h_check->add_option("--level", h_level, "fiber index n");
  h_check->add_option("--arity", h_arity, "largest arity probed");
  h_check->add_option("--codes", h_codes, "largest code probed");

  // f check
  auto* f_cmd = app.add_subcommand("f", "the composite prae-dilator F[T]");
  auto* f_check = f_cmd->add_subcommand("check", "validate F[T] including normality");
  std::string f_family;
  std::string f_builtin = "DEC";
  std::size_t f_arity = 3;
  Code f_codes = 300;
  f_check->add_option("--family", f_family, "family JSON file");
  f_check->add_option("--builtin", f_builtin, "builtin family name (used when --family is absent)");
  f_check->add_option("--arity", f_arity, "largest arity probed");
  f_check->add_option("--codes", f_codes, "largest code probed");

  // fix enumerate | compare | embed
  auto* fix = app.add_subcommand("fix", "the notation system Fix(T)");
  auto* fix_enum = fix->add_subcommand("enumerate", "all terms with L_T below a bound");
  std::string e_dilator = "omega";
  std::string e_lbound = "1000";
  fix_enum->add_option("--dilator", e_dilator, "omega | top | const")->required();
  fix_enum->add_option("--l-bound", e_lbound, "decimal length bound");
  auto* fix_cmp = fix->add_subcommand("compare", "compare two serialized terms");
  std::string c_dilator = "omega";
  std::vector<std::string> c_files;
  fix_cmp->add_option("--dilator", c_dilator, "omega | top | const")->required();
  fix_cmp->add_option("files", c_files, "two term JSON files")->expected(2);
  auto* fix_embed_cmd = fix->add_subcommand("embed", "embed a term into the canonical fixed point");
  std::string m_dilator = "omega";
  std::string m_file;
  fix_embed_cmd->add_option("--dilator", m_dilator, "omega | top | const")->required();
  fix_embed_cmd->add_option("file", m_file, "term JSON file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build and verify the J table for a tree family");
  std::string r_family;
  std::string r_builtin;
  Code r_bound = 200;
  std::string r_out = "table.json";
  std::size_t r_depth = 12;
  reduce->add_option("--family", r_family, "family JSON file");
  reduce->add_option("--builtin", r_builtin, "builtin family name (used when --family is absent)");
  reduce->add_option("--code-bound", r_bound, "largest pair code in the table");
  reduce->add_option("--out", r_out, "table output file")->capture_default_str();
  reduce->add_option("--probe-depth", r_depth, "depth of the progressiveness probe");

  // verify run
  auto* verify = app.add_subcommand("verify", "named verification suites");
  auto* verify_run = verify->add_subcommand("run", "run one suite");
  std::string s_name;
  std::string s_config;
  std::uint64_t s_seed = 0;
  verify_run->add_option("--suite", s_name, "suite name")->required();
  verify_run->add_option("--config", s_config, "suite config JSON file");
  auto* seed_opt = verify_run->add_option("--seed", s_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      DilatorPtr T = dilator_by_name(v_dilator);
      ValidationReport rep = validate_prae_dilator(*T, v_arity, v_codes);
      if (T->mu1()) {
        ValidationReport nrep = validate_normal(*T, v_arity, v_codes);
        rep.checks += nrep.checks;
        for (const Violation& v : nrep.violations) rep.violations.push_back(v);
      }
      json body{{"command", "validate"},
                {"dilator", v_dilator},
                {"checks", rep.checks},
                {"violations", violations_to_json(rep.violations)}};
      return finish(report_path, std::move(body), rep.violations.size());
    }

    if (*h_check) {
      FamilyPtr family = h_family.empty() ? family_from_json({{"kind", "builtin"}, {"name", h_builtin}})
                                          : family_from_json(load_json(h_family));
      auto T = h_prae_dilator(family, h_level);
      ValidationReport rep = validate_prae_dilator(*T, h_arity, h_codes);
      // coded isomorphism round trips on every enumerated member
      std::size_t iso_checks = 0;
      std::vector<Violation> iso_violations;
      for (std::size_t m = 0; m <= h_arity; ++m) {
        OrderPtr X = canonical_order(m);
        for (Code c : h_order(family, h_level, X)->enumerate(h_codes)) {
          ++iso_checks;
          HSeq tau = h_decode(c);
          if (h_from_coded(*family, h_level, X,
                           h_to_coded(*family, h_level, X, tau)) != tau) {
            iso_violations.push_back({"h iso round trip", std::to_string(c)});
          }
        }
      }
      rep.checks += iso_checks;
      for (const Violation& v : iso_violations) rep.violations.push_back(v);
      json body{{"command", "h check"},
                {"family", family->describe()},
                {"level", h_level},
                {"checks", rep.checks},
                {"violations", violations_to_json(rep.violations)}};
      return finish(report_path, std::move(body), rep.violations.size());
    }

    if (*f_check) {
      FamilyPtr family = f_family.empty() ? family_from_json({{"kind", "builtin"}, {"name", f_builtin}})
                                          : family_from_json(load_json(f_family));
      auto T = f_prae_dilator(family);
      ValidationReport rep = validate_prae_dilator(*T, f_arity, f_codes);
      ValidationReport nrep = validate_normal(*T, f_arity, f_codes);
      rep.checks += nrep.checks;
      for (const Violation& v : nrep.violations) rep.violations.push_back(v);
      json body{{"command", "f check"},
                {"family", family->describe()},
                {"checks", rep.checks},
                {"violations", violations_to_json(rep.violations)}};
      return finish(report_path, std::move(body), rep.violations.size());
    }

    if (*fix_enum) {
      FixSystem sys(dilator_by_name(e_dilator));
      std::vector<TermPtr> ts = enumerate_fix(sys, Big(e_lbound.c_str()));
      json terms = json::array();
      for (TermPtr t : ts) {
        json j = term_to_json(t);
        j["goedel"] = term_goedel(t).str();
        j["length"] = term_length(t).str();
        j["height"] = t->height;
        terms.push_back(std::move(j));
      }
      json body{{"command", "fix enumerate"},
                {"dilator", e_dilator},
                {"l_bound", e_lbound},
                {"count", ts.size()},
                {"terms", std::move(terms)}};
      return finish(report_path, std::move(body), 0);
    }

    if (*fix_cmp) {
      FixSystem sys(dilator_by_name(c_dilator));
      TermPtr a = sys.intern(term_from_json(load_json(c_files[0])));
      TermPtr b = sys.intern(term_from_json(load_json(c_files[1])));
      Cmp c = sys.compare(a, b);
      std::string verdict = c == Cmp::Less ? "less" : (c == Cmp::Equal ? "equal" : "greater");
      std::cout << verdict << "\n";
      json body{{"command", "fix compare"}, {"dilator", c_dilator}, {"result", verdict}};
      return finish(report_path, std::move(body), 0);
    }

    if (*fix_embed_cmd) {
      auto sys = std::make_shared<FixSystem>(dilator_by_name(m_dilator));
      TermPtr t = sys->intern(term_from_json(load_json(m_file)));
      // the canonical witness is Fix(T) itself with xi_T; the embedding
      // must land back on the term it started from
      auto fo = fix_order(sys);
      FixedPointWitness w{fo, [&fo](const DElement& d) { return xi_apply_coded(*fo, d); }};
      Code image = fix_embed(w, t);
      bool identity = term_goedel(t) == Big(image);
      json body{{"command", "fix embed"},
                {"dilator", m_dilator},
                {"image_code", image},
                {"identity", identity}};
      std::cout << image << "\n";
      return finish(report_path, std::move(body), identity ? 0 : 1);
    }

    if (*reduce) {
      if (r_family.empty() && r_builtin.empty()) throw ParseError("reduce: need --family or --builtin");
      FamilyPtr family = r_family.empty() ? family_from_json({{"kind", "builtin"}, {"name", r_builtin}})
                                          : family_from_json(load_json(r_family));
      json warnings = json::array();
      for (std::size_t n = 0; n < 2; ++n) {
        ProgressivenessVerdict pv = progressive_at_bounded(*family, n, r_depth, 4);
        if (pv.refuted) {
          warnings.push_back("family is not progressive at level " + std::to_string(n) +
                             "; theorem clauses may fail");
        }
      }
      FixSystem sys(f_prae_dilator(family));
      JTable table = build_J(family, sys, r_bound);
      JVerdict verdict = verify_J(table, sys);
      json rows = json::array();
      for (const JEntry& e : table.entries) {
        json row{{"pair_code", e.pair_code}, {"n", e.n}, {"sigma_code", e.fiber_code}};
        // goedel numbers of deep towers are astronomically large; emit
        // them only while they stay printable
        if (e.image->height <= 6) {
          row["image_code"] = term_goedel(e.image).str();
        } else {
          row["image_code"] = nullptr;
          row["image_height"] = e.image->height;
        }
        rows.push_back(std::move(row));
      }
      json table_doc{{"schema_version", kSchemaVersion},
                     {"family", family->describe()},
                     {"code_bound", r_bound},
                     {"entries", std::move(rows)}};
      std::ofstream out(r_out);
      out << table_doc.dump(2) << "\n";
      json body{{"command", "reduce"},
                {"family", family->describe()},
                {"code_bound", r_bound},
                {"table", r_out},
                {"entries", table.entries.size()},
                {"pairs_checked", verdict.pairs_checked},
                {"warnings", std::move(warnings)},
                {"violations", json::array()}};
      for (const std::string& v : verdict.violations) {
        body["violations"].push_back({{"law", "theorem clause"}, {"witness", v}});
      }
      return finish(report_path, std::move(body), verdict.violations.size());
    }

    if (*verify_run) {
      SuiteConfig cfg;
      if (!s_config.empty()) {
        json j = load_json(s_config);
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("arity_bound")) cfg.arity_bound = j.at("arity_bound").get<std::size_t>();
        if (j.contains("code_bound")) cfg.code_bound = j.at("code_bound").get<Code>();
        if (j.contains("l_bound")) cfg.l_bound = j.at("l_bound").get<std::string>();
        if (j.contains("chain_len")) cfg.chain_len = j.at("chain_len").get<std::size_t>();
        if (j.contains("depth")) cfg.depth = j.at("depth").get<std::size_t>();
        if (j.contains("width")) cfg.width = j.at("width").get<std::size_t>();
      }
      if (seed_opt->count() > 0) {
        cfg.seed = s_seed;
      } else if (cfg.seed == 0) {
        cfg.seed = seed_fallback(s_seed, false);
      }
      SuiteReport rep = run_suite(s_name, cfg);
      json body{{"command", "verify run"},
                {"suite", rep.suite},
                {"seed", cfg.seed},
                {"checks", rep.checks},
                {"elapsed_seconds", rep.elapsed_seconds},
                {"violations", violations_to_json(rep.violations)}};
      std::cout << rep.suite << ": " << rep.checks << " checks, " << rep.violations.size()
                << " violations\n";
      return finish(report_path, std::move(body), rep.violations.size());
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    write_report(report_path, json{{"error", e.what()}});
    return 2;
  }
  return 2;
}
