// Copyright 2026 The bolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "bolkit/corpus.hpp"
#include "bolkit/error.hpp"
#include "bolkit/identities.hpp"
#include "bolkit/mult_groups.hpp"
#include "bolkit/search.hpp"
#include "bolkit/sigma_phi.hpp"
#include "bolkit/symspace.hpp"
#include "bolkit/table_io.hpp"

namespace bolkit::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kVerbNames[] = {
    "validate", "identify", "multgroup", "simple",
    "construct", "symspace", "scan",     "corpus"};

int code(ExitCode c) { return static_cast<int>(c); }

// A failed check that should turn the exit status into `violation`.
struct Outcome {
  Json report = Json::object();
  ExitCode status = ExitCode::ok;

  void flag(ExitCode c) {
    if (static_cast<int>(c) > static_cast<int>(status)) status = c;
  }
};

Json triple_json(const Triple& t) {
  return Json{{"x", t.x}, {"y", t.y}, {"z", t.z}, {"lhs", t.lhs},
              {"rhs", t.rhs}};
}

Json witness_json(const IdentityWitness& w) {
  Json j{{"holds", w.holds}};
  j["witness"] = w.counterexample ? triple_json(*w.counterexample) : Json();
  return j;
}

Json status_json(const ConditionStatus& s) {
  Json j{{"ok", s.ok}};
  j["witness"] = s.ok ? Json() : Json(s.witness);
  return j;
}

Loop load_loop(const std::string& path) {
  return validate_loop(validate_table(read_table_file(path)));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, path + ": cannot open");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Side parse_side(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  if (s == "full") return Side::full;
  throw Error(Errc::parse, "side must be right, left or full");
}

std::vector<Elem> to_elems(const std::vector<long long>& v, std::size_t n,
                           const std::string& what) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (long long x : v) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw Error(Errc::parse, what + " entry " + std::to_string(x) +
                                   " is outside the group");
    }
    out.push_back(static_cast<Elem>(x));
  }
  return out;
}

GroupWithInvolution instance_group(const InstanceText& text,
                                   const std::string& path) {
  FiniteGroup g(validate_loop(validate_table(text.group)));
  if (!text.sigma) throw Error(Errc::parse, path + ": missing sigma line");
  if (text.sigma->size() != g.order()) {
    throw Error(Errc::parse, path + ": sigma needs " +
                                 std::to_string(g.order()) + " entries");
  }
  return GroupWithInvolution(std::move(g),
                             to_elems(*text.sigma, text.group.size(), "sigma"),
                             true);
}

std::vector<std::string> flag_names(const ClassificationReport& r) {
  std::vector<std::string> f;
  if (r.quasigroup) f.push_back("quasigroup");
  if (r.loop) f.push_back("loop");
  if (r.group()) f.push_back("group");
  f.push_back(r.associative.holds ? "associative" : "nonassociative");
  f.push_back(r.right_bol.holds ? "bol" : "not-bol");
  f.push_back(r.moufang.holds ? "moufang" : "not-moufang");
  if (r.commutative) f.push_back("commutative");
  return f;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

std::vector<std::string> corpus_comments(const std::string& name,
                                         const std::string& origin,
                                         const Magma& m) {
  RawTable raw;
  for (const auto& row : m.rows()) raw.emplace_back(row.begin(), row.end());
  const ClassificationReport r = identify(raw);
  return {"name: " + name, "origin: " + origin, "flags: " + join(flag_names(r)),
          "connected: unspecified"};
}

// ---- verbs ---------------------------------------------------------------

Outcome do_validate(const std::string& path) {
  Outcome o;
  o.report["file"] = path;
  const RawTable raw = read_table_file(path);
  o.report["order"] = raw.size();
  try {
    const CayleyTable t = validate_table(raw);
    o.report["quasigroup"] = true;
    try {
      const Loop l = validate_loop(t);
      o.report["loop"] = true;
      o.report["identity"] = l.original_labels()[0];
    } catch (const Error& e) {
      o.report["loop"] = false;
      o.report["error"] = e.what();
      o.flag(ExitCode::violation);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::not_latin) throw;
    o.report["quasigroup"] = false;
    o.report["loop"] = false;
    o.report["error"] = e.what();
    o.flag(ExitCode::violation);
  }
  return o;
}

Outcome do_identify(const std::string& path) {
  Outcome o;
  const ClassificationReport r = identify(read_table_file(path));
  Json& j = o.report;
  j["file"] = path;
  j["order"] = r.order;
  if (r.table_error) {
    j["table_error"] = *r.table_error;
    o.flag(ExitCode::violation);
    return o;
  }
  j["quasigroup"] = r.quasigroup;
  if (r.quasigroup_error) j["quasigroup_error"] = *r.quasigroup_error;
  j["loop"] = r.loop;
  j["identity"] = r.identity ? Json(*r.identity) : Json();
  j["group"] = r.group();
  j["commutative"] = r.commutative;
  j["associative"] = witness_json(r.associative);
  j["right_bol"] = witness_json(r.right_bol);
  j["moufang"] = witness_json(r.moufang);
  if (r.inverse) {
    j["right_inverse_property"] = r.inverse->right_ip;
    j["left_inverse_property"] = r.inverse->left_ip;
  }
  j["flags"] = join(flag_names(r));
  // Implications that must hold on any input.
  bool consistent = true;
  if (r.associative.holds && !(r.right_bol.holds && r.moufang.holds)) {
    consistent = false;
  }
  if (r.inverse && r.right_bol.holds && r.inverse->left_ip &&
      !r.moufang.holds) {
    consistent = false;
  }
  j["implications_hold"] = consistent;
  if (!consistent) o.flag(ExitCode::violation);
  return o;
}

Outcome do_multgroup(const std::string& path, const Options& opt,
                     std::size_t cap) {
  Outcome o;
  const Loop l = load_loop(path);
  const Side side = parse_side(opt.side);
  const MultGroupReport r = mult_group(l, side, cap);
  Json& j = o.report;
  j["file"] = path;
  j["loop_order"] = l.order();
  j["side"] = std::string(side_name(side));
  j["order"] = r.group.order();
  j["generators"] = r.group.generators().size();
  j["inner_order"] = r.inner.order();
  j["simple"] = r.simple;
  const bool transitive = is_transitive(r.group);
  const bool divisible = r.group.order() % l.order() == 0;
  j["transitive"] = transitive;
  j["order_divisible_by_loop_order"] = divisible;
  if (!transitive || !divisible) o.flag(ExitCode::violation);
  if (side == Side::right) {
    const bool inner_ok = inner_generator_check(l, cap);
    j["inner_generated_by_associators"] = inner_ok;
    if (!inner_ok) o.flag(ExitCode::violation);
  }
  if (opt.emit) {
    std::ofstream out(*opt.emit);
    if (!out) throw Error(Errc::parse, *opt.emit + ": cannot write");
    write_perm_list(out, r.group.elements());
    j["emitted"] = *opt.emit;
  }
  return o;
}

Outcome do_simple(const std::string& path, std::size_t cap) {
  Outcome o;
  const Loop l = load_loop(path);
  Json& j = o.report;
  j["file"] = path;
  j["order"] = l.order();
  const bool simple = is_simple_loop(l, cap);
  const bool strong = is_strongly_simple(l, cap);
  j["simple"] = simple;
  j["strongly_simple"] = strong;
  j["strong_implies_simple"] = !strong || simple;
  if (strong && !simple) o.flag(ExitCode::violation);
  const StructureReport s = classify_structure(l, cap);
  Json st{{"applicable", s.applicable}, {"label", s.label()},
          {"right_order", s.right_order}};
  if (s.applicable) {
    st["left_order"] = s.left_order;
    st["full_order"] = s.full_order;
    st["moufang"] = s.moufang;
    Json cases = Json::array();
    for (const auto& e : s.realized) {
      cases.push_back(Json{{"case", std::string(case_label(e.kind))},
                           {"normal_order", e.normal_order},
                           {"intersection_order", e.intersection_order},
                           {"product_order", e.product_order},
                           {"factors_commute", e.factors_commute},
                           {"note", e.note}});
    }
    st["realized"] = std::move(cases);
  }
  j["structure"] = std::move(st);
  return o;
}

Outcome do_construct(const std::string& path, const Options& opt) {
  Outcome o;
  const InstanceText text = read_instance_file(path);
  if (!text.has_phi) throw Error(Errc::parse, path + ": missing phi block");
  GroupWithInvolution gw = instance_group(text, path);
  std::vector<std::pair<Elem, Elem>> phi;
  for (const auto& [a, b] : text.phi) {
    const auto pair = to_elems({a, b}, gw.group().order(), "phi");
    phi.emplace_back(pair[0], pair[1]);
  }
  const SigmaPhiData d(std::move(gw), phi);
  Json& j = o.report;
  j["file"] = path;
  j["group_order"] = d.group().order();
  j["twisted_size"] = d.twisted().size();
  j["n_order"] = d.generated().size();
  j["fixed_order"] = d.fixed().size();
  const SigmaPhiVerdict v = verify_sigma_phi(d);
  j["homomorphism"] = status_json(v.homomorphism);
  j["generation"] = status_json(v.generation);
  j["retraction"] = status_json(v.retraction);
  j["coset_cover"] = status_json(v.coset_cover);
  if (!v.ok()) {
    o.flag(ExitCode::violation);
    return o;
  }
  const ConstructedLoop c = construct_loop(d);
  const Magma& t = c.loop.table();
  j["loop_order"] = c.loop.order();
  j["right_bol"] = witness_json(is_right_bol(t));
  j["moufang"] = witness_json(is_moufang(t));
  j["associative"] = is_associative(t).holds;
  j["phi_injective"] = c.phi_injective;
  const RelationVerdict rel = relations_check(d, c);
  j["relations"] = Json{{"unit", status_json(rel.unit)},
                        {"inverse", status_json(rel.inverse)},
                        {"sandwich", status_json(rel.sandwich)},
                        {"associator", status_json(rel.associator)}};
  const bool cor = corollary1_check(d, c);
  j["stabilizer_generated_by_associators"] = cor;
  j["sigma_phi_simple"] = sigma_phi_simple(d);
  if (!rel.ok() || !cor) o.flag(ExitCode::violation);
  if (opt.out) {
    write_table_file(*opt.out, t,
                     std::vector<std::string>{"constructed from " + path});
    j["written"] = *opt.out;
  }
  return o;
}

Json space_json(const SymSpace& s) {
  Json j{{"size", s.size()}};
  j["base"] = s.base() ? Json(*s.base()) : Json();
  if (s.base()) j["inversion_automorphism"] = inversion_automorphism_check(s);
  return j;
}

Outcome do_symspace(const std::string& path, const Options& opt) {
  Outcome o;
  Json& j = o.report;
  j["file"] = path;
  const std::string text = read_text(path);
  if (text.find("#symspace") != std::string::npos) {
    std::istringstream in(text);
    const SymSpaceText st = parse_symspace(in, path);
    const Magma dot = Magma::from_rows(st.dot);
    const AxiomWitness w = check_symspace(dot);
    j["axioms_hold"] = w.holds;
    if (!w.holds) {
      j["failed_axiom"] = std::string(axiom_name(*w.axiom));
      j["witness"] = triple_json(*w.counterexample);
      o.flag(ExitCode::violation);
      return o;
    }
    if (st.base && *st.base >= dot.order()) {
      throw Error(Errc::parse, path + ": base point outside the space");
    }
    const SymSpace s(dot, st.base);
    j["space"] = space_json(s);
    if (s.base() && !inversion_automorphism_check(s)) {
      o.flag(ExitCode::violation);
    }
    return o;
  }
  std::istringstream in(text);
  const GroupWithInvolution gw = instance_group(parse_instance(in, path), path);
  j["group_order"] = gw.group().order();
  j["fixed_order"] = fixed_subgroup(gw).size();
  const SymSpace twisted = space_on_twisted_set(gw);
  const SymSpace cosets = coset_space(gw);
  j["twisted_space"] = space_json(twisted);
  j["coset_space"] = space_json(cosets);
  const PsiVerdict psi = psi_isomorphism_check(gw);
  j["psi_isomorphism"] = psi.ok;
  if (!psi.ok) j["psi_failure"] = psi.failure;
  if (!psi.ok || !inversion_automorphism_check(twisted) ||
      !inversion_automorphism_check(cosets)) {
    o.flag(ExitCode::violation);
  }
  if (opt.emit) {
    std::ofstream out(*opt.emit);
    if (!out) throw Error(Errc::parse, *opt.emit + ": cannot write");
    write_symspace(out, twisted);
    j["emitted"] = *opt.emit;
  }
  return o;
}

std::vector<fs::path> table_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.is_regular_file() && e.path().extension() == ".tbl") {
          found.push_back(e.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      files.push_back(p);
    } else {
      throw Error(Errc::parse, in + ": no such file or directory");
    }
  }
  return files;
}

Outcome do_scan(const std::vector<std::string>& inputs, std::size_t cap) {
  Outcome o;
  std::vector<NamedLoop> loops;
  Json skipped = Json::array();
  for (const fs::path& f : table_files(inputs)) {
    try {
      Loop l = load_loop(f.string());
      loops.push_back({f.string(), std::move(l)});
    } catch (const Error& e) {
      if (e.code() == Errc::parse) throw;
      skipped.push_back(Json{{"file", f.string()}, {"reason", e.what()}});
    }
  }
  const ScanReport scan = main_theorem_scan(loops, cap);
  Json entries = Json::array();
  bool invariants = true;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const ScanEntry& e = scan.entries[i];
    const bool chain = strong_implies_simple_check(loops[i].loop, cap);
    const BoundCheck b = bound_check(loops[i].loop, cap);
    invariants = invariants && chain && b.holds;
    entries.push_back(Json{{"name", e.name},
                           {"order", e.order},
                           {"bol", e.bol},
                           {"moufang", e.moufang},
                           {"strongly_simple", e.strongly_simple},
                           {"candidate", e.candidate},
                           {"strong_implies_simple", chain},
                           {"right_order", b.right_order},
                           {"bound", b.bound.str()},
                           {"bound_holds", b.holds}});
  }
  o.report["loops"] = loops.size();
  o.report["candidates"] = scan.candidates();
  o.report["invariants_hold"] = invariants;
  o.report["entries"] = std::move(entries);
  o.report["skipped"] = std::move(skipped);
  if (!invariants) o.flag(ExitCode::violation);
  if (scan.candidates() > 0) o.flag(ExitCode::candidate);
  return o;
}

std::string padded(std::size_t i) {
  std::ostringstream s;
  s << std::setw(4) << std::setfill('0') << i;
  return s.str();
}

Json rows_json(const Magma& m) { return Json(m.rows()); }

Outcome do_corpus(const Options& opt, std::ostream& err) {
  Outcome o;
  Json& j = o.report;
  j["kind"] = opt.kind;
  std::vector<std::pair<std::string, CayleyTable>> tables;
  std::string origin;
  if (opt.kind == "group") {
    if (opt.name.empty()) throw Error(Errc::parse, "group needs --name");
    tables.emplace_back(opt.name, group_table(opt.name));
    origin = "group " + opt.name;
  } else if (opt.kind == "chein-double") {
    if (!opt.base) throw Error(Errc::parse, "chein-double needs --base");
    const Loop base = load_loop(*opt.base);
    FiniteGroup g(base);
    const std::string stem = fs::path(*opt.base).stem().string();
    tables.emplace_back("m-" + stem, chein_double(g));
    origin = "chein double of " + stem;
  } else if (opt.kind == "bol-search") {
    BolSearchOptions so;
    so.order = opt.order;
    so.first = opt.first;
    so.non_moufang = opt.non_moufang;
    if (opt.budget) so.budget = *opt.budget;
    so.on_checkpoint = [&err](std::uint64_t nodes) {
      err << "progress: nodes=" << nodes << '\n';
    };
    const BolSearchResult r = bol_search(so);
    j["nodes"] = r.nodes;
    j["exhausted"] = r.exhausted;
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      tables.emplace_back("bol" + std::to_string(opt.order) + "-" + padded(i),
                          r.tables[i]);
    }
    origin = "bol search, order " + std::to_string(opt.order) +
             (opt.non_moufang ? ", non-Moufang" : "");
  } else if (opt.kind == "instance") {
    if (opt.name.empty()) throw Error(Errc::parse, "instance needs --name");
    for (const NamedInstance& inst : standard_instances()) {
      if (inst.name != opt.name) continue;
      std::ostringstream text;
      const std::vector<std::string> comments{"name: " + inst.name};
      write_instance(text, inst.gw, inst.phi ? &*inst.phi : nullptr, comments);
      j["name"] = inst.name;
      j["group_order"] = inst.gw.group().order();
      j["has_phi"] = inst.phi.has_value();
      if (opt.out) {
        std::ofstream out(*opt.out);
        if (!out) throw Error(Errc::parse, *opt.out + ": cannot write");
        out << text.str();
        j["written"] = Json::array({*opt.out});
      } else {
        j["instance"] = text.str();
      }
      return o;
    }
    throw Error(Errc::parse, "unknown instance '" + opt.name + "'");
  } else {
    throw Error(Errc::parse,
                "kind must be group, chein-double, bol-search or instance");
  }

  j["count"] = tables.size();
  Json written = Json::array();
  if (opt.out) {
    fs::path out(*opt.out);
    const bool single_file = tables.size() == 1 && out.extension() == ".tbl";
    if (!single_file) fs::create_directories(out);
    for (const auto& [name, t] : tables) {
      const fs::path target = single_file ? out : out / (name + ".tbl");
      write_table_file(target, t, corpus_comments(name, origin, t));
      written.push_back(target.string());
    }
    j["written"] = std::move(written);
  } else {
    Json list = Json::array();
    for (const auto& [name, t] : tables) {
      list.push_back(Json{{"name", name}, {"rows", rows_json(t)}});
    }
    j["tables"] = std::move(list);
  }
  return o;
}

// ---- rendering -----------------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) {
      return !e.is_object() && !e.is_array();
    });
    if (scalars) {
      out << prefix << '=';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out << ' ';
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_null()) {
    out << prefix << "=none\n";
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      out << prefix << ":\n" << s;
    } else {
      out << prefix << '=' << s << '\n';
    }
  } else {
    out << prefix << '=' << j.dump() << '\n';
  }
}

void render(const Json& j, bool json, std::ostream& out) {
  if (json) {
    out << j.dump(2) << '\n';
  } else {
    flatten(j, "", out);
  }
}

}  // namespace

std::size_t effective_cap(const Options& options) {
  if (options.cap) return *options.cap;
  if (const char* env = std::getenv("BOLKIT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::parse, "BOLKIT_CAP must be a positive integer");
  }
  return kDefaultClosureCap;
}

std::optional<Command> parse_args(int argc, const char* const* argv,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code) {
  Command cmd;
  Options& o = cmd.options;
  CLI::App app{"Finite loop toolkit: identities, multiplication groups, "
               "symmetric spaces and Bol loop constructions.",
               "bolkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON document");
  app.add_flag("--timing", o.timing, "Include elapsed time in the report");
  app.add_option("--cap", o.cap, "Permutation-group closure cap")
      ->check(CLI::PositiveNumber);

  auto inputs = [&](CLI::App* sub, const char* what, bool many) {
    auto* opt = sub->add_option("inputs", cmd.inputs, what)->required();
    if (!many) opt->expected(1);
  };

  auto* validate = app.add_subcommand("validate", "Check that a table is a loop");
  inputs(validate, "Table file", false);
  auto* identify = app.add_subcommand("identify", "Classify a table");
  inputs(identify, "Table file", false);
  auto* mult = app.add_subcommand("multgroup", "Multiplication group of a loop");
  inputs(mult, "Table file", false);
  mult->add_option("--side", o.side, "right, left or full")
      ->check(CLI::IsMember({"right", "left", "full"}));
  mult->add_option("--emit", o.emit, "Write the group elements to this file");
  auto* simple = app.add_subcommand("simple", "Simplicity and structure of Gr");
  inputs(simple, "Table file", false);
  auto* construct =
      app.add_subcommand("construct", "Build the Bol loop of an instance file");
  inputs(construct, "Instance file", false);
  construct->add_option("--out", o.out, "Write the loop table here");
  auto* sym = app.add_subcommand(
      "symspace", "Check a symmetric space or the spaces of an instance");
  inputs(sym, "Space or instance file", false);
  sym->add_option("--emit", o.emit, "Write the twisted-set space here");
  auto* scan = app.add_subcommand("scan", "Scan tables for counterexamples");
  inputs(scan, "Table files or directories", true);
  auto* corpus = app.add_subcommand("corpus", "Generate corpus tables");
  corpus->add_option("--kind", o.kind, "group, chein-double, bol-search, instance")
      ->required()
      ->check(CLI::IsMember({"group", "chein-double", "bol-search", "instance"}));
  corpus->add_option("--name", o.name, "Group or instance name");
  corpus->add_option("--base", o.base, "Base group table for chein-double");
  corpus->add_option("--order", o.order, "Search order")
      ->check(CLI::Range(1, 64));
  corpus->add_option("--first", o.first, "Stop after this many tables");
  corpus->add_flag("--non-moufang", o.non_moufang, "Keep non-Moufang tables only");
  corpus->add_option("--budget", o.budget, "Search node budget");
  corpus->add_option("--out", o.out, "Output file or directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = code(ExitCode::usage);
    return std::nullopt;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  for (std::size_t i = 0; i < std::size(kVerbNames); ++i) {
    if (kVerbNames[i] == name) cmd.verb = static_cast<Verb>(i);
  }
  if (cmd.verb == Verb::corpus && o.kind == "bol-search" && o.order == 0) {
    err << "corpus --kind bol-search needs --order\n";
    exit_code = code(ExitCode::usage);
    return std::nullopt;
  }
  exit_code = 0;
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    const std::size_t cap = effective_cap(cmd.options);
    if (cmd.verb != Verb::corpus && cmd.verb != Verb::scan &&
        cmd.inputs.size() != 1) {
      throw Error(Errc::parse, "expected exactly one input file");
    }
    const std::string first = cmd.inputs.empty() ? "" : cmd.inputs.front();
    switch (cmd.verb) {
      case Verb::validate: o = do_validate(first); break;
      case Verb::identify: o = do_identify(first); break;
      case Verb::multgroup: o = do_multgroup(first, cmd.options, cap); break;
      case Verb::simple: o = do_simple(first, cap); break;
      case Verb::construct: o = do_construct(first, cmd.options); break;
      case Verb::symspace: o = do_symspace(first, cmd.options); break;
      case Verb::scan: o = do_scan(cmd.inputs, cap); break;
      case Verb::corpus: o = do_corpus(cmd.options, err); break;
    }
  } catch (const Error& e) {
    err << "error[" << errc_name(e.code()) << "]: " << e.what() << '\n';
    const bool input_error = e.code() == Errc::parse ||
                             e.code() == Errc::not_square ||
                             e.code() == Errc::too_large ||
                             e.code() == Errc::out_of_range ||
                             e.code() == Errc::precondition;
    return code(input_error ? ExitCode::usage : ExitCode::violation);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error[io]: " << e.what() << '\n';
    return code(ExitCode::usage);
  }
  Json doc{{"verb", std::string(kVerbNames[static_cast<int>(cmd.verb)])}};
  doc.update(o.report);
  doc["status"] = static_cast<int>(o.status);
  if (cmd.options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  render(doc, cmd.options.json, out);
  return code(o.status);
}

}  // namespace bolkit::cli
