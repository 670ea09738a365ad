#include "taukit/commands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "taukit/artranslation.hpp"
#include "taukit/k0.hpp"
#include "taukit/nakayama.hpp"

namespace taukit {

namespace {

using Json = nlohmann::ordered_json;

// Options that consume a value; everything else with a leading -- is a
// bare flag.
const std::set<std::string>& value_keys() {
  static const std::set<std::string> keys = {"sign", "module", "simple", "vertex"};
  return keys;
}

std::map<std::string, std::string> parse_options(const std::vector<std::string>& options) {
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < options.size(); ++i) {
    const std::string& t = options[i];
    if (t.rfind("--", 0) != 0 || t.size() == 2)
      throw InputError("unexpected argument '" + t + "'");
    std::string key = t.substr(2), value;
    if (size_t eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
      if (!value_keys().count(key)) throw InputError("option --" + key + " takes no value");
    } else if (value_keys().count(key)) {
      if (i + 1 == options.size()) throw InputError("option --" + key + " needs a value");
      value = options[++i];
    }
    if (out.count(key)) throw InputError("duplicate option --" + key);
    out[key] = value;
  }
  return out;
}

void check_allowed(const std::map<std::string, std::string>& opts,
                   const std::set<std::string>& allowed, const std::string& cmd) {
  for (const auto& [k, v] : opts)
    if (!allowed.count(k))
      throw InputError("option --" + k + " does not apply to command " + cmd);
}

int parse_int(const std::string& t, const std::string& what) {
  if (t.empty() || t.size() > 9) throw InputError("bad " + what + " '" + t + "'");
  long long v = 0;
  for (char c : t) {
    if (c < '0' || c > '9') throw InputError("bad " + what + " '" + t + "'");
    v = v * 10 + (c - '0');
  }
  return static_cast<int>(v);
}

std::string int_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) out << (c ? " " : "") << m(r, c);
    out << "\n";
  }
  return out.str();
}

std::string rat_matrix_text(const QMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << "\n";
  }
  return out.str();
}

std::string int_row_text(const std::vector<Int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

Json int_matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (Int x : m.data) a.push_back(x);
  return a;
}

Json rat_matrix_json(const QMatrix& m) {
  Json a = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      std::ostringstream s;
      s << m(r, c);
      a.push_back(s.str());
    }
  return a;
}

Json int_vector_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

std::string status_name(TauMapStatus s) {
  switch (s) {
    case TauMapStatus::exists: return "exists";
    case TauMapStatus::not_exists: return "not-exists";
    default: return "undecided";
  }
}

struct Context {
  AlgebraFile file;
  AlgebraPtr alg;
  std::string name;
};

Json base_json(const std::string& cmd, const Context& ctx) {
  Json j;
  j["command"] = cmd;
  j["algebra"] = Json{
      {"name", ctx.name}, {"dim", ctx.alg->dim()}, {"nakayama", ctx.alg->is_nakayama()}};
  return j;
}

RunResult finish(const Json& j, std::string text, int code) {
  RunResult r;
  r.exit_code = code;
  r.text = std::move(text);
  r.json = j.dump();
  return r;
}

RunResult cmd_info(const Context& ctx) {
  Json j = base_json("info", ctx);
  int comps = static_cast<int>(ctx.alg->quiver().components().size());
  j["vertices"] = ctx.alg->num_vertices();
  j["arrows"] = ctx.alg->quiver().num_arrows();
  j["relations"] = static_cast<int>(ctx.alg->relations().size());
  j["components"] = comps;
  std::ostringstream t;
  t << "name: " << ctx.name << "\n"
    << "vertices: " << ctx.alg->num_vertices() << "\n"
    << "arrows: " << ctx.alg->quiver().num_arrows() << "\n"
    << "relations: " << ctx.alg->relations().size() << "\n"
    << "dimension: " << ctx.alg->dim() << "\n"
    << "nakayama: " << (ctx.alg->is_nakayama() ? "yes" : "no") << "\n"
    << "components: " << comps << "\n";
  return finish(j, t.str(), 0);
}

RunResult cmd_cartan(const Context& ctx) {
  IntMatrix c = ctx.alg->cartan_matrix();
  Json j = base_json("cartan", ctx);
  j["matrix"] = int_matrix_json(c);
  return finish(j, int_matrix_text(c), 0);
}

RunResult cmd_coxeter(const Context& ctx, const std::map<std::string, std::string>& opts) {
  CoxeterSign sign = CoxeterSign::plus;
  if (auto it = opts.find("sign"); it != opts.end()) {
    if (it->second == "plus")
      sign = CoxeterSign::plus;
    else if (it->second == "minus")
      sign = CoxeterSign::minus;
    else
      throw InputError("--sign must be plus or minus");
  }
  CoxeterResult r = coxeter_matrix(*ctx.alg, sign);
  Json j = base_json("coxeter", ctx);
  j["sign"] = sign == CoxeterSign::plus ? "plus" : "minus";
  std::ostringstream t;
  t << "sign: " << (sign == CoxeterSign::plus ? "plus" : "minus") << "\n";
  if (!r.cartan_invertible) {
    j["verdict"] = "singular";
    t << "cartan matrix is singular\n";
    return finish(j, t.str(), 0);
  }
  j["integral"] = r.integral;
  if (r.integral)
    j["matrix"] = int_matrix_json(*to_integer(r.matrix));
  else
    j["matrix_rational"] = rat_matrix_json(r.matrix);
  t << "integral: " << (r.integral ? "yes" : "no") << "\n" << rat_matrix_text(r.matrix);
  return finish(j, t.str(), 0);
}

RunResult cmd_ext_quiver(const Context& ctx) {
  Quiver eq = ext_quiver(ctx.alg);
  Json j = base_json("ext-quiver", ctx);
  Json arrows = Json::array();
  std::ostringstream t;
  t << "arrows: " << eq.num_arrows() << "\n";
  for (const Arrow& a : eq.arrows()) {
    arrows.push_back(Json{{"source", ctx.file.vertex_label(a.source)},
                          {"target", ctx.file.vertex_label(a.target)}});
    t << ctx.file.vertex_label(a.source) << " " << ctx.file.vertex_label(a.target) << "\n";
  }
  j["arrows"] = arrows;
  return finish(j, t.str(), 0);
}

RunResult cmd_is_nakayama(const Context& ctx) {
  bool nak = ctx.alg->is_nakayama();
  bool connected = ctx.alg->quiver().components().size() == 1;
  Json j = base_json("is-nakayama", ctx);
  j["verdict"] = nak ? "yes" : "no";
  std::ostringstream t;
  t << "nakayama: " << (nak ? "yes" : "no") << "\n";
  if (nak && connected && ctx.alg->num_vertices() > 0) {
    KupischSeries k = kupisch_series(*ctx.alg);
    j["shape"] = k.cyclic ? "cycle" : "line";
    Json order = Json::array();
    for (VertexId v : k.order) order.push_back(ctx.file.vertex_label(v));
    j["order"] = order;
    Json series = Json::array();
    for (int c : k.c) series.push_back(c);
    j["series"] = series;
    t << "shape: " << (k.cyclic ? "cycle" : "line") << "\norder:";
    for (VertexId v : k.order) t << " " << ctx.file.vertex_label(v);
    t << "\nseries:";
    for (int c : k.c) t << " " << c;
    t << "\n";
  }
  return finish(j, t.str(), 0);
}

RunResult cmd_tau(const Context& ctx, const std::map<std::string, std::string>& opts) {
  bool inverse = opts.count("inverse") > 0;
  bool has_module = opts.count("module") > 0;
  bool has_simple = opts.count("simple") > 0;
  if (has_module == has_simple)
    throw InputError("tau needs exactly one of --module V,L or --simple V");

  Json j = base_json("tau", ctx);
  j["inverse"] = inverse;
  std::ostringstream t;

  if (has_module) {
    const std::string& spec = opts.at("module");
    size_t comma = spec.rfind(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == spec.size())
      throw InputError("--module needs the form V,L");
    VertexId v = ctx.file.vertex_id(spec.substr(0, comma));
    int len = parse_int(spec.substr(comma + 1), "module length");
    KupischSeries k = kupisch_series(*ctx.alg);
    describe_indec(k, v, len);  // validates the range
    auto image = inverse ? closed_form_tau_inverse(k, v, len) : closed_form_tau(k, v, len);
    j["module"] = Json{{"top", ctx.file.vertex_label(v)}, {"length", len}};
    t << "module: M(" << ctx.file.vertex_label(v) << "," << len << ")\n";
    if (!image) {
      j["verdict"] = "zero";
      t << "translate: 0\n";
    } else {
      j["verdict"] = "nonzero";
      j["translate"] = Json{{"top", ctx.file.vertex_label(image->top)},
                            {"length", image->length}};
      std::vector<Int> dim = indec_dim_vector(k, *ctx.alg, image->top, image->length);
      j["dim"] = int_vector_json(dim);
      t << "translate: M(" << ctx.file.vertex_label(image->top) << "," << image->length
        << ")\n"
        << "dimensions: " << int_row_text(dim) << "\n";
    }
    return finish(j, t.str(), 0);
  }

  VertexId v = ctx.file.vertex_id(opts.at("simple"));
  Representation s = standard_module(ctx.alg, StandardKind::simple, v);
  Representation image = inverse ? tau_inverse(s) : tau(s);
  j["simple"] = ctx.file.vertex_label(v);
  t << "simple: " << ctx.file.vertex_label(v) << "\n";
  if (image.is_zero()) {
    j["verdict"] = "zero";
    t << "translate: 0\n";
  } else {
    j["verdict"] = "nonzero";
    std::vector<Int> dim = image.dim_vector();
    j["dim"] = int_vector_json(dim);
    t << "dimensions: " << int_row_text(dim) << "\n";
  }
  return finish(j, t.str(), 0);
}

RunResult cmd_tau_map(const Context& ctx) {
  TauMapVerdict verdict = decide_tau_map(ctx.alg);
  Json j = base_json("tau-map", ctx);
  j["verdict"] = status_name(verdict.status);
  std::ostringstream t;
  t << "status: " << status_name(verdict.status) << "\n";
  if (verdict.witness) j["matrix"] = int_matrix_json(*verdict.witness);
  Json comps = Json::array();
  for (const auto& cv : verdict.components) {
    Json vs = Json::array();
    for (VertexId v : cv.vertices) vs.push_back(ctx.file.vertex_label(v));
    comps.push_back(Json{{"vertices", vs}, {"branch", cv.branch},
                         {"status", status_name(cv.status)}});
    t << "component";
    for (VertexId v : cv.vertices) t << " " << ctx.file.vertex_label(v);
    t << ": " << cv.branch << " " << status_name(cv.status) << "\n";
  }
  j["components"] = comps;
  if (verdict.witness) t << "witness:\n" << int_matrix_text(*verdict.witness);
  return finish(j, t.str(), 0);
}

RunResult cmd_verify(const Context& ctx) {
  KupischSeries k = kupisch_series(*ctx.alg);
  IntMatrix witness = nakayama_tau_matrix(k, *ctx.alg);
  Json j = base_json("verify", ctx);
  j["matrix"] = int_matrix_json(witness);
  Json checks = Json::array();
  std::ostringstream t;
  t << "witness:\n" << int_matrix_text(witness);
  bool all = true;
  int count = 0;
  for (const IndecDescriptor& d : enumerate_indecomposables(k)) {
    if (d.projective) continue;
    Representation m = nakayama_module(ctx.alg, k, d.top, d.length);
    Representation tm = tau(m);
    std::vector<Int> lhs_in = m.dim_vector();
    IntMatrix col(static_cast<int>(lhs_in.size()), 1);
    for (size_t i = 0; i < lhs_in.size(); ++i) col(static_cast<int>(i), 0) = lhs_in[i];
    IntMatrix lhs = witness * col;
    std::vector<Int> rhs = tm.dim_vector();
    bool pass = true;
    for (size_t i = 0; i < rhs.size(); ++i) pass &= lhs(static_cast<int>(i), 0) == rhs[i];
    std::string name =
        "M(" + ctx.file.vertex_label(d.top) + "," + std::to_string(d.length) + ")";
    checks.push_back(Json{{"name", name}, {"pass", pass}});
    t << name << " " << (pass ? "pass" : "fail") << "\n";
    all &= pass;
    ++count;
  }
  j["verdict"] = all ? "pass" : "fail";
  j["checks"] = checks;
  t << "checks: " << count << "\n" << "result: " << (all ? "pass" : "fail") << "\n";
  return finish(j, t.str(), all ? 0 : 2);
}

RunResult cmd_reduce(const Context& ctx, const std::map<std::string, std::string>& opts) {
  if (!opts.count("vertex")) throw InputError("reduce needs --vertex V");
  VertexId v = ctx.file.vertex_id(opts.at("vertex"));
  AlgebraPtr reduced = delete_source_vertex(*ctx.alg, v);

  AlgebraFile rf;
  rf.name = ctx.file.name;
  for (size_t i = 0; i < ctx.file.vertices.size(); ++i)
    if (ctx.file.vertices[i] != v) {
      rf.vertex_labels.push_back(ctx.file.vertex_labels[i]);
      rf.vertices.push_back(ctx.file.vertices[i]);
    }
  for (const ArrowDecl& a : ctx.file.arrows)
    if (a.source != v && a.target != v) rf.arrows.push_back(a);
  for (const Path& rel : reduced->relations()) {
    std::vector<std::string> names;
    for (ArrowId id : rel.arrows) names.push_back(ctx.file.arrow_name(id));
    rf.relations.push_back(std::move(names));
  }

  std::string text = emit_algebra_file(rf);
  Json j = base_json("reduce", ctx);
  j["vertex"] = ctx.file.vertex_label(v);
  j["file"] = text;
  return finish(j, text, 0);
}

RunResult cmd_five_term(const Context& ctx, const std::map<std::string, std::string>& opts) {
  if (!opts.count("simple")) throw InputError("five-term needs --simple V");
  VertexId v = ctx.file.vertex_id(opts.at("simple"));
  Representation s = standard_module(ctx.alg, StandardKind::simple, v);
  FiveTermReport rep = five_term_check(s);

  Json j = base_json("five-term", ctx);
  j["simple"] = ctx.file.vertex_label(v);
  std::ostringstream t;
  if (!rep.applicable) {
    j["verdict"] = "not-applicable";
    j["reason"] = rep.reason;
    t << "applicable: no\nreason: " << rep.reason << "\n";
    return finish(j, t.str(), 0);
  }
  j["verdict"] = rep.all_pass() ? "pass" : "fail";
  j["splits"] = static_cast<int>(rep.splits.size());
  Json checks = Json::array();
  t << "applicable: yes\nsplits: " << rep.splits.size() << "\n";
  for (size_t i = 0; i < rep.splits.size(); ++i) {
    const FiveTermSplitReport& sr = rep.splits[i];
    std::string prefix = "split-" + std::to_string(i) + "-";
    t << prefix << "vertex: " << ctx.file.vertex_label(sr.block_vertex) << "\n";
    const std::pair<std::string, bool> parts[] = {
        {"sequence-one-exact", sr.seq1_exact},
        {"sequence-two-exact", sr.seq2_exact},
        {"kernel-indecomposable", sr.m_indecomposable},
        {"extended-kernel-indecomposable", sr.n_indecomposable},
        {"kernel-non-injective", sr.m_non_injective},
        {"extended-kernel-non-injective", sr.n_non_injective},
        {"kernels-non-isomorphic", sr.endpoints_non_isomorphic},
    };
    for (const auto& [nm, pass] : parts) {
      checks.push_back(Json{{"name", prefix + nm}, {"pass", pass}});
      t << prefix << nm << " " << (pass ? "pass" : "fail") << "\n";
    }
  }
  j["checks"] = checks;
  t << "result: " << (rep.all_pass() ? "pass" : "fail") << "\n";
  return finish(j, t.str(), rep.all_pass() ? 0 : 2);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"info",        "cartan", "coxeter",
                                                 "ext-quiver",  "is-nakayama",
                                                 "tau",         "tau-map", "verify",
                                                 "reduce",      "five-term"};
  return names;
}

std::string usage_text() {
  return "usage: taukit <command> <file.alg | directory> [--json] [options]\n"
         "\n"
         "commands:\n"
         "  info                     counts, dimension, Nakayama flag\n"
         "  cartan                   Cartan matrix, one row per line\n"
         "  coxeter [--sign=plus|minus]\n"
         "                           signed Coxeter matrix (default plus)\n"
         "  ext-quiver               quiver of the algebra's extensions\n"
         "  is-nakayama              flag plus walk data when connected\n"
         "  tau --module V,L [--inverse]\n"
         "                           closed-form translate (Nakayama only)\n"
         "  tau --simple V [--inverse]\n"
         "                           translate of a simple via the engine\n"
         "  tau-map                  decide an integer matrix for the translation\n"
         "  verify                   check the walk witness on every\n"
         "                           non-projective indecomposable (Nakayama only)\n"
         "  reduce --vertex V        delete a source vertex, emit the smaller file\n"
         "  five-term --simple V     exactness report for the split sequences\n"
         "\n"
         "A directory argument runs the command on every *.alg file inside,\n"
         "in filename order. Exit codes: 0 success, 1 input error,\n"
         "2 verification failure; a directory run reports the worst code.\n";
}

RunResult run_command(const std::string& command, const std::vector<std::string>& options,
                      const std::string& file_text, const std::string& fallback_name) {
  try {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
      throw InputError("unknown command '" + command + "'");

    auto opts = parse_options(options);

    Context ctx;
    ctx.file = parse_algebra_file(file_text);
    ctx.alg = ctx.file.algebra();
    ctx.name = ctx.file.name.empty() ? fallback_name : ctx.file.name;

    if (command == "info") {
      check_allowed(opts, {}, command);
      return cmd_info(ctx);
    }
    if (command == "cartan") {
      check_allowed(opts, {}, command);
      return cmd_cartan(ctx);
    }
    if (command == "coxeter") {
      check_allowed(opts, {"sign"}, command);
      return cmd_coxeter(ctx, opts);
    }
    if (command == "ext-quiver") {
      check_allowed(opts, {}, command);
      return cmd_ext_quiver(ctx);
    }
    if (command == "is-nakayama") {
      check_allowed(opts, {}, command);
      return cmd_is_nakayama(ctx);
    }
    if (command == "tau") {
      check_allowed(opts, {"module", "simple", "inverse"}, command);
      return cmd_tau(ctx, opts);
    }
    if (command == "tau-map") {
      check_allowed(opts, {}, command);
      return cmd_tau_map(ctx);
    }
    if (command == "verify") {
      check_allowed(opts, {}, command);
      return cmd_verify(ctx);
    }
    if (command == "reduce") {
      check_allowed(opts, {"vertex"}, command);
      return cmd_reduce(ctx, opts);
    }
    check_allowed(opts, {"simple"}, command);
    return cmd_five_term(ctx, opts);
  } catch (const InputError& e) {
    Json j;
    j["command"] = command;
    j["error"] = e.what();
    return {1, std::string("error: ") + e.what() + "\n", j.dump()};
  } catch (const std::exception& e) {
    Json j;
    j["command"] = command;
    j["error"] = e.what();
    return {2, std::string("verification failure: ") + e.what() + "\n", j.dump()};
  }
}

}  // namespace taukit
