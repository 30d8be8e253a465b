#include "dispatch.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace gsp4h::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "dot") return Format::dot;
  throw Error(ErrorKind::ParseError, "unknown format: " + s);
}

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid: return "invalid";
    case Status::degenerate: return "degenerate";
  }
  return "?";
}

int exit_code(Status s) { return static_cast<int>(s); }

Status worst(Status x, Status y) { return exit_code(x) >= exit_code(y) ? x : y; }

Status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidData:
    case ErrorKind::ConstraintViolated:
    case ErrorKind::InvalidIndexSet:
    case ErrorKind::InconsistentData:
    case ErrorKind::VariantMismatch:
    case ErrorKind::ZeroArgument:
    case ErrorKind::DegreeLimit:
      return Status::invalid;
    default:
      return Status::degenerate;
  }
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"validate", "flag",   "kernel", "recover", "glue",  "matrices",
                                          "ledger",   "socle",  "hecke",  "classify", "batch", "sweep"};
  return c;
}

namespace {

struct Result {
  Status status = Status::ok;
  json payload;
  std::vector<std::string> citations;
  std::string dot;
  std::string text;
};

bool symbolic_mode(const json& doc, const Options& opt) {
  if (opt.symbolic) return true;
  if (doc.is_object() && doc.contains("symbolic")) {
    if (!doc["symbolic"].is_boolean()) throw Error(ErrorKind::ParseError, "symbolic must be a boolean");
    return doc["symbolic"].get<bool>();
  }
  return false;
}

// The section of the input document for a command; flat documents are accepted.
json section(const json& doc, const char* name) {
  if (doc.is_null()) return json::object();
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "input document must be an object");
  if (doc.contains("schema")) {
    const json& s = doc["schema"];
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion)
      throw Error(ErrorKind::ParseError, "unsupported schema version");
  }
  if (doc.contains(name)) {
    json sec = doc[name];
    if (!sec.is_object()) throw Error(ErrorKind::ParseError, std::string(name) + " must be an object");
    if (doc.contains("symbolic") && !sec.contains("symbolic")) sec["symbolic"] = doc["symbolic"];
    return sec;
  }
  return doc;
}

template <class F>
F param(const json& doc, const char* key, bool symbolic) {
  if (!doc.contains(key) && symbolic) return parse_field<F>(key);
  return get_field<F>(doc, key);
}

template <class F>
PhiModuleData<F> phi_data(const json& doc, bool symbolic) {
  PhiModuleData<F> d;
  d.p = get_long(doc, "p");
  d.alphas = get_alphas(doc);
  d.weights = get_weights(doc);
  d.a = param<F>(doc, "a", symbolic);
  d.b = param<F>(doc, "b", symbolic);
  return d;
}

template <class F>
json mode_fields(const F& a, const F& b) {
  return json{{"a", a.to_string()}, {"b", b.to_string()}};
}

template <class F>
Result cmd_validate(const json& doc, bool symbolic) {
  const auto d = phi_data<F>(doc, symbolic);
  const auto rep = validate(d);
  Result r;
  r.payload = to_json(rep);
  if (const Check* c = rep.first_failure())
    r.status = c->name == "nondegeneracy" ? Status::degenerate : Status::invalid;
  r.citations = {"filtered-phi-module-structure", "hodge-parameter-nondegeneracy"};
  return r;
}

template <class F>
Result cmd_flag(const json& doc, bool symbolic) {
  const auto d = phi_data<F>(doc, symbolic);
  const auto hf = standard_filtration(d);
  json members = json::array();
  for (const auto& m : hf.flag.members) members.push_back(to_json(m));
  json vs = json::array();
  for (const auto& v : hf.v) vs.push_back(to_json(v));
  json jumps = json::array();
  for (long j : hf.jumps) jumps.push_back(j);
  json pl = json::array();
  for (const auto& x : f2_plucker(d.a, d.b)) pl.push_back(x.to_string());
  Result r;
  r.payload = mode_fields(d.a, d.b);
  r.payload["basis_vectors"] = vs;
  r.payload["members"] = members;
  r.payload["jumps"] = jumps;
  r.payload["anisotropic"] = flag_anisotropy_check(hf.flag);
  r.payload["general_position"] = general_position(hf.flag);
  r.payload["f2_plucker"] = pl;
  r.payload["weak_admissibility"] = to_json(weak_admissibility(d));
  r.citations = {"standard-hodge-filtration", "symplectic-flag-anisotropy", "weak-admissibility"};
  return r;
}

template <class F>
Result cmd_kernel(const json& doc, bool symbolic) {
  const F a = param<F>(doc, "a", symbolic), b = param<F>(doc, "b", symbolic);
  const auto k = kernel_basis(a, b);
  Result r;
  r.payload = mode_fields(a, b);
  r.payload["rank"] = rank(jbar(a, b));
  r.payload["dim"] = k.space.dim();
  r.payload["basis"] = to_json(k.space);
  r.citations = {"summed-tangent-map", "tangent-map-kernel"};
  return r;
}

template <class F>
Result cmd_recover(const json& doc, bool symbolic) {
  Result r;
  r.citations = {"tangent-map-kernel", "hodge-parameter-recovery"};
  if (doc.contains("kernel")) {
    const auto rows = get_rows<F>(doc["kernel"], kBlockDim, "kernel");
    const auto [a, b] = recover_parameters(Subspace<F>::span(rows, kBlockDim));
    r.payload = mode_fields(a, b);
    r.payload["source"] = "kernel";
    return r;
  }
  const F a = param<F>(doc, "a", symbolic), b = param<F>(doc, "b", symbolic);
  const auto [ra, rb] = recover_parameters(kernel_basis(a, b).space);
  r.payload = mode_fields(ra, rb);
  r.payload["source"] = "parameters";
  r.payload["round_trip"] = ra == a && rb == b;
  if (!(ra == a && rb == b)) r.status = Status::degenerate;
  return r;
}

template <class F>
Result cmd_glue(const json& doc, bool symbolic) {
  Result r;
  json gens = json::array();
  for (const auto& g : glue_generator_list())
    gens.push_back({{"parabolic", g.parabolic}, {"w", g.w.word()}, {"partner", g.partner.word()}, {"z", g.z}});
  const auto glue = glue_subspace<F>();
  r.payload["generators"] = gens;
  r.payload["dim"] = glue.dim();
  r.payload["basis"] = to_json(glue);
  if (doc.contains("a") || doc.contains("b") || symbolic) {
    const F a = param<F>(doc, "a", symbolic), b = param<F>(doc, "b", symbolic);
    const auto L = l_invariant_plane(a, b);
    r.payload["a"] = a.to_string();
    r.payload["b"] = b.to_string();
    r.payload["contained_in_kernel"] = kernel_basis(a, b).space.contains(glue);
    r.payload["kernel_dim"] = L.kernel_dim;
    r.payload["quotient_dim"] = L.quotient_dim;
    r.payload["l_invariant_plane"] = to_json(L.plane);
  }
  r.citations = {"parabolic-gluing", "l-invariant-dimension"};
  return r;
}

template <class F>
Result cmd_matrices(const json& doc, bool symbolic) {
  const F a = param<F>(doc, "a", symbolic), b = param<F>(doc, "b", symbolic);
  Result r;
  r.payload = mode_fields(a, b);
  json ms = json::array();
  for (const auto& [name, m] : generator_matrices(a, b)) ms.push_back({{"name", name}, {"matrix", to_json(m)}});
  r.payload["matrices"] = ms;
  r.citations = {"eigenline-operators", "generator-matrices"};
  return r;
}

Result cmd_ledger() {
  Result r;
  const auto rep = compute_ledger();
  r.payload = to_json(rep);
  if (!rep.ok()) r.status = Status::degenerate;
  for (const auto& e : rep.entries)
    if (std::find(r.citations.begin(), r.citations.end(), e.source) == r.citations.end())
      r.citations.push_back(e.source);
  return r;
}

Result cmd_socle(const json& doc, const Options& opt) {
  std::string kind;
  std::optional<WeylElem> w;
  if (!opt.args.empty()) kind = opt.args[0];
  else kind = get_scalar_string(require(doc, "kind"), "kind");
  if (opt.args.size() > 1) w = WeylElem::parse(opt.args[1]);
  else if (doc.contains("w")) w = WeylElem::parse(get_scalar_string(doc["w"], "w"));
  const auto d = socle_diagram(parse_socle_kind(kind), w);
  Result r;
  r.payload = to_json(d);
  r.dot = to_dot(d);
  r.text = to_text(d);
  r.citations = {"principal-series-socle-filtration", "locally-analytic-constituents"};
  return r;
}

Result cmd_hecke(const json& doc) {
  Result r;
  r.citations = {"hecke-eigenvalues-and-frobenius"};
  const long l = get_long(doc, "l");
  if (doc.contains("coeffs")) {
    const json& c = doc["coeffs"];
    if (!c.is_array() || c.size() != 5) throw Error(ErrorKind::ParseError, "coeffs must hold 5 scalars");
    FrobeniusData f;
    for (size_t i = 0; i < 5; ++i) f.coeffs[i] = get_rational(c[i], "coeffs");
    f.sim = get_rational(require(doc, "sim"), "sim");
    r.payload["hecke"] = to_json(ideal_generators(f, l));
    return r;
  }
  HeckeData h;
  h.l = l;
  h.c0 = get_rational(require(doc, "c0"), "c0");
  h.c1 = get_rational(require(doc, "c1"), "c1");
  h.c2 = get_rational(require(doc, "c2"), "c2");
  const auto f = hecke_charpoly(h);
  const auto back = ideal_generators(f, l);
  r.payload["frobenius"] = to_json(f);
  r.payload["round_trip"] = back.c0 == h.c0 && back.c1 == h.c1 && back.c2 == h.c2;
  return r;
}

Result cmd_classify(const json& doc) {
  const Alphas al = get_alphas(doc);
  const HodgeWeights h = get_weights(doc);
  const long p = get_long(doc, "p");
  const Rational C = get_rational(require(doc, "C"), "C");
  const auto rep = classicality_classify(al, h, p, C);
  Result r;
  r.payload = to_json(rep);
  r.payload["bruteforce_agrees"] = classify_wset_bruteforce(al, h, p) == rep.w_set;
  r.citations = {"classicality-bounds", "refinement-admissibility"};
  return r;
}

template <class F>
Result dispatch_field(const std::string& cmd, const json& sec, bool symbolic) {
  if (cmd == "validate") return cmd_validate<F>(sec, symbolic);
  if (cmd == "flag") return cmd_flag<F>(sec, symbolic);
  if (cmd == "kernel") return cmd_kernel<F>(sec, symbolic);
  if (cmd == "recover") return cmd_recover<F>(sec, symbolic);
  if (cmd == "glue") return cmd_glue<F>(sec, symbolic);
  return cmd_matrices<F>(sec, symbolic);
}

Result dispatch_result(const std::string& cmd, const json& doc, const Options& opt, bool& symbolic) {
  symbolic = false;
  if (cmd == "ledger") return cmd_ledger();
  if (cmd == "socle") return cmd_socle(section(doc, "socle"), opt);
  if (cmd == "hecke") return cmd_hecke(section(doc, "hecke"));
  if (cmd == "classify") return cmd_classify(section(doc, "classify"));
  if (cmd == "validate" || cmd == "flag" || cmd == "kernel" || cmd == "recover" || cmd == "glue" ||
      cmd == "matrices") {
    const json sec = section(doc, "phi_module");
    symbolic = symbolic_mode(sec, opt);
    return symbolic ? dispatch_field<RatFunc>(cmd, sec, true) : dispatch_field<Rational>(cmd, sec, false);
  }
  throw Error(ErrorKind::ParseError, "unknown command: " + cmd);
}

}  // namespace

Outcome dispatch(const std::string& command, const json& doc, const Options& opt) {
  Outcome o;
  json report{{"schema", kSchemaVersion}, {"command", command}};
  bool symbolic = false;
  try {
    Result r = dispatch_result(command, doc, opt, symbolic);
    o.status = r.status;
    report["mode"] = symbolic ? "symbolic" : "rational";
    report["status"] = to_string(r.status);
    report["payload"] = std::move(r.payload);
    report["citations"] = r.citations;
    if (!r.dot.empty()) report["dot"] = r.dot;
    if (!r.text.empty()) report["text"] = r.text;
  } catch (const Error& e) {
    o.status = status_of(e.kind());
    report["mode"] = symbolic ? "symbolic" : "rational";
    report["status"] = to_string(o.status);
    report["payload"] = {{"error", gsp4h::to_string(e.kind())}, {"message", e.what()}};
    report["citations"] = json::array();
  } catch (const json::exception& e) {
    o.status = Status::invalid;
    report["mode"] = symbolic ? "symbolic" : "rational";
    report["status"] = to_string(o.status);
    report["payload"] = {{"error", "ParseError"}, {"message", e.what()}};
    report["citations"] = json::array();
  }
  o.report = std::move(report);
  return o;
}

std::vector<Outcome> batch(const json& items, const Options& opt) {
  if (!items.is_array()) throw Error(ErrorKind::ParseError, "batch input must be an array");
  std::vector<Outcome> out;
  out.reserve(items.size());
  for (const auto& item : items) {
    if (!item.is_object() || !item.contains("command") || !item["command"].is_string()) {
      Outcome o;
      o.status = Status::invalid;
      o.report = {{"schema", kSchemaVersion},
                  {"command", nullptr},
                  {"status", to_string(o.status)},
                  {"payload", {{"error", "ParseError"}, {"message", "batch item needs a command"}}},
                  {"citations", json::array()}};
      out.push_back(std::move(o));
      continue;
    }
    const std::string cmd = item["command"].get<std::string>();
    json input = item.contains("input") ? item["input"] : json::object();
    if (cmd == "batch" || cmd == "sweep") {
      Outcome o = dispatch("?", json::object(), opt);
      o.status = Status::invalid;
      o.report["command"] = cmd;
      o.report["status"] = to_string(o.status);
      o.report["payload"] = {{"error", "ParseError"}, {"message", "nested " + cmd + " is not allowed"}};
      out.push_back(std::move(o));
      continue;
    }
    Options item_opt = opt;
    item_opt.args.clear();
    if (item.contains("symbolic") && item["symbolic"].is_boolean()) item_opt.symbolic = item["symbolic"].get<bool>();
    out.push_back(dispatch(cmd, input, item_opt));
  }
  return out;
}

json sweep(std::uint64_t seed, long count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  json items = json::array();
  while (static_cast<long>(items.size()) < count) {
    const Rational a = Rational(num(rng)) / Rational(den(rng));
    const Rational b = Rational(num(rng)) / Rational(den(rng));
    if (!nondegenerate(a, b)) continue;
    items.push_back({{"command", "recover"}, {"input", {{"a", a.to_string()}, {"b", b.to_string()}}}});
  }
  return items;
}

namespace {

void render_text(const json& v, std::ostream& os, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [](const json& x) {
    for (const auto& e : x)
      if (e.is_structured()) return false;
    return true;
  };
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !(x.is_array() && flat(x))) {
        os << pad << k << ":\n";
        render_text(x, os, indent + 2);
      } else if (x.is_array()) {
        os << pad << k << ": [";
        for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar(x[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << scalar(x) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_array() && flat(x)) {
        os << pad << "[";
        for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar(x[i]);
        os << "]\n";
      } else if (x.is_structured()) {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      } else {
        os << pad << "- " << scalar(x) << "\n";
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string render(const Outcome& o, Format f) {
  const json& r = o.report;
  switch (f) {
    case Format::json:
      return r.dump(2) + "\n";
    case Format::dot:
      if (!r.contains("dot")) throw Error(ErrorKind::ParseError, "dot output is only available for socle");
      return r["dot"].get<std::string>();
    case Format::text: {
      std::ostringstream os;
      os << r["command"].get<std::string>() << ": " << r["status"].get<std::string>() << "\n";
      if (r.contains("text")) {
        os << r["text"].get<std::string>();
      } else {
        render_text(r["payload"], os, 2);
      }
      if (!r["citations"].empty()) {
        os << "citations:";
        for (const auto& c : r["citations"]) os << " " << c.get<std::string>();
        os << "\n";
      }
      return os.str();
    }
  }
  return {};
}

namespace {

json read_input(const std::string& path, std::istream& in) {
  if (path.empty()) return json::object();
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GSp4 Hodge-parameter computations"};
  app.set_version_flag("--version", "gsp4h 0.1.0");
  std::string command, format = "json", input;
  std::vector<std::string> extra;
  bool symbolic = false;
  std::uint64_t seed = 0;
  long count = 100;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("args", extra, "Positional arguments (socle kind and w)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_flag("--symbolic", symbolic, "Work over Q(a,b)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random sweeps");
  app.add_option("--count", count, "Number of sweep items")->check(CLI::NonNegativeNumber);
  app.add_option("--input", input, "Input document path, or - for stdin");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : exit_code(Status::invalid);
  }

  Options opt;
  opt.symbolic = symbolic;
  opt.count = count;
  opt.args = extra;
  if (seed_opt->count() > 0) opt.seed = seed;
  try {
    opt.format = parse_format(format);
    if (command == "sweep") {
      out << sweep(opt.seed.value_or(0), count).dump(2) << "\n";
      return 0;
    }
    const json doc = read_input(input, in);
    if (command == "batch") {
      const auto results = batch(doc, opt);
      Status st = Status::ok;
      json arr = json::array();
      for (const auto& r : results) {
        st = worst(st, r.status);
        arr.push_back(r.report);
      }
      if (opt.format == Format::text) {
        for (const auto& r : results) out << render(r, Format::text);
      } else if (opt.format == Format::dot) {
        throw Error(ErrorKind::ParseError, "dot output is only available for socle");
      } else {
        out << arr.dump(2) << "\n";
      }
      return exit_code(st);
    }
    const Outcome o = dispatch(command, doc, opt);
    if (opt.format == Format::dot && !o.report.contains("dot")) {
      out << render(o, Format::json);
      err << "dot output is only available for socle\n";
      return exit_code(worst(o.status, Status::invalid));
    }
    out << render(o, opt.format);
    return exit_code(o.status);
  } catch (const Error& e) {
    err << "error: " << gsp4h::to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(status_of(e.kind()));
  }
}

}  // namespace gsp4h::cli
