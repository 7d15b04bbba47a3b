// setreal: command-line front end. JSON report on stdout, summary on stderr.
// Exit codes: 0 positive verdict, 1 negative verdict, 2 error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "setreal/catalog.hpp"
#include "setreal/constructions.hpp"
#include "setreal/decomp.hpp"
#include "setreal/experiment.hpp"
#include "setreal/io.hpp"
#include "setreal/oracle.hpp"
#include "setreal/realize.hpp"
#include "setreal/tda.hpp"

using namespace sr;
using io::json;

namespace {

struct Input {
  json doc;
  std::string digest;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  try {
    return {json::parse(bytes), io::digest(bytes)};
  } catch (const json::parse_error& e) {
    throw io::ParseError(path + ": " + e.what());
  }
}

LinRep load_rep(const std::string& path, std::string* digest) {
  Input in = load(path);
  LinRep R;
  try {
    R = io::linrep_from_json(in.doc);
  } catch (const std::exception& e) {
    throw io::ParseError(path + ": " + e.what());
  }
  if (auto err = validate(R)) throw io::ParseError(path + ": " + *err);
  if (digest) *digest = in.digest;
  return R;
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<bool> parse_bits(const std::string& s) {
  std::vector<bool> out;
  for (char c : s) {
    if (c == ',') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("orientation must be a string of 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

std::string bits(const std::vector<bool>& b) {
  std::string s;
  for (bool x : b) s += x ? '1' : '0';
  return s;
}

json dims_json(const Shape& S, const DimVector& d) {
  json j = json::object();
  for (std::size_t v = 0; v < d.size(); ++v) j[S.objects()[v]] = d[v];
  return j;
}

struct Run {
  json report;
  std::string summary;
  int code = 0;
};

Field field_arg(const std::vector<unsigned>& f) {
  if (f.size() != 2) throw std::invalid_argument("--field takes p and k");
  return Field::create(f[0], f[1]);
}

// check ---------------------------------------------------------------------

struct CheckOpts {
  std::string rep, variant = "gset", witness, verify;
  std::size_t cap = kDefaultCap;
};

Run cmd_check(const CheckOpts& o) {
  std::string dg;
  const LinRep R = load_rep(o.rep, &dg);
  Variant v;
  if (o.variant == "gset")
    v = Variant::GSet;
  else if (o.variant == "plain")
    v = Variant::Plain;
  else
    throw std::invalid_argument("--variant must be plain or gset");
  Run run;
  run.report["input"] = o.rep;
  run.report["input_digest"] = dg;
  run.report["variant"] = variant_name(v);

  if (!o.verify.empty()) {
    Input w = load(o.verify);
    const Variant wv = w.doc.value("variant", std::string("gset")) == "plain" ? Variant::Plain : Variant::GSet;
    const CounitPackage pkg = counit_package(R, wv, o.cap);
    Hom G;
    try {
      for (std::size_t x = 0; x < R.dims.size(); ++x)
        G.push_back(io::matrix_from_json(w.doc.at("G").at(R.shape.objects()[x]), pkg.big_dim(x), R.dims[x]));
    } catch (const std::exception& e) {
      throw io::ParseError(o.verify + ": " + e.what());
    }
    const bool ok = check_witness(R, pkg, G);
    run.report["variant"] = variant_name(wv);
    run.report["witness"] = o.verify;
    run.report["witness_valid"] = ok;
    run.report["witness_digest_matches"] = w.doc.value("input_digest", std::string()) == dg;
    run.summary = ok ? "witness verified" : "witness does NOT verify";
    run.code = ok ? 0 : 1;
    return run;
  }

  const CounitPackage pkg = counit_package(R, v, o.cap);
  const Realizability r = decide(pkg, R);
  json big = json::object();
  for (std::size_t x = 0; x < R.dims.size(); ++x) big[R.shape.objects()[x]] = pkg.big_dim(x);
  run.report["realizable"] = r.realizable;
  run.report["unknowns"] = r.unknowns;
  run.report["equations"] = r.equations;
  run.report["big_dims"] = big;
  if (r.realizable && !o.witness.empty()) {
    json w;
    w["variant"] = variant_name(v);
    w["input_digest"] = dg;
    w["G"] = io::hom_to_json(R.shape, *r.witness);
    io::write_json_file(o.witness, w);
    run.report["witness"] = o.witness;
  }
  run.summary = r.realizable ? "additively Set-realizable" : "NOT additively Set-realizable";
  run.code = r.realizable ? 0 : 1;
  return run;
}

// decompose -----------------------------------------------------------------

Run cmd_decompose(const std::string& path, std::size_t cap, std::uint64_t seed) {
  std::string dg;
  const LinRep R = load_rep(path, &dg);
  DecompOptions opt;
  opt.seed = seed;
  opt.cap = cap;
  const Decomposition D = decompose(R, opt);
  Run run;
  run.report["input"] = path;
  run.report["input_digest"] = dg;
  run.report["certified"] = D.certified;
  json fs = json::array();
  for (const auto& f : D.factors)
    fs.push_back({{"multiplicity", f.multiplicity},
                  {"dims", dims_json(R.shape, f.rep.dims)},
                  {"local", tri_name(f.local)},
                  {"rep", io::linrep_to_json(f.rep)}});
  run.report["factors"] = fs;
  run.summary = std::to_string(D.count()) + " indecomposable summands in " + std::to_string(D.factors.size()) +
                " isomorphism classes" + (D.certified ? "" : " (not certified)");
  return run;
}

// make ----------------------------------------------------------------------

struct MakeOpts {
  std::string kind, shape = "loop", f = "1,1", orient, dims, name, family = "pp", out;
  unsigned m = 1;
  std::size_t start = 0, n = 1;
  int variant = 1;
  std::vector<unsigned> field{2, 1};
  bool setrep = false;
};

Run cmd_make(const MakeOpts& o, std::uint64_t seed) {
  const Field F = field_arg(o.field);
  json doc;
  std::string what;
  auto emit_setrep = [&](const SetRep& S) {
    doc = o.setrep ? io::setrep_to_json(S) : io::linrep_to_json(linearize(S, F));
  };
  if (o.kind == "band") {
    std::vector<bool> orient;
    if (o.shape == "a3tilde")
      orient = o.orient.empty() ? std::vector<bool>{true, false, true, false} : parse_bits(o.orient);
    else if (o.shape == "atilde")
      orient = parse_bits(o.orient);
    else if (o.shape != "loop")
      throw std::invalid_argument("band --shape must be loop, a3tilde or atilde");
    Poly f;
    for (long c : parse_list(o.f)) f.push_back(static_cast<Elem>(c));
    poly_trim(f);
    doc = io::linrep_to_json(band_rep(F, f, o.m, orient));
    what = "band f=" + o.f + " m=" + std::to_string(o.m) + "; criterion says " +
           (band_is_realizable(F, f, o.m) ? "realizable" : "not realizable");
  } else if (o.kind == "string") {
    emit_setrep(string_rep(parse_bits(o.orient), o.start, o.m));
    what = "string";
  } else if (o.kind == "d4tilde") {
    D4Kind k;
    if (o.family == "pp")
      k = D4Kind::Preprojective;
    else if (o.family == "pi")
      k = D4Kind::Preinjective;
    else
      throw std::invalid_argument("--family must be pp or pi");
    emit_setrep(d4tilde_family(k, o.variant, o.n));
    what = "D4-tilde " + o.family + std::to_string(o.variant) + " n=" + std::to_string(o.n);
  } else if (o.kind == "example") {
    doc = io::linrep_to_json(catalog::by_name(o.name, F));
    what = "example " + o.name;
  } else if (o.kind == "root") {
    std::size_t type;
    if (o.shape == "e6" || o.shape == "e7" || o.shape == "e8")
      type = static_cast<std::size_t>(o.shape[1] - '0');
    else
      throw std::invalid_argument("root --shape must be e6, e7 or e8");
    const Shape S = e_shape(type, parse_bits(o.orient));
    DimVector d;
    for (long x : parse_list(o.dims)) {
      if (x < 0) throw std::invalid_argument("negative dimension");
      d.push_back(static_cast<std::size_t>(x));
    }
    doc = io::linrep_to_json(root_indecomposable(F, S, d, seed));
    what = "indecomposable of dimension " + o.dims;
  } else {
    throw std::invalid_argument("unknown kind '" + o.kind + "' (band, string, d4tilde, example, root)");
  }
  Run run;
  if (o.out.empty()) {
    run.report = doc;
  } else {
    io::write_json_file(o.out, doc);
    run.report["kind"] = o.kind;
    run.report["output"] = o.out;
    run.report["output_digest"] = io::digest(doc.dump(2) + "\n");
  }
  run.summary = what;
  return run;
}

// oracle --------------------------------------------------------------------

Run cmd_oracle(const std::string& path, const std::string& budget, std::uint64_t max_candidates, std::uint64_t skip,
               std::uint64_t seed) {
  std::string dg;
  const LinRep R = load_rep(path, &dg);
  SearchBudget b;
  b.seed = seed;
  b.max_candidates = max_candidates;
  b.skip = skip;
  if (!budget.empty())
    for (long x : parse_list(budget)) {
      if (x < 0) throw std::invalid_argument("negative budget");
      b.max_fiber.push_back(static_cast<std::size_t>(x));
    }
  const OracleResult r = brute_force_realizable(R, b);
  Run run;
  run.report["input"] = path;
  run.report["input_digest"] = dg;
  run.report["outcome"] = oracle_outcome_name(r.outcome);
  run.report["complete_budget"] = r.complete_budget;
  run.report["candidates"] = r.candidates;
  if (r.witness) run.report["witness"] = io::setrep_to_json(*r.witness);
  run.summary = std::string(oracle_outcome_name(r.outcome)) + " after " + std::to_string(r.candidates) + " candidates";
  if (r.outcome == OracleOutcome::FalseAtBudget) run.summary += " (heuristic: budget below q^d - 1)";
  run.code = r.outcome == OracleOutcome::Realizable ? 0 : 1;
  return run;
}

// shape-classify ------------------------------------------------------------

Run cmd_shape_classify(const std::string& path) {
  Input in = load(path);
  Shape S;
  try {
    S = io::shape_from_json(in.doc.contains("shape") ? in.doc.at("shape") : in.doc);
  } catch (const std::exception& e) {
    throw io::ParseError(path + ": " + e.what());
  }
  const bool ok = shape_is_indicator_only(S);
  Run run;
  run.report["input"] = path;
  run.report["input_digest"] = in.digest;
  run.report["indicator_only"] = ok;
  json h = json::array();
  for (auto [x, y] : hasse_edges(S)) h.push_back({S.objects()[x], S.objects()[y]});
  run.report["hasse_edges"] = h;
  run.summary = ok ? "indicator-only" : "not indicator-only";
  run.code = ok ? 0 : 1;
  return run;
}

// h0 ------------------------------------------------------------------------

Run cmd_h0(const std::string& path, const std::vector<unsigned>& field, const std::string& out) {
  Input in = load(path);
  GraphDiagram G = io::graph_diagram_from_json(in.doc);
  const SetRep S = h0_setrep(G);
  const LinRep L = linearize(S, field_arg(field));
  Run run;
  run.report["input"] = path;
  run.report["input_digest"] = in.digest;
  run.report["setrep"] = io::setrep_to_json(S);
  run.report["linear"] = io::linrep_to_json(L);
  if (!out.empty()) {
    io::write_json_file(out, io::linrep_to_json(L));
    run.report["output"] = out;
  }
  std::size_t comps = 0;
  for (auto n : S.sizes) comps += n;
  run.summary = std::to_string(comps) + " components over " + std::to_string(S.sizes.size()) + " objects";
  return run;
}

// e6-experiment -------------------------------------------------------------

Run cmd_e_experiment(const std::vector<unsigned>& field, std::size_t type, bool have_time, std::uint64_t seed) {
  if (type != 6 && !have_time) throw std::invalid_argument("E7/E8 sweeps need --i-have-time");
  const Field F = field_arg(field);
  const auto results = e_sweep(F, type, seed);
  Run run;
  run.report["type"] = "E" + std::to_string(type);
  run.report["field"] = io::field_to_json(F);
  json rows = json::array();
  std::ostringstream txt;
  std::size_t agree = 0, yes = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const bool expected = e_expected_surjective(type, r.out);
    agree += expected == r.surjective;
    yes += r.surjective;
    json row = {{"index", i}, {"orientation", bits(r.out)}, {"surjective", r.surjective}, {"expected", expected}};
    if (r.failing_root) row["failing_root"] = *r.failing_root;
    rows.push_back(row);
    txt << "orientation " << bits(r.out) << ": additively surjective: " << (r.surjective ? "yes" : "no");
    if (r.failing_root) {
      txt << " (root";
      for (auto x : *r.failing_root) txt << ' ' << x;
      txt << ')';
    }
    txt << '\n';
  }
  run.report["orientations"] = rows;
  run.report["surjective_count"] = yes;
  run.report["agrees_with_reference_list"] = agree == results.size();
  txt << yes << " of " << results.size() << " orientations surjective; reference list "
      << (agree == results.size() ? "reproduced" : "NOT reproduced");
  run.summary = txt.str();
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive Set-realizability of quiver representations over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();  // let --seed follow the subcommand
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for all randomized steps")->capture_default_str();

  CheckOpts chk;
  auto* check = app.add_subcommand("check", "decide additive Set-realizability");
  check->add_option("rep", chk.rep, "representation file")->required();
  check->add_option("--variant", chk.variant, "plain or gset")->capture_default_str();
  check->add_option("--witness", chk.witness, "write the split witness here");
  check->add_option("--verify", chk.verify, "verify an existing witness file instead");
  check->add_option("--cap", chk.cap, "largest allowed big dimension per object")->capture_default_str();

  std::string rep;
  std::size_t dcap = 512;
  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
  dec->add_option("rep", rep, "representation file")->required();
  dec->add_option("--cap", dcap, "largest total dimension")->capture_default_str();

  MakeOpts mk;
  auto* make = app.add_subcommand("make", "construct a representation");
  make->add_option("kind", mk.kind, "band, string, d4tilde, example or root")->required();
  make->add_option("--shape", mk.shape, "band: loop, a3tilde, atilde; root: e6, e7, e8");
  make->add_option("--f", mk.f, "band polynomial, coefficients low to high");
  make->add_option("--m", mk.m, "band exponent or string length");
  make->add_option("--orient", mk.orient, "orientation bits");
  make->add_option("--start", mk.start, "string start vertex");
  make->add_option("--family", mk.family, "d4tilde: pp or pi");
  make->add_option("--variant", mk.variant, "d4tilde variant 1..5");
  make->add_option("--n", mk.n, "d4tilde family index");
  make->add_option("--name", mk.name, "example name");
  make->add_option("--dims", mk.dims, "root dimension vector, object order");
  make->add_option("--field", mk.field, "p k")->expected(2);
  make->add_flag("--setrep", mk.setrep, "emit the pointed-set representation (string, d4tilde)");
  make->add_option("-o,--out", mk.out, "output file (default: stdout)");

  std::string budget;
  std::uint64_t max_cand = UINT64_MAX, skip = 0;
  auto* orc = app.add_subcommand("oracle", "brute-force realizability search");
  orc->add_option("rep", rep, "representation file")->required();
  orc->add_option("--budget", budget, "max fiber sizes B_v, comma separated (default q^d - 1)");
  orc->add_option("--max-candidates", max_cand, "stop after this many candidates");
  orc->add_option("--skip", skip, "resume after this many candidates");

  std::string path;
  auto* cls = app.add_subcommand("shape-classify", "are all indecomposables indicators");
  cls->add_option("file", path, "shape or representation file")->required();

  std::vector<unsigned> field{2, 1};
  std::string out;
  auto* h0 = app.add_subcommand("h0", "path components of a graph diagram");
  h0->add_option("file", path, "graph diagram file")->required();
  h0->add_option("--field", field, "p k")->expected(2);
  h0->add_option("-o,--out", out, "write the linearization here");

  std::size_t type = 6;
  bool have_time = false;
  auto* e6 = app.add_subcommand("e6-experiment", "orientation sweep over E6 (E7, E8 with --i-have-time)");
  e6->add_option("--field", field, "p k")->expected(2);
  e6->add_option("--type", type, "6, 7 or 8")->capture_default_str();
  e6->add_flag("--i-have-time", have_time, "allow the E7 and E8 sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string echo;
  for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(i ? argv[i] : "setreal");
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Run run;
    if (*check)
      run = cmd_check(chk);
    else if (*dec)
      run = cmd_decompose(rep, dcap, seed);
    else if (*make)
      run = cmd_make(mk, seed);
    else if (*orc)
      run = cmd_oracle(rep, budget, max_cand, skip, seed);
    else if (*cls)
      run = cmd_shape_classify(path);
    else if (*h0)
      run = cmd_h0(path, field, out);
    else
      run = cmd_e_experiment(field, type, have_time, seed);
    json report;
    const bool raw = *make && mk.out.empty();
    if (raw) {
      report = run.report;
    } else {
      report["command"] = echo;
      report["seed"] = seed;
      report.update(run.report);
    }
    std::cout << report.dump(2) << '\n';
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << run.summary << "\n[" << secs << " s]\n";
    return run.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
