#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qh/nstar.hpp"
#include "qh/report.hpp"

namespace qh::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quiver, out, format = "json";
  int cap = 1;
  std::vector<std::uint32_t> primes;
  std::string label, field = "Q", rep, rep2, vertex, sub, quot, target, left, right;
  bool twisted = false, bracket = false;
  std::size_t pairs = 20;
  std::uint32_t seed = 1;
};

struct Outcome {
  bool ok = true;
  Json result = Json::object();
  Json table = Json::array();
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

Quiver load_quiver(const std::string &path) {
  try {
    return parse_quiver(read_file(path));
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class Fn> auto with_field(const FieldSpec &spec, Fn fn) {
  if (spec.is_rational())
    return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

HallConfig hall_config(const Options &o) {
  HallConfig c;
  if (!o.primes.empty()) {
    for (auto p : o.primes)
      if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not prime");
    c.primes = o.primes;
  }
  return c;
}

Json report_json(const CheckReport &r) { return r.to_json(); }

Json check_rows(const std::string &section, const CheckReport &r) {
  Json rows = Json::array();
  for (const auto &[name, ok] : r.checks)
    rows.push_back({{"section", section}, {"check", name}, {"ok", ok}});
  return rows;
}

void merge(Outcome &out, const std::string &section, const CheckReport &r) {
  out.ok = out.ok && r.ok();
  out.result[section] = report_json(r);
  for (auto &row : check_rows(section, r))
    out.table.push_back(row);
}

ConstructibleFn load_function(const HallEngine &e, const std::string &arg) {
  std::ifstream probe(arg);
  if (probe) {
    Json j = read_json(arg);
    ConstructibleFn f;
    try {
      f.grade = j.at("grade").get<DimVector>();
      for (const auto &[k, v] : j.at("values").items())
        f.values[k] = v.is_string() ? Rational(v.get<std::string>()) : Rational(static_cast<long>(v.get<long long>()));
    } catch (const std::exception &ex) {
      throw InputError(arg + ": " + ex.what());
    }
    for (auto &[k, v] : f.values)
      v.canonicalize();
    f.prune();
    return f;
  }
  try {
    Label l = parse_label(e.family(), arg);
    std::string key = l.kind == LabelKind::Tube ? "Tube(*," + std::to_string(l.b) + ")" : l.str();
    return indicator(l.dims, key);
  } catch (const std::exception &ex) {
    throw InputError("'" + arg + "' is neither a function file nor a label: " + ex.what());
  }
}

using Command = std::function<Outcome(const Quiver &, const Options &)>;

Outcome cmd_classify(const Quiver &q, const Options &) {
  DynkinClass c = classify(q);
  Outcome o;
  o.result["class"] = c.describe();
  o.result["type"] = c.type;
  o.result["finite"] = c.finite();
  o.result["affine"] = c.affine();
  o.result["kronecker"] = c.kronecker;
  o.result["cyclic"] = c.cyclic;
  o.result["components"] = c.components;
  o.table.push_back({{"class", c.describe()}, {"type", c.type}});
  return o;
}

Outcome cmd_roots(const Quiver &q, const Options &opt) {
  DynkinClass c = classify(q);
  std::vector<Root> roots;
  if (c.finite())
    roots = positive_roots(q);
  else if (c.affine())
    roots = roots_up_to(q, opt.cap);
  else
    throw InputError("roots needs a finite or affine quiver");
  Outcome o;
  for (const auto &r : roots)
    o.table.push_back({{"root", vec_str(r.vector)}, {"kind", r.real() ? "real" : "imaginary"}, {"defect", r.defect}});
  o.result["count"] = roots.size();
  o.result["roots"] = o.table;
  if (c.affine())
    o.result["delta"] = first_imaginary_root(q);
  return o;
}

Outcome cmd_cyclic_roots(const Quiver &q, const Options &) {
  CyclicRootTable t = cyclic_roots(q);
  Outcome o;
  o.result = t.to_json(q);
  o.result["L"] = t.L();
  o.result["N"] = t.lengths();
  for (std::size_t i = 0; i < t.orbits.size(); ++i)
    for (std::size_t j = 0; j < t.orbits[i].size(); ++j)
      o.table.push_back({{"i", i}, {"j", j}, {"root", vec_str(t.orbits[i][j])}});
  return o;
}

Outcome cmd_presentation(const Quiver &q, const Options &) {
  CyclicRootTable t = cyclic_roots(q);
  Outcome o;
  merge(o, "lattice_presentation", verify_lattice_presentation(q, t));
  merge(o, "nu_isometry", nu_isometry_check(q, t));
  return o;
}

Outcome cmd_lie(const Quiver &q, const Options &opt) {
  EpsAlgebra g(q, opt.twisted ? Cocycle::Twisted : Cocycle::Euler, opt.cap);
  Outcome o;
  Json table = structure_table(g);
  CheckReport serre = verify_serre(g), jacobi = verify_jacobi(g);
  o.ok = serre.ok() && jacobi.ok();
  o.result["variant"] = opt.twisted ? "twisted" : "euler";
  o.result["cap"] = opt.cap;
  o.result["dimension"] = g.total_dim();
  o.result["serre"] = serre.to_json();
  o.result["jacobi"] = jacobi.to_json();
  o.result["structure_constants"] = table;
  o.table = table;
  return o;
}

Outcome cmd_indecomposable(const Quiver &q, const Options &opt) {
  auto fam = make_family(q);
  FieldSpec spec = parse_field(opt.field);
  return with_field(spec, [&](auto f) {
    Catalog<decltype(f)> cat(fam, f);
    Label l = parse_label(*fam, opt.label);
    Outcome o;
    o.result["label"] = l.str();
    o.result["representation"] = rep_to_json(to_data(f, cat.build(l)));
    return o;
  });
}

RepData load_rep(const Quiver &q, const std::string &path) {
  try {
    return parse_rep(q, read_json(path));
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

Outcome cmd_identify(const Quiver &q, const Options &opt) {
  RepData d = load_rep(q, opt.rep);
  auto fam = make_family(q);
  return with_field(d.field, [&](auto f) {
    Catalog<decltype(f)> cat(fam, f);
    auto m = from_data(f, d);
    if (!is_nilpotent(q, f, m))
      throw InputError("representation is not nilpotent");
    auto labels = identify(cat, m);
    Outcome o;
    o.result["decomposition"] = labels_str(labels);
    Json ls = Json::array();
    for (const auto &l : labels) {
      ls.push_back(l.str());
      o.table.push_back({{"label", l.str()}, {"dims", vec_str(l.dims)}});
    }
    o.result["labels"] = ls;
    return o;
  });
}

Outcome cmd_reflect(const Quiver &q, const Options &opt) {
  if (!q.has_vertex(opt.vertex))
    throw InputError("unknown vertex " + opt.vertex);
  if (!is_admissible(q, opt.vertex))
    throw InputError("vertex " + opt.vertex + " is neither a sink nor a source");
  Outcome o;
  Quiver r = reflect_quiver(q, opt.vertex);
  o.result["quiver"] = Json::parse(quiver_to_json(r));
  if (!opt.rep.empty()) {
    RepData d = load_rep(q, opt.rep);
    o.result["representation"] = with_field(d.field, [&](auto f) {
      return rep_to_json(to_data(f, reflection_apply(q, f, from_data(f, d), opt.vertex)));
    });
  }
  return o;
}

Outcome cmd_hom(const Quiver &q, const Options &opt) {
  RepData a = load_rep(q, opt.rep), b = load_rep(q, opt.rep2);
  if (!(a.field == b.field))
    throw InputError("representations live over different fields");
  return with_field(a.field, [&](auto f) {
    auto m = from_data(f, a), n = from_data(f, b);
    Outcome o;
    auto h = static_cast<long long>(hom_dim(q, f, m, n)), x = static_cast<long long>(ext1_dim(q, f, m, n));
    o.result["hom"] = h;
    o.result["ext1"] = x;
    o.result["euler_form"] = euler_form(q, m.dims, n.dims);
    o.ok = h - x == euler_form(q, m.dims, n.dims);
    o.table.push_back({{"hom", h}, {"ext1", x}});
    return o;
  });
}

Outcome cmd_hall_number(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  Label a, b;
  std::vector<Label> c;
  try {
    a = parse_label(e.family(), opt.sub);
    b = parse_label(e.family(), opt.quot);
    c = parse_labels(e.family(), opt.target);
  } catch (const std::exception &ex) {
    throw InputError(ex.what());
  }
  HallCount h = e.hall_number(a, b, c);
  Outcome o;
  o.result = h.to_json();
  Json row = h.to_json();
  row["primes"] = row["primes"].dump();
  row["counts"] = row["counts"].dump();
  row["polynomial"] = row["polynomial"].dump();
  o.table.push_back(row);
  return o;
}

Outcome cmd_star(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  ConstructibleFn f = load_function(e, opt.left), g = load_function(e, opt.right);
  ConstructibleFn r = opt.bracket ? bracket(e, f, g) : star(e, f, g);
  Outcome o;
  o.result["operation"] = opt.bracket ? "bracket" : "star";
  o.result["function"] = r.to_json();
  Json counts = Json::array();
  for (const auto &h : e.log())
    counts.push_back(h.to_json());
  o.result["hall_counts"] = counts;
  for (const auto &[k, v] : r.values)
    o.table.push_back({{"class", k}, {"value", v.get_str()}});
  return o;
}

Outcome cmd_nstar(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  NStar ns = generate_nstar(e, opt.cap);
  Outcome o;
  o.result["grades"] = ns.to_json();
  CheckReport serre = serre_check(e);
  o.ok = serre.ok();
  o.result["serre"] = serre.to_json();
  for (const auto &g : ns.grades)
    o.table.push_back({{"grade", vec_str(g)}, {"dim", ns.dim(g)}});
  return o;
}

Outcome cmd_verify_ringel(const Quiver &q, const Options &opt) {
  if (!classify(q).finite())
    throw InputError("verify ringel needs a quiver of finite type");
  HallEngine e(q, hall_config(opt));
  Outcome o;
  merge(o, "xi", xi_check(e, 0));
  merge(o, "serre", serre_check(e));
  merge(o, "euler_cocycle_table", finite_corollary_check(e));
  merge(o, "held_out", held_out_check(e));
  Json roots = Json::array();
  for (const auto &r : positive_roots(q))
    roots.push_back(vec_str(r.vector));
  o.result["roots"] = roots;
  return o;
}

Outcome cmd_verify_affine(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  const Family &fam = e.family();
  if (!fam.cls.affine() || fam.kind == FamilyKind::Jordan)
    throw InputError("verify affine needs an affine quiver");
  if (fam.kind == FamilyKind::AffineDE)
    throw InputError("affine D/E quivers are covered at the lattice and n^eps level; the counting oracle "
                     "supports Kronecker, cyclic and affine A quivers");
  Outcome o;
  if (fam.kind == FamilyKind::Kronecker)
    merge(o, "kproducts", kproducts_check(e, opt.cap));
  if (fam.kind == FamilyKind::Cyclic)
    merge(o, "cnproduct", cnproduct_check(e, 4));
  merge(o, "xi", xi_check(e, opt.cap));
  merge(o, "xi_twisted", xi_check(e, opt.cap, Cocycle::Twisted));
  merge(o, "mu", mu_check(e, opt.cap));
  merge(o, "integral", integral_nstar_check(e, opt.cap));
  merge(o, "held_out", held_out_check(e));
  return o;
}

Outcome cmd_verify_riedtmann(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  Outcome o;
  merge(o, "riedtmann", riedtmann_check(e, opt.pairs, opt.seed));
  merge(o, "held_out", held_out_check(e));
  return o;
}

Outcome cmd_mu(const Quiver &q, const Options &opt) {
  HallEngine e(q, hall_config(opt));
  Outcome o;
  merge(o, "mu", mu_check(e, opt.cap));
  return o;
}

int emit(const Options &opt, const std::string &command, const Quiver *q, const Outcome *out, int code,
         const std::string &error) {
  Json body = out ? out->result : Json::object();
  if (!error.empty()) {
    body["error"] = error;
    body["exit_code"] = code;
  }
  Json report = make_report(command, q, code == Ok, body);
  std::string text;
  if (opt.format == "csv" && out && error.empty())
    text = to_csv(out->table);
  else
    text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "qh: cannot write " << opt.out << "\n";
      return ParseFailure;
    }
    f << text;
  }
  if (!error.empty())
    std::cerr << "qh " << command << ": " << error << "\n";
  return code;
}

void add_common(CLI::App *sub, Options &opt, bool cap = false, bool primes = false) {
  sub->add_option("--quiver", opt.quiver, "quiver JSON file")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", opt.out, "report file (default stdout)");
  sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  if (cap)
    sub->add_option("--cap", opt.cap, "multiple of delta bounding the grades")->check(CLI::NonNegativeNumber);
  if (primes)
    sub->add_option("--primes", opt.primes, "primes used for point counting")->delimiter(',');
}

} // namespace

int run(int argc, char **argv) {
  CLI::App app{"Quiver Hall algebras, n^epsilon and the Ringel map"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  Options opt;
  std::string command;
  Command fn;
  auto reg = [&](CLI::App *parent, const std::string &name, const std::string &help, Command c, bool cap,
                 bool primes) {
    CLI::App *sub = parent->add_subcommand(name, help);
    add_common(sub, opt, cap, primes);
    std::string full = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&, full, c]() {
      command = full;
      fn = c;
    });
    return sub;
  };
  reg(&app, "classify", "Dynkin class of the underlying graph", cmd_classify, false, false);
  reg(&app, "roots", "positive roots (affine: up to cap * delta)", cmd_roots, true, false);
  reg(&app, "cyclic-roots", "Coxeter-orbit cyclic roots of an affine quiver", cmd_cyclic_roots, false, false);
  reg(&app, "verify-presentation", "Z[I] presentation and nu isometry", cmd_presentation, false, false);
  auto *lie = reg(&app, "lie-epsilon", "structure constants of n^eps", cmd_lie, true, false);
  lie->add_flag("--twisted", opt.twisted, "use the twisted cocycle");
  auto *ind = reg(&app, "indecomposable", "build an indecomposable by label", cmd_indecomposable, false, false);
  ind->add_option("--label", opt.label)->required();
  ind->add_option("--field", opt.field, "Q or Fp");
  auto *idf = reg(&app, "identify", "decompose a representation into labels", cmd_identify, false, false);
  idf->add_option("--rep", opt.rep)->required()->check(CLI::ExistingFile);
  auto *ref = reg(&app, "reflect", "reflection functor at a sink or source", cmd_reflect, false, false);
  ref->add_option("--vertex", opt.vertex)->required();
  ref->add_option("--rep", opt.rep)->check(CLI::ExistingFile);
  auto *hom = reg(&app, "hom", "Hom and Ext^1 dimensions", cmd_hom, false, false);
  hom->add_option("--rep", opt.rep)->required()->check(CLI::ExistingFile);
  hom->add_option("--rep2", opt.rep2)->required()->check(CLI::ExistingFile);
  auto *hn = reg(&app, "hall-number", "chi of the Hall variety", cmd_hall_number, false, true);
  hn->add_option("--sub", opt.sub)->required();
  hn->add_option("--quot", opt.quot)->required();
  hn->add_option("--target", opt.target, "label or A+B multiset")->required();
  auto *st = reg(&app, "star", "product of constructible functions", cmd_star, false, true);
  st->add_option("--left", opt.left, "function file or label")->required();
  st->add_option("--right", opt.right, "function file or label")->required();
  st->add_flag("--bracket", opt.bracket, "return f*g - g*f");
  reg(&app, "generate-nstar", "basis of n* up to the cap", cmd_nstar, true, true);
  reg(&app, "mu-check", "mu_* constancy on imaginary grades", cmd_mu, true, true);
  CLI::App *verify = app.add_subcommand("verify", "theorem checks");
  verify->require_subcommand(1);
  reg(verify, "ringel", "finite type: Xi and the Euler cocycle table", cmd_verify_ringel, false, true);
  reg(verify, "affine", "affine type: Xi formulas, mu_*, integral forms", cmd_verify_affine, true, true);
  auto *rd = reg(verify, "riedtmann", "n(M',M'';M'+M'') on random pairs", cmd_verify_riedtmann, false, true);
  rd->add_option("--pairs", opt.pairs);
  rd->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Ok : ParseFailure;
  }

  Quiver q;
  try {
    q = load_quiver(opt.quiver);
  } catch (const std::exception &e) {
    return emit(opt, command, nullptr, nullptr, ParseFailure, e.what());
  }
  try {
    Outcome out = fn(q, opt);
    return emit(opt, command, &q, &out, out.ok ? Ok : VerificationFailed, {});
  } catch (const InputError &e) {
    return emit(opt, command, &q, nullptr, ParseFailure, e.what());
  } catch (const OracleError &e) {
    return emit(opt, command, &q, nullptr, OracleFailure, e.what());
  } catch (const CapOverflow &e) {
    return emit(opt, command, &q, nullptr, OracleFailure, e.what());
  } catch (const std::invalid_argument &e) {
    return emit(opt, command, &q, nullptr, ParseFailure, e.what());
  } catch (const std::exception &e) {
    return emit(opt, command, &q, nullptr, OracleFailure, e.what());
  }
}

} // namespace qh::cli
