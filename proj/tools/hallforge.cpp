// Command-line driver: build, hall, interpolate, bracket, verify.
//
// Exit codes: 0 pass, 1 check failed, 2 usage or invalid input, 3 cap
// exceeded, 4 undecided isomorphism.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hallforge/errors.hpp"
#include "hallforge/catalog.hpp"
#include "hallforge/suites.hpp"

using namespace hallforge;
namespace fs = std::filesystem;

namespace {

std::uint64_t parse_q(std::string s) {
  std::uint64_t q = 0;
  try {
    if (auto c = s.find('^'); c != std::string::npos) {
      std::uint64_t p = std::stoull(s.substr(0, c)), r = std::stoull(s.substr(c + 1));
      q = 1;
      for (std::uint64_t i = 0; i < r; ++i) q *= p;
    } else {
      std::size_t used = 0;
      q = std::stoull(s, &used);
      if (used != s.size()) throw InvalidArgument("");
    }
  } catch (const std::exception&) {
    throw InvalidArgument("bad field size '" + s + "'");
  }
  Field::of_order(q);  // validates prime power and cap
  return q;
}

std::vector<std::uint64_t> parse_qs(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_q(item));
  if (out.empty()) throw InvalidArgument("empty field list");
  return out;
}

std::string builtin_name(const std::string& src) {
  std::string name = src.starts_with("builtin:") ? src.substr(8) : src;
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InvalidArgument("'" + src + "' is not a builtin algebra (this command needs builtin:<name>)");
  return name;
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw InvalidArgument("cannot write " + p.string());
  out << text;
}

struct Opts {
  std::string algebra = "builtin:kronecker-dup";
  std::string field;  // empty: "2" for single-field commands, "2,3" for verify
  std::string points = "2,3,5,7,9", holdout = "4,8,11";
  std::uint64_t seed = 0;
  std::uint64_t cap_submodules = kDefaultSubmoduleCap, cap_cocycles = kDefaultCocycleCap;
  std::string out, format = "json", suite;
  std::string m, n, l, x, y;
  bool product = false, riedtmann = false;
};

RunConfig config_of(const Opts& o) {
  RunConfig c;
  c.algebra = builtin_name(o.algebra);
  c.fields = parse_qs(o.field.empty() ? "2,3" : o.field);
  c.points = parse_qs(o.points);
  c.holdout = o.holdout.empty() ? std::vector<std::uint64_t>{} : parse_qs(o.holdout);
  c.seed = o.seed;
  c.cap_submodules = o.cap_submodules;
  c.cap_cocycles = o.cap_cocycles;
  c.format = o.format;
  c.suite = o.suite;
  c.out_dir = o.out;
  return c;
}

void emit(const Opts& o, const std::string& file, const Json& j) {
  if (o.out.empty()) std::cout << j.dump(2) << "\n";
  else write_file(fs::path(o.out) / file, j.dump(2) + "\n");
}

int cmd_build(const Opts& o) {
  AlgebraPtr a;
  if (o.algebra.starts_with("builtin:") || !fs::exists(o.algebra)) {
    a = builtin_algebra(builtin_name(o.algebra), Field::of_order(parse_q(o.field.empty() ? "2" : o.field)));
  } else {
    std::ifstream in(o.algebra);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    a = algebra_from_json(j);
  }
  auto rep = validate(*a);
  if (!rep.ok) {
    for (const auto& f : rep.failures) std::cerr << "validation: " << f << "\n";
    return 2;
  }
  std::cout << a->name() << " over " << a->field()->name() << ": dim " << a->dim() << ", " << a->num_vertices()
            << " vertices, " << gabriel_quiver(*a).size() << " arrow classes\n";
  if (!o.out.empty()) {
    write_file(fs::path(o.out) / "algebra.json", algebra_to_json(*a).dump(1) + "\n");
    write_file(fs::path(o.out) / "quiver.dot", gabriel_dot(*a));
  }
  return 0;
}

int cmd_hall(const Opts& o) {
  auto c = config_of(o);
  if (o.field.empty()) c.fields = {2};
  if (c.fields.size() != 1) throw InvalidArgument("hall takes a single field");
  HallAlgebra h(builtin_algebra(c.algebra, Field::of_order(c.fields[0])), c.hall_options());
  auto mod = [&](const std::string& b) {
    Module m = instantiate(parse_blueprint(b, c.algebra), h.algebra());
    for (const auto& cb : catalog(c.algebra)) {
      ClassId k = h.class_of(instantiate(parse_blueprint(cb, c.algebra), h.algebra()));
      if (h.registry().is_indecomposable(k)) h.registry().set_name(k, cb);
    }
    return m;
  };
  if (o.riedtmann) h.set_method(HallAlgebra::Method::riedtmann);
  Json j;
  j["algebra"] = c.algebra;
  j["q"] = c.fields[0];
  if (o.product) {
    if (o.x.empty() || o.y.empty()) throw InvalidArgument("--product needs --x and --y");
    Module x = mod(o.x), y = mod(o.y);
    auto p = h.mul(h.u(x), h.u(y));
    j["x"] = o.x;
    j["y"] = o.y;
    j["product"] = hall_element_json(h, p);
    std::cout << "u[" << o.x << "] u[" << o.y << "] = " << h.format(p) << "  (" << p.size() << " terms)\n";
    if (o.riedtmann) {
      auto r = riedtmann_check(h, x, y);
      Json rows = Json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"m", h.registry().name(row.m)}, {"brute", big_json(row.brute)},
                        {"formula", big_json(row.formula)}, {"agrees", row.agrees}});
      j["riedtmann"] = {{"ok", r.ok}, {"rows", rows}};
      std::cout << "Riedtmann cross-check: " << (r.ok ? "agrees" : "DISAGREES") << "\n";
      if (!o.out.empty()) emit(o, "report.json", j);
      return r.ok ? 0 : 1;
    }
  } else {
    if (o.m.empty() || o.n.empty() || o.l.empty()) throw InvalidArgument("hall needs --m, --n and --l (or --product)");
    Module m = mod(o.m), n = mod(o.n), l = mod(o.l);
    BigInt g = h.hall_number(h.class_of(m), h.class_of(n), h.class_of(l));
    j["m"] = o.m;
    j["n"] = o.n;
    j["l"] = o.l;
    j["G"] = big_json(g);
    std::cout << g << "\n";
    if (o.riedtmann) {
      BigInt v = h.riedtmann_value(h.class_of(m), h.class_of(n), h.class_of(l));
      j["riedtmann"] = big_json(v);
      std::cout << "Riedtmann formula: " << v << (v == g ? " (agrees)" : " (DISAGREES)") << "\n";
      if (!o.out.empty()) emit(o, "report.json", j);
      return v == g ? 0 : 1;
    }
  }
  if (!o.out.empty()) emit(o, "report.json", j);
  return 0;
}

int cmd_interpolate(const Opts& o) {
  auto c = config_of(o);
  if (o.x.empty() || o.y.empty() || o.m.empty()) throw InvalidArgument("interpolate needs --x, --y and --m");
  auto g = interpolate(c.algebra, o.x, o.y, o.m, c.points, c.holdout, c.hall_options());
  Json cert = certificate_json(g);
  if (o.out.empty()) std::cout << cert.dump(2) << "\n";
  else {
    std::string name = g.x + "_" + g.y + "_" + g.m;
    for (auto& ch : name)
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = ch == '\'' ? 'p' : '_';
    write_file(fs::path(o.out) / "certificates" / (c.algebra + "_" + name + ".json"), cert.dump(2) + "\n");
  }
  std::cerr << "g^{" << g.m << "}_{" << g.x << "," << g.y << "} = " << (g.ok ? g.poly.to_string() : g.message) << "\n";
  return g.ok ? 0 : 1;
}

int cmd_bracket(const Opts& o) {
  auto c = config_of(o);
  if (o.x.empty() || o.y.empty()) throw InvalidArgument("bracket needs --x and --y");
  DegenOptions d;
  d.points = c.points;
  d.holdout = c.holdout;
  d.hall = c.hall_options();
  DegenContext ctx(c.algebra, d);
  auto b = ctx.bracket(o.x, o.y);
  std::cout << "[u[" << o.x << "], u[" << o.y << "]] = " << b.to_string() << "\n";
  Json j = {{"algebra", c.algebra}, {"x", o.x}, {"y", o.y}, {"bracket", degen_json(b)}};
  if (!o.out.empty()) emit(o, "report.json", j);
  return 0;
}

int cmd_verify(const Opts& o) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw InvalidArgument("unknown suite '" + o.suite + "'");
  if (o.format != "json" && o.format != "csv") throw InvalidArgument("--format must be json or csv");
  auto c = config_of(o);
  auto r = run_suite(c);
  fs::path out = o.out.empty() ? fs::path(".") : fs::path(o.out);
  write_file(out / "report.json", r.to_json().dump(2) + "\n");
  if (o.format == "csv") write_file(out / "report.csv", r.to_csv());
  for (const auto& [file, j] : r.certificates) write_file(out / "certificates" / file, j.dump(2) + "\n");
  std::size_t passed = 0;
  for (const auto& ch : r.checks) passed += ch.pass;
  std::cout << "suite " << r.suite << " on " << c.algebra << ": " << passed << "/" << r.checks.size()
            << " checks passed\n";
  if (auto* f = r.first_failure()) std::cout << "first failure: " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ringel-Hall computations over finite fields"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s) {
    s->add_option("--algebra", o.algebra, "builtin:<name> (kronecker, kronecker-dup, d4tilde, d4tilde-dup)");
    s->add_option("--field", o.field, "field size(s), e.g. 2 or 2,3 or 2^3");
    s->add_option("--seed", o.seed, "seed for all randomised choices");
    s->add_option("--cap-submodules", o.cap_submodules, "cap on enumerated submodules");
    s->add_option("--cap-cocycles", o.cap_cocycles, "cap on enumerated Ext classes");
    s->add_option("--out", o.out, "output directory");
  };
  auto* build = app.add_subcommand("build", "validate an algebra and write algebra.json and quiver.dot");
  common(build);
  auto* hall = app.add_subcommand("hall", "Hall numbers and products");
  common(hall);
  hall->add_option("--m", o.m, "middle module");
  hall->add_option("--n", o.n, "quotient");
  hall->add_option("--l", o.l, "submodule");
  hall->add_option("--x", o.x, "left factor of the product");
  hall->add_option("--y", o.y, "right factor of the product");
  hall->add_flag("--product", o.product, "expand u[x] u[y]");
  hall->add_flag("--riedtmann", o.riedtmann, "cross-check with Riedtmann's formula");
  auto* interp = app.add_subcommand("interpolate", "Hall polynomial g^m_{x,y} with a certificate");
  common(interp);
  interp->add_option("--x", o.x, "quotient");
  interp->add_option("--y", o.y, "submodule");
  interp->add_option("--m", o.m, "middle module");
  interp->add_option("--points", o.points, "interpolation field sizes");
  interp->add_option("--holdout", o.holdout, "hold-out field sizes");
  auto* br = app.add_subcommand("bracket", "degenerate bracket [u[x], u[y]] at q = 1");
  common(br);
  br->add_option("--x", o.x, "left argument");
  br->add_option("--y", o.y, "right argument");
  br->add_option("--points", o.points, "interpolation field sizes (default 2,3,4,5,7,8)");
  br->add_option("--holdout", o.holdout, "hold-out field sizes (default 9)");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", o.suite, "suite name")->required();
  verify->add_option("--format", o.format, "json or csv");
  verify->add_option("--points", o.points, "interpolation field sizes for the polynomial suites");
  verify->add_option("--holdout", o.holdout, "hold-out field sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  // bracket and interpolate keep their own defaults for the schedule
  if (br->parsed() && br->count("--points") == 0) {
    o.points = "2,3,4,5,7,8";
    if (br->count("--holdout") == 0) o.holdout = "9";
  }
  try {
    if (build->parsed()) return cmd_build(o);
    if (hall->parsed()) return cmd_hall(o);
    if (interp->parsed()) return cmd_interpolate(o);
    if (br->parsed()) return cmd_bracket(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 4;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
