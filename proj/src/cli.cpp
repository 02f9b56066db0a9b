#include "quatnum/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "quatnum/classification.hpp"
#include "quatnum/fibonacci.hpp"
#include "quatnum/integer_quaternions.hpp"
#include "quatnum/monoid.hpp"
#include "quatnum/quadratic_forms.hpp"
#include "quatnum/quaternion.hpp"

namespace quatnum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<Integer> search_cap() {
  const char* v = std::getenv("QF_SEARCH_LIMIT");
  if (v == nullptr || *v == '\0') return std::nullopt;
  Integer cap = parse_integer(v);
  if (cap < 1) throw std::invalid_argument("QF_SEARCH_LIMIT must be positive");
  return cap;
}

Integer capped(const Integer& requested, const std::optional<Integer>& cap) {
  if (cap && *cap < requested) return *cap;
  return requested;
}

void require_within_cap(const Integer& range, const std::optional<Integer>& cap,
                        const std::string& what) {
  if (cap && range > *cap)
    throw std::domain_error(what + " exceeds QF_SEARCH_LIMIT (" + to_string(*cap) + ")");
}

std::vector<Integer> parse_integer_list(const std::string& text, std::size_t count,
                                        const std::string& what) {
  std::vector<Integer> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) out.push_back(parse_integer(cur));
  if (out.size() != count)
    throw parse_error(what + " needs " + std::to_string(count) +
                      " comma-separated integers");
  return out;
}

ordered_json coords_json(const RationalQuaternion& q) {
  ordered_json a = ordered_json::array();
  for (const auto& c : q.coords()) a.push_back(to_string(c));
  return a;
}

ordered_json algebra_json(const AlgebraParams& p) {
  return ordered_json{{"b", to_string(p.b)},
                      {"c", to_string(p.c)},
                      {"field", p.field == BaseField::Q ? "Q" : "Q(i)"}};
}

ordered_json subring_json(const SubringElement& q) {
  return ordered_json{{"alpha", to_string(q.alpha())},
                      {"beta", to_string(q.beta())},
                      {"text", to_string(q)}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

struct Options {
  bool json = false;

  std::string b = "1", c = "1";
  std::string field = "q";
  std::string bound = "8";

  std::string n;          // represent / pisano positional
  std::string form;       // a,b,c,d
  std::string limit = "10000";

  std::string qx, qy;     // qdiv positionals
  bool scaled = false;

  std::string phi;        // a,b
  std::string subring_q;  // tores positional

  long index = 0;         // fib / fibquat positional
  std::string sigma = "3,0,1,2";
  bool show_norm = false;
  long fp_n = 0, fp_l = 0;  // fibprod

  long mk = 0;
  std::uint64_t ma = 0, mb = 0;
  std::string variant = "add";

  std::string identity;
  std::optional<long> id_n, id_m, id_k, id_l;
};

int dispatch_classify(const Options& o, std::ostream& out) {
  Integer b = parse_integer(o.b), c = parse_integer(o.c);
  auto cap = search_cap();
  if (o.field == "q") {
    ClassificationResult r = reduced_discriminant(b, c);
    bool division = r.verdict == Verdict::Division;
    if (o.json) {
      ordered_json primes = ordered_json::array();
      for (const auto& p : r.ramified_primes) primes.push_back(to_string(p));
      emit(out, ordered_json{{"algebra", algebra_json(AlgebraParams(b, c))},
                             {"verdict", division ? "division" : "split"},
                             {"reduced_discriminant", to_string(r.reduced_discriminant)},
                             {"ramified_primes", primes}});
    } else {
      out << "algebra: H(-" << to_string(b) << ",-" << to_string(c) << ") over Q\n";
      out << "verdict: " << (division ? "division" : "split") << "\n";
      out << "reduced discriminant: " << to_string(r.reduced_discriminant) << "\n";
      out << "ramified primes:";
      if (r.ramified_primes.empty()) out << " (none)";
      for (const auto& p : r.ramified_primes) out << " " << to_string(p);
      out << "\n";
    }
    return 0;
  }
  if (o.field != "qi") throw parse_error("--field must be 'q' or 'qi'");
  Integer bound = capped(parse_integer(o.bound), cap);
  if (!bound.fits_slong_p()) throw std::invalid_argument("bound too large");
  auto witness = classify_over_gaussian(b, c, bound.get_si());
  if (o.json) {
    ordered_json w;
    if (witness) {
      w = ordered_json::array();
      for (const auto& z : *witness) w.push_back(to_string(z));
    } else {
      w = nullptr;
    }
    emit(out, ordered_json{{"algebra", algebra_json(AlgebraParams(b, c, BaseField::Qi))},
                           {"search_bound", to_string(bound)},
                           {"split_witnessed", witness.has_value()},
                           {"witness", w}});
  } else {
    out << "algebra: H(-" << to_string(b) << ",-" << to_string(c) << ") over Q(i)\n";
    if (witness) {
      out << "verdict: split (conic point found)\n";
      out << "witness: (" << to_string((*witness)[0]) << ", " << to_string((*witness)[1])
          << ", " << to_string((*witness)[2]) << ")\n";
    } else {
      out << "verdict: no witness found up to height " << to_string(bound)
          << " (not a proof of division)\n";
    }
  }
  return 0;
}

int dispatch_represent(const Options& o, std::ostream& out) {
  Integer n = parse_integer(o.n);
  auto fv = parse_integer_list(o.form, 4, "--form");
  FormTuple f(fv[0], fv[1], fv[2], fv[3]);
  require_within_cap(isqrt(n), search_cap(), "representation search bound");
  auto rep = represent(n, f);
  if (o.json) {
    ordered_json form = ordered_json::array();
    for (const auto& c : fv) form.push_back(to_string(c));
    ordered_json r;
    if (rep) {
      r = ordered_json::array();
      for (const auto& x : *rep) r.push_back(to_string(x));
    } else {
      r = nullptr;
    }
    emit(out, ordered_json{{"n", to_string(n)}, {"form", form}, {"representation", r}});
  } else {
    out << "n: " << to_string(n) << "\n";
    out << "form: (" << to_string(f.a) << ", " << to_string(f.b) << ", "
        << to_string(f.c) << ", " << to_string(f.d) << ")\n";
    if (rep)
      out << "representation: (" << to_string((*rep)[0]) << ", " << to_string((*rep)[1])
          << ", " << to_string((*rep)[2]) << ", " << to_string((*rep)[3]) << ")\n";
    else
      out << "representation: none\n";
  }
  return 0;
}

int dispatch_universal(const Options& o, std::ostream& out) {
  auto fv = parse_integer_list(o.form, 4, "--form");
  FormTuple f(fv[0], fv[1], fv[2], fv[3]);
  Integer limit = capped(parse_integer(o.limit), search_cap());
  auto report = verify_universal(f, limit);
  if (o.json) {
    ordered_json form = ordered_json::array();
    for (const auto& c : fv) form.push_back(to_string(c));
    emit(out, ordered_json{{"form", form},
                           {"limit", to_string(limit)},
                           {"universal", report.universal},
                           {"counterexample", report.counterexample
                                                  ? ordered_json(to_string(*report.counterexample))
                                                  : ordered_json(nullptr)}});
  } else {
    out << "form: (" << to_string(f.a) << ", " << to_string(f.b) << ", "
        << to_string(f.c) << ", " << to_string(f.d) << ")\n";
    out << "limit: " << to_string(limit) << "\n";
    out << "universal: " << (report.universal ? "true" : "false") << "\n";
    if (report.counterexample)
      out << "least non-representable: " << to_string(*report.counterexample) << "\n";
  }
  return 0;
}

int dispatch_qdiv(const Options& o, std::ostream& out) {
  AlgebraParams params(parse_integer(o.b), parse_integer(o.c));
  LatticePoint x = LatticePoint::from_quaternion(parse_quaternion(o.qx, params));
  LatticePoint y = LatticePoint::from_quaternion(parse_quaternion(o.qy, params));
  auto [gamma, theta] =
      o.scaled ? divide_with_scaled_remainder(x, y) : right_divide(x, y);
  if (o.json) {
    emit(out, ordered_json{{"algebra", algebra_json(params)},
                           {"x", coords_json(x.value())},
                           {"y", coords_json(y.value())},
                           {"scaled", o.scaled},
                           {"gamma", coords_json(gamma.value())},
                           {"gamma_text", to_string(gamma.value())},
                           {"theta", coords_json(theta.value())},
                           {"theta_text", to_string(theta.value())},
                           {"norm_theta", to_string(theta.norm())},
                           {"norm_y", to_string(y.norm())}});
  } else {
    out << "identity: " << (o.scaled ? "n(y)*x = gamma*y + n(y)*theta"
                                     : "x = gamma*y + theta") << "\n";
    out << "gamma: " << to_string(gamma.value()) << "\n";
    out << "theta: " << to_string(theta.value()) << "\n";
    out << "norm(theta): " << to_string(theta.norm()) << " < norm(y): "
        << to_string(y.norm()) << "\n";
  }
  return 0;
}

int dispatch_residues(const Options& o, std::ostream& out) {
  auto pv = parse_integer_list(o.phi, 2, "--phi");
  SubringElement phi(pv[0], pv[1]);
  require_within_cap(subring_norm(pv[0], pv[1]), search_cap(), "residue system size");
  ResidueSystem sys(phi);
  if (o.json) {
    ordered_json reps = ordered_json::array();
    for (const auto& r : sys.representatives()) reps.push_back(subring_json(r));
    emit(out, ordered_json{{"phi", subring_json(phi)},
                           {"norm", to_string(sys.size())},
                           {"representatives", reps}});
  } else {
    out << "phi: " << to_string(phi) << "\n";
    out << "norm: " << to_string(sys.size()) << "\n";
    out << "representatives:";
    for (const auto& r : sys.representatives()) out << " " << to_string(r);
    out << "\n";
  }
  return 0;
}

int dispatch_tores(const Options& o, std::ostream& out) {
  auto pv = parse_integer_list(o.phi, 2, "--phi");
  SubringElement phi(pv[0], pv[1]);
  SubringElement q = parse_subring(o.subring_q);
  require_within_cap(subring_norm(pv[0], pv[1]), search_cap(), "residue system size");
  ResidueSystem sys(phi);
  Integer r = sys.to_residue(q);
  if (o.json) {
    emit(out, ordered_json{{"q", subring_json(q)},
                           {"phi", subring_json(phi)},
                           {"norm", to_string(sys.size())},
                           {"residue", to_string(r)}});
  } else {
    out << "residue: " << to_string(r) << "\n";
  }
  return 0;
}

int dispatch_fib(const Options& o, std::ostream& out) {
  if (o.index < 0) throw std::invalid_argument("index must be nonnegative");
  if (o.index > 10000000) throw std::invalid_argument("index too large");
  Integer v = fib(o.index);
  if (o.json)
    emit(out, ordered_json{{"n", o.index}, {"fib", to_string(v)}});
  else
    out << to_string(v) << "\n";
  return 0;
}

int dispatch_pisano(const Options& o, std::ostream& out) {
  Integer m = parse_integer(o.n);
  require_within_cap(m, search_cap(), "pisano modulus");
  Integer p = pisano_period(m);
  if (o.json)
    emit(out, ordered_json{{"m", to_string(m)}, {"period", to_string(p)}});
  else
    out << to_string(p) << "\n";
  return 0;
}

int dispatch_fibquat(const Options& o, std::ostream& out) {
  auto sv = parse_integer_list(o.sigma, 4, "--sigma");
  std::array<int, 4> offsets;
  for (int i = 0; i < 4; ++i) {
    if (!sv[i].fits_sint_p()) throw parse_error("--sigma entries must be 0..3");
    offsets[i] = sv[i].get_si();
  }
  FibQuaternion fq = fib_hurwitz(o.index, SigmaPermutation(offsets));
  Rational norm = fq.value.norm();
  if (o.json) {
    emit(out, ordered_json{{"n", o.index},
                           {"sigma", offsets},
                           {"coords", coords_json(fq.value)},
                           {"text", to_string(fq.value)},
                           {"norm", to_string(norm)}});
  } else {
    out << "n: " << o.index << "\n";
    out << "sigma offsets: (" << offsets[0] << ", " << offsets[1] << ", " << offsets[2]
        << ", " << offsets[3] << ")\n";
    out << "value: " << to_string(fq.value) << "\n";
    if (o.show_norm) out << "norm: " << to_string(norm) << "\n";
  }
  return 0;
}

int dispatch_fibprod(const Options& o, std::ostream& out) {
  SpecialProduct sp = special_product(o.fp_n, o.fp_l);
  if (o.json) {
    emit(out, ordered_json{{"n", o.fp_n},
                           {"l", o.fp_l},
                           {"product", coords_json(sp.product)},
                           {"product_text", to_string(sp.product)},
                           {"trace", to_string(sp.trace)},
                           {"trace_free", coords_json(sp.closed_form)},
                           {"trace_free_text", to_string(sp.closed_form)}});
  } else {
    out << "product: " << to_string(sp.product) << "\n";
    out << "trace: " << to_string(sp.trace) << "\n";
    out << "trace-free part: " << to_string(sp.closed_form) << "\n";
  }
  return 0;
}

int dispatch_monoid(const Options& o, std::ostream& out) {
  MonoidVariant variant = monoid_variant_from_string(o.variant);
  MonoidElement a(static_cast<int>(o.mk), o.ma);
  MonoidElement b(static_cast<int>(o.mk), o.mb);
  FibTrace trace = fib_sequence(a, b, variant);
  if (o.json) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : trace.terms) terms.push_back(t.index());
    emit(out, ordered_json{{"k", o.mk},
                           {"variant", o.variant},
                           {"terms", terms},
                           {"t", trace.t},
                           {"limit", trace.limit.index()},
                           {"limit_is_top", trace.limit.is_top()}});
  } else {
    out << "terms:";
    for (const auto& t : trace.terms) out << " y" << t.index();
    out << " ...\n";
    out << "t: " << trace.t << "\n";
    out << "limit: y" << trace.limit.index();
    if (trace.limit.is_top())
      out << " (top)";
    else if (trace.limit.is_identity())
      out << " (identity)";
    out << "\n";
  }
  return 0;
}

int dispatch_identity(const Options& o, std::ostream& out) {
  FibIdentity id = identity_from_string(o.identity);
  std::vector<long> args;
  ordered_json jargs;
  auto need = [&](const std::optional<long>& v, const char* name) {
    if (!v)
      throw parse_error("identity '" + o.identity + "' needs -" + name);
    args.push_back(*v);
    jargs[name] = *v;
  };
  switch (id) {
    case FibIdentity::SumOfSquares:
    case FibIdentity::SquareRecurrence:
      need(o.id_n, "n");
      break;
    case FibIdentity::Addition:
      need(o.id_n, "n");
      need(o.id_m, "m");
      break;
    case FibIdentity::Vajda:
      need(o.id_n, "n");
      need(o.id_m, "m");
      need(o.id_k, "k");
      break;
    case FibIdentity::ProductSum:
      need(o.id_n, "n");
      need(o.id_l, "l");
      break;
  }
  bool holds = check_identity(id, args);
  if (o.json)
    emit(out, ordered_json{{"identity", o.identity}, {"args", jargs}, {"holds", holds}});
  else
    out << "holds: " << (holds ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact arithmetic for rational quaternion algebras, quaternary "
               "forms and Fibonacci quaternions"};
  app.name("quatnum");
  app.require_subcommand(1);
  app.footer("QF_SEARCH_LIMIT in the environment caps every brute-force search range.");
  app.add_flag("--json", o.json, "machine-readable JSON output");

  auto* classify = app.add_subcommand("classify", "split/division verdict and "
                                      "reduced discriminant of H(-b,-c)");
  classify->add_option("-b", o.b, "positive b of H(-b,-c)")->required();
  classify->add_option("-c", o.c, "positive c of H(-b,-c)")->required();
  classify->add_option("--field", o.field, "base field: q or qi (default q)");
  classify->add_option("--bound", o.bound, "witness search height over Q(i)");

  auto* represent_cmd = app.add_subcommand("represent", "first representation of N "
                                           "by a diagonal quaternary form");
  represent_cmd->add_option("N", o.n, "nonnegative integer")->required();
  represent_cmd->add_option("--form", o.form, "coefficients a,b,c,d")->required();

  auto* universal = app.add_subcommand("universal", "check that a form represents "
                                       "every integer up to a limit");
  universal->add_option("--form", o.form, "coefficients a,b,c,d")->required();
  universal->add_option("--limit", o.limit, "upper bound (default 10000)");

  auto* qdiv = app.add_subcommand("qdiv", "integer quaternion division with "
                                  "remainder");
  qdiv->add_option("X", o.qx, "dividend, e.g. '5' or '1 + 2*e2 - e4'")->required();
  qdiv->add_option("Y", o.qy, "divisor")->required();
  qdiv->add_flag("--scaled", o.scaled, "use the scaled form n(y)x = gamma y + n(y) theta");
  qdiv->add_option("-b", o.b, "algebra parameter b (default 1)");
  qdiv->add_option("-c", o.c, "algebra parameter c (default 1)");

  auto* residues = app.add_subcommand("residues", "residue system of Z[v] modulo "
                                      "a primitive element");
  residues->add_option("--phi", o.phi, "modulus alpha,beta")->required();

  auto* tores = app.add_subcommand("tores", "residue of a Z[v] element modulo phi");
  tores->add_option("Q", o.subring_q, "element, e.g. 'v' or '-1+2*v'")->required();
  tores->add_option("--phi", o.phi, "modulus alpha,beta")->required();

  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number");
  fib_cmd->add_option("N", o.index, "index")->required();

  auto* pisano = app.add_subcommand("pisano", "period of the Fibonacci sequence "
                                    "modulo M");
  pisano->add_option("M", o.n, "modulus >= 2")->required();

  auto* fibquat = app.add_subcommand("fibquat", "permuted Fibonacci quaternion in "
                                     "H(-1,-2)");
  fibquat->add_option("N", o.index, "index >= 1")->required();
  fibquat->add_option("--sigma", o.sigma, "offset permutation (default 3,0,1,2)");
  fibquat->add_flag("--norm", o.show_norm, "print the norm too");

  auto* fibprod = app.add_subcommand("fibprod", "product of sign-twisted Fibonacci "
                                     "quaternions with its trace-free part");
  fibprod->add_option("N", o.fp_n, "first index (1 <= N < L)")->required();
  fibprod->add_option("L", o.fp_l, "second index")->required();

  auto* monoid = app.add_subcommand("monoid-fib", "Fibonacci sequence on the finite "
                                    "ordered monoid, with stationarity index");
  monoid->add_option("--k", o.mk, "number of two-element factors")->required();
  monoid->add_option("--a", o.ma, "index of the first seed")->required();
  monoid->add_option("--b", o.mb, "index of the second seed")->required();
  monoid->add_option("--variant", o.variant, "add (truncated) or or (bitwise)");

  auto* identity = app.add_subcommand("identity-check", "verify a Fibonacci identity "
                                      "at given indices");
  identity->add_option("ID", o.identity,
                       "sum-of-squares | square-recurrence | addition | vajda | "
                       "product-sum")->required();
  long idn = 0, idm = 0, idk = 0, idl = 0;
  auto* on = identity->add_option("-n", idn, "index n");
  auto* om = identity->add_option("-m", idm, "index m");
  auto* ok = identity->add_option("-k", idk, "index k");
  auto* ol = identity->add_option("-l", idl, "index l");

  const std::vector<CLI::App*> subs = {classify, represent_cmd, universal, qdiv,
                                       residues, tores,         fib_cmd,   pisano,
                                       fibquat,  fibprod,       monoid,    identity};
  for (CLI::App* sub : subs) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quatnum");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    for (CLI::App* sub : subs)
      if (sub->parsed()) {
        out << sub->help();
        return 0;
      }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (on->count() > 0) o.id_n = idn;
  if (om->count() > 0) o.id_m = idm;
  if (ok->count() > 0) o.id_k = idk;
  if (ol->count() > 0) o.id_l = idl;

  try {
    if (classify->parsed()) return dispatch_classify(o, out);
    if (represent_cmd->parsed()) return dispatch_represent(o, out);
    if (universal->parsed()) return dispatch_universal(o, out);
    if (qdiv->parsed()) return dispatch_qdiv(o, out);
    if (residues->parsed()) return dispatch_residues(o, out);
    if (tores->parsed()) return dispatch_tores(o, out);
    if (fib_cmd->parsed()) return dispatch_fib(o, out);
    if (pisano->parsed()) return dispatch_pisano(o, out);
    if (fibquat->parsed()) return dispatch_fibquat(o, out);
    if (fibprod->parsed()) return dispatch_fibprod(o, out);
    if (monoid->parsed()) return dispatch_monoid(o, out);
    if (identity->parsed()) return dispatch_identity(o, out);
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace quatnum::cli
