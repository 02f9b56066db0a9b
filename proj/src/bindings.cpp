#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "quatnum/classification.hpp"
#include "quatnum/fibonacci.hpp"
#include "quatnum/integer_quaternions.hpp"
#include "quatnum/monoid.hpp"
#include "quatnum/quadratic_forms.hpp"
#include "quatnum/quaternion.hpp"

namespace py = pybind11;
using namespace quatnum;

namespace {

// big integers cross the boundary as decimal strings
py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer int_arg(const py::object& o) {
  return Integer(py::str(o).cast<std::string>());
}

IntQuad quad_arg(const std::array<py::object, 4>& t) {
  return IntQuad{int_arg(t[0]), int_arg(t[1]), int_arg(t[2]), int_arg(t[3])};
}

py::tuple quad_out(const IntQuad& q) {
  return py::make_tuple(to_py(q[0]), to_py(q[1]), to_py(q[2]), to_py(q[3]));
}

RationalQuaternion quat_arg(const std::vector<std::string>& coords,
                            const py::object& b, const py::object& c) {
  if (coords.size() != 4) throw std::invalid_argument("need four coordinates");
  AlgebraParams params(int_arg(b), int_arg(c));
  return RationalQuaternion(params, {parse_rational(coords[0]), parse_rational(coords[1]),
                                     parse_rational(coords[2]), parse_rational(coords[3])});
}

py::list quat_out(const RationalQuaternion& q) {
  py::list coords;
  for (const auto& c : q.coords()) coords.append(to_string(c));
  return coords;
}

LatticePoint lattice_arg(const std::array<py::object, 4>& coords, const py::object& b,
                         const py::object& c) {
  AlgebraParams params(int_arg(b), int_arg(c));
  return LatticePoint::lipschitz(
      params, {int_arg(coords[0]), int_arg(coords[1]), int_arg(coords[2]),
               int_arg(coords[3])});
}

py::tuple lattice_out(const LatticePoint& p) {
  auto co = p.integer_coords();
  return py::make_tuple(to_py(co[0]), to_py(co[1]), to_py(co[2]), to_py(co[3]));
}

Place place_arg(const py::object& p) {
  if (py::isinstance<py::str>(p)) {
    auto s = p.cast<std::string>();
    if (s == "inf" || s == "infinity") return Place::at_infinity();
    throw std::invalid_argument("place must be a prime or 'inf'");
  }
  return Place::finite(int_arg(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for rational quaternion algebras, quaternary "
            "quadratic forms and Fibonacci quaternions";

  // scalars and elementary number theory
  m.def("legendre", [](const py::object& a, const py::object& p) {
    return legendre(int_arg(a), int_arg(p));
  });
  m.def("is_prime", [](const py::object& n) { return is_prime(int_arg(n)); });
  m.def("isqrt", [](const py::object& n) { return to_py(isqrt(int_arg(n))); });

  // fibonacci
  m.def("fib", [](long n) { return to_py(fib(n)); });
  m.def("lucas", [](long n) { return to_py(lucas(n)); });
  m.def("pisano", [](const py::object& m_) { return to_py(pisano_period(int_arg(m_))); });
  m.def("check_identity", [](const std::string& name, const std::vector<long>& args) {
    return check_identity(identity_from_string(name), args);
  });
  m.def("fib_quaternion", [](long n, const std::array<int, 4>& offsets) {
    FibQuaternion fq = fib_hurwitz(n, SigmaPermutation(offsets));
    py::dict d;
    d["n"] = n;
    d["coords"] = quat_out(fq.value);
    d["norm"] = to_string(fq.value.norm());
    return d;
  });
  m.def("special_fib_product", [](long n, long l) {
    SpecialProduct sp = special_product(n, l);
    py::dict d;
    d["product"] = quat_out(sp.product);
    d["trace"] = to_py(sp.trace);
    d["trace_free"] = quat_out(sp.closed_form);
    return d;
  });

  // quaternion algebra over Q, rational string coordinates
  m.def("quat_mul", [](const std::vector<std::string>& x, const std::vector<std::string>& y,
                       const py::object& b, const py::object& c) {
    return quat_out(quat_arg(x, b, c) * quat_arg(y, b, c));
  });
  m.def("quat_conj", [](const std::vector<std::string>& x, const py::object& b,
                        const py::object& c) {
    return quat_out(quat_arg(x, b, c).conj());
  });
  m.def("quat_norm", [](const std::vector<std::string>& x, const py::object& b,
                        const py::object& c) {
    return to_string(quat_arg(x, b, c).norm());
  });
  m.def("quat_trace", [](const std::vector<std::string>& x, const py::object& b,
                         const py::object& c) {
    return to_string(quat_arg(x, b, c).trace());
  });
  m.def("quat_inverse", [](const std::vector<std::string>& x, const py::object& b,
                           const py::object& c) {
    return quat_out(quat_arg(x, b, c).inverse());
  });

  // classification
  m.def("hilbert_symbol", [](const py::object& b, const py::object& c, const py::object& p) {
    return hilbert_symbol(int_arg(b), int_arg(c), place_arg(p));
  });
  m.def("classify", [](const py::object& b, const py::object& c) {
    ClassificationResult r = reduced_discriminant(int_arg(b), int_arg(c));
    py::dict d;
    d["verdict"] = r.verdict == Verdict::Division ? "division" : "split";
    d["reduced_discriminant"] = to_py(r.reduced_discriminant);
    py::list primes;
    for (const auto& p : r.ramified_primes) primes.append(to_py(p));
    d["ramified_primes"] = primes;
    return d;
  });
  m.def("are_isomorphic", [](const py::object& b1, const py::object& c1,
                             const py::object& b2, const py::object& c2) {
    return are_isomorphic(AlgebraParams(int_arg(b1), int_arg(c1)),
                          AlgebraParams(int_arg(b2), int_arg(c2)));
  });
  m.def("conic_solutions", [](const py::object& m_, long count) {
    py::list out;
    for (const auto& t : conic_solutions(int_arg(m_), count))
      out.append(py::make_tuple(to_py(t[0]), to_py(t[1]), to_py(t[2])));
    return out;
  });
  m.def("verify_conic_point", [](const py::object& b, const py::object& c,
                                 const std::array<std::string, 3>& pt) {
    return verify_conic_point(int_arg(b), int_arg(c),
                              {parse_gaussian(pt[0]), parse_gaussian(pt[1]),
                               parse_gaussian(pt[2])});
  });
  m.def("classify_over_gaussian",
        [](const py::object& b, const py::object& c, long bound) -> py::object {
          auto w = classify_over_gaussian(int_arg(b), int_arg(c), bound);
          if (!w) return py::none();
          return py::make_tuple(to_string((*w)[0]), to_string((*w)[1]),
                                to_string((*w)[2]));
        });

  // quadratic forms
  m.def("represent",
        [](const py::object& n, const std::array<py::object, 4>& form) -> py::object {
          auto f = quad_arg(form);
          auto r = represent(int_arg(n), FormTuple(f[0], f[1], f[2], f[3]));
          if (!r) return py::none();
          return quad_out(*r);
        });
  m.def("verify_universal",
        [](const std::array<py::object, 4>& form, const py::object& limit) {
          auto f = quad_arg(form);
          auto r = verify_universal(FormTuple(f[0], f[1], f[2], f[3]), int_arg(limit));
          return py::make_tuple(r.universal, r.counterexample
                                                 ? py::object(to_py(*r.counterexample))
                                                 : py::object(py::none()));
        });
  m.def("represent_rational",
        [](const std::string& m_, const py::object& b, const py::object& c) {
          RatQuad r = represent_rational(parse_rational(m_), int_arg(b), int_arg(c));
          return py::make_tuple(to_string(r[0]), to_string(r[1]), to_string(r[2]),
                                to_string(r[3]));
        });
  m.def("compose", [](const std::array<py::object, 4>& x,
                      const std::array<py::object, 4>& y, const std::string& variant) {
    ComposeVariant v;
    if (variant == "direct")
      v = ComposeVariant::Direct;
    else if (variant == "twisted")
      v = ComposeVariant::Twisted;
    else
      throw std::invalid_argument("variant must be 'direct' or 'twisted'");
    return quad_out(compose(quad_arg(x), quad_arg(y), v));
  });

  // integer quaternions
  m.def("right_divide", [](const std::array<py::object, 4>& x,
                           const std::array<py::object, 4>& y) {
    py::object one = py::cast(1);
    auto [g, t] = right_divide(lattice_arg(x, one, one), lattice_arg(y, one, one));
    return py::make_tuple(lattice_out(g), lattice_out(t));
  });
  m.def("scaled_divide", [](const std::array<py::object, 4>& x,
                            const std::array<py::object, 4>& y, const py::object& b,
                            const py::object& c) {
    auto [g, t] = divide_with_scaled_remainder(lattice_arg(x, b, c), lattice_arg(y, b, c));
    return py::make_tuple(lattice_out(g), lattice_out(t));
  });
  m.def("is_right_congruent",
        [](const std::array<py::object, 4>& x, const std::array<py::object, 4>& y,
           const std::array<py::object, 4>& phi) {
          py::object one = py::cast(1);
          return is_right_congruent(lattice_arg(x, one, one), lattice_arg(y, one, one),
                                    lattice_arg(phi, one, one));
        });
  m.def("count_residues",
        [](const std::array<py::object, 4>& phi, const py::object& box) {
          py::object one = py::cast(1);
          return to_py(count_residues(lattice_arg(phi, one, one), int_arg(box)));
        });
  m.def("is_unit", [](const std::array<py::object, 4>& q, const py::object& b,
                      const py::object& c) { return is_unit(lattice_arg(q, b, c)); });
  m.def("is_prime_quaternion",
        [](const std::array<py::object, 4>& q, const py::object& b,
           const py::object& c) { return is_prime_quaternion(lattice_arg(q, b, c)); });
  m.def("subring_norm", [](const py::object& a, const py::object& b) {
    return to_py(subring_norm(int_arg(a), int_arg(b)));
  });
  m.def("residue_system", [](const py::object& alpha, const py::object& beta) {
    ResidueSystem sys(SubringElement(int_arg(alpha), int_arg(beta)));
    py::dict d;
    d["norm"] = to_py(sys.size());
    py::list reps;
    for (const auto& r : sys.representatives())
      reps.append(py::make_tuple(to_py(r.alpha()), to_py(r.beta())));
    d["representatives"] = reps;
    return d;
  });
  m.def("to_residue", [](const std::array<py::object, 2>& q,
                         const std::array<py::object, 2>& phi) {
    return to_py(to_residue(SubringElement(int_arg(q[0]), int_arg(q[1])),
                            SubringElement(int_arg(phi[0]), int_arg(phi[1]))));
  });

  // stationary monoid
  m.def("monoid_op", [](int k, std::uint64_t i, std::uint64_t j, const std::string& variant) {
    return monoid_op(MonoidElement(k, i), MonoidElement(k, j),
                     monoid_variant_from_string(variant))
        .index();
  });
  m.def("monoid_fib", [](int k, std::uint64_t a, std::uint64_t b, const std::string& variant) {
    FibTrace tr = fib_sequence(MonoidElement(k, a), MonoidElement(k, b),
                               monoid_variant_from_string(variant));
    py::dict d;
    py::list terms;
    for (const auto& t : tr.terms) terms.append(t.index());
    d["terms"] = terms;
    d["t"] = tr.t;
    d["limit"] = tr.limit.index();
    return d;
  });

  m.attr("__version__") = "0.1.0";
}
