#include "quatnum/integer_quaternions.hpp"

#include <set>

#include "quatnum/quadratic_forms.hpp"

namespace quatnum {

namespace {

bool params_in_hlist(const AlgebraParams& p) {
  if (p.field != BaseField::Q) return false;
  for (const auto& [b, c] : universal_norm_pairs())
    if (p.b == b && p.c == c) return true;
  return false;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

bool is_half_odd(const Rational& q) {
  return denominator(q) == 2;  // canonical form, so numerator is odd
}

LatticeKind classify_coords(const std::array<Rational, 4>& co) {
  bool all_int = true, all_half = true;
  for (const auto& q : co) {
    if (!is_integral(q)) all_int = false;
    if (!is_half_odd(q)) all_half = false;
  }
  if (all_int) return LatticeKind::Lipschitz;
  if (all_half) return LatticeKind::Hurwitz;
  throw std::invalid_argument(
      "coordinates are neither all integers nor all half-integers");
}

// nearest integer to p/q (q > 0), ties toward zero
Integer round_nearest(const Integer& p, const Integer& q) {
  Integer quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Integer twice = 2 * abs(rem);
  if (twice > q) quot += (p < 0 ? -1 : 1);
  return quot;
}

}  // namespace

LatticePoint LatticePoint::lipschitz(const AlgebraParams& params,
                                     const std::array<Integer, 4>& coords) {
  if (!params_in_hlist(params))
    throw std::invalid_argument("integer quaternions are defined for the seven "
                                "division algebras with universal norm form");
  return LatticePoint(RationalQuaternion(params,
                                         {Rational(coords[0]), Rational(coords[1]),
                                          Rational(coords[2]), Rational(coords[3])}),
                      LatticeKind::Lipschitz);
}

LatticePoint LatticePoint::hurwitz(const std::array<Rational, 4>& coords) {
  AlgebraParams params(1, 1, BaseField::Q);
  LatticeKind kind = classify_coords(coords);
  return LatticePoint(RationalQuaternion(params, coords), kind);
}

LatticePoint LatticePoint::from_quaternion(const RationalQuaternion& value) {
  LatticeKind kind = classify_coords(value.coords());
  if (kind == LatticeKind::Hurwitz &&
      !(value.params().b == 1 && value.params().c == 1))
    throw std::invalid_argument("half-integer points only exist in H_Q(-1,-1)");
  if (!params_in_hlist(value.params()))
    throw std::invalid_argument("integer quaternions are defined for the seven "
                                "division algebras with universal norm form");
  return LatticePoint(value, kind);
}

std::array<Integer, 4> LatticePoint::integer_coords() const {
  if (kind_ != LatticeKind::Lipschitz)
    throw std::domain_error("not a Lipschitz point");
  const auto& co = value_.coords();
  return {numerator(co[0]), numerator(co[1]), numerator(co[2]), numerator(co[3])};
}

Integer LatticePoint::norm() const {
  Rational n = value_.norm();
  // integral for both parities: four odd squares sum to 4 mod 8
  if (denominator(n) != 1) throw std::logic_error("lattice norm not integral");
  return numerator(n);
}

LatticePoint operator+(const LatticePoint& x, const LatticePoint& y) {
  return LatticePoint::from_quaternion(x.value_ + y.value_);
}
LatticePoint operator-(const LatticePoint& x, const LatticePoint& y) {
  return LatticePoint::from_quaternion(x.value_ - y.value_);
}
LatticePoint operator*(const LatticePoint& x, const LatticePoint& y) {
  return LatticePoint::from_quaternion(x.value_ * y.value_);
}

std::pair<LatticePoint, LatticePoint> divide_with_scaled_remainder(
    const LatticePoint& x, const LatticePoint& y) {
  if (!(x.params() == y.params()))
    throw std::invalid_argument("mismatched algebra parameters");
  if (x.kind() != LatticeKind::Lipschitz || y.kind() != LatticeKind::Lipschitz)
    throw std::invalid_argument("scaled division takes Lipschitz points");
  if (y.is_zero()) throw std::invalid_argument("division by zero");
  const Integer n = y.norm();
  LatticePoint t = x * y.conj();
  std::array<Integer, 4> tc = t.integer_coords();
  std::array<Integer, 4> rounded{round_nearest(tc[0], n), round_nearest(tc[1], n),
                                 round_nearest(tc[2], n), round_nearest(tc[3], n)};
  LatticePoint delta = LatticePoint::lipschitz(x.params(), rounded);
  LatticePoint theta = x - delta * y;
  if (!(theta.norm() < n)) {
    // always-valid fallback: n(y) x = (x conj(y)) y exactly
    theta = LatticePoint::lipschitz(x.params(), {0, 0, 0, 0});
  }
  LatticePoint gamma = (x - theta) * y.conj();
  return {gamma, theta};
}

std::pair<LatticePoint, LatticePoint> right_divide(const LatticePoint& x,
                                                   const LatticePoint& y) {
  if (!(x.params() == y.params()) || !(x.params().b == 1 && x.params().c == 1))
    throw std::invalid_argument("right division is defined in H_Q(-1,-1)");
  if (x.kind() != LatticeKind::Lipschitz || y.kind() != LatticeKind::Lipschitz)
    throw std::invalid_argument("right division takes Lipschitz points");
  if (y.is_zero()) throw std::invalid_argument("division by zero");
  const Integer n = y.norm();
  if (n % 2 == 0)
    throw std::invalid_argument("right division needs an odd-norm divisor");
  LatticePoint t = x * y.conj();
  std::array<Integer, 4> tc = t.integer_coords();
  std::array<Integer, 4> rounded{round_nearest(tc[0], n), round_nearest(tc[1], n),
                                 round_nearest(tc[2], n), round_nearest(tc[3], n)};
  LatticePoint gamma = LatticePoint::lipschitz(x.params(), rounded);
  LatticePoint theta = x - gamma * y;
  if (!(theta.norm() < n)) throw std::logic_error("remainder bound violated");
  return {gamma, theta};
}

bool is_right_congruent(const LatticePoint& x, const LatticePoint& y,
                        const LatticePoint& phi) {
  if (!(x.params() == y.params()) || !(x.params() == phi.params()) ||
      !(phi.params().b == 1 && phi.params().c == 1))
    throw std::invalid_argument("right congruence is defined in H_Q(-1,-1)");
  if (phi.is_zero()) throw std::invalid_argument("zero modulus");
  const Integer n = phi.norm();
  if (n % 2 == 0) throw std::invalid_argument("congruence needs an odd modulus");
  LatticePoint d = (x - y) * phi.conj();
  for (const Integer& co : d.integer_coords())
    if (co % n != 0) return false;
  return true;
}

Integer count_residues(const LatticePoint& phi, const Integer& box) {
  if (!(phi.params().b == 1 && phi.params().c == 1) ||
      phi.kind() != LatticeKind::Lipschitz)
    throw std::invalid_argument("residue counting is defined in H_Q(-1,-1)");
  const Integer n = phi.norm();
  if (n % 2 == 0 || phi.is_zero())
    throw std::invalid_argument("residue counting needs an odd modulus");
  if (box < 1) throw std::invalid_argument("box must be positive");
  if (box > 40) throw std::invalid_argument("box too large for exhaustive count");
  const long b = box.get_si();
  // x == y (mod phi) iff the coordinates of (x - y) conj(phi) vanish mod
  // n(phi), so the coordinates of x conj(phi) mod n(phi) label the classes.
  std::array<Integer, 4> pco = phi.integer_coords();
  if (n < 32768 && pco[0].fits_sint_p() && pco[1].fits_sint_p() &&
      pco[2].fits_sint_p() && pco[3].fits_sint_p()) {
    const long p0 = pco[0].get_si(), p1 = pco[1].get_si(), p2 = pco[2].get_si(),
               p3 = pco[3].get_si();
    const long ln = n.get_si();
    auto residue = [ln](long v) { return ((v % ln) + ln) % ln; };
    std::set<std::uint64_t> labels;
    for (long a0 = 0; a0 < b; ++a0)
      for (long a1 = 0; a1 < b; ++a1)
        for (long a2 = 0; a2 < b; ++a2)
          for (long a3 = 0; a3 < b; ++a3) {
            // x * conj(phi) expanded for b = c = 1
            long u1 = a0 * p0 + a1 * p1 + a2 * p2 + a3 * p3;
            long u2 = -a0 * p1 + a1 * p0 - a2 * p3 + a3 * p2;
            long u3 = -a0 * p2 + a2 * p0 + a1 * p3 - a3 * p1;
            long u4 = -a0 * p3 + a3 * p0 - a1 * p2 + a2 * p1;
            std::uint64_t key = static_cast<std::uint64_t>(residue(u1));
            key = (key << 16) | static_cast<std::uint64_t>(residue(u2));
            key = (key << 16) | static_cast<std::uint64_t>(residue(u3));
            key = (key << 16) | static_cast<std::uint64_t>(residue(u4));
            labels.insert(key);
          }
    return Integer(static_cast<unsigned long>(labels.size()));
  }
  const LatticePoint pc = phi.conj();
  std::set<std::array<Integer, 4>> labels;
  std::array<Integer, 4> co;
  for (long a0 = 0; a0 < b; ++a0)
    for (long a1 = 0; a1 < b; ++a1)
      for (long a2 = 0; a2 < b; ++a2)
        for (long a3 = 0; a3 < b; ++a3) {
          LatticePoint x = LatticePoint::lipschitz(
              phi.params(), {Integer(a0), Integer(a1), Integer(a2), Integer(a3)});
          LatticePoint t = x * pc;
          std::array<Integer, 4> tc = t.integer_coords();
          for (int i = 0; i < 4; ++i)
            mpz_mod(co[i].get_mpz_t(), tc[i].get_mpz_t(), n.get_mpz_t());
          labels.insert(co);
        }
  return Integer(static_cast<unsigned long>(labels.size()));
}

bool is_unit(const LatticePoint& q) { return q.norm() == 1; }

bool is_prime_quaternion(const LatticePoint& q) { return is_prime(q.norm()); }

Integer subring_norm(const Integer& alpha, const Integer& beta) {
  return alpha * alpha + alpha * beta + beta * beta;
}

LatticePoint SubringElement::to_hurwitz() const {
  Rational half = make_rational(beta_, 2);
  return LatticePoint::hurwitz({Rational(alpha_) + half, half, half, half});
}

std::string to_string(const SubringElement& q) {
  if (q.is_zero()) return "0";
  std::string out;
  if (q.alpha() != 0) out = to_string(q.alpha());
  if (q.beta() != 0) {
    Integer mag = abs(q.beta());
    std::string term = (mag == 1) ? "v" : to_string(mag) + "*v";
    if (out.empty())
      out = (q.beta() < 0 ? "-" : "") + term;
    else
      out += (q.beta() < 0 ? "-" : "+") + term;
  }
  return out;
}

SubringElement parse_subring(std::string_view text) {
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  if (terms.empty()) throw parse_error("empty subring literal");
  Integer alpha = 0, beta = 0;
  for (auto& t : terms) {
    if (!t.empty() && t.back() == 'v') {
      t.pop_back();
      if (!t.empty() && t.back() == '*') t.pop_back();
      if (t.empty() || t == "+" || t == "-") t += "1";
      beta += parse_integer(t);
    } else {
      alpha += parse_integer(t);
    }
  }
  return {alpha, beta};
}

std::pair<SubringElement, SubringElement> subring_divide(const SubringElement& q,
                                                         const SubringElement& phi) {
  if (phi.is_zero()) throw std::invalid_argument("division by zero in Z[v]");
  const Integer n = phi.norm();
  SubringElement t = q * phi.conj();

  Integer qa, qb;
  mpz_tdiv_q(qa.get_mpz_t(), t.alpha().get_mpz_t(), n.get_mpz_t());
  mpz_tdiv_q(qb.get_mpz_t(), t.beta().get_mpz_t(), n.get_mpz_t());
  SubringElement gamma(qa, qb);
  SubringElement theta = q - gamma * phi;
  if (theta.norm() < n) return {gamma, theta};

  // some floor/ceil corner always lands within the norm bound
  Integer fa, fb, ca, cb;
  mpz_fdiv_q(fa.get_mpz_t(), t.alpha().get_mpz_t(), n.get_mpz_t());
  mpz_fdiv_q(fb.get_mpz_t(), t.beta().get_mpz_t(), n.get_mpz_t());
  ca = fa + 1;
  cb = fb + 1;
  bool have = false;
  Integer best_norm;
  for (const Integer& ga : {fa, ca})
    for (const Integer& gb : {fb, cb}) {
      SubringElement g(ga, gb);
      SubringElement th = q - g * phi;
      Integer tn = th.norm();
      if (!have || tn < best_norm ||
          (tn == best_norm && (ga < gamma.alpha() ||
                               (ga == gamma.alpha() && gb < gamma.beta())))) {
        have = true;
        best_norm = tn;
        gamma = g;
        theta = th;
      }
    }
  if (!(theta.norm() < n)) throw std::logic_error("Euclidean bound violated in Z[v]");
  return {gamma, theta};
}

ResidueSystem::ResidueSystem(SubringElement phi) : phi_(std::move(phi)) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), phi_.alpha().get_mpz_t(), phi_.beta().get_mpz_t());
  if (g != 1)
    throw std::invalid_argument("residue system needs a primitive modulus "
                                "(gcd(alpha, beta) = 1)");
  n_ = phi_.norm();
  if (n_ <= 1) throw std::invalid_argument("residue system needs norm > 1");
  if (n_ > 1000000) throw std::invalid_argument("modulus norm too large");
  // v == w (mod phi) with w = -alpha * beta^{-1} mod n; beta is invertible
  // because gcd(beta, n) divides gcd(alpha, beta)^2
  Integer beta_inv;
  if (mpz_invert(beta_inv.get_mpz_t(), phi_.beta().get_mpz_t(), n_.get_mpz_t()) == 0)
    throw std::logic_error("beta not invertible modulo the norm");
  Integer w = -phi_.alpha() * beta_inv;
  mpz_mod(v_image_.get_mpz_t(), w.get_mpz_t(), n_.get_mpz_t());
  reps_.reserve(n_.get_ui());
  for (Integer m = 0; m < n_; ++m)
    reps_.push_back(subring_divide(SubringElement(m, 0), phi_).second);
}

const SubringElement& ResidueSystem::int_map(const Integer& m) const {
  Integer r;
  mpz_mod(r.get_mpz_t(), m.get_mpz_t(), n_.get_mpz_t());
  return reps_[r.get_ui()];
}

Integer ResidueSystem::to_residue(const SubringElement& q) const {
  Integer r = q.alpha() + q.beta() * v_image_;
  Integer out;
  mpz_mod(out.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
  return out;
}

Integer to_residue(const SubringElement& q, const SubringElement& phi) {
  return ResidueSystem(phi).to_residue(q);
}

}  // namespace quatnum
