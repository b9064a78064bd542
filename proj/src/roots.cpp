#include "garsia/roots.hpp"

#include <algorithm>
#include <cmath>

#include "garsia/errors.hpp"
#include "garsia/qpoly.hpp"

namespace garsia {

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<IntPolynomial, int>> out;
  QPoly f(p);
  if (f.degree() < 1) return out;
  QPoly g = gcd(f, f.derivative());
  QPoly s, rem;
  QPoly::divmod(f, g, s, rem);  // s = product of distinct irreducible factors
  int i = 1;
  while (s.degree() >= 1) {
    QPoly y = g.degree() >= 1 ? gcd(s, g) : QPoly::constant(Rational(1));
    QPoly fi, r2;
    QPoly::divmod(s, y, fi, r2);
    if (fi.degree() >= 1) out.emplace_back(fi.to_int_primitive(), i);
    s = y;
    if (g.degree() >= 1) {
      QPoly g2, r3;
      QPoly::divmod(g, y, g2, r3);
      g = g2;
    }
    ++i;
  }
  return out;
}

namespace {

BigComplex horner(const std::vector<BigFloat>& coeffs, const BigComplex& z) {
  mpfr_prec_t prec = z.re.prec();
  BigComplex acc(prec);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z;
    acc.re = acc.re + coeffs[i];
  }
  return acc;
}

// rigorous Horner forward-error bound: |computed - exact| <= 16(n+1) 2^-prec sum |c_j| max(1,|z|)^j
Rational eval_error_bound(const IntPolynomial& p, const Rational& abs_z_hi, mpfr_prec_t prec) {
  Rational zmax = std::max(Rational(1), abs_z_hi);
  Rational s = 0, zp = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    s += Rational(abs(p.coeff(i))) * zp;
    zp *= zmax;
  }
  Integer two_prec;
  mpz_mul_2exp(two_prec.get_mpz_t(), Integer(1).get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
  return Rational(Integer(16) * Integer(static_cast<long>(p.size() + 1))) * s / Rational(two_prec);
}

// |z| upper bound as an exact rational (norm2 is exact, sqrt rounded up)
Rational abs_hi_of(const BigComplex& z, mpfr_prec_t prec) {
  Rational n2 = z.re.to_rational() * z.re.to_rational() + z.im.to_rational() * z.im.to_rational();
  return sqrt_rational_dir(n2, prec, true);
}
Rational abs_lo_of(const BigComplex& z, mpfr_prec_t prec) {
  Rational n2 = z.re.to_rational() * z.re.to_rational() + z.im.to_rational() * z.im.to_rational();
  return sqrt_rational_dir(n2, prec, false);
}

std::vector<BigComplex> aberth(const IntPolynomial& f, mpfr_prec_t prec) {
  long n = f.degree();
  std::vector<BigFloat> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f.coeffs()) coeffs.push_back(BigFloat::from_integer(c, prec));
  std::vector<BigFloat> dcoeffs;
  for (size_t i = 1; i < f.size(); ++i)
    dcoeffs.push_back(BigFloat::from_integer(f.coeff(i) * Integer(static_cast<long>(i)), prec));

  // Cauchy bound for the starting circle
  double lead = std::fabs(f.leading().get_d());
  double h = f.height().get_d();
  double r0 = std::min(1.0 + h / lead, 1e6);
  std::vector<BigComplex> z;
  z.reserve(n);
  for (long k = 0; k < n; ++k) {
    double th = 2.0 * M_PI * (static_cast<double>(k) + 0.354) / static_cast<double>(n) + 0.1;
    z.emplace_back(0.5 * r0 * std::cos(th), 0.5 * r0 * std::sin(th), prec);
  }

  BigFloat tol(prec);
  mpfr_set_ui_2exp(tol.raw(), 1, -(prec - 24), MPFR_RNDN);
  for (int iter = 0; iter < 600; ++iter) {
    BigFloat worst(prec);
    for (long i = 0; i < n; ++i) {
      BigComplex pv = horner(coeffs, z[i]);
      BigComplex dv = horner(dcoeffs, z[i]);
      if (dv.is_zero()) {
        z[i].re = z[i].re + BigFloat(1e-7 * (iter + 1), prec);
        worst = BigFloat(1.0, prec);
        continue;
      }
      BigComplex newton = pv / dv;
      BigComplex s(prec);
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        BigComplex d = z[i] - z[j];
        if (d.is_zero()) d.re = d.re + BigFloat(1e-9, prec);
        BigComplex one(1.0, 0.0, prec);
        s = s + one / d;
      }
      BigComplex one(1.0, 0.0, prec);
      BigComplex denom = one - newton * s;
      BigComplex w = denom.is_zero() ? newton : newton / denom;
      z[i] = z[i] - w;
      BigFloat mag = w.abs() / (BigFloat(1.0, prec) + z[i].abs());
      if (worst < mag) worst = mag;
    }
    if (worst < tol) break;
  }
  return z;
}

struct FactorRoots {
  std::vector<CertifiedRoot> roots;
  bool ok = false;
};

FactorRoots certify_factor(const IntPolynomial& f, int multiplicity, const Rational& radius_goal,
                           mpfr_prec_t prec) {
  FactorRoots out;
  long n = f.degree();
  if (n == 1) {
    CertifiedRoot r;
    r.center_re = -Rational(f.coeff(0)) / Rational(f.coeff(1));
    r.center_im = 0;
    r.radius = 0;
    r.multiplicity = multiplicity;
    r.is_real = true;
    Rational a = r.center_re >= 0 ? r.center_re : Rational(-r.center_re);
    r.abs_lo = r.abs_hi = a;
    out.roots.push_back(std::move(r));
    out.ok = true;
    return out;
  }

  auto zs = aberth(f, prec);
  IntPolynomial fd = f.derivative();
  std::vector<CertifiedRoot> roots;
  for (const auto& z : zs) {
    std::vector<BigFloat> coeffs, dcoeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(BigFloat::from_integer(c, prec));
    for (const auto& c : fd.coeffs()) dcoeffs.push_back(BigFloat::from_integer(c, prec));
    Rational azhi = abs_hi_of(z, prec);
    BigComplex pv = horner(coeffs, z);
    BigComplex dv = horner(dcoeffs, z);
    Rational p_hi = abs_hi_of(pv, prec) + eval_error_bound(f, azhi, prec);
    Rational d_lo = abs_lo_of(dv, prec) - eval_error_bound(fd, azhi, prec);
    if (d_lo <= 0) return out;  // cannot certify at this precision
    CertifiedRoot r;
    r.center_re = z.re.to_rational();
    r.center_im = z.im.to_rational();
    r.radius = Rational(n) * p_hi / d_lo;
    r.multiplicity = multiplicity;
    if (r.radius > radius_goal) return out;
    roots.push_back(std::move(r));
  }

  // pairwise disjoint disks: with n disks each containing at least one of the
  // n roots, disjointness certifies exactly one root per disk
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Rational dx = roots[i].center_re - roots[j].center_re;
      Rational dy = roots[i].center_im - roots[j].center_im;
      Rational rr = roots[i].radius + roots[j].radius;
      if (dx * dx + dy * dy <= rr * rr) return out;
    }

  // real-root detection through conjugate symmetry of the disk system
  for (size_t i = 0; i < roots.size(); ++i) {
    Rational aim = roots[i].center_im >= 0 ? roots[i].center_im : Rational(-roots[i].center_im);
    if (aim > roots[i].radius) {
      roots[i].is_real = false;
      continue;
    }
    // the mirror disk contains the conjugate root; if it meets no other disk,
    // the conjugate coincides with this root
    bool meets_other = false;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      Rational dx = roots[i].center_re - roots[j].center_re;
      Rational dy = -roots[i].center_im - roots[j].center_im;
      Rational rr = roots[i].radius + roots[j].radius;
      if (dx * dx + dy * dy <= rr * rr) {
        meets_other = true;
        break;
      }
    }
    if (meets_other) return out;  // ambiguous; escalate
    roots[i].is_real = true;
  }

  // modulus enclosures
  for (auto& r : roots) {
    Rational n2 = r.center_re * r.center_re + r.center_im * r.center_im;
    Rational alo = sqrt_rational_dir(n2, prec, false) - r.radius;
    if (alo < 0) alo = 0;
    r.abs_lo = alo;
    r.abs_hi = sqrt_rational_dir(n2, prec, true) + r.radius;
  }

  out.roots = std::move(roots);
  out.ok = true;
  return out;
}

}  // namespace

RootSet find_roots(const IntPolynomial& p, const Rational& radius_goal, mpfr_prec_t max_prec) {
  if (p.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
  RootSet out;
  out.source = p;
  if (p.degree() == 0) return out;

  IntPolynomial q = p.primitive_part();
  long v = q.valuation();
  if (v > 0) {
    std::vector<Integer> shifted(q.coeffs().begin() + v, q.coeffs().end());
    q = IntPolynomial(std::move(shifted));
    CertifiedRoot zero;
    zero.center_re = zero.center_im = zero.radius = 0;
    zero.multiplicity = static_cast<int>(v);
    zero.is_real = true;
    zero.abs_lo = zero.abs_hi = 0;
    out.roots.push_back(std::move(zero));
  }

  if (q.degree() >= 1) {
    auto factors = squarefree_decomposition(q);
    for (mpfr_prec_t prec = 128;; prec *= 2) {
      if (prec > max_prec) throw PrecisionExhausted("root certification failed below the precision cap");
      std::vector<CertifiedRoot> all;
      bool ok = true;
      for (const auto& [f, mult] : factors) {
        auto fr = certify_factor(f, mult, radius_goal, prec);
        if (!fr.ok) {
          ok = false;
          break;
        }
        for (auto& r : fr.roots) all.push_back(std::move(r));
      }
      if (ok) {
        // cross-factor disjointness (factors are coprime, roots distinct)
        for (size_t i = 0; i < all.size() && ok; ++i)
          for (size_t j = i + 1; j < all.size(); ++j) {
            Rational dx = all[i].center_re - all[j].center_re;
            Rational dy = all[i].center_im - all[j].center_im;
            Rational rr = all[i].radius + all[j].radius;
            if (dx * dx + dy * dy <= rr * rr) {
              ok = false;
              break;
            }
          }
      }
      if (ok) {
        for (auto& r : all) out.roots.push_back(std::move(r));
        break;
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (a.center_re != b.center_re) return a.center_re < b.center_re;
    return a.center_im < b.center_im;
  });
  for (const auto& r : out.roots) out.total_multiplicity += r.multiplicity;
  return out;
}

RootSet find_roots(const IntPolynomial& p) {
  return find_roots(p, Rational(1, Integer(1) << 64));
}

Rational root_distance_lo(const CertifiedRoot& a, const CertifiedRoot& b, mpfr_prec_t prec) {
  Rational dx = a.center_re - b.center_re;
  Rational dy = a.center_im - b.center_im;
  Rational d = sqrt_rational_dir(dx * dx + dy * dy, prec, false) - a.radius - b.radius;
  return d < 0 ? Rational(0) : d;
}

Rational root_distance_hi(const CertifiedRoot& a, const CertifiedRoot& b, mpfr_prec_t prec) {
  Rational dx = a.center_re - b.center_re;
  Rational dy = a.center_im - b.center_im;
  return sqrt_rational_dir(dx * dx + dy * dy, prec, true) + a.radius + b.radius;
}

}  // namespace garsia
