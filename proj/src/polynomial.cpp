#include "exdisc/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "exdisc/errors.hpp"

namespace exdisc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) {
  if (c == 0) return Polynomial();
  return Polynomial({c});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = Polynomial::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(out));
}

Rational Polynomial::integral(const Rational& a, const Rational& b) const {
  Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner on the argument polynomial (a + b*x).
  Polynomial arg({a, b});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * arg + Polynomial::constant(*it);
  return acc;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  assert(xs.size() == ys.size() && !xs.empty());
  const std::size_t n = xs.size();
  std::vector<Rational> coef = ys;  // Newton divided differences, in place
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  Polynomial poly;
  for (std::size_t i = n; i-- > 0;) {
    poly = poly * Polynomial({-xs[i], Rational(1)}) + Polynomial::constant(coef[i]);
  }
  return poly;
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Polynomial poly_rem(Polynomial a, const Polynomial& b) {
  assert(!b.is_zero());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational factor = a.coeffs().back() / b.coeffs().back();
    int shift = a.degree() - b.degree();
    std::vector<Rational> out = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < bc.size(); ++i) out[i + shift] -= factor * bc[i];
    a = Polynomial(std::move(out));
  }
  return a;
}

struct SturmChain {
  std::vector<Polynomial> seq;

  explicit SturmChain(const Polynomial& p) {
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (!d.is_zero()) {
      seq.push_back(d);
      while (true) {
        Polynomial r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
      }
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : seq) {
      int s = sign_of(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct real roots of seq[0] in (a, b); requires non-root endpoints.
  int count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }
};

// Exact division of p by (x - r); p(r) must be 0.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  const auto& c = p.coeffs();
  assert(!c.empty());
  std::vector<Rational> out(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    out[i - 1] = carry;
  }
  assert(c[0] + carry * r == 0);
  return Polynomial(std::move(out));
}

// A point strictly between lo and hi where p does not vanish. p has finitely
// many roots, so one of deg(p)+1 distinct candidates works.
Rational nonroot_between(const Polynomial& p, const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  long num = 1, den = 2;
  for (int tries = 0; tries <= p.degree() + 1; ++tries) {
    Rational cand = lo + width * rat(num, den);
    if (p(cand) != 0) return cand;
    num = den + 1;
    den = 2 * den + 1;
  }
  throw std::logic_error("nonroot_between exhausted candidates");
}

struct Isolation {
  // Open intervals, each holding exactly one distinct root; endpoints non-roots.
  std::vector<std::pair<Rational, Rational>> intervals;
};

void isolate_rec(const SturmChain& chain, const Polynomial& p, const Rational& lo,
                 const Rational& hi, int count, Isolation& out, int depth) {
  if (count == 0) return;
  if (depth > 512) throw std::logic_error("root isolation did not converge");
  if (count == 1) {
    out.intervals.emplace_back(lo, hi);
    return;
  }
  Rational mid = nonroot_between(p, lo, hi);
  int left = chain.count(lo, mid);
  isolate_rec(chain, p, lo, mid, left, out, depth + 1);
  isolate_rec(chain, p, mid, hi, count - left, out, depth + 1);
}

struct EndpointReduced {
  Polynomial work;  // same sign as the input everywhere in (a, b)
  bool valid = false;
};

// Removes the roots at a and b so Sturm counting applies; compensates the
// sign flip introduced by odd powers of (x - b).
EndpointReduced reduce_at_endpoints(const Polynomial& p, const Rational& a, const Rational& b) {
  EndpointReduced r;
  if (p.is_zero() || !(a < b)) return r;
  Polynomial work = p;
  while (!work.is_zero() && work(a) == 0) work = deflate(work, a);
  int flips = 0;
  while (!work.is_zero() && work(b) == 0) {
    work = deflate(work, b);
    ++flips;
  }
  if (work.is_zero()) return r;  // p was a pure endpoint-root monomial product: impossible unless constant 0
  if (flips % 2 == 1) work = -work;
  r.work = work;
  r.valid = true;
  return r;
}

}  // namespace

int sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::logic_error("sturm_count on zero polynomial");
  if (p(a) == 0 || p(b) == 0) throw std::logic_error("sturm_count requires non-root endpoints");
  if (!(a < b)) return 0;
  return SturmChain(p).count(a, b);
}

bool nonneg_on(const Polynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) return true;
  auto red = reduce_at_endpoints(p, a, b);
  if (!red.valid) return true;  // p identically zero
  const Polynomial& work = red.work;
  if (work(a) < 0 || work(b) < 0) return false;
  SturmChain chain(work);
  Isolation iso;
  isolate_rec(chain, work, a, b, chain.count(a, b), iso, 0);
  for (const auto& [lo, hi] : iso.intervals)
    if (work(lo) < 0 || work(hi) < 0) return false;
  return true;
}

std::optional<Rational> find_positive_point(const Polynomial& p, const Rational& a,
                                            const Rational& b) {
  if (!(a < b)) return std::nullopt;
  auto red = reduce_at_endpoints(p, a, b);
  if (!red.valid) return std::nullopt;
  const Polynomial& work = red.work;
  SturmChain chain(work);
  Isolation iso;
  isolate_rec(chain, work, a, b, chain.count(a, b), iso, 0);
  // Root-free gaps between isolating intervals have constant sign: test their
  // midpoints. Inside an isolating interval the sign flips at most once at
  // the root; approach the interval ends until the original sign shows up.
  auto scan_from = [&](const Rational& from, const Rational& toward) -> std::optional<Rational> {
    Rational step = (toward - from) / 2;
    for (int k = 0; k < 256; ++k) {
      Rational t = from + step;
      if (t > a && t < b && p(t) > 0) return t;
      if (work(t) != 0 && sign_of(work(t)) == sign_of(work(from))) break;  // sign region reached
      step /= 2;
    }
    return std::nullopt;
  };
  std::vector<Rational> cuts{a};
  for (const auto& [lo, hi] : iso.intervals) {
    cuts.push_back(lo);
    cuts.push_back(hi);
  }
  cuts.push_back(b);
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {  // gaps, including (a, lo_1)
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (mid > a && mid < b && p(mid) > 0) return mid;
  }
  for (const auto& [lo, hi] : iso.intervals) {
    if (work(lo) > 0)
      if (auto t = scan_from(lo, hi)) return t;
    if (work(hi) > 0)
      if (auto t = scan_from(hi, lo)) return t;
  }
  return std::nullopt;
}

std::pair<Rational, Rational> positive_neighborhood(const Polynomial& p, const Rational& a,
                                                    const Rational& b, const Rational& at) {
  assert(p(at) > 0 && a < at && at < b);
  Rational lo = a, hi = b;
  for (int iter = 0; iter < 512; ++iter) {
    Rational l = lo == at ? lo : (lo + at) / 2;
    Rational h = hi == at ? hi : (at + hi) / 2;
    if (l == at || h == at) break;
    if (p(l) != 0 && p(h) != 0 && sturm_count(p, l, h) == 0) return {l, h};
    lo = l;
    hi = h;
  }
  throw std::logic_error("positive_neighborhood did not converge");
}

namespace {

// Exact rational crossing inside (lo, hi) for a sign-changing simple root.
Rational pin_crossing(const Polynomial& work, Rational lo, Rational hi) {
  if (work.degree() == 1) {
    return -work.coeffs()[0] / work.coeffs()[1];
  }
  if (work.degree() == 2) {
    const auto& c = work.coeffs();
    Rational disc = c[1] * c[1] - 4 * c[2] * c[0];
    if (disc < 0) throw std::logic_error("no real root in pin_crossing");
    mpz_class dn = disc.get_num(), dd = disc.get_den();
    if (!mpz_perfect_square_p(dn.get_mpz_t()) || !mpz_perfect_square_p(dd.get_mpz_t()))
      raise(Errc::irrational_boundary, "level crossing at an irrational point");
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), dn.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), dd.get_mpz_t());
    Rational root_disc(sn, sd);
    root_disc.canonicalize();
    for (int s : {+1, -1}) {
      Rational r = (-c[1] + Rational(s) * root_disc) / (2 * c[2]);
      if (lo < r && r < hi) return r;
    }
    throw std::logic_error("quadratic root not inside isolating interval");
  }
  // Higher degree: Stern-Brocot pinning. Any rational crossing is found once
  // the interval is narrow enough; give up past a generous denominator budget.
  int s_lo = sign_of(work(lo));
  for (int iter = 0; iter < 4096; ++iter) {
    Rational m = simplest_in_interval(lo, hi);
    Rational v = work(m);
    if (v == 0) return m;
    if (sign_of(v) == s_lo)
      lo = m;
    else
      hi = m;
    if (mpz_sizeinbase(m.get_den().get_mpz_t(), 2) > 256)
      raise(Errc::irrational_boundary, "level crossing could not be pinned to a rational point");
  }
  raise(Errc::irrational_boundary, "level crossing could not be pinned to a rational point");
}

}  // namespace

std::vector<Rational> sign_change_points(const Polynomial& p, const Rational& a,
                                         const Rational& b) {
  std::vector<Rational> out;
  if (!(a < b)) return out;
  auto red = reduce_at_endpoints(p, a, b);
  if (!red.valid) return out;
  const Polynomial& work = red.work;
  SturmChain chain(work);
  Isolation iso;
  isolate_rec(chain, work, a, b, chain.count(a, b), iso, 0);
  for (const auto& [lo, hi] : iso.intervals) {
    int s1 = sign_of(work(lo)), s2 = sign_of(work(hi));
    if (s1 == s2) continue;  // even-multiplicity touch, no crossing
    out.push_back(pin_crossing(work, lo, hi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace exdisc
