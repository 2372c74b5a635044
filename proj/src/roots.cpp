#include "canstrip/roots.hpp"

#include "canstrip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace canstrip {

BigFloat CertifiedRoot::re_error() const {
  if (exact_root || exact_re) return BigFloat::zero(radius.precision());
  return radius;
}

namespace {

// ------------------------------------------------------------ exact helpers

/// Integer coefficients of p (common denominator cleared, content removed).
std::vector<Int> integerize(const ExactPolynomial& p) {
  Int common(1);
  for (const Rat& c : p.coefficients())
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(p.coefficients().size());
  Int content(0);
  for (const Rat& c : p.coefficients()) {
    Rat scaled = c * Rat(common);
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (Int& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

/// Exact rational value of a finite BigFloat (mantissa * 2^e).
Rat to_rational_exact(const BigFloat& x) {
  if (x.is_zero()) return Rat(0);
  Int m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
  if (e >= 0) {
    Int num;
    mpz_mul_2exp(num.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rat(num);
  }
  Int den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  Rat r(m, den);
  r.canonicalize();
  return r;
}

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Best continued-fraction convergent of x with denominator <= max_den and
/// |convergent - x| <= tol; nullopt when none qualifies.
std::optional<Rat> rationalize(const Rat& x, const Rat& tol, const Int& max_den) {
  Int num = x.get_num(), den = x.get_den();
  Int p_prev(1), p_prev2(0), q_prev(0), q_prev2(1);
  while (den != 0) {
    Int a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    if (q > max_den) return std::nullopt;
    Rat cand(p, q);
    cand.canonicalize();
    if (rat_abs(cand - x) <= tol) return cand;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    num = den;
    den = rem;
  }
  return std::nullopt;
}

/// Divides (t - root) out of work as often as it is an exact root.
int deflate_all(ExactPolynomial& work, const Rat& root) {
  int count = 0;
  while (true) {
    auto [q, ok] = exact_divide_by_root(work, root);
    if (!ok) break;
    work = std::move(q);
    ++count;
  }
  return count;
}

// ------------------------------------------------------------ float helpers

BigComplex horner(const std::vector<BigFloat>& cf, const BigComplex& z) {
  const mpfr_prec_t P = z.precision();
  BigComplex acc(BigFloat(cf.back()), BigFloat::zero(P));
  for (size_t i = cf.size() - 1; i-- > 0;) {
    acc = acc * z;
    acc.re += cf[i];
  }
  return acc;
}

BigFloat horner_abs(const std::vector<BigFloat>& cf_abs, const BigFloat& x) {
  BigFloat acc = cf_abs.back();
  for (size_t i = cf_abs.size() - 1; i-- > 0;) {
    acc *= x;
    acc += cf_abs[i];
  }
  return acc;
}

BigComplex reciprocal(const BigComplex& z) {
  BigFloat d = z.re * z.re + z.im * z.im;
  return {z.re / d, -z.im / d};
}

// ------------------------------------------------------------ Aberth solver

struct Attempt {
  bool certified = false;
  std::vector<BigComplex> points;
  std::vector<BigFloat> radii;          // valid when non-empty
  std::vector<bool> im_exact;           // imaginary part set exactly to 0
  std::vector<bool> re_on_center;       // real part set exactly to the centre
  BigFloat max_radius;
};

class AberthSolver {
 public:
  explicit AberthSolver(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    n_ = static_cast<int>(c_.size()) - 1;
  }

  int degree() const { return n_; }

  /// Upper bound on root moduli (Fujiwara), computed on bit lengths so huge
  /// coefficient ratios cannot distort the start circle.
  double root_bound() const {
    const double lead_bits = static_cast<double>(bit_length(c_.back()));
    double max_log2 = -1024.0;
    for (int i = 1; i <= n_; ++i) {
      const Int& c = c_[static_cast<size_t>(n_ - i)];
      if (c == 0) continue;
      const double bits = static_cast<double>(bit_length(c)) - lead_bits;
      max_log2 = std::max(max_log2, bits / i);
    }
    return std::ldexp(2.0, static_cast<int>(std::ceil(max_log2)) + 1);
  }

  std::vector<BigComplex> run(mpfr_prec_t P) const;
  /// Weierstrass inclusion radii n |p(z_i)| / (|lead| prod |z_i - z_j|), with
  /// the evaluation residual inflated by the floating-point error bound of
  /// the Horner scheme. nullopt when two points coincide.
  std::optional<std::vector<BigFloat>> certify(const std::vector<BigComplex>& z,
                                               mpfr_prec_t P) const;

  Attempt attempt(mpfr_prec_t P, const std::optional<Rat>& center,
                  const BigFloat& target) const;

 private:
  std::vector<Int> c_;
  int n_;

  std::vector<BigFloat> to_floats(mpfr_prec_t P) const {
    std::vector<BigFloat> cf;
    cf.reserve(c_.size());
    for (const Int& c : c_) cf.push_back(BigFloat::from(c, P));
    return cf;
  }
};

std::vector<BigComplex> AberthSolver::run(mpfr_prec_t P) const {
  const int n = n_;
  const std::vector<BigFloat> cf = to_floats(P);
  std::vector<BigFloat> df;
  df.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) df.push_back(BigFloat::from(Int(c_[static_cast<size_t>(i)] * i), P));

  const BigFloat R = BigFloat::from(root_bound(), P);
  const BigFloat pi = BigFloat::pi(P);
  const BigFloat offset = BigFloat::from(0.6180339887498949, P);  // breaks symmetry

  std::vector<BigComplex> z;
  z.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigFloat theta = (BigFloat::from(static_cast<long>(k), P) + offset) *
                     (pi + pi) / BigFloat::from(static_cast<long>(n), P);
    z.push_back({R * cos(theta), R * sin(theta)});
  }

  const BigFloat stop_scale = BigFloat::exp2(16 - static_cast<long>(P), P);
  const BigFloat one = BigFloat::from(1L, P);
  std::vector<int> settled(static_cast<size_t>(n), 0);
  const int max_sweeps = 400;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      if (settled[static_cast<size_t>(i)] >= 2) continue;
      BigComplex pz = horner(cf, z[static_cast<size_t>(i)]);
      if (pz.is_zero()) {
        settled[static_cast<size_t>(i)] = 2;
        continue;
      }
      BigComplex dpz = horner(df, z[static_cast<size_t>(i)]);
      if (dpz.is_zero()) {
        // stationary point hit; displace deterministically and keep going
        z[static_cast<size_t>(i)].re += R * stop_scale;
        z[static_cast<size_t>(i)].im += R * stop_scale;
        done = false;
        continue;
      }
      BigComplex newton = pz / dpz;
      BigComplex s(P);
      bool collision = false;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        BigComplex d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (d.is_zero()) {
          collision = true;
          break;
        }
        s = s + reciprocal(d);
      }
      if (collision) {
        z[static_cast<size_t>(i)].re += R * stop_scale;
        done = false;
        continue;
      }
      BigComplex denom = BigComplex(BigFloat(one), BigFloat::zero(P)) - newton * s;
      BigComplex w = denom.is_zero() ? newton : newton / denom;
      z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - w;
      if (abs(w) <= (abs(z[static_cast<size_t>(i)]) + R) * stop_scale) {
        settled[static_cast<size_t>(i)] += 1;
        if (settled[static_cast<size_t>(i)] < 2) done = false;
      } else {
        settled[static_cast<size_t>(i)] = 0;
        done = false;
      }
    }
    if (done) break;
  }
  return z;
}

std::optional<std::vector<BigFloat>> AberthSolver::certify(
    const std::vector<BigComplex>& z, mpfr_prec_t P) const {
  const int n = n_;
  const std::vector<BigFloat> cf = to_floats(P);
  std::vector<BigFloat> cf_abs;
  cf_abs.reserve(cf.size());
  for (const BigFloat& c : cf) cf_abs.push_back(abs(c));

  // 16n u covers coefficient rounding plus the complex Horner recurrence;
  // the trailing cushion covers the product and division round-off.
  const BigFloat mu_scale =
      BigFloat::exp2(-static_cast<long>(P), P) * BigFloat::from(16L * n, P);
  const BigFloat cushion =
      BigFloat::from(1L, P) +
      BigFloat::exp2(-static_cast<long>(P), P) * BigFloat::from(8L * n + 16, P);
  const BigFloat lead = abs(cf.back());
  const BigFloat nf = BigFloat::from(static_cast<long>(n), P);

  std::vector<BigFloat> radii;
  radii.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigComplex pz = horner(cf, z[static_cast<size_t>(i)]);
    BigFloat ptilde = horner_abs(cf_abs, abs(z[static_cast<size_t>(i)]));
    BigFloat numer = (abs(pz) + ptilde * mu_scale) * nf;
    BigFloat denom = lead;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      BigFloat d = abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      if (d.is_zero()) return std::nullopt;
      denom *= d;
    }
    radii.push_back(numer / denom * cushion);
  }
  return radii;
}

bool disks_disjoint(const std::vector<BigComplex>& z, const std::vector<BigFloat>& r) {
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      if (!(abs(z[i] - z[j]) > r[i] + r[j])) return false;
  return true;
}

/// Greedy conjugate matching on double-precision distances. partner[i] == i
/// marks a root paired with its own conjugate (near-real).
std::vector<int> conjugate_matching(const std::vector<BigComplex>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<double> re(static_cast<size_t>(n)), im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    re[static_cast<size_t>(i)] = z[static_cast<size_t>(i)].re.to_double();
    im[static_cast<size_t>(i)] = z[static_cast<size_t>(i)].im.to_double();
  }
  auto dist = [&](int i, int j) {
    const double dr = re[static_cast<size_t>(i)] - re[static_cast<size_t>(j)];
    const double di = im[static_cast<size_t>(i)] + im[static_cast<size_t>(j)];
    return std::hypot(dr, di);
  };
  std::vector<int> partner(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int round = 0; round < n; ++round) {
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      for (int j = i; j < n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        const double d = dist(i, j);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    partner[static_cast<size_t>(bi)] = bj;
    partner[static_cast<size_t>(bj)] = bi;
    used[static_cast<size_t>(bi)] = used[static_cast<size_t>(bj)] = true;
  }
  return partner;
}

Attempt AberthSolver::attempt(mpfr_prec_t P, const std::optional<Rat>& center,
                              const BigFloat& target) const {
  Attempt a;
  a.points = run(P);
  auto prelim = certify(a.points, P);
  if (!prelim) return a;
  a.radii = *prelim;
  if (!disks_disjoint(a.points, a.radii)) return a;

  const int n = n_;
  a.im_exact.assign(static_cast<size_t>(n), false);
  a.re_on_center.assign(static_cast<size_t>(n), false);

  // min over j != i of (|z_i - z_j| - r_j): any root outside disk i is at
  // least this far from z_i
  std::vector<BigFloat> dmin;
  dmin.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigFloat m(P);
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      BigFloat d = abs(a.points[static_cast<size_t>(i)] - a.points[static_cast<size_t>(j)]) -
                   a.radii[static_cast<size_t>(j)];
      if (first || d < m) {
        m = d;
        first = false;
      }
    }
    if (first) m = BigFloat::from(1L, P);  // single root: nothing nearby
    dmin.push_back(m);
  }

  const BigFloat two = BigFloat::from(2L, P);

  // Conjugate symmetrisation: average matched pairs, flatten self-pairs.
  // A self-pair may be flattened only when the mirror disk argument applies:
  // r_i + 2|Im z_i| < dmin_i forces conj(root_i) = root_i.
  const std::vector<int> partner = conjugate_matching(a.points);
  std::vector<bool> handled(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (handled[static_cast<size_t>(i)]) continue;
    const int j = partner[static_cast<size_t>(i)];
    if (j == i) {
      BigFloat gap = a.radii[static_cast<size_t>(i)] +
                     two * abs(a.points[static_cast<size_t>(i)].im);
      if (gap < dmin[static_cast<size_t>(i)]) {
        a.points[static_cast<size_t>(i)].im = BigFloat::zero(P);
        a.im_exact[static_cast<size_t>(i)] = true;
      }
      handled[static_cast<size_t>(i)] = true;
    } else if (j >= 0) {
      BigComplex avg = a.points[static_cast<size_t>(i)] + conj(a.points[static_cast<size_t>(j)]);
      avg.re = avg.re / two;
      avg.im = avg.im / two;
      // only move within the certified neighbourhood
      BigFloat move = abs(avg - a.points[static_cast<size_t>(i)]);
      if (move + move < dmin[static_cast<size_t>(i)] &&
          move + move < dmin[static_cast<size_t>(j)]) {
        a.points[static_cast<size_t>(i)] = avg;
        a.points[static_cast<size_t>(j)] = conj(avg);
      }
      handled[static_cast<size_t>(i)] = handled[static_cast<size_t>(j)] = true;
    }
  }

  // Symmetry-line snap: with p(t) = +-p(-2c - t), a disk close enough to the
  // line Re = c must contain a root fixed by the reflection. Only dyadic
  // centres are exactly representable; skip otherwise.
  if (center) {
    const Int& den = center->get_den();
    const bool dyadic = mpz_popcount(den.get_mpz_t()) == 1;
    if (dyadic) {
      const BigFloat c = BigFloat::from(*center, P);
      for (int i = 0; i < n; ++i) {
        BigFloat gap = a.radii[static_cast<size_t>(i)] +
                       two * abs(a.points[static_cast<size_t>(i)].re - c);
        if (gap < dmin[static_cast<size_t>(i)]) {
          a.points[static_cast<size_t>(i)].re = c;
          a.re_on_center[static_cast<size_t>(i)] = true;
        }
      }
    }
  }

  // Final certification at the snapped points; the disjointness of these
  // disks is what makes the exactness flags rigorous.
  auto final_radii = certify(a.points, P);
  if (!final_radii || !disks_disjoint(a.points, *final_radii)) {
    a.im_exact.assign(static_cast<size_t>(n), false);
    a.re_on_center.assign(static_cast<size_t>(n), false);
    return a;
  }
  a.radii = *final_radii;
  a.max_radius = BigFloat::zero(P);
  for (const BigFloat& r : a.radii) a.max_radius = max(a.max_radius, r);
  a.certified = a.max_radius < target;
  return a;
}

/// Rational candidates for multiple-root clusters: connected components of
/// touching or near-coincident disks, rationalised via continued fractions.
std::vector<Rat> cluster_candidates(const std::vector<BigComplex>& z,
                                    const std::vector<BigFloat>& radii,
                                    mpfr_prec_t P, double scale) {
  const int n = static_cast<int>(z.size());
  if (n == 0) return {};
  std::vector<int> comp(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) comp[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
    return x;
  };
  const BigFloat prox =
      BigFloat::from(1.0 + scale, P) *
      BigFloat::exp2(-static_cast<long>(P) / (2 * std::max(n, 2)), P);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BigFloat d = abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      bool near = d <= prox;
      if (!near && !radii.empty())
        near = !(d > radii[static_cast<size_t>(i)] + radii[static_cast<size_t>(j)]);
      if (near) comp[static_cast<size_t>(find(i))] = find(j);
    }

  std::vector<std::vector<int>> groups(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) groups[static_cast<size_t>(find(i))].push_back(i);

  std::vector<Rat> out;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    BigFloat sr = BigFloat::zero(P), si = BigFloat::zero(P);
    for (int i : g) {
      sr += z[static_cast<size_t>(i)].re;
      si += z[static_cast<size_t>(i)].im;
    }
    const BigFloat m = BigFloat::from(static_cast<long>(g.size()), P);
    sr /= m;
    si /= m;
    BigFloat diam = BigFloat::zero(P);
    for (int i : g)
      diam = max(diam, abs(BigComplex(z[static_cast<size_t>(i)].re - sr,
                                      z[static_cast<size_t>(i)].im - si)));
    BigFloat tol_f = diam + diam + prox;
    if (!(abs(si) <= tol_f)) continue;  // cluster off the real axis
    auto cand = rationalize(to_rational_exact(sr), to_rational_exact(tol_f), Int(1) << 24);
    if (cand) out.push_back(*cand);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

mpfr_prec_t start_precision(const std::vector<Int>& c) {
  size_t bits_max = 0;
  for (const Int& x : c) bits_max = std::max(bits_max, bit_length(x));
  const size_t bits_lead = bit_length(c.back());
  const size_t degree = c.size() - 1;
  // the evaluation-error floor scales with the largest coefficient, so the
  // working precision has to absorb the coefficient spread up front
  size_t p = std::max<size_t>(128, 2 * bits_max / std::max<size_t>(degree, 1));
  p = std::max(p, bits_max - bits_lead + 64);
  return static_cast<mpfr_prec_t>(p);
}

}  // namespace

std::pair<ExactPolynomial, std::map<Rat, int>> deflate_rational_roots(
    const ExactPolynomial& p, const std::vector<Rat>& candidates) {
  if (p.is_zero()) throw ZeroPolynomial("cannot deflate the zero polynomial");
  ExactPolynomial work = p;
  std::map<Rat, int> mult;
  for (const Rat& cand : candidates) {
    const int m = deflate_all(work, cand);
    if (m > 0) mult[cand] = m;
  }
  return {std::move(work), std::move(mult)};
}

RootAnalysis solve(const ExactPolynomial& p, double target_error) {
  SolveOptions opts;
  opts.target_error = target_error;
  return solve(p, opts);
}

RootAnalysis solve(const ExactPolynomial& p, const SolveOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("cannot solve the zero polynomial");
  if (p.degree() < 1) throw Error("root solving needs degree >= 1");
  if (!(opts.target_error > 0)) throw Error("target_error must be positive");

  RootAnalysis out;
  out.input_degree = p.degree();

  // The snap-to-line arguments are only sound when the root set really is
  // closed under reflection through the centre; verify the polynomial
  // identity p(t) = +-p(2c - t) exactly and drop the centre otherwise.
  std::optional<Rat> center = opts.symmetry_center;
  if (center) {
    const Rat twoc = Rat(2) * (*center);
    bool verified = false;
    if (twoc.get_den() == 1 && twoc.get_num().fits_slong_p()) {
      std::vector<Rat> neg = p.coefficients();
      for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
      ExactPolynomial reflected =
          shift(ExactPolynomial(std::move(neg)), twoc.get_num().get_si());
      verified = (reflected == p) || (linear_combine({{Rat(-1), reflected}}) == p);
    }
    if (!verified) center.reset();
  }

  ExactPolynomial work = p;
  out.multiplicity_at_minus_one = deflate_all(work, Rat(-1));
  out.deflated_degree = work.degree();

  std::map<Rat, int> exact_roots;

  // every reported radius stays below 1e-12 regardless of the caller's target
  const double effective_target = std::min(opts.target_error, 1e-12);

  mpfr_prec_t P = 0;
  Attempt final_attempt;
  bool have_numeric = false;
  BigFloat cross_diff;

  while (work.degree() >= 1) {
    if (work.degree() == 1) {
      Rat root = -work.coeff(0) / work.coeff(1);
      exact_roots[root] += 1;
      auto [q, ok] = exact_divide_by_root(work, root);
      work = std::move(q);
      continue;
    }

    std::vector<Int> ints = integerize(work);
    if (P == 0) P = start_precision(ints);
    AberthSolver solver(std::move(ints));
    const BigFloat target = BigFloat::from(effective_target, P);

    Attempt a = solver.attempt(P, center, target);
    if (!a.certified) {
      auto cands = cluster_candidates(a.points, a.radii, P, solver.root_bound());
      bool deflated = false;
      for (const Rat& cand : cands) {
        const int m = deflate_all(work, cand);
        if (m > 0) {
          exact_roots[cand] += m;
          deflated = true;
          break;
        }
      }
      if (deflated) continue;
      if (P > opts.max_precision / 2)
        throw NonConvergence("no certified roots below the precision cap: degree " +
                             std::to_string(work.degree()) + ", reached " +
                             std::to_string(P) + " of " +
                             std::to_string(opts.max_precision) + " bits");
      P *= 2;
      continue;
    }

    // certified real roots that sit on a small rational: make them exact
    {
      bool deflated = false;
      for (size_t i = 0; i < a.points.size() && !deflated; ++i) {
        if (!a.im_exact[i] && !a.re_on_center[i]) continue;
        std::optional<Rat> cand;
        if (a.im_exact[i] && a.re_on_center[i]) {
          cand = center;
        } else if (a.im_exact[i]) {
          Rat tol = to_rational_exact(a.radii[i]) * 4 + Rat(1, Int(1) << (P / 2 < 8000 ? P / 2 : 8000));
          cand = rationalize(to_rational_exact(a.points[i].re), tol, Int(1) << 24);
        }
        if (!cand) continue;
        const int m = deflate_all(work, *cand);
        if (m > 0) {
          exact_roots[*cand] += m;
          deflated = true;
        }
      }
      if (deflated) continue;
    }

    // cross-check: an independent run at twice the precision must agree
    const mpfr_prec_t P2 = 2 * P;
    const BigFloat target2 = BigFloat::from(effective_target, P2);
    Attempt b = solver.attempt(P2, center, target2);
    if (!b.certified) {
      if (P > opts.max_precision / 2)
        throw NonConvergence("validation at doubled precision failed: degree " +
                             std::to_string(work.degree()) + ", reached " +
                             std::to_string(P2) + " bits");
      P *= 2;
      continue;
    }
    auto max_re = [](const Attempt& at) {
      BigFloat m = at.points[0].re;
      for (const auto& z : at.points) m = max(m, z.re);
      return m;
    };
    BigFloat diff = abs(max_re(a) - max_re(b));
    if (!(diff <= BigFloat::from(opts.target_error, P2))) {
      if (P > opts.max_precision / 2)
        throw NonConvergence("precision-doubling disagreement below the cap");
      P *= 2;
      continue;
    }
    cross_diff = diff;
    final_attempt = std::move(b);
    have_numeric = true;
    out.precision = P2;
    break;
  }

  if (!have_numeric && P == 0) out.precision = 128;
  const mpfr_prec_t RP = out.precision;

  // assemble the root list: exact rationals first, then certified numerics
  for (const auto& [value, mult] : exact_roots) {
    CertifiedRoot r{BigFloat::from(value, RP), BigFloat::zero(RP), BigFloat::zero(RP),
                    value, value, true, mult};
    out.roots.push_back(std::move(r));
  }
  if (have_numeric) {
    for (size_t i = 0; i < final_attempt.points.size(); ++i) {
      bool real_flag = final_attempt.im_exact[i];
      bool on_center = final_attempt.re_on_center[i];
      if (real_flag && on_center) {
        // both flags would force the root to equal the centre exactly, and a
        // rational root is deflated before reaching this point; keep the
        // certified numerics, drop the exactness claims
        real_flag = on_center = false;
      }
      CertifiedRoot r{final_attempt.points[i].re, final_attempt.points[i].im,
                      final_attempt.radii[i], std::nullopt, std::nullopt,
                      real_flag, 1};
      if (on_center) r.exact_re = center;
      out.roots.push_back(std::move(r));
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const CertifiedRoot& x, const CertifiedRoot& y) {
              if (x.re != y.re) return x.re > y.re;
              return x.im < y.im;
            });

  // maximum real part over the deflated root -1 and everything reported
  bool first = true;
  BigFloat max_re_val = BigFloat::zero(RP);
  BigFloat max_err = BigFloat::zero(RP);
  auto consider = [&](const BigFloat& re, const BigFloat& err, bool exact,
                      const std::optional<Rat>& exact_val) {
    if (first || re > max_re_val ||
        (re == max_re_val && !out.max_is_exact && exact)) {
      max_re_val = re;
      max_err = err;
      out.max_is_exact = exact;
      out.max_exact_value = exact_val;
      first = false;
    }
  };
  if (out.multiplicity_at_minus_one > 0)
    consider(BigFloat::from(-1L, RP), BigFloat::zero(RP), true, Rat(-1));
  for (const CertifiedRoot& r : out.roots) {
    const bool exact = r.exact_root.has_value() || r.exact_re.has_value();
    std::optional<Rat> val = r.exact_root ? r.exact_root : r.exact_re;
    consider(r.re, r.re_error(), exact, val);
  }
  out.max_real_part = max_re_val;
  out.max_real_error = max_err;
  if (have_numeric && !out.max_is_exact)
    out.max_real_error = max(out.max_real_error, cross_diff);
  return out;
}

BigFloat symmetry_residual(const RootAnalysis& analysis, int index_r) {
  const mpfr_prec_t P = analysis.precision;
  if (analysis.roots.empty()) return BigFloat::zero(P);
  const BigFloat r = BigFloat::from(static_cast<long>(index_r), P);
  BigFloat worst = BigFloat::zero(P);
  for (const CertifiedRoot& a : analysis.roots) {
    BigComplex target(-r - a.re, a.im);  // -r - conj(a)
    bool first = true;
    BigFloat best(P);
    for (const CertifiedRoot& b : analysis.roots) {
      BigFloat d = abs(BigComplex(b.re - target.re, b.im - target.im));
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
    worst = max(worst, best);
  }
  return worst;
}

}  // namespace canstrip
