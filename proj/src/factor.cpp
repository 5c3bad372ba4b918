#include "galoiskit/factor.hpp"

#include <algorithm>
#include <random>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

namespace {

template <class T>
void sort_canonical(std::vector<std::pair<Polynomial<T>, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    int c = compare(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
}

// ---------------------------------------------------------------- F_p ----

ZpPoly zp_x(std::uint64_t p) { return ZpPoly::x(Zp(1, p)); }
ZpPoly zp_one(std::uint64_t p) { return ZpPoly::constant(Zp(1, p)); }

/// f(x)^(1/p) for f with f' = 0.
ZpPoly pth_root(const ZpPoly& f) {
  const std::uint64_t p = f.lc().modulus();
  std::vector<Zp> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  return ZpPoly(std::move(v));
}

void squarefree_mod_p(const ZpPoly& f, unsigned scale, std::vector<std::pair<ZpPoly, unsigned>>& out) {
  const std::uint64_t p = f.lc().modulus();
  if (f.degree() <= 0) return;
  ZpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_mod_p(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  ZpPoly c = gcd(f, d);
  ZpPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    ZpPoly y = gcd(w, c);
    ZpPoly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (c.degree() > 0) squarefree_mod_p(pth_root(c), scale * static_cast<unsigned>(p), out);
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ZpPoly, unsigned>> distinct_degree(ZpPoly f) {
  const std::uint64_t p = f.lc().modulus();
  std::vector<std::pair<ZpPoly, unsigned>> out;
  const ZpPoly x = zp_x(p);
  ZpPoly h = x;
  unsigned d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = pow_mod(h, Integer(static_cast<unsigned long>(p)), f);
    ZpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_quotient(f, g);
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

ZpPoly random_poly(std::mt19937_64& rng, std::uint64_t p, int below_degree) {
  std::vector<Zp> v;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int i = 0; i < below_degree; ++i) v.emplace_back(static_cast<std::int64_t>(dist(rng)), p);
  return ZpPoly(std::move(v));
}

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const ZpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  const std::uint64_t p = f.lc().modulus();
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  while (true) {
    ZpPoly a = random_poly(rng, p, f.degree());
    if (a.degree() <= 0) continue;
    ZpPoly b;
    if (p == 2) {
      ZpPoly term = a % f;
      b = term;
      for (unsigned j = 1; j < d; ++j) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      b = pow_mod(a, e, f) - zp_one(p);
    }
    if (b.is_zero()) continue;
    ZpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_quotient(f, g).monic(), d, rng, out);
      return;
    }
  }
}

// ------------------------------------------------------ Z / P arithmetic --

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zmod(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zmod(r, m);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zmod(r, m);
  return r;
}

/// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {ZPoly{}, a};
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Integer f = a[i] % m;
    if (f < 0) f += m;
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  a.resize(db);
  zmod(a, m);
  zmod(q, m);
  return {q, a};
}

ZPoly zscale(const ZPoly& a, const Integer& s, const Integer& m) {
  ZPoly r(a);
  for (auto& c : r) c *= s;
  zmod(r, m);
  return r;
}

ZPoly from_zp(const ZpPoly& f) {
  ZPoly r;
  for (const auto& c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c.value()));
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw SoundnessError("Hensel lifting: leading coefficient not invertible");
  return r;
}

/// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
/// Lifts all four to modulus `next` (which divides m^2).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& next) {
  ZPoly e = zsub(f, zmul(g, h, next), next);
  auto [q, r] = zdivrem_monic(zmul(s, e, next), h, next);
  ZPoly g2 = zadd(g, zadd(zmul(t, e, next), zmul(q, g, next), next), next);
  ZPoly h2 = zadd(h, r, next);
  ZPoly one{Integer(1)};
  ZPoly b = zsub(zadd(zmul(s, g2, next), zmul(t, h2, next), next), one, next);
  auto [c, d] = zdivrem_monic(zmul(s, b, next), h2, next);
  s = zsub(s, d, next);
  t = zsub(t, zadd(zmul(t, b, next), zmul(c, g2, next), next), next);
  g = std::move(g2);
  h = std::move(h2);
}

ZpPoly product_mod_p(const std::vector<ZpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p) {
  ZpPoly acc = zp_one(p);
  for (std::size_t i = lo; i < hi; ++i) acc = acc * fs[i];
  return acc;
}

/// Lifts a factorization f = lc(f) * prod facs (mod p) to monic factors mod P.
void multifactor_lift(const ZPoly& f, const std::vector<ZpPoly>& facs, std::size_t lo, std::size_t hi,
                      std::uint64_t p, const Integer& P, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zscale(f, inverse_mod(f.back(), P), P));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  PrimeField F(p);
  ZpPoly g0 = product_mod_p(facs, lo, mid, p) * F(f.back());
  ZpPoly h0 = product_mod_p(facs, mid, hi, p);
  auto [d, s0, t0] = ext_gcd(g0, h0);
  if (d.degree() != 0) throw SoundnessError("Hensel lifting: modular factors not coprime");
  ZPoly g = from_zp(g0), h = from_zp(h0), s = from_zp(s0), t = from_zp(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < P) {
    Integer next = m * m;
    if (next > P) next = P;
    ZPoly fm = f;
    zmod(fm, next);
    hensel_step(fm, g, h, s, t, next);
    m = next;
  }
  multifactor_lift(g, facs, lo, mid, p, P, out);
  multifactor_lift(h, facs, mid, hi, p, P, out);
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly r(a);
  Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  ztrim(r);
  return r;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact division in Z[x]; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.size() > a.size()) return false;
  const long db = static_cast<long>(b.size()) - 1;
  ZPoly r(a);
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (r[ui] == 0) continue;
    if (mpz_divisible_p(r[ui].get_mpz_t(), b.back().get_mpz_t()) == 0) return false;
    Integer f = r[ui] / b.back();
    const auto shift = static_cast<std::size_t>(i - db);
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
    q[shift] = std::move(f);
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(q);
  quotient = std::move(q);
  return true;
}

Integer norm2_ceil(const ZPoly& f) {
  Integer sum = 0;
  for (const auto& c : f) sum += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
  if (root * root < sum) root += 1;
  return root;
}

/// Zassenhaus recombination of lifted monic factors into true factors.
std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& P) {
  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{f.back()};
      for (auto i : idx) cand = zmul(cand, lifted[i], P);
      cand = symmetric(cand, P);
      bool plausible = !cand.empty();
      if (plausible && f[0] != 0 && cand[0] != 0) {
        Integer prod = f.back() * f[0];
        plausible = mpz_divisible_p(prod.get_mpz_t(), cand[0].get_mpz_t()) != 0;
      }
      ZPoly quotient;
      if (plausible) {
        ZPoly g = primitive_part(cand);
        if (zdivides(f, g, quotient)) {
          found.push_back(g);
          f = std::move(quotient);
          std::vector<ZPoly> rest;
          for (std::size_t i = 0, k = 0; i < r; ++i) {
            if (k < s && idx[k] == i) {
              ++k;
              continue;
            }
            rest.push_back(lifted[i]);
          }
          lifted = std::move(rest);
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == r - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (f.size() > 1) found.push_back(primitive_part(f));
  return found;
}

/// Irreducible factors of a squarefree primitive f in Z[x] with deg f >= 1.
std::vector<ZPoly> factor_squarefree_integer(ZPoly f, const FactorOptions& opt) {
  std::vector<ZPoly> out;
  if (f[0] == 0) {  // strip the factor x
    out.push_back(ZPoly{Integer(0), Integer(1)});
    f.erase(f.begin());
  }
  if (f.size() <= 2) {
    if (f.size() == 2) out.push_back(f);
    return out;
  }
  const std::size_t n = f.size() - 1;

  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<ZpPoly, unsigned>> best_ddf;
  unsigned seen = 0;
  for (std::uint64_t p : small_primes()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
    ZpPoly fp = reduce_mod(f, p).monic();
    if (gcd(fp, fp.derivative()).degree() != 0) continue;
    auto ddf = distinct_degree(fp);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(g.degree()) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = std::move(ddf);
    }
    if (count == 1 || ++seen >= opt.prime_candidates) break;
  }
  if (best_p == 0) throw Error("factor_over_Q: no good prime found in the prime table");
  if (best_count == 1) {
    out.push_back(f);
    return out;
  }

  std::mt19937_64 rng(opt.seed);
  std::vector<ZpPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(g, d, rng, modular);
  std::sort(modular.begin(), modular.end(),
            [](const ZpPoly& a, const ZpPoly& b) { return compare(a, b) < 0; });

  Integer bound = abs(f.back()) * norm2_ceil(f);
  bound <<= static_cast<mp_bitcnt_t>(n);
  bound *= 2;
  Integer P(static_cast<unsigned long>(best_p));
  while (P <= bound) P *= static_cast<unsigned long>(best_p);

  ZPoly fP(f);
  zmod(fP, P);
  std::vector<ZPoly> lifted;
  multifactor_lift(fP, modular, 0, modular.size(), best_p, P, lifted);
  for (auto& g : recombine(f, std::move(lifted), P)) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    const std::uint64_t limit = 20000;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      v.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return v;
  }();
  return primes;
}

Factorization<Zp> factor_mod_p(const ZpPoly& p, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
  PrimeField check(p.lc().modulus());
  Factorization<Zp> result{p.lc(), {}};
  std::vector<std::pair<ZpPoly, unsigned>> sqf;
  squarefree_mod_p(p.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [g, mult] : sqf) {
    for (const auto& [part, d] : distinct_degree(g)) {
      std::vector<ZpPoly> irreducible;
      equal_degree(part, d, rng, irreducible);
      for (auto& h : irreducible) result.factors.emplace_back(std::move(h), mult);
    }
  }
  // merge equal factors that arrived from different squarefree layers
  sort_canonical(result.factors);
  std::vector<std::pair<ZpPoly, unsigned>> merged;
  for (auto& fm : result.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(std::move(fm));
  }
  result.factors = std::move(merged);
  return result;
}

std::vector<unsigned> factor_degrees_mod_p(const ZpPoly& squarefree) {
  std::vector<unsigned> degrees;
  for (const auto& [g, d] : distinct_degree(squarefree.monic()))
    for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

QFactorization factor_over_Q(const QPoly& p, const FactorOptions& options) {
  if (p.is_zero()) throw DomainError("factor_over_Q: zero polynomial");
  QFactorization result{p.lc(), {}};
  for (const auto& [g, mult] : squarefree_decomposition(p)) {
    auto prim = content_and_primitive(g).second;
    for (const auto& h : factor_squarefree_integer(prim, options))
      result.factors.emplace_back(from_integers(h).monic(), mult);
  }
  sort_canonical(result.factors);
  return result;
}

bool is_irreducible_over_Q(const QPoly& p) {
  if (p.degree() < 1) throw DomainError("irreducibility test of a constant");
  auto f = factor_over_Q(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace galoiskit
