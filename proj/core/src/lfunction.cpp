#include "superell/lfunction.hpp"

#include <algorithm>
#include <array>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {
namespace detail {
namespace {

constexpr int kMaxRawDegree = 127;

Elem inv_raw(const FieldData& f, Elem a) {
  if (f.tables) {
    const std::uint64_t order = f.q - 1;
    return f.exp_table[(order - f.log_table[a]) % order];
  }
  return generic_pow(f, a, f.q - 2);
}

Elem pow_raw(const FieldData& f, Elem a, std::uint64_t k) {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (f.tables) {
    const std::uint64_t order = f.q - 1;
    return f.exp_table[(static_cast<std::uint64_t>(f.log_table[a]) * (k % order)) % order];
  }
  return generic_pow(f, a, k);
}

// x <- x mod y in place; returns the degree of the remainder (-1 for zero).
int reduce_raw(const FieldData& f, Elem* x, int dx, const Elem* y, int dy) {
  const Elem lead_inv = y[dy] == 1 ? 1 : inv_raw(f, y[dy]);
  for (int i = dx; i >= dy; --i) {
    if (x[i] == 0) continue;
    const Elem c = mul(f, x[i], lead_inv);
    const Elem nc = neg(f, c);
    const int shift = i - dy;
    for (int j = 0; j < dy; ++j) {
      if (y[j] != 0) x[shift + j] = add(f, x[shift + j], mul(f, nc, y[j]));
    }
    x[i] = 0;
  }
  int d = std::min(dx, dy - 1);
  while (d >= 0 && x[d] == 0) --d;
  return d;
}

}  // namespace

Elem resultant_raw(const FieldData& f, const Elem* a, int da, const Elem* b, int db) {
  if (da > kMaxRawDegree || db > kMaxRawDegree) throw PreconditionError("resultant_raw: degree too large");
  std::array<Elem, kMaxRawDegree + 1> bufa{}, bufb{};
  Elem* A = bufa.data();
  Elem* B = bufb.data();
  std::copy(a, a + da + 1, A);
  std::copy(b, b + db + 1, B);
  Elem acc = 1;
  while (true) {
    if (db == 0) return mul(f, acc, pow_raw(f, B[0], static_cast<std::uint64_t>(da)));
    if (da == 0) return mul(f, acc, pow_raw(f, A[0], static_cast<std::uint64_t>(db)));
    if (da >= db) {
      // Res(A,B) = (-1)^{da db} lc(B)^{da-dr} Res(B, A mod B)
      const Elem lb = B[db];
      const int dr = reduce_raw(f, A, da, B, db);
      if (dr < 0) return 0;
      Elem factor = pow_raw(f, lb, static_cast<std::uint64_t>(da - dr));
      if ((static_cast<long>(da) * db) % 2 == 1) factor = neg(f, factor);
      acc = mul(f, acc, factor);
      std::swap(A, B);
      da = db;
      db = dr;
    } else {
      // Res(A,B) = lc(A)^{db-dr} Res(A, B mod A)
      const Elem la = A[da];
      const int dr = reduce_raw(f, B, db, A, da);
      if (dr < 0) return 0;
      acc = mul(f, acc, pow_raw(f, la, static_cast<std::uint64_t>(db - dr)));
      db = dr;
    }
  }
}

}  // namespace detail

std::vector<std::vector<std::int64_t>> character_histogram(const DirichletChar& chi, unsigned max_degree) {
  const Field& field = chi.field();
  const auto& fd = field.data();
  const std::uint64_t q = field.size();
  const unsigned ell = chi.ell();

  std::uint64_t total = 0, block = 1;
  for (unsigned n = 0; n <= max_degree; ++n) {
    total += block;
    if (total > limits().character_sum) throw LimitError("character sum over " + std::to_string(total) + "+ monic polynomials");
    if (n < max_degree && block > limits().character_sum / q) throw LimitError("character sum exceeds limit");
    block *= q;
  }

  struct Group {
    std::vector<Elem> coeffs;
    int degree;
    unsigned exponent;
  };
  std::vector<Group> groups;
  for (unsigned k = 1; k < ell; ++k) {
    const Poly& E = chi.grouped()[k - 1];
    if (E.degree() >= 1) groups.push_back({E.coeffs(), E.degree(), k});
  }

  std::vector<std::vector<std::int64_t>> counts(max_degree + 1, std::vector<std::int64_t>(ell, 0));
  std::vector<Elem> g(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) {
    std::fill(g.begin(), g.end(), 0);
    g[n] = 1;
    const std::uint64_t base_k = static_cast<std::uint64_t>(chi.infinity_exponent()) * n;
    while (true) {
      std::uint64_t k = base_k;
      bool zero = false;
      for (const auto& grp : groups) {
        const Elem r = detail::resultant_raw(fd, grp.coeffs.data(), grp.degree, g.data(), static_cast<int>(n));
        if (r == 0) {
          zero = true;
          break;
        }
        k += static_cast<std::uint64_t>(grp.exponent) * (fd.tables ? fd.log_table[r] % ell : chi.omega(r));
      }
      if (!zero) ++counts[n][k % ell];
      // odometer over the non-leading coefficients
      unsigned i = 0;
      while (i < n && ++g[i] == q) g[i++] = 0;
      if (i == n) break;
    }
  }
  return counts;
}

CycInt LPoly::eval_at_root(unsigned k) const {
  CycInt acc(ell);
  const unsigned step = (ell - k % ell) % ell;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    acc += coeffs[n].times_zeta(static_cast<unsigned>((step * n) % ell));
  }
  return acc;
}

nlohmann::json LPoly::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back(c.to_json()["coords"]);
  return {{"q", q}, {"p", p}, {"e", e}, {"ell", ell}, {"coeffs", cs}, {"char", char_ref}};
}

LPoly LPoly::from_json(const nlohmann::json& j) {
  LPoly L;
  L.q = j.at("q").get<std::uint64_t>();
  L.p = j.value("p", std::uint64_t{0});
  L.e = j.value("e", 1u);
  L.ell = j.at("ell").get<unsigned>();
  for (const auto& c : j.at("coeffs")) L.coeffs.push_back(CycInt::from_json({{"ell", L.ell}, {"coords", c}}));
  if (j.contains("char")) L.char_ref = j["char"];
  return L;
}

LPoly l_polynomial(const DirichletChar& chi, const LOptions& opts) {
  const unsigned df = chi.conductor_degree();
  const unsigned top = opts.verify_orthogonality ? df : df - 1;
  const auto counts = character_histogram(chi, top);

  LPoly L;
  L.p = chi.field().characteristic();
  L.e = chi.field().absolute_degree();
  L.q = chi.field().size();
  L.ell = chi.ell();
  L.char_ref = chi.to_json();
  for (unsigned n = 0; n < df; ++n) L.coeffs.push_back(CycInt::from_exponent_counts(chi.ell(), counts[n]));
  if (opts.verify_orthogonality && !CycInt::from_exponent_counts(chi.ell(), counts[df]).is_zero()) {
    throw InvariantViolation("orthogonality", "sum of chi over monics of degree deg f is nonzero");
  }
  while (L.coeffs.size() > 1 && L.coeffs.back().is_zero()) L.coeffs.pop_back();
  if (L.coeffs.empty() || L.coeffs[0] != CycInt::from_integer(chi.ell(), 1)) {
    throw InvariantViolation("L(0) = 1", "constant coefficient of L is not 1");
  }
  return L;
}

StripResult strip_trivial_factor(const LPoly& L, const DirichletChar& chi, std::optional<unsigned> hint) {
  StripResult out{L, std::nullopt, {}, false};
  if (!chi.even()) return out;
  for (unsigned k = 0; k < L.ell; ++k) {
    if (L.eval_at_root(k).is_zero()) out.candidates.push_back(k);
  }
  if (out.candidates.empty()) {
    throw InvariantViolation("trivial zero", "even character without a (1 - zeta^k u) factor");
  }
  unsigned k = out.candidates.front();
  if (hint && std::find(out.candidates.begin(), out.candidates.end(), *hint % L.ell) != out.candidates.end()) {
    k = *hint % L.ell;
  } else if (out.candidates.size() > 1) {
    out.ambiguous = true;
  }
  // L = (1 - zeta^k u) Q
  const std::size_t D = L.coeffs.size() - 1;
  std::vector<CycInt> Q(D);
  for (std::size_t n = 0; n < D; ++n) {
    Q[n] = n == 0 ? L.coeffs[0] : L.coeffs[n] + Q[n - 1].times_zeta(k);
  }
  if (!(L.coeffs[D] + Q[D - 1].times_zeta(k)).is_zero()) {
    throw InvariantViolation("trivial zero", "division by (1 - zeta^k u) left a remainder");
  }
  const auto expected = static_cast<std::size_t>(chi.conductor_degree()) - 2;
  if (Q.size() - 1 != expected) {
    throw InvariantViolation("degree law", "stripped L has degree " + std::to_string(Q.size() - 1) + ", expected " +
                                               std::to_string(expected));
  }
  out.quotient.coeffs = std::move(Q);
  out.k = k;
  return out;
}

bool central_value_is_zero(const LPoly& L) {
  const unsigned ell = L.ell;
  const int D = L.degree();
  if (D <= 0) return false;
  const mpz_class p = static_cast<unsigned long>(L.p);
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), L.e);
  // (sqrt q)^D L(1/sqrt q) = sum_n c_n (sqrt q)^{D-n}
  if (L.e % 2 == 0) {
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), L.e / 2);
    CycInt acc(ell);
    mpz_class w = 1;
    for (int n = D; n >= 0; --n) {
      acc += L.coeffs[n] * w;
      w *= s;
    }
    return acc.is_zero();
  }
  mpz_class half;  // p^{(e-1)/2}, so sqrt q = half * sqrt p
  mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), (L.e - 1) / 2);
  SqrtExt acc{CycInt(ell), CycInt(ell), p};
  mpz_class qpow = 1;  // q^{floor(m/2)} with m = D - n
  for (int m = 0; m <= D; ++m) {
    const CycInt& c = L.coeffs[D - m];
    if (m % 2 == 0) {
      acc = acc + SqrtExt{c * qpow, CycInt(ell), p};
    } else {
      acc = acc + SqrtExt{CycInt(ell), c * (qpow * half), p};
      qpow *= q;
    }
  }
  return acc.is_zero();
}

DirichletChar dual_char(const DirichletChar& chi) { return chi.power(chi.ell() - 1); }

std::vector<CycInt> multiply(const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
  if (a.empty() || b.empty()) return {};
  const unsigned ell = a[0].ell();
  std::vector<CycInt> out(a.size() + b.size() - 1, CycInt(ell));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace superell
