#include "nefcalc/certified.hpp"

#include <numeric>

#include "nefcalc/errors.hpp"

namespace nefcalc {

namespace {

Radical rational_radical(const Rational& v) {
  Radical r;
  r.coeff = v;
  return r;
}

// coeff * base^(pp/qq) with pp/qq > 0 brought to canonical form.
Radical canonical(Rational coeff, Rational base, Integer pp, Integer qq) {
  Integer g = boost::multiprecision::gcd(pp, qq);
  pp /= g;
  qq /= g;
  Integer whole = pp / qq;
  Integer rem = pp % qq;
  if (whole != 0) coeff *= pow_int(base, whole.convert_to<long>());
  if (rem == 0 || base == 1) return rational_radical(coeff);
  if (base == 0) return rational_radical(Rational(0));
  unsigned long q = qq.convert_to<unsigned long>();
  unsigned long p = rem.convert_to<unsigned long>();
  Rational root;
  if (perfect_root(base, q, root))
    return rational_radical(coeff * pow_int(root, static_cast<long>(p)));
  Radical r;
  r.coeff = coeff;
  r.base = base;
  r.p = p;
  r.q = q;
  return r;
}

std::optional<Radical> radical_neg(const Radical& a) {
  Radical r = a;
  r.coeff = -r.coeff;
  return r;
}

std::optional<Radical> radical_mul(const Radical& a, const Radical& b) {
  if (a.is_rational() || b.is_rational()) {
    const Radical& rad = a.is_rational() ? b : a;
    const Rational& c = a.is_rational() ? a.coeff : b.coeff;
    if (c == 0) return rational_radical(Rational(0));
    Radical r = rad;
    r.coeff *= c;
    return r;
  }
  Rational coeff = a.coeff * b.coeff;
  if (a.base == b.base) {
    Integer pp = Integer(a.p) * b.q + Integer(b.p) * a.q;
    Integer qq = Integer(a.q) * b.q;
    return canonical(coeff, a.base, pp, qq);
  }
  // x^(p1/q1) * y^(p2/q2) = (x^(p1*L/q1) * y^(p2*L/q2))^(1/L)
  unsigned long l = std::lcm(a.q, b.q);
  Rational merged = pow_int(a.base, static_cast<long>(a.p * (l / a.q))) *
                    pow_int(b.base, static_cast<long>(b.p * (l / b.q)));
  return canonical(coeff, merged, Integer(1), Integer(l));
}

std::optional<Radical> radical_inv(const Radical& a) {
  if (a.coeff == 0) return std::nullopt;
  Radical r;
  r.coeff = Rational(1) / a.coeff;
  if (a.is_rational()) return r;
  r.base = Rational(1) / a.base;
  r.p = a.p;
  r.q = a.q;
  return r;
}

std::optional<Radical> radical_add(const Radical& a, const Radical& b) {
  if (a.coeff == 0) return b;
  if (b.coeff == 0) return a;
  if (a.is_rational() && b.is_rational())
    return rational_radical(a.coeff + b.coeff);
  if (a.is_rational() || b.is_rational()) return std::nullopt;
  if (a.p != b.p || a.q != b.q) return std::nullopt;
  if (a.base == b.base) {
    Rational c = a.coeff + b.coeff;
    if (c == 0) return rational_radical(Rational(0));
    Radical r = a;
    r.coeff = c;
    return r;
  }
  // Merge when the bases differ by a perfect q-th power:
  // x^(p/q) = r^p * y^(p/q) whenever x/y = r^q.
  Rational ratio = a.base / b.base, root;
  if (perfect_root(ratio, a.q, root)) {
    Rational c = a.coeff * pow_int(root, static_cast<long>(a.p)) + b.coeff;
    if (c == 0) return rational_radical(Rational(0));
    Radical r = b;
    r.coeff = c;
    return r;
  }
  return std::nullopt;
}

std::optional<Radical> radical_pow(const Radical& a, long num,
                                   unsigned long den) {
  if (num == 0) return rational_radical(Rational(1));
  if (num < 0) {
    auto inv = radical_inv(a);
    if (!inv) return std::nullopt;
    return radical_pow(*inv, -num, den);
  }
  if (a.is_rational()) {
    if (den == 1) return rational_radical(pow_int(a.coeff, num));
    if (a.coeff < 0) return std::nullopt;  // DomainError surfaces at eval
    if (a.coeff == 0) return rational_radical(Rational(0));
    return canonical(Rational(1), a.coeff, Integer(num), Integer(den));
  }
  if (a.coeff < 0 && den != 1) return std::nullopt;
  // (c * x^(p/q))^(num/den) = c^(num/den) * x^(p*num/(q*den))
  Radical cpart = canonical(Rational(1), a.coeff, Integer(num), Integer(den));
  Radical xpart = canonical(Rational(1), a.base, Integer(a.p) * num,
                            Integer(a.q) * den);
  return radical_mul(cpart, xpart);
}

// Exact values are kept as sums of canonical radicals. The sum is closed
// under +, -, * and under / and integer powers whenever the divisor
// normalizes to at most two terms; everything else falls back to interval
// refinement. A normalized sum has no zero or mergeable terms, so the
// empty sum is the only representation of zero and two-term sums are
// compared by moving one term across the relation.
using RadicalSum = std::vector<Radical>;

RadicalSum sum_normalize(RadicalSum terms) {
  RadicalSum out;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    bool merged = false;
    for (auto& o : out) {
      if (auto m = radical_add(o, t)) {
        o = *m;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(t));
  }
  RadicalSum cleaned;
  for (auto& t : out)
    if (t.coeff != 0) cleaned.push_back(std::move(t));
  return cleaned;
}

RadicalSum sum_of(const Rational& v) {
  if (v == 0) return {};
  return {rational_radical(v)};
}

RadicalSum sum_neg(RadicalSum a) {
  for (auto& t : a) t.coeff = -t.coeff;
  return a;
}

RadicalSum sum_add(RadicalSum a, RadicalSum b) {
  a.insert(a.end(), b.begin(), b.end());
  return sum_normalize(std::move(a));
}

std::optional<RadicalSum> sum_mul(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto p = radical_mul(x, y);
      if (!p) return std::nullopt;
      out.push_back(std::move(*p));
    }
  return sum_normalize(std::move(out));
}

// Sign of a normalized sum: 0 terms is zero, one term carries its sign,
// two distinct terms compare across the relation. Three or more distinct
// radicals are left to interval refinement.
std::optional<int> sum_sign(const RadicalSum& a) {
  if (a.empty()) return 0;
  if (a.size() == 1) return a[0].coeff > 0 ? 1 : -1;
  if (a.size() == 2) {
    Radical neg = a[1];
    neg.coeff = -neg.coeff;
    Cmp c = compare_radicals(a[0], neg);
    if (c == Cmp::EQ) return 0;  // unreachable after normalization
    return c == Cmp::GT ? 1 : -1;
  }
  return std::nullopt;
}

std::optional<RadicalSum> sum_inv(const RadicalSum& a) {
  if (a.empty()) return std::nullopt;  // division by exact zero
  if (a.size() == 1) {
    auto inv = radical_inv(a[0]);
    if (!inv) return std::nullopt;
    return RadicalSum{*inv};
  }
  if (a.size() != 2) return std::nullopt;
  // 1/(t1 + t2) = (1/t1) * 1/(1 + y) with y = t2/t1, and
  // 1/(1 + y) = sum_{j<q} (-y)^j / (1 - (-y)^q) since y^q is rational.
  auto t1_inv = radical_inv(a[0]);
  if (!t1_inv) return std::nullopt;
  auto y = radical_mul(a[1], *t1_inv);
  if (!y || y->is_rational()) return std::nullopt;
  Radical neg_y = *y;
  neg_y.coeff = -neg_y.coeff;
  unsigned long q = y->q;
  Rational yq = pow_int(neg_y.coeff, static_cast<long>(q)) *
                pow_int(neg_y.base, static_cast<long>(neg_y.p));
  Rational denom = Rational(1) - yq;
  if (denom == 0) return std::nullopt;
  Radical scale = *t1_inv;
  scale.coeff /= denom;
  RadicalSum out;
  for (unsigned long j = 0; j < q; ++j) {
    auto term = radical_pow(neg_y, static_cast<long>(j), 1);
    if (!term) return std::nullopt;
    auto scaled = radical_mul(*term, scale);
    if (!scaled) return std::nullopt;
    out.push_back(std::move(*scaled));
  }
  return sum_normalize(std::move(out));
}

std::optional<RadicalSum> sum_pow(const RadicalSum& a, long num,
                                  unsigned long den) {
  if (num == 0) return sum_of(Rational(1));
  if (a.empty()) {
    if (num < 0) return std::nullopt;
    return RadicalSum{};
  }
  if (a.size() == 1) {
    auto r = radical_pow(a[0], num, den);
    if (!r) return std::nullopt;
    return RadicalSum{*r};
  }
  if (den != 1) return std::nullopt;
  if (num < 0) {
    auto pos = sum_pow(a, -num, 1);
    if (!pos) return std::nullopt;
    return sum_inv(*pos);
  }
  if (num > 64) return std::nullopt;  // avoid blowup on huge exponents
  RadicalSum acc = sum_of(Rational(1));
  for (long i = 0; i < num; ++i) {
    auto next = sum_mul(acc, a);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

// Enclosure of a^(1/q) for a >= 0 with denominator 2^bits.
Interval root_interval(const Rational& a, unsigned long q, unsigned bits) {
  Rational scale = pow_int(Rational(2), static_cast<long>(bits) *
                                            static_cast<long>(q));
  Rational scaled = a * scale;
  Integer fl = numerator(scaled) / denominator(scaled);  // floor, a >= 0
  bool integral = numerator(scaled) % denominator(scaled) == 0;
  Rational denom = pow_int(Rational(2), static_cast<long>(bits));
  bool lo_exact = false;
  Integer lo_root = iroot(fl, q, &lo_exact);
  Interval out;
  out.lo = Rational(lo_root) / denom;
  if (integral && lo_exact) {
    out.hi = out.lo;
    return out;
  }
  Integer hi_root = iroot(integral ? fl : fl + 1, q);
  out.hi = Rational(hi_root + 1) / denom;
  return out;
}

Interval radical_interval(const Radical& r, unsigned bits) {
  if (r.is_rational()) return Interval{r.coeff, r.coeff};
  Interval root = root_interval(r.base, r.q, bits);
  Rational lo = pow_int(root.lo, static_cast<long>(r.p));
  Rational hi = pow_int(root.hi, static_cast<long>(r.p));
  if (r.coeff >= 0) return Interval{r.coeff * lo, r.coeff * hi};
  return Interval{r.coeff * hi, r.coeff * lo};
}

Interval sum_interval(const RadicalSum& s, unsigned bits) {
  Interval out{Rational(0), Rational(0)};
  for (const auto& t : s) {
    Interval it = radical_interval(t, bits);
    out.lo += it.lo;
    out.hi += it.hi;
  }
  return out;
}

Interval interval_add(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval interval_sub(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval interval_mul(const Interval& a, const Interval& b) {
  Rational v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo,
           v4 = a.hi * b.hi;
  return {std::min(std::min(v1, v2), std::min(v3, v4)),
          std::max(std::max(v1, v2), std::max(v3, v4))};
}

}  // namespace

struct CertifiedReal::Node {
  enum Kind { kConst, kAdd, kSub, kMul, kDiv, kPow } kind;
  Rational value;  // kConst
  std::shared_ptr<const Node> lhs, rhs;
  long exp_num = 1;
  unsigned long exp_den = 1;
};

CertifiedReal::CertifiedReal(const Rational& value) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kConst;
  n->value = value;
  node_ = std::move(n);
}

namespace {

using NodePtr = std::shared_ptr<const CertifiedReal::Node>;

}  // namespace

#define NEFCALC_BINOP(op, kindval)                                       \
  CertifiedReal operator op(const CertifiedReal& a, const CertifiedReal& b) { \
    auto n = std::make_shared<CertifiedReal::Node>();                    \
    n->kind = CertifiedReal::Node::kindval;                              \
    n->lhs = a.node_;                                                    \
    n->rhs = b.node_;                                                    \
    return CertifiedReal(std::move(n));                                  \
  }

NEFCALC_BINOP(+, kAdd)
NEFCALC_BINOP(-, kSub)
NEFCALC_BINOP(*, kMul)
NEFCALC_BINOP(/, kDiv)
#undef NEFCALC_BINOP

CertifiedReal CertifiedReal::pow(long num, unsigned long den) const {
  if (den == 0) throw InvalidInput("power with zero denominator");
  auto n = std::make_shared<Node>();
  n->kind = Node::kPow;
  n->lhs = node_;
  n->exp_num = num;
  n->exp_den = den;
  return CertifiedReal(std::move(n));
}

namespace {

std::optional<RadicalSum> exact_of(const NodePtr& n) {
  using Node = CertifiedReal::Node;
  switch (n->kind) {
    case Node::kConst:
      return sum_of(n->value);
    case Node::kAdd:
    case Node::kSub: {
      auto a = exact_of(n->lhs);
      auto b = exact_of(n->rhs);
      if (!a || !b) return std::nullopt;
      if (n->kind == Node::kSub) *b = sum_neg(std::move(*b));
      return sum_add(std::move(*a), std::move(*b));
    }
    case Node::kMul:
    case Node::kDiv: {
      auto a = exact_of(n->lhs);
      auto b = exact_of(n->rhs);
      if (!a || !b) return std::nullopt;
      if (n->kind == Node::kDiv) {
        auto inv = sum_inv(*b);
        if (!inv) return std::nullopt;
        b = inv;
      }
      return sum_mul(*a, *b);
    }
    case Node::kPow: {
      auto a = exact_of(n->lhs);
      if (!a) return std::nullopt;
      return sum_pow(*a, n->exp_num, n->exp_den);
    }
  }
  return std::nullopt;
}

std::optional<Interval> eval(const NodePtr& n, unsigned bits) {
  using Node = CertifiedReal::Node;
  switch (n->kind) {
    case Node::kConst:
      return Interval{n->value, n->value};
    case Node::kAdd:
    case Node::kSub:
    case Node::kMul: {
      auto a = eval(n->lhs, bits);
      auto b = eval(n->rhs, bits);
      if (!a || !b) return std::nullopt;
      if (n->kind == Node::kAdd) return interval_add(*a, *b);
      if (n->kind == Node::kSub) return interval_sub(*a, *b);
      return interval_mul(*a, *b);
    }
    case Node::kDiv: {
      auto a = eval(n->lhs, bits);
      auto b = eval(n->rhs, bits);
      if (!a || !b) return std::nullopt;
      if (b->lo <= 0 && b->hi >= 0) {
        // Divisor enclosure straddles zero: fall back to an exact value
        // when the subtree has one, otherwise ask for more precision.
        auto ex = exact_of(n->rhs);
        if (!ex) return std::nullopt;
        if (auto sign = sum_sign(*ex); sign && *sign == 0)
          throw DomainError("division by an exact zero");
        *b = sum_interval(*ex, bits);
        if (b->lo <= 0 && b->hi >= 0) return std::nullopt;
      }
      Interval inv{Rational(1) / b->hi, Rational(1) / b->lo};
      return interval_mul(*a, inv);
    }
    case Node::kPow: {
      auto a = eval(n->lhs, bits);
      if (!a) return std::nullopt;
      bool fractional = n->exp_den != 1;
      if (fractional && a->lo <= 0) {
        if (a->hi < 0)
          throw DomainError("fractional power of a negative quantity");
        auto ex = exact_of(n->lhs);
        if (!ex) return std::nullopt;
        auto sign = sum_sign(*ex);
        if (!sign) return std::nullopt;
        if (*sign == 0) {
          if (n->exp_num <= 0)
            throw DomainError("nonpositive fractional power of zero");
          return Interval{Rational(0), Rational(0)};
        }
        if (*sign < 0)
          throw DomainError("fractional power of a negative quantity");
        *a = sum_interval(*ex, bits);
        if (a->lo <= 0) return std::nullopt;
      }
      long num = n->exp_num;
      unsigned long den = n->exp_den;
      bool negative_exp = num < 0;
      unsigned long pnum = negative_exp ? static_cast<unsigned long>(-num)
                                        : static_cast<unsigned long>(num);
      auto frac_pow = [&](const Rational& x, bool lower) {
        if (den == 1) return pow_int(x, static_cast<long>(pnum));
        Interval root = root_interval(x, den, bits);
        return pow_int(lower ? root.lo : root.hi, static_cast<long>(pnum));
      };
      if (!fractional && (a->lo < 0 || a->hi < 0)) {
        // Integer powers of possibly negative intervals.
        Rational v1 = pow_int(a->lo, static_cast<long>(pnum));
        Rational v2 = pow_int(a->hi, static_cast<long>(pnum));
        Interval r{std::min(v1, v2), std::max(v1, v2)};
        if (pnum % 2 == 0 && a->lo < 0 && a->hi > 0) r.lo = 0;
        if (negative_exp) {
          if (r.lo <= 0 && r.hi >= 0) return std::optional<Interval>{};
          return std::optional<Interval>{
              Interval{Rational(1) / r.hi, Rational(1) / r.lo}};
        }
        return std::optional<Interval>{r};
      }
      Interval r{frac_pow(a->lo, true), frac_pow(a->hi, false)};
      if (negative_exp) {
        if (r.lo <= 0) return std::nullopt;
        r = Interval{Rational(1) / r.hi, Rational(1) / r.lo};
      }
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Interval> CertifiedReal::enclosure(unsigned bits) const {
  return eval(node_, bits);
}

std::optional<Radical> CertifiedReal::exact() const {
  auto sum = exact_of(node_);
  if (!sum) return std::nullopt;
  if (sum->empty()) return rational_radical(Rational(0));
  if (sum->size() == 1) return (*sum)[0];
  return std::nullopt;
}

std::optional<Interval> enclose(const CertifiedReal& x, unsigned max_bits) {
  // The exact path mirrors the first rung of the refinement ladder: 64
  // bits is plenty for display, and exact ties are decided algebraically
  // in compare_certified rather than by ever-finer enclosures.
  if (auto ex = exact_of(x.node_))
    return sum_interval(*ex, std::min(64u, max_bits));
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    if (auto iv = x.enclosure(bits)) return iv;
  }
  return std::nullopt;
}

Cmp compare_radicals(const Radical& a, const Radical& b) {
  int sa = a.coeff == 0 ? 0 : (a.coeff > 0 ? 1 : -1);
  int sb = b.coeff == 0 ? 0 : (b.coeff > 0 ? 1 : -1);
  if (sa != sb) return sa < sb ? Cmp::LT : Cmp::GT;
  if (sa == 0) return Cmp::EQ;
  // Same sign: raise both to the lcm of the root orders, which clears all
  // fractional exponents, then compare exactly.
  unsigned long l = std::lcm(a.q, b.q);
  Rational pa = pow_int(a.coeff, static_cast<long>(l)) *
                pow_int(a.base, static_cast<long>(a.p * (l / a.q)));
  Rational pb = pow_int(b.coeff, static_cast<long>(l)) *
                pow_int(b.base, static_cast<long>(b.p * (l / b.q)));
  if (pa == pb) return Cmp::EQ;
  bool less = pa < pb;
  // An even lcm maps two negatives to positives and reverses their order.
  if (sa < 0 && l % 2 == 0) less = !less;
  return less ? Cmp::LT : Cmp::GT;
}

Cmp compare_certified(const CertifiedReal& a, const CertifiedReal& b,
                      unsigned max_bits, unsigned* bits_used) {
  auto ra = exact_of(a.node_);
  auto rb = exact_of(b.node_);
  if (ra && rb) {
    // Compare the difference as a radical sum; up to two surviving terms
    // the sign is exact, beyond that distinct radicals rarely cancel and
    // interval refinement below decides quickly.
    RadicalSum diff = sum_add(*ra, sum_neg(*rb));
    if (auto sign = sum_sign(diff)) {
      if (bits_used) *bits_used = 0;
      return *sign == 0 ? Cmp::EQ : (*sign > 0 ? Cmp::GT : Cmp::LT);
    }
  }
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    if (bits_used) *bits_used = bits;
    auto ia = ra ? std::optional<Interval>(sum_interval(*ra, bits))
                 : a.enclosure(bits);
    auto ib = rb ? std::optional<Interval>(sum_interval(*rb, bits))
                 : b.enclosure(bits);
    if (!ia || !ib) continue;
    if (ia->hi < ib->lo) return Cmp::LT;
    if (ia->lo > ib->hi) return Cmp::GT;
    if (ia->is_point() && ib->is_point() && ia->lo == ib->lo) return Cmp::EQ;
  }
  return Cmp::UNDECIDED;
}

}  // namespace nefcalc
