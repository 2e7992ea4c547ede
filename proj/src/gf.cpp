#include "rmcode/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rmcode/error.hpp"

namespace rmcode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoModulusAvailable: return "NoModulusAvailable";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense univariate polynomials over F_p, ascending coefficients.
using UPoly = std::vector<int>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod(int x, int p) {
  int r = 1;
  for (int e = p - 2, b = x % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

UPoly poly_mod(UPoly a, const UPoly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

UPoly poly_gcd(UPoly a, UPoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly poly_powmod(UPoly base, long long e, const UPoly& m, int p) {
  UPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const int> monic, int p) {
  UPoly f(monic.begin(), monic.end());
  for (int& c : f) c = ((c % p) + p) % p;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  UPoly h{0, 1};  // x^{p^i} mod f
  for (int i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    UPoly g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

std::optional<std::vector<int>> Field::builtin_modulus(int p, int k) {
  // Conway polynomials, ascending coefficients.
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},    {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},       {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},          {{7, 2}, {3, 6, 1}},
  };
  auto it = table.find({p, k});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldPtr Field::create(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorKind::InvalidParams, "extension degree must be positive");
  double qd = 1;
  for (int i = 0; i < k; ++i) qd *= p;
  if (qd > double(1u << 20)) fail(ErrorKind::InvalidParams, "field order exceeds 2^20");

  std::vector<int> m;
  if (modulus) {
    m = *modulus;
    for (int& c : m) c = ((c % p) + p) % p;
    if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
      fail(ErrorKind::InvalidParams, "modulus must be monic of degree k");
    if (!is_irreducible_mod_p(m, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
  } else if (k == 1) {
    m = {0, 1};
  } else {
    auto b = builtin_modulus(p, k);
    if (!b) {
      fail(ErrorKind::NoModulusAvailable,
           "no built-in modulus for q = " + std::to_string(p) + "^" + std::to_string(k));
    }
    m = *b;
  }
  return FieldPtr(new Field(p, k, std::move(m)));
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= static_cast<Elem>(p_);

  neg_table_.resize(q_);
  for (Elem x = 0; x < q_; ++x) {
    auto c = coeffs(x);
    for (int& v : c) v = (p_ - v) % p_;
    neg_table_[x] = from_coeffs(c);
  }
  if (q_ <= 1024) {
    add_table_.resize(std::size_t(q_) * q_);
    for (Elem x = 0; x < q_; ++x)
      for (Elem y = 0; y < q_; ++y) add_table_[std::size_t(x) * q_ + y] = add_slow(x, y);
  }

  // Primitive element by exhaustive order test, then log/exp tables.
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](Elem x, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, x);
      x = mul_slow(x, x);
      e >>= 1;
    }
    return r;
  };
  generator_ = 0;
  for (Elem x = 1; x < q_ && generator_ == 0; ++x) {
    if (n == 1) {
      generator_ = x;
      break;
    }
    bool primitive = true;
    for (auto r : factors)
      if (slow_pow(x, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) generator_ = x;
  }
  exp_.resize(n == 0 ? 1 : n);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<Elem>(i);
    cur = mul_slow(cur, generator_);
  }
}

Elem Field::add_slow(Elem x, Elem y) const noexcept {
  Elem r = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    const Elem d = (x % p_ + y % p_) % p_;
    r += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return r;
}

Elem Field::mul_slow(Elem x, Elem y) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t(x) * y) % p_);
  UPoly a = coeffs(x), b = coeffs(y);
  trim(a);
  trim(b);
  UPoly r = poly_mulmod(a, b, modulus_, p_);
  r.resize(k_, 0);
  return from_coeffs(r);
}

Elem Field::inv(Elem x) const {
  if (x == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const Elem l = log_[x];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem Field::div(Elem x, Elem y) const {
  if (y == 0) fail(ErrorKind::DivisionByZero, "division by zero");
  return mul(x, inv(y));
}

Elem Field::pow(Elem x, long long e) const {
  if (x == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    fail(ErrorKind::DivisionByZero, "negative power of zero");
  }
  const long long n = static_cast<long long>(q_) - 1;
  long long r = (static_cast<long long>(log_[x]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[r];
}

Elem Field::from_int(long long n) const noexcept {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

Elem Field::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > k_) fail(ErrorKind::InvalidParams, "too many coefficients");
  Elem r = 0, place = 1;
  for (int v : c) {
    r += static_cast<Elem>(((v % p_) + p_) % p_) * place;
    place *= p_;
  }
  return r;
}

std::vector<int> Field::coeffs(Elem x) const {
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return c;
}

std::uint64_t Field::order(Elem x) const {
  if (x == 0) return 0;
  const std::uint64_t n = q_ - 1;
  std::uint64_t ord = n;
  for (auto r : prime_factors(n)) {
    while (ord % r == 0 && pow(x, static_cast<long long>(ord / r)) == 1) ord /= r;
  }
  return ord;
}

std::string Field::format(Elem x) const {
  if (k_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  const auto c = coeffs(x);
  std::string out;
  for (int i = 0; i < k_; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Field::format_signed(Elem x) const {
  if (in_prime_subfield(x) && p_ > 2 && x > static_cast<Elem>((p_ - 1) / 2))
    return "-" + std::to_string(p_ - static_cast<int>(x));
  return format(x);
}

Elem Field::parse(std::string_view text) const {
  const std::string s = strip_spaces(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty element literal");
  std::size_t pos = 0;
  Elem acc = 0;
  bool first = true;
  auto parse_uint = [&](long long& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      out = out * 10 + (s[pos] - '0');
      if (out > (1LL << 40)) fail(ErrorKind::ParseError, "integer too large in '" + s + "'");
      ++pos;
    }
    return pos > start;
  };
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail(ErrorKind::ParseError, "expected '+' or '-' in element literal '" + s + "'");
    }
    first = false;
    long long coef = 1;
    const bool have_coef = parse_uint(coef);
    if (!have_coef) coef = 1;
    long long exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) fail(ErrorKind::ParseError, "dangling '*' in '" + s + "'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'a') fail(ErrorKind::ParseError, "expected 'a' after '*' in '" + s + "'");
    }
    if (pos < s.size() && s[pos] == 'a') {
      if (k_ == 1) fail(ErrorKind::ParseError, "'a' is not available in a prime field");
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!parse_uint(exponent)) fail(ErrorKind::ParseError, "missing exponent in '" + s + "'");
      }
    } else if (!have_coef) {
      fail(ErrorKind::ParseError, "malformed element literal '" + s + "'");
    }
    Elem term = from_int(coef);
    if (exponent > 0) term = mul(term, pow(static_cast<Elem>(p_), exponent));
    if (negative) term = neg(term);
    acc = add(acc, term);
  }
  return acc;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_;
  os << ")";
  return os.str();
}

FieldEmbedding extend_field(const FieldPtr& base, int e) {
  if (e < 1) fail(ErrorKind::InvalidParams, "extension degree must be positive");
  const int p = base->p();
  const int n = base->k() * e;
  FieldPtr target;
  if (e == 1) {
    target = base;
  } else if (auto b = Field::builtin_modulus(p, n)) {
    target = Field::create(p, n, b);
  } else {
    // First primitive monic polynomial in base-p counting order of the
    // lower coefficients.
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::uint64_t code = 1; code < count && !target; ++code) {
      std::vector<int> m(n + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i, c /= p) m[i] = static_cast<int>(c % p);
      m[n] = 1;
      if (m[0] == 0 || !is_irreducible_mod_p(m, p)) continue;
      auto f = Field::create(p, n, m);
      if (f->order(static_cast<Elem>(p)) == f->q() - 1) target = f;
    }
    if (!target) fail(ErrorKind::NoModulusAvailable, "no primitive polynomial found");
  }

  FieldEmbedding emb{base, target, std::vector<Elem>(base->q())};
  if (base->k() == 1 || e == 1) {
    for (Elem x = 0; x < base->q(); ++x) emb.image[x] = x;
    return emb;
  }
  // Root of the base modulus inside the target field.
  const auto& m = base->modulus();
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < target->q() && !found; ++x) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = target->add(target->mul(acc, x), target->from_int(m[i]));
    if (acc == 0) {
      root = x;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InternalInconsistency, "base modulus has no root in the extension");
  for (Elem x = 0; x < base->q(); ++x) {
    const auto c = base->coeffs(x);
    Elem acc = 0;
    for (int i = base->k(); i-- > 0;) acc = target->add(target->mul(acc, root), target->from_int(c[i]));
    emb.image[x] = acc;
  }
  return emb;
}

FqElement::FqElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorKind::InvalidParams, "null field");
  if (value_ >= field_->q()) fail(ErrorKind::InvalidParams, "element code out of range");
}

FqElement FqElement::from_int(FieldPtr field, long long n) {
  const Elem v = field->from_int(n);
  return FqElement(std::move(field), v);
}

void FqElement::check_same(const FqElement& y) const {
  if (field_ != y.field_ && !field_->same_as(*y.field_))
    fail(ErrorKind::FieldMismatch, field_->describe() + " vs " + y.field_->describe());
}

FqElement FqElement::operator+(const FqElement& y) const {
  check_same(y);
  return {field_, field_->add(value_, y.value_)};
}
FqElement FqElement::operator-(const FqElement& y) const {
  check_same(y);
  return {field_, field_->sub(value_, y.value_)};
}
FqElement FqElement::operator*(const FqElement& y) const {
  check_same(y);
  return {field_, field_->mul(value_, y.value_)};
}
FqElement FqElement::operator/(const FqElement& y) const {
  check_same(y);
  return {field_, field_->div(value_, y.value_)};
}
FqElement FqElement::operator-() const { return {field_, field_->neg(value_)}; }
FqElement FqElement::inv() const { return {field_, field_->inv(value_)}; }
FqElement FqElement::pow(long long e) const { return {field_, field_->pow(value_, e)}; }

bool FqElement::operator==(const FqElement& y) const {
  check_same(y);
  return value_ == y.value_;
}

FqElement primitive_element(const FieldPtr& field) { return FqElement(field, field->generator()); }

}  // namespace rmcode
