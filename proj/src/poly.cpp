#include "rmcode/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rmcode/error.hpp"

namespace rmcode {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) fail(ErrorKind::InvalidParams, "negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(int nvars, int index, int power) {
  std::vector<int> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) fail(ErrorKind::DimensionMismatch, "monomials of different rings");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) fail(ErrorKind::DimensionMismatch, "monomials of different rings");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars()) fail(ErrorKind::DimensionMismatch, "monomials of different rings");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.empty() ? "t" + std::to_string(i + 1) : names[i];
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) return out;
  std::vector<int> e(nvars, 0);
  // Compositions of d into nvars parts, generated recursively.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[var] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      e[var] = x;
      self(self, var + 1, remaining - x);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(OrderKind kind, std::vector<int> perm) : kind_(kind), perm_(std::move(perm)) {
  std::vector<int> sorted(perm_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) fail(ErrorKind::InvalidParams, "order perm is not a permutation");
}

TermOrder TermOrder::grevlex(int nvars) {
  std::vector<int> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::GRevLex, std::move(p)};
}

TermOrder TermOrder::glex(int nvars) {
  std::vector<int> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::GLex, std::move(p)};
}

bool TermOrder::is_identity_perm() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

TermOrder TermOrder::parse(std::string_view text, int nvars) {
  std::istringstream in{std::string(text)};
  std::string kind_word, perm_word;
  in >> kind_word >> perm_word;
  std::transform(kind_word.begin(), kind_word.end(), kind_word.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  OrderKind kind;
  if (kind_word == "grevlex") {
    kind = OrderKind::GRevLex;
  } else if (kind_word == "glex") {
    kind = OrderKind::GLex;
  } else {
    fail(ErrorKind::ParseError, "unknown monomial order '" + kind_word + "'");
  }
  std::vector<int> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  if (!perm_word.empty()) {
    if (perm_word.rfind("perm=", 0) != 0) fail(ErrorKind::ParseError, "expected perm=... in order spec");
    perm.clear();
    std::stringstream ps(perm_word.substr(5));
    std::string item;
    while (std::getline(ps, item, ',')) {
      try {
        perm.push_back(std::stoi(item) - 1);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad perm entry '" + item + "'");
      }
    }
    if (static_cast<int>(perm.size()) != nvars) fail(ErrorKind::ParseError, "perm length differs from vars");
  }
  try {
    return {kind, std::move(perm)};
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::strong_ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.nvars() != nvars() || v.nvars() != nvars())
    fail(ErrorKind::DimensionMismatch, "monomial and order have different variable counts");
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  const int s = nvars();
  if (kind_ == OrderKind::GLex) {
    for (int i = 0; i < s; ++i) {
      const int a = u[perm_[i]], b = v[perm_[i]];
      if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
  }
  // GRevLex: u > v iff the last nonzero entry of u - v is negative.
  for (int i = s - 1; i >= 0; --i) {
    const int a = u[perm_[i]], b = v[perm_[i]];
    if (a != b) return b <=> a;
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  std::string out = kind_ == OrderKind::GRevLex ? "grevlex perm=" : "glex perm=";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(perm_[i] + 1);
  }
  return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) fail(ErrorKind::InvalidParams, "null field");
}

Poly Poly::constant(FieldPtr field, int nvars, Elem c) {
  Poly p(std::move(field), nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::term(FieldPtr field, const Monomial& m, Elem c) {
  Poly p(std::move(field), m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(FieldPtr field, int nvars, int index) {
  return term(std::move(field), Monomial::variable(nvars, index), 1);
}

Elem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial& m, Elem c) {
  if (m.nvars() != nvars_) fail(ErrorKind::DimensionMismatch, "monomial has wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_ring(const Poly& g) const {
  if (nvars_ != g.nvars_ || (field_ != g.field_ && !field_->same_as(*g.field_)))
    fail(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Poly Poly::operator+(const Poly& g) const {
  check_ring(g);
  Poly r(*this);
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& g) const {
  check_ring(g);
  Poly r(*this);
  for (const auto& [m, c] : g.terms_) r.add_term(m, field_->neg(c));
  return r;
}

Poly Poly::operator*(const Poly& g) const {
  check_ring(g);
  Poly r(field_, nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, field_->mul(c1, c2));
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_, nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_->mul(v, c));
  return r;
}

Poly Poly::times(const Monomial& mono, Elem c) const {
  Poly r(field_, nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m * mono, field_->mul(v, c));
  return r;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::pair<Monomial, Elem> Poly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) fail(ErrorKind::InvalidParams, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

Poly Poly::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(field_->inv(leading_coeff(order)));
}

std::vector<std::pair<Monomial, Elem>> Poly::sorted_terms(const TermOrder& order) const {
  std::vector<std::pair<Monomial, Elem>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return out;
}

Elem Poly::eval(std::span<const Elem> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    fail(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                           std::to_string(nvars_) + " variables");
  const Field& f = *field_;
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem v = c;
    for (int i = 0; i < nvars_ && v != 0; ++i)
      if (m[i] > 0) v = f.mul(v, f.pow(point[i], m[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

std::string Poly::to_string(const TermOrder& order, std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms(order)) {
    std::string cs = field_->format_signed(c);
    bool negative = false;
    if (!cs.empty() && cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const bool unit_mono = m.degree() == 0;
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (unit_mono) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

bool Poly::operator==(const Poly& g) const {
  return nvars_ == g.nvars_ && (field_ == g.field_ || field_->same_as(*g.field_)) && terms_ == g.terms_;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

namespace {

class PolyParser {
 public:
  PolyParser(const FieldPtr& field, int nvars, std::string text, std::vector<std::string> names)
      : field_(field), nvars_(nvars), s_(std::move(text)), names_(std::move(names)) {
    order_.resize(names_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return names_[a].size() > names_[b].size(); });
  }

  Poly parse() {
    Poly result(field_, nvars_);
    if (s_.empty()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      auto [mono, coef] = parse_term();
      result.add_term(mono, negative ? field_->neg(coef) : coef);
    }
    return result;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  std::pair<Monomial, Elem> parse_term() {
    std::vector<int> exps(nvars_, 0);
    Elem coef = 1;
    while (true) {
      parse_factor(exps, coef);
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial(std::move(exps)), coef};
  }

  long long parse_uint() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) error("integer too large");
      ++pos_;
    }
    if (pos_ == start) error("expected integer");
    return v;
  }

  long long parse_optional_exponent() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return parse_uint();
    }
    return 1;
  }

  void parse_factor(std::vector<int>& exps, Elem& coef) {
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef = field_->mul(coef, field_->from_int(parse_uint()));
      return;
    }
    if (c == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) error("unbalanced parenthesis");
      coef = field_->mul(coef, field_->parse(std::string_view(s_).substr(pos_ + 1, close - pos_ - 1)));
      pos_ = close + 1;
      return;
    }
    for (int idx : order_) {
      const auto& name = names_[idx];
      if (s_.compare(pos_, name.size(), name) == 0) {
        pos_ += name.size();
        exps[idx] += static_cast<int>(parse_optional_exponent());
        return;
      }
    }
    if (c == 'a' && field_->k() > 1) {
      ++pos_;
      const long long e = parse_optional_exponent();
      coef = field_->mul(coef, field_->pow(static_cast<Elem>(field_->p()), e));
      return;
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  FieldPtr field_;
  int nvars_;
  std::string s_;
  std::vector<std::string> names_;
  std::vector<int> order_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, int nvars, std::string_view text, std::span<const std::string> names) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::vector<std::string> n = names.empty() ? default_var_names(nvars)
                                             : std::vector<std::string>(names.begin(), names.end());
  if (static_cast<int>(n.size()) != nvars) fail(ErrorKind::InvalidParams, "variable name count mismatch");
  return PolyParser(field, nvars, std::move(compact), std::move(n)).parse();
}

Poly homogenize(const Poly& f) {
  const int s = f.nvars();
  const int d = std::max(f.degree(), 0);
  Poly out(f.field(), s + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = m.exponents();
    e.push_back(d - m.degree());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Poly dehomogenize(const Poly& f) {
  const int s = f.nvars();
  if (s < 1) fail(ErrorKind::InvalidParams, "no variable to dehomogenize");
  Poly out(f.field(), s - 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = m.exponents();
    e.pop_back();
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::optional<Elem> proportionality(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero() || f.size() != g.size()) return std::nullopt;
  const Field& fld = *f.field();
  std::optional<Elem> ratio;
  for (const auto& [m, c] : f.terms()) {
    const Elem d = g.coeff(m);
    if (d == 0) return std::nullopt;
    const Elem r = fld.div(d, c);
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

}  // namespace rmcode
