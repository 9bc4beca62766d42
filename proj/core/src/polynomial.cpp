#include "singindex/polynomial.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singindex {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw RejectedInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw RejectedInput("duplicate variable '" + names_[i] + "'");
  }
}

std::ptrdiff_t VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

Context make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

bool same_context(const Context& a, const Context& b) { return a == b || *a == *b; }

namespace {

using TermMap = std::map<Monomial, Rational, std::greater<>>;

std::vector<Polynomial::Term> from_map(TermMap&& acc) {
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

}  // namespace

Polynomial::Polynomial(Context ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw RejectedInput("polynomial without variable context");
}

Polynomial::Polynomial(Context ctx, std::vector<Term> terms) : Polynomial(std::move(ctx)) {
  TermMap acc;
  for (auto& [m, c] : terms) {
    if (m.size() != ctx_->size()) throw RejectedInput("monomial length does not match variable count");
    acc[m] += c;
  }
  terms_ = from_map(std::move(acc));
}

Polynomial::Polynomial(Context ctx, std::vector<Term> sorted_terms, Sorted)
    : ctx_(std::move(ctx)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Context ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.emplace_back(Monomial(p.nvars()), c);
  return p;
}

Polynomial Polynomial::variable(Context ctx, std::size_t i) {
  Polynomial p(std::move(ctx));
  if (i >= p.nvars()) throw RejectedInput("variable index out of range");
  p.terms_.emplace_back(Monomial::variable(p.nvars(), i), Rational(1));
  return p;
}

Polynomial Polynomial::term(Context ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.nvars()) throw RejectedInput("monomial length does not match variable count");
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

int Polynomial::order() const noexcept {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().first.degree());
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.degree()));
  return d;
}

void Polynomial::require_same_context(const Polynomial& other) const {
  if (!same_context(ctx_, other.ctx_)) throw RejectedInput("polynomials live in different variable contexts");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_context(other);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first > a->first) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(other);
  TermMap acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) acc[ma * mb] += ca * cb;
  return Polynomial(ctx_, from_map(std::move(acc)), Sorted{});
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars()) throw RejectedInput("derivative variable out of range");
  Polynomial r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.terms_.emplace_back(std::move(d), c * m[var]);
  }
  // Lowering one exponent keeps lex-descending order among the survivors.
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars()) throw RejectedInput("substitution needs one image per variable");
  if (images.empty()) return *this;
  const Context& target = images.front().context();
  for (const auto& img : images)
    if (!same_context(img.context(), target)) throw RejectedInput("substitution images in different contexts");

  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (m[i] > 0) t = t * power(i, m[i]);
    result += t;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw RejectedInput("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial r(ctx_);
  for (const auto& t : terms_)
    if (t.first.degree() < bound) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::with_context(Context ctx) const {
  if (ctx->size() != nvars()) throw RejectedInput("context change must preserve the variable count");
  Polynomial r(*this);
  r.ctx_ = std::move(ctx);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << "*";
      out << ctx_->name(i);
      if (m[i] > 1) out << "^" << m[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw RejectedInput("unknown arithmetic operation");
}

std::vector<Polynomial> linear_images(const Context& ctx, std::span<const Rational> matrix) {
  const std::size_t n = ctx->size();
  if (matrix.size() != n * n) throw RejectedInput("linear substitution matrix must be n x n");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(ctx);
    for (std::size_t j = 0; j < n; ++j) img += Polynomial::term(ctx, Monomial::variable(n, j), matrix[i * n + j]);
    images.push_back(std::move(img));
  }
  return images;
}

}  // namespace singindex
