#include "skewpair/field.hpp"

#include <cctype>
#include <charconv>

namespace skewpair {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text) {
  std::string_view t = trim(text);
  std::string_view digits = t;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer in scalar '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid scalar '" + std::string(text) + "'");
    }
  }
  std::string s(t);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "Q" || t == "QQ" || t == "rationals" || t == "rational") return rationals();
  if (t.size() > 2 && (t.substr(0, 2) == "GF" || t.substr(0, 2) == "gf")) {
    std::string_view rest = trim(t.substr(2));
    if (!rest.empty() && rest.front() == '(') {
      if (rest.back() != ')') throw ParseError("malformed field '" + std::string(text) + "'");
      rest = trim(rest.substr(1, rest.size() - 2));
    }
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw ParseError("malformed field '" + std::string(text) + "'");
    }
    try {
      return prime(p);
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

FieldElement FieldSpec::zero() const { return from_int(0); }
FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(long long v) const {
  if (is_rational()) return FieldElement(mpq_class(mpz_class(static_cast<long>(v))));
  auto p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<std::uint64_t>(r), p_);
}

FieldElement FieldSpec::from_mpz(const mpz_class& v) const {
  if (is_rational()) return FieldElement(mpq_class(v));
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return FieldElement(mpz_fdiv_ui(v.get_mpz_t(), p_), p_);
}

FieldElement FieldSpec::from_fraction(long long num, long long den) const {
  if (den == 0) throw FieldError("zero denominator");
  return from_int(num) / from_int(den);
}

FieldElement FieldSpec::parse_scalar(std::string_view text) const {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  mpz_class num = parse_integer(t.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  FieldElement d = from_mpz(den);
  if (d.is_zero()) throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + name());
  return from_mpz(num) / d;
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

FieldElement::FieldElement(std::uint64_t residue, std::uint64_t modulus)
    : value_(Residue{residue % modulus, modulus}) {}

FieldSpec FieldElement::field() const {
  if (is_rational()) return FieldSpec::rationals();
  return FieldSpec(FieldSpec::Kind::PrimeField, std::get<Residue>(value_).modulus);
}

bool FieldElement::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool FieldElement::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("element of " + field().name() + " is not rational");
}

std::uint64_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldError("rational element has no residue");
}

void FieldElement::check_same_field(const FieldElement& y) const {
  if (value_.index() != y.value_.index()) throw FieldError("mixed-field operands");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(y.value_).modulus) throw FieldError("mixed-field operands");
  }
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw FieldError("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(value_);
  return FieldElement(powmod(r.value, r.modulus - 2, r.modulus), r.modulus);
}

FieldElement FieldElement::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return FieldElement(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  check_same_field(y);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(y.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = r.value + std::get<Residue>(y.value_).value;
    if (s >= r.modulus || s < r.value) s -= r.modulus;
    r.value = s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  check_same_field(y);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(y.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t v = std::get<Residue>(y.value_).value;
    r.value = r.value >= v ? r.value - v : r.value + (r.modulus - v);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  check_same_field(y);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(y.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = mulmod(r.value, std::get<Residue>(y.value_).value, r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& y) {
  check_same_field(y);
  if (y.is_zero()) throw FieldError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(y.value_);
    return *this;
  }
  return *this *= y.inv();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  x.check_same_field(y);
  return x.value_ == y.value_;
}

std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
  x.check_same_field(y);
  if (x.is_rational()) {
    int c = cmp(std::get<mpq_class>(x.value_), std::get<mpq_class>(y.value_));
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<FieldElement::Residue>(x.value_).value <=> std::get<FieldElement::Residue>(y.value_).value;
}

std::string FieldElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement sub(const FieldElement& x, const FieldElement& y) { return x - y; }
FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement div(const FieldElement& x, const FieldElement& y) { return x / y; }
FieldElement neg(const FieldElement& x) { return -x; }
FieldElement inv(const FieldElement& x) { return x.inv(); }
bool is_zero(const FieldElement& x) { return x.is_zero(); }

}  // namespace skewpair
