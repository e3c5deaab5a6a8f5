#include <cctype>
#include <sstream>

#include "hk/linalg.hpp"

namespace hk {

namespace {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error("prime too large: " + std::to_string(p));
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t(text);
  if (t == "Q" || t == "QQ" || t == "rationals") return rationals();
  std::string digits;
  if (t.rfind("Fp:", 0) == 0)
    digits = t.substr(3);
  else if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f'))
    digits = t.substr(1);
  else
    throw Error("unknown field '" + t + "' (expected Q, F<p> or Fp:<p>)");
  if (digits.empty() || digits.size() > 10) throw Error("bad field characteristic in '" + t + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad field characteristic in '" + t + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const { return is_prime() ? "F" + std::to_string(p) : "Q"; }

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

Scalar::Scalar(const FieldSpec& f, long v) : field_(f) {
  if (f.is_prime()) {
    long r = v % static_cast<long>(f.p);
    if (r < 0) r += f.p;
    mod_ = static_cast<std::uint32_t>(r);
  } else {
    q_ = v;
  }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) : field_(f) {
  if (f.is_prime()) {
    std::uint32_t den = reduce_mpz(q.get_den(), f.p);
    if (den == 0) throw Error("denominator of " + q.get_str() + " vanishes in " + f.name());
    std::uint64_t num = reduce_mpz(q.get_num(), f.p);
    mod_ = static_cast<std::uint32_t>(num * mod_inverse(den, f.p) % f.p);
  } else {
    q_ = q;
    q_.canonicalize();
  }
}

Scalar Scalar::from_mod(const FieldSpec& f, std::uint32_t v) {
  Scalar s;
  s.field_ = f;
  s.mod_ = v % f.p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string t(text);
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  bool seen_digit = false, seen_slash = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw Error("bad numeric literal '" + t + "'");
    }
  }
  if (!seen_digit) throw Error("bad numeric literal '" + t + "'");
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  mpq_class q(t, 10);
  if (q.get_den() == 0) throw Error("zero denominator in '" + t + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_prime() ? mod_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? mod_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.mod_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(mod_) + o.mod_) % field_.p);
  else
    r.q_ = q_ + o.q_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.mod_ = mod_ == 0 ? 0 : field_.p - mod_;
  else
    r.q_ = -q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.mod_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(mod_) * o.mod_ % field_.p);
  else
    r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.mod_ = mod_inverse(mod_, field_.p);
  else
    r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(field_), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime() ? mod_ == o.mod_ : q_ == o.q_;
}

std::string Scalar::str() const { return field_.is_prime() ? std::to_string(mod_) : q_.get_str(); }

}  // namespace hk
