#include "tilegroup/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace tilegroup {

bool is_square_free(unsigned long n) {
  if (n == 0) return false;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

QuadraticRational::QuadraticRational(long value) : rat_(value) {}

QuadraticRational::QuadraticRational(Rational value) : rat_(std::move(value)) { rat_.canonicalize(); }

QuadraticRational::QuadraticRational(Rational rat, Rational surd, unsigned long discriminant)
    : rat_(std::move(rat)), surd_(std::move(surd)), disc_(discriminant) {
  rat_.canonicalize();
  surd_.canonicalize();
  if (disc_ == 0) {
    if (surd_ != 0) throw InvalidArgument("non-zero surd part with discriminant 0");
    return;
  }
  if (disc_ == 1 || !is_square_free(disc_)) {
    throw InvalidArgument("discriminant " + std::to_string(disc_) + " is not a square-free integer > 1");
  }
}

QuadraticRational QuadraticRational::sqrt_of(unsigned long discriminant) {
  return QuadraticRational(Rational(0), Rational(1), discriminant);
}

QuadraticRational QuadraticRational::golden() {
  return QuadraticRational(Rational(1, 2), Rational(1, 2), 5);
}

bool QuadraticRational::is_integer() const { return surd_ == 0 && rat_.get_den() == 1; }

unsigned long QuadraticRational::common_discriminant(const QuadraticRational& other) const {
  if (disc_ == other.disc_) return disc_;
  if (disc_ == 0) return other.disc_;
  if (other.disc_ == 0) return disc_;
  throw DiscriminantMismatch("cannot combine Q(sqrt(" + std::to_string(disc_) + ")) with Q(sqrt(" +
                             std::to_string(other.disc_) + "))");
}

int QuadraticRational::sign() const {
  const int sp = sgn(rat_);
  const int sq = sgn(surd_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 d.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = surd_ * surd_ * Rational(disc_);
  const int c = cmp(lhs, rhs);
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

double QuadraticRational::to_double() const {
  if (surd_ == 0) return rat_.get_d();
  mpf_class root(disc_, 256);
  root = sqrt(root);
  mpf_class value(rat_, 256);
  mpf_class surd(surd_, 256);
  value += surd * root;
  return value.get_d();
}

Integer QuadraticRational::floor() const {
  if (surd_ == 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), rat_.get_num_mpz_t(), rat_.get_den_mpz_t());
    return q;
  }
  Integer n(std::floor(to_double()));
  while ((*this - QuadraticRational(Rational(n))).sign() < 0) n -= 1;
  while ((*this - QuadraticRational(Rational(n + 1))).sign() >= 0) n += 1;
  return n;
}

QuadraticRational QuadraticRational::conjugate() const {
  QuadraticRational out = *this;
  out.surd_ = -out.surd_;
  return out;
}

QuadraticRational QuadraticRational::operator-() const {
  QuadraticRational out = *this;
  out.rat_ = -out.rat_;
  out.surd_ = -out.surd_;
  return out;
}

QuadraticRational& QuadraticRational::operator+=(const QuadraticRational& other) {
  disc_ = common_discriminant(other);
  rat_ += other.rat_;
  surd_ += other.surd_;
  return *this;
}

QuadraticRational& QuadraticRational::operator-=(const QuadraticRational& other) {
  disc_ = common_discriminant(other);
  rat_ -= other.rat_;
  surd_ -= other.surd_;
  return *this;
}

QuadraticRational& QuadraticRational::operator*=(const QuadraticRational& other) {
  disc_ = common_discriminant(other);
  Rational rat = rat_ * other.rat_ + surd_ * other.surd_ * Rational(disc_);
  Rational surd = rat_ * other.surd_ + surd_ * other.rat_;
  rat_ = std::move(rat);
  surd_ = std::move(surd);
  return *this;
}

QuadraticRational& QuadraticRational::operator/=(const QuadraticRational& other) {
  if (other.is_zero()) throw DivisionByZero("division by zero in Q(sqrt(d))");
  disc_ = common_discriminant(other);
  // x / y = x * conj(y) / norm(y); the norm is a non-zero rational.
  const Rational norm = other.rat_ * other.rat_ - other.surd_ * other.surd_ * Rational(disc_);
  *this *= other.conjugate();
  rat_ /= norm;
  surd_ /= norm;
  return *this;
}

bool operator==(const QuadraticRational& a, const QuadraticRational& b) {
  return a.rat_ == b.rat_ && a.surd_ == b.surd_ && (a.surd_ == 0 || a.disc_ == b.disc_);
}

std::strong_ordering operator<=>(const QuadraticRational& a, const QuadraticRational& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticRational::to_string() const {
  std::string out;
  if (rat_ != 0 || surd_ == 0) out = rat_.get_str();
  if (surd_ != 0) {
    const Rational mag = abs(surd_);
    std::string term = (mag == 1 ? std::string() : mag.get_str() + "*") + "sqrt(" + std::to_string(disc_) + ")";
    if (out.empty()) {
      out = (surd_ < 0 ? "-" : "") + term;
    } else {
      out += (surd_ < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse number '" + s_ + "': " + why);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

unsigned long parse_sqrt(Scanner& sc) {
  if (!sc.accept("sqrt(")) sc.fail("expected sqrt(");
  std::string d = sc.digits();
  if (d.empty() || !sc.accept(")")) sc.fail("malformed sqrt(d)");
  return std::stoul(d);
}

}  // namespace

QuadraticRational QuadraticRational::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty");
  Rational rat(0);
  Rational surd(0);
  unsigned long disc = 0;
  bool first = true;
  while (!sc.done()) {
    int sgn = 1;
    if (sc.accept("+")) {
    } else if (sc.accept("-")) {
      sgn = -1;
    } else if (!first) {
      sc.fail("expected + or -");
    }
    first = false;
    Rational coeff(1);
    bool has_coeff = false;
    std::string num = sc.digits();
    if (!num.empty()) {
      has_coeff = true;
      coeff = Rational(Integer(num));
      if (sc.accept("/")) {
        std::string den = sc.digits();
        if (den.empty() || Integer(den) == 0) sc.fail("bad denominator");
        coeff /= Rational(Integer(den));
      }
    }
    bool is_surd = false;
    if (has_coeff) {
      if (sc.accept("*")) is_surd = true;
    } else {
      is_surd = true;
    }
    coeff *= sgn;
    if (is_surd) {
      unsigned long d = parse_sqrt(sc);
      if (disc != 0 && d != disc) throw DiscriminantMismatch("mixed discriminants in '" + std::string(text) + "'");
      disc = d;
      surd += coeff;
    } else {
      rat += coeff;
    }
  }
  if (disc == 0) return QuadraticRational(rat);
  return QuadraticRational(rat, surd, disc);
}

std::size_t QuadraticRational::hash() const {
  auto mix = [](std::size_t seed, const mpz_class& z) {
    std::size_t h = mpz_get_ui(z.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) << 7);
    return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  std::size_t h = 0;
  h = mix(h, rat_.get_num());
  h = mix(h, rat_.get_den());
  h = mix(h, surd_.get_num());
  h = mix(h, surd_.get_den());
  return h;
}

int sign(const QuadraticRational& x) { return x.sign(); }

QuadraticRational abs(const QuadraticRational& x) { return x.sign() < 0 ? -x : x; }

QuadraticRational min(const QuadraticRational& a, const QuadraticRational& b) { return b < a ? b : a; }

QuadraticRational max(const QuadraticRational& a, const QuadraticRational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const QuadraticRational& x) { return os << x.to_string(); }

}  // namespace tilegroup
