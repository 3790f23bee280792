#include "umbra/field.hpp"

#include <stdexcept>

namespace umbra {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  return Field{p};
}

Scalar Field::normalize(const Scalar& x) const {
  Scalar y = x;
  y.canonicalize();
  if (characteristic == 0) return y;
  // Residue of num/den mod p, with the result in [0, p).
  mpz_class p(characteristic);
  mpz_class den = y.get_den();
  mpz_class dmod = den % p;
  if (dmod < 0) dmod += p;
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  mpz_class num = y.get_num() % p;
  if (num < 0) num += p;
  mpz_class r = (num * dinv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  Scalar x = normalize(a);
  if (x == 0) throw std::domain_error("division by zero");
  if (characteristic == 0) return Scalar(1) / x;
  mpz_class p(characteristic);
  mpz_class v = x.get_num();
  mpz_class r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  if (r < 0) r += p;
  return Scalar(r);
}

std::optional<Scalar> Field::parse(const std::string& text) const {
  std::string body = text;
  auto pos = body.find(" mod ");
  if (pos != std::string::npos) {
    std::string modstr = body.substr(pos + 5);
    try {
      long p = std::stol(modstr);
      if (p != characteristic) return std::nullopt;
    } catch (...) {
      return std::nullopt;
    }
    body = body.substr(0, pos);
  }
  // strip spaces
  std::string clean;
  for (char c : body)
    if (!isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) return std::nullopt;
  try {
    Scalar s(clean);
    return normalize(s);
  } catch (...) {
    return std::nullopt;
  }
}

std::string Field::print(const Scalar& x) const { return normalize(x).get_str(); }

std::string Field::name() const {
  return characteristic == 0 ? "q" : "fp:" + std::to_string(characteristic);
}

std::optional<Field> Field::from_name(const std::string& name) {
  if (name == "q") return rationals();
  if (name.rfind("fp:", 0) == 0) {
    try {
      long p = std::stol(name.substr(3));
      if (!is_prime(p)) return std::nullopt;
      return prime(p);
    } catch (...) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace umbra
