#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

#include <sstream>

namespace hsep::exactalg {

Residue mod(Residue a, Residue m) {
  Residue r = a % m;
  return r < 0 ? r + m : r;
}

Residue mod(const Integer& a, Residue m) {
  Integer r = a % Integer(static_cast<long>(m));
  if (r < 0) r += static_cast<long>(m);
  return static_cast<Residue>(r.get_si());
}

Residue add_mod(Residue a, Residue b, Residue m) {
  Residue r = a + b;  // both < 2^62, no overflow
  return r >= m ? r - m : r;
}

Residue sub_mod(Residue a, Residue b, Residue m) {
  Residue r = a - b;
  return r < 0 ? r + m : r;
}

Residue mul_mod(Residue a, Residue b, Residue m) {
  __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  auto r = static_cast<Residue>(p % m);
  return r < 0 ? r + m : r;
}

Residue gcd(Residue a, Residue b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Residue t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Residue checked_lcm(Residue a, Residue b) {
  if (a == 0 || b == 0) return 0;
  Residue g = gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * static_cast<__int128>(b);
  if (l > kMaxModulus) {
    throw Error("ModulusOverflow", "lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds 2^62");
  }
  return static_cast<Residue>(l);
}

Residue lcm_of(const std::vector<Residue>& values) {
  Residue l = 1;
  for (Residue v : values) l = checked_lcm(l, v);
  return l;
}

ExtendedGcd extended_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b;
  Residue old_s = 1, s = 0;
  Residue old_t = 0, t = 1;
  while (r != 0) {
    Residue q = old_r / r;
    Residue tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

std::optional<Residue> inverse_mod(Residue a, Residue m) {
  if (m == 1) return Residue{0};
  auto [g, s, t] = extended_gcd(mod(a, m), m);
  (void)t;
  if (g != 1) return std::nullopt;
  return mod(s, m);
}

Vec reduce(Vec v, const std::vector<Residue>& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], moduli[i]);
  return v;
}

Vec add(const Vec& a, const Vec& b, const std::vector<Residue>& moduli) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add_mod(a[i], b[i], moduli[i]);
  return r;
}

Vec sub(const Vec& a, const Vec& b, const std::vector<Residue>& moduli) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_mod(a[i], b[i], moduli[i]);
  return r;
}

Vec scale(Residue c, const Vec& a, const std::vector<Residue>& moduli) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(mod(c, moduli[i]), a[i], moduli[i]);
  return r;
}

bool is_zero(const Vec& v) {
  for (Residue x : v)
    if (x != 0) return false;
  return true;
}

Integer order_of(const std::vector<Residue>& moduli) {
  Integer n = 1;
  for (Residue m : moduli) n *= static_cast<long>(m);
  return n;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace hsep::exactalg
