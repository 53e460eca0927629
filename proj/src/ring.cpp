#include "regrep/ring.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  unsigned __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    require(acc < (static_cast<unsigned __int128>(1) << 62), ErrorCode::BadDegree, "ring too large for 64-bit indices");
  }
  return static_cast<std::uint64_t>(acc);
}

std::map<std::string, std::string> parse_fields(std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const auto eq = item.find('=');
    require(eq != std::string_view::npos && eq > 0, ErrorCode::ParseError, "expected key=value in ring spec");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size(), ErrorCode::ParseError, "bad integer '" + text + "'");
  return value;
}

// Polynomials over F_p as coefficient vectors, constant first.
bool divides_fp(const std::vector<std::uint64_t>& divisor, std::vector<std::uint64_t> poly, std::uint64_t p) {
  const std::size_t deg = divisor.size() - 1;
  const std::uint64_t lead_inv = invmod(divisor.back(), p);
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::uint64_t factor = poly[i] * lead_inv % p;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] = (poly[i - deg + j] + p - factor * divisor[j] % p) % p;
  }
  for (std::size_t i = 0; i < deg && i < poly.size(); ++i)
    if (poly[i] != 0) return false;
  return true;
}

bool irreducible_fp(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> candidate(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      candidate[d] = 1;
      if (divides_fp(candidate, poly, p)) return false;
    }
  }
  return true;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, ErrorCode::ParseError, "ring spec needs 'Zp:' or 'Fqt:' prefix");
  const auto kind = text.substr(0, colon);
  auto fields = parse_fields(text.substr(colon + 1));
  RingSpec spec;
  if (kind == "Zp") {
    spec.family = Family::IntegersModPrimePower;
  } else if (kind == "Fqt") {
    spec.family = Family::TruncatedPolynomial;
  } else {
    fail(ErrorCode::ParseError, "unknown ring family '" + std::string(kind) + "'");
  }
  require(fields.count("p") && fields.count("r"), ErrorCode::ParseError, "ring spec needs p and r");
  const auto p = parse_int(fields["p"]);
  const auto r = parse_int(fields["r"]);
  const auto f = fields.count("f") ? parse_int(fields["f"]) : 1;
  for (const auto& [key, value] : fields)
    require(key == "p" || key == "r" || key == "f", ErrorCode::ParseError, "unknown ring field '" + key + "'");
  require(p >= 0 && r >= 0 && f >= 0, ErrorCode::ParseError, "negative ring parameter");
  spec.p = static_cast<std::uint64_t>(p);
  spec.r = static_cast<int>(r);
  spec.f = static_cast<int>(f);
  return spec;
}

std::string RingSpec::to_string() const {
  std::ostringstream out;
  if (family == Family::IntegersModPrimePower) {
    out << "Zp:p=" << p << ",r=" << r;
  } else {
    out << "Fqt:p=" << p << ",f=" << f << ",r=" << r;
  }
  return out.str();
}

ResidueField::ResidueField(std::uint64_t p, int f) : p_(p), f_(f), q_(checked_pow(p, f)) {
  if (f == 1) {
    modulus_ = {0, 1};
  } else {
    const std::uint64_t count = checked_pow(p, f);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> candidate(f + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < f; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      candidate[f] = 1;
      if (candidate[0] != 0 && irreducible_fp(candidate, p)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
  }
  if (q_ <= 256) {
    mul_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = static_cast<std::uint8_t>(mul_direct(a, b));
  }
}

std::vector<std::uint64_t> ResidueField::digits(std::uint64_t a) const {
  std::vector<std::uint64_t> d(f_);
  for (int i = 0; i < f_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint64_t ResidueField::from_digits(const std::vector<std::uint64_t>& d) const {
  std::uint64_t a = 0;
  for (int i = f_; i-- > 0;) a = a * p_ + d[i];
  return a;
}

std::uint64_t ResidueField::add(std::uint64_t a, std::uint64_t b) const {
  if (f_ == 1) return (a + b) % p_;
  auto x = digits(a), y = digits(b);
  for (int i = 0; i < f_; ++i) x[i] = (x[i] + y[i]) % p_;
  return from_digits(x);
}

std::uint64_t ResidueField::neg(std::uint64_t a) const {
  if (f_ == 1) return (p_ - a) % p_;
  auto x = digits(a);
  for (auto& d : x) d = (p_ - d) % p_;
  return from_digits(x);
}

std::uint64_t ResidueField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t ResidueField::mul_direct(std::uint64_t a, std::uint64_t b) const {
  if (f_ == 1) return mulmod(a, b, p_);
  auto x = digits(a), y = digits(b);
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p_)) % p_;
  for (int i = 2 * f_ - 2; i >= f_; --i) {
    const std::uint64_t lead = prod[i];
    if (lead == 0) continue;
    for (int j = 0; j <= f_; ++j) prod[i - f_ + j] = (prod[i - f_ + j] + p_ - mulmod(lead, modulus_[j], p_)) % p_;
  }
  prod.resize(f_);
  return from_digits(prod);
}

std::uint64_t ResidueField::mul(std::uint64_t a, std::uint64_t b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_direct(a, b);
}

std::uint64_t ResidueField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t ResidueField::inv(std::uint64_t a) const {
  require(a != 0, ErrorCode::NotAUnit, "zero has no inverse in the residue field");
  return pow(a, q_ - 2);
}

std::uint64_t ResidueField::trace(std::uint64_t a) const {
  std::uint64_t acc = 0, conj = a;
  for (int i = 0; i < f_; ++i) {
    acc = add(acc, conj);
    conj = pow(conj, p_);
  }
  return acc;  // lies in F_p, encoded as an integer below p
}

std::shared_ptr<const Ring> Ring::make(const RingSpec& spec) {
  require(spec.r >= 1, ErrorCode::BadDegree, "length r must be >= 1");
  require(spec.f >= 1, ErrorCode::BadDegree, "extension degree f must be >= 1");
  require(is_prime(spec.p), ErrorCode::NonPrimeP, std::to_string(spec.p) + " is not prime");
  require(spec.family == Family::TruncatedPolynomial || spec.f == 1, ErrorCode::BadDegree,
          "Z/p^r requires f = 1");
  return std::make_shared<const Ring>(spec);
}

Ring::Ring(const RingSpec& spec)
    : spec_(spec), q_(checked_pow(spec.p, spec.f)), size_(checked_pow(q_, spec.r)), residue_(spec.p, spec.f) {
  pow_q_.resize(spec.r + 1);
  for (int k = 0; k <= spec.r; ++k) pow_q_[k] = checked_pow(q_, k);
  if (size_ <= 256) {
    add_table_.resize(size_ * size_);
    mul_table_.resize(size_ * size_);
    neg_table_.resize(size_);
    for (Value a = 0; a < size_; ++a) {
      neg_table_[a] = static_cast<std::uint8_t>(neg_direct(a));
      for (Value b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = static_cast<std::uint8_t>(add_direct(a, b));
        mul_table_[a * size_ + b] = static_cast<std::uint8_t>(mul_direct(a, b));
      }
    }
  }
}

Ring::Value Ring::from_int(std::int64_t value) const {
  if (family() == Family::IntegersModPrimePower) {
    auto m = static_cast<std::int64_t>(size_);
    auto v = value % m;
    return static_cast<Value>(v < 0 ? v + m : v);
  }
  // Integers map through the prime field F_p in characteristic p.
  auto pp = static_cast<std::int64_t>(spec_.p);
  auto v = value % pp;
  return static_cast<Value>(v < 0 ? v + pp : v);
}

Ring::Value Ring::add_direct(Value a, Value b) const {
  if (family() == Family::IntegersModPrimePower) {
    return static_cast<Value>((static_cast<unsigned __int128>(a) + b) % size_);
  }
  Value out = 0;
  for (int k = spec_.r; k-- > 0;) out = out * q_ + residue_.add(digit(a, k), digit(b, k));
  return out;
}

Ring::Value Ring::neg_direct(Value a) const {
  if (family() == Family::IntegersModPrimePower) return a == 0 ? 0 : size_ - a;
  Value out = 0;
  for (int k = spec_.r; k-- > 0;) out = out * q_ + residue_.neg(digit(a, k));
  return out;
}

Ring::Value Ring::mul_direct(Value a, Value b) const {
  if (family() == Family::IntegersModPrimePower) return mulmod(a, b, size_);
  const int r = spec_.r;
  std::vector<std::uint64_t> x(r), y(r), prod(r, 0);
  for (int k = 0; k < r; ++k) {
    x[k] = digit(a, k);
    y[k] = digit(b, k);
  }
  for (int i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j < r; ++j) prod[i + j] = residue_.add(prod[i + j], residue_.mul(x[i], y[j]));
  }
  Value out = 0;
  for (int k = r; k-- > 0;) out = out * q_ + prod[k];
  return out;
}

Ring::Value Ring::add(Value a, Value b) const {
  if (has_tables()) return add_table_[a * size_ + b];
  return add_direct(a, b);
}

Ring::Value Ring::neg(Value a) const {
  if (has_tables()) return neg_table_[a];
  return neg_direct(a);
}

Ring::Value Ring::sub(Value a, Value b) const { return add(a, neg(b)); }

Ring::Value Ring::mul(Value a, Value b) const {
  if (has_tables()) return mul_table_[a * size_ + b];
  return mul_direct(a, b);
}

Ring::Value Ring::pow(Value a, std::uint64_t e) const {
  Value result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Ring::Value Ring::inv(Value a) const {
  require(is_unit(a), ErrorCode::NotAUnit, format(a) + " has positive valuation");
  // Invert the residue, then Newton-lift: x <- x (2 - a x) doubles precision.
  Value x = residue_.inv(digit(a, 0));
  const Value two = add(one(), one());
  for (int precision = 1; precision < spec_.r; precision *= 2) x = mul(x, sub(two, mul(a, x)));
  return x;
}

int Ring::valuation(Value a) const {
  if (a == 0) return spec_.r;
  int v = 0;
  while (a % q_ == 0) {
    a /= q_;
    ++v;
  }
  return v;
}

Ring::Value Ring::pi_pow(int k) const { return k >= spec_.r ? 0 : pow_q_[k]; }

Ring::Value Ring::shift_up(Value a, int k) const {
  if (k >= spec_.r) return 0;
  return static_cast<Value>(static_cast<unsigned __int128>(a) * pow_q_[k] % size_);
}

Ring::Value Ring::reduce(Value a, int level) const {
  require(level >= 1 && level <= spec_.r, ErrorCode::BadLevel, "reduction level out of range");
  return a % pow_q_[level];
}

Ring::Value Ring::unit_part(Value a, int& v) const {
  v = valuation(a);
  if (v >= spec_.r) return 0;
  return shift_down(a, v);
}

std::uint64_t Ring::psi_order() const {
  return family() == Family::IntegersModPrimePower ? size_ : spec_.p;
}

std::uint64_t Ring::psi_exponent(Value a, std::uint64_t root_order) const {
  const std::uint64_t order = psi_order();
  require(root_order % order == 0, ErrorCode::SpecMismatch, "root order must be a multiple of the psi order");
  const std::uint64_t stride = root_order / order;
  if (family() == Family::IntegersModPrimePower) return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * stride % root_order);
  return residue_.trace(digit(a, spec_.r - 1)) * stride;
}

CyclotomicValue Ring::psi_fractional(Value a) const {
  const std::uint64_t order = psi_order();
  return CyclotomicValue::root_of_unity(order, psi_exponent(a, order));
}

std::shared_ptr<const Ring> Ring::truncated(int level) const {
  require(level >= 1 && level <= spec_.r, ErrorCode::BadLevel, "truncation level out of range");
  RingSpec lower = spec_;
  lower.r = level;
  return Ring::make(lower);
}

std::string Ring::format(Value a) const {
  if (family() == Family::IntegersModPrimePower) return std::to_string(a);
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < spec_.r; ++k) {
    const auto c = digit(a, k);
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (k == 0 || c != 1) out << c;
    if (k > 0) out << (c != 1 ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) out << "0";
  return out.str();
}

RingElem::RingElem(RingPtr ring, Ring::Value value) : ring_(std::move(ring)), value_(value) {
  require(value_ < ring_->size(), ErrorCode::SpecMismatch, "value outside the ring");
}

namespace {
void check_same(const RingElem& a, const RingElem& b) {
  require(a.ring() == b.ring() || a.ring()->spec() == b.ring()->spec(), ErrorCode::SpecMismatch,
          "operands live in different rings");
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return RingElem(a.ring_, a.ring_->add(a.value_, b.value_));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return RingElem(a.ring_, a.ring_->sub(a.value_, b.value_));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return RingElem(a.ring_, a.ring_->mul(a.value_, b.value_));
}

RingElem RingElem::operator-() const { return RingElem(ring_, ring_->neg(value_)); }

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ring_->spec() == b.ring_->spec() && a.value_ == b.value_;
}

RingElem RingElem::inv() const { return RingElem(ring_, ring_->inv(value_)); }

RingElem RingElem::reduce(int level) const {
  return RingElem(ring_->truncated(level), ring_->reduce(value_, level));
}

}  // namespace regrep
