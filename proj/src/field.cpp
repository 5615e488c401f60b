#include "lcegeom/field.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcegeom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MultisetMismatch: return "MultisetMismatch";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::UndefinedInvariant: return "UndefinedInvariant";
    case ErrorKind::NoUsableInvariant: return "NoUsableInvariant";
    case ErrorKind::NotExpanded: return "NotExpanded";
    case ErrorKind::ExpansionRefused: return "ExpansionRefused";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimeField::DlogCache {
  std::once_flag once;
  // q < 2^16: log_of[a] for every a. Otherwise baby steps g^j -> j, j < step.
  std::vector<std::uint32_t> log_of;
  std::unordered_map<std::uint32_t, std::uint32_t> baby;
  std::uint64_t step = 0;
  value_type giant = 0;  // g^(-step)
};

PrimeField::PrimeField(std::uint64_t q) : cache_(std::make_shared<DlogCache>()) {
  if (q < 2 || q >= kMaxModulus) {
    throw Error(ErrorKind::BadParams, "modulus must lie in [2, 2^31), got " + std::to_string(q));
  }
  if (!is_prime(q)) {
    throw Error(ErrorKind::CompositeModulus, std::to_string(q) + " is not prime");
  }
  q_ = static_cast<value_type>(q);
  if (q == 2) {
    g_ = 1;
    return;
  }
  const auto factors = prime_factors(q - 1);
  for (u64 cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (u64 p : factors) {
      if (powmod64(cand, (q - 1) / p, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g_ = static_cast<value_type>(cand);
      return;
    }
  }
  throw Error(ErrorKind::BadParams, "no primitive root found");  // unreachable for prime q
}

PrimeField make_field(std::uint64_t q) { return PrimeField(q); }

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  return static_cast<value_type>(powmod64(a, e, q_));
}

PrimeField::value_type PrimeField::pow_signed(value_type a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<u64>(e));
  return pow(inv(a), static_cast<u64>(-(e + 1)) + 1);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % q_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

std::uint64_t PrimeField::order(value_type a) const {
  if (a % q_ == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
  u64 ord = q_ - 1;
  for (u64 p : prime_factors(q_ - 1)) {
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

const PrimeField::DlogCache& PrimeField::dlog_cache() const {
  std::call_once(cache_->once, [this] {
    auto& c = *cache_;
    if (q_ < (1u << 16)) {
      c.log_of.assign(q_, 0);
      value_type x = 1;
      for (std::uint32_t e = 0; e + 1 < q_; ++e) {
        c.log_of[x] = e;
        x = mul(x, g_);
      }
      return;
    }
    c.step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(q_ - 1))));
    c.baby.reserve(c.step * 2);
    value_type x = 1;
    for (std::uint32_t j = 0; j < c.step; ++j) {
      c.baby.emplace(x, j);
      x = mul(x, g_);
    }
    c.giant = inv(pow(g_, c.step));
  });
  return *cache_;
}

std::uint64_t PrimeField::dlog(value_type a) const {
  a %= q_;
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "discrete log of zero");
  if (q_ == 2) return 0;
  const auto& c = dlog_cache();
  if (!c.log_of.empty()) return c.log_of[a];
  value_type gamma = a;
  for (u64 i = 0; i <= c.step; ++i) {
    if (auto it = c.baby.find(gamma); it != c.baby.end()) {
      return (i * c.step + it->second) % (q_ - 1);
    }
    gamma = mul(gamma, c.giant);
  }
  throw Error(ErrorKind::BadParams, "discrete log not found");  // unreachable: g is primitive
}

Fq inv(Fq a) { return Fq(a.field(), a.field().inv(a.value())); }

std::uint64_t dlog(Fq a) { return a.field().dlog(a.value()); }

}  // namespace lcegeom
