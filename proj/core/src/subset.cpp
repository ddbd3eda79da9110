#include "extremal/subset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace extremal {

int SubsetMask::check_n(int n) {
  if (n < 0 || n > max_ground)
    throw parameter_error("ground-set size must be in [0,64], got " + std::to_string(n));
  return n;
}

SubsetMask SubsetMask::from_bits(int n, std::uint64_t bits) {
  SubsetMask m(n);
  if (n < 64 && (bits >> n) != 0)
    throw parameter_error("bit set above ground-set size " + std::to_string(n));
  m.bits_ = bits;
  return m;
}

SubsetMask SubsetMask::from_elements(int n, const std::vector<int>& elems) {
  SubsetMask m(n);
  for (int e : elems) {
    if (e < 1 || e > n)
      throw parameter_error("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    m.bits_ |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

SubsetMask SubsetMask::full(int n) {
  SubsetMask m(n);
  m.bits_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return m;
}

SubsetMask SubsetMask::with(int e) const {
  if (e < 1 || e > n_) throw parameter_error("element out of range");
  SubsetMask m = *this;
  m.bits_ |= std::uint64_t{1} << (e - 1);
  return m;
}

SubsetMask SubsetMask::without(int e) const {
  if (e < 1 || e > n_) throw parameter_error("element out of range");
  SubsetMask m = *this;
  m.bits_ &= ~(std::uint64_t{1} << (e - 1));
  return m;
}

SubsetMask SubsetMask::complement() const {
  return combined(*this, *this, full(n_).bits_ & ~bits_);
}

SubsetMask SubsetMask::combined(const SubsetMask& a, const SubsetMask& b, std::uint64_t bits) {
  if (a.n_ != b.n_) throw parameter_error("subsets live on different ground sets");
  SubsetMask m(a.n_);
  m.bits_ = bits;
  return m;
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

SubsetMask SubsetMask::parse(int n, std::string_view text) {
  auto fail = [&] { throw parameter_error("malformed subset literal: " + std::string(text)); };
  std::size_t b = text.find('{'), e = text.rfind('}');
  if (b == std::string_view::npos || e == std::string_view::npos || e < b) fail();
  std::string_view body = text.substr(b + 1, e - b - 1);
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
    if (ec != std::errc{}) fail();
    elems.push_back(value);
    pos = static_cast<std::size_t>(ptr - body.data());
  }
  return from_elements(n, elems);
}

Ordering lex_compare(const SubsetMask& a, const SubsetMask& b) {
  if (a.ground_size() != b.ground_size())
    throw parameter_error("lex_compare: ground sets differ");
  if (a.cardinality() != b.cardinality())
    throw parameter_error("lex_compare: cardinalities differ");
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return Ordering::equal;
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) ? Ordering::less : Ordering::greater;
}

bool shift_precedes(const SubsetMask& a, const SubsetMask& b) {
  if (a.ground_size() != b.ground_size())
    throw parameter_error("shift_precedes: ground sets differ");
  if (a.cardinality() != b.cardinality())
    throw parameter_error("shift_precedes: cardinalities differ");
  std::uint64_t ra = a.bits(), rb = b.bits();
  while (ra != 0) {
    int ea = std::countr_zero(ra), eb = std::countr_zero(rb);
    if (ea > eb) return false;
    ra &= ra - 1;
    rb &= rb - 1;
  }
  return true;
}

bool storage_less(const SubsetMask& a, const SubsetMask& b) {
  std::uint64_t ra = a.bits(), rb = b.bits();
  while (ra != 0 && rb != 0) {
    int ea = std::countr_zero(ra), eb = std::countr_zero(rb);
    if (ea != eb) return ea < eb;
    ra &= ra - 1;
    rb &= rb - 1;
  }
  return ra == 0 && rb != 0;
}

std::uint64_t binom64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: result holds C(n-k+i-1, i-1) before the update.
    unsigned __int128 next = static_cast<unsigned __int128>(result) * (n - k + i);
    result = static_cast<std::uint64_t>(next / i);
  }
  return result;
}

void for_each_ksubset_until(int n, int k, const std::function<bool(const SubsetMask&)>& fn) {
  if (n < 0 || n > SubsetMask::max_ground)
    throw parameter_error("ground-set size must be in [0,64]");
  if (k < 0 || k > n) throw parameter_error("need 0 <= k <= n");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!fn(SubsetMask::from_elements(n, idx))) return;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

void for_each_ksubset(int n, int k, const std::function<void(const SubsetMask&)>& fn) {
  for_each_ksubset_until(n, k, [&](const SubsetMask& m) {
    fn(m);
    return true;
  });
}

std::uint64_t prefix_bits(int n, int upto) {
  if (upto <= 0) return 0;
  if (upto >= n) return SubsetMask::full(n).bits();
  return (std::uint64_t{1} << upto) - 1;
}

std::vector<SubsetMask> enumerate_ksubsets(int n, int k, std::uint64_t limit) {
  if (k < 0 || k > n) throw parameter_error("enumerate_ksubsets: need 0 <= k <= n");
  std::uint64_t count = binom64(n, k);
  if (count > limit)
    throw parameter_error("enumerate_ksubsets: C(n,k) exceeds materialization limit");
  std::vector<SubsetMask> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_ksubset(n, k, [&](const SubsetMask& m) { out.push_back(m); });
  return out;
}

}  // namespace extremal
