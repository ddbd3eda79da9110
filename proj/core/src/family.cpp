#include "extremal/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace extremal {

SetFamily SetFamily::of(int n, std::vector<SubsetMask> members, std::optional<int> uniform_k) {
  SetFamily f(n, uniform_k);
  for (const SubsetMask& m : members) {
    if (m.ground_size() != n)
      throw parameter_error("family member has ground set " + std::to_string(m.ground_size()) +
                            ", expected " + std::to_string(n));
    if (uniform_k && m.cardinality() != *uniform_k)
      throw parameter_error("family member " + m.to_string() + " is not " +
                            std::to_string(*uniform_k) + "-uniform");
  }
  std::sort(members.begin(), members.end(), storage_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members_ = std::move(members);
  return f;
}

std::optional<int> SetFamily::uniform_k() const {
  if (requested_k_) return requested_k_;
  if (members_.empty()) return std::nullopt;
  int k = members_.front().cardinality();
  for (const SubsetMask& m : members_)
    if (m.cardinality() != k) return std::nullopt;
  return k;
}

bool SetFamily::contains(const SubsetMask& m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m, storage_less);
  return it != members_.end() && *it == m;
}

SubsetMask SetFamily::common_intersection() const {
  if (members_.empty())
    throw parameter_error("common_intersection of an empty family is undefined");
  SubsetMask acc = members_.front();
  for (const SubsetMask& m : members_) acc = acc & m;
  return acc;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

SetFamily build_star(int n, int k, const SubsetMask& T) {
  if (T.ground_size() != n) throw parameter_error("build_star: kernel lives on wrong ground set");
  if (T.cardinality() > k) throw parameter_error("build_star: |T| > k");
  if (k > n) throw parameter_error("build_star: k > n");
  std::vector<SubsetMask> members;
  for_each_ksubset(n, k, [&](const SubsetMask& m) {
    if (T.subset_of(m)) members.push_back(m);
  });
  return SetFamily::of(n, std::move(members), k);
}

SetFamily build_A(int n, int k, int s) {
  if (s < 1) throw parameter_error("build_A: s >= 1 required");
  if (!(n > k && k >= s - 1)) throw parameter_error("build_A: need n > k >= s-1");
  SubsetMask prefix = SubsetMask::from_bits(n, prefix_bits(n, s));
  std::vector<SubsetMask> members;
  for_each_ksubset(n, k, [&](const SubsetMask& m) {
    if ((m & prefix).cardinality() >= s - 1) members.push_back(m);
  });
  return SetFamily::of(n, std::move(members), k);
}

SetFamily build_B(int n, int k, int s) {
  if (s < 2) throw parameter_error("build_B: s >= 2 required");
  if (s > k + 1) throw parameter_error("build_B: s > k+1");
  if (n < k + 1) throw parameter_error("build_B: n >= k+1 required");
  SubsetMask kernel = SubsetMask::from_bits(n, prefix_bits(n, s - 2));
  SubsetMask window(n);
  for (int e = s - 1; e <= k + 1; ++e) window = window.with(e);
  std::vector<SubsetMask> members;
  for_each_ksubset(n, k, [&](const SubsetMask& m) {
    if (kernel.subset_of(m) && m.intersects(window)) members.push_back(m);
  });
  SubsetMask base = SubsetMask::from_bits(n, prefix_bits(n, k + 1));
  for (int j = 1; j <= s - 2; ++j) members.push_back(base.without(j));
  return SetFamily::of(n, std::move(members), k);
}

SetFamily build_Bs(int n, int r, int t, int s) {
  if (r < 2 || t < 1 || s < 0) throw parameter_error("build_Bs: need r >= 2, t >= 1, s >= 0");
  if (n < t + r * s) throw parameter_error("build_Bs: n < t + r*s");
  if (n > 24) throw parameter_error("build_Bs: non-uniform enumeration capped at n <= 24");
  const std::uint64_t window = prefix_bits(n, t + r * s);
  std::vector<SubsetMask> members;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (std::popcount(window & ~bits) <= s) members.push_back(SubsetMask::from_bits(n, bits));
  }
  return SetFamily::of(n, std::move(members));
}

SetFamily build_Bs_uniform(int n, int k, int r, int t, int s) {
  if (r < 2 || t < 1 || s < 0) throw parameter_error("build_Bs_uniform: need r >= 2, t >= 1, s >= 0");
  if (n < t + r * s) throw parameter_error("build_Bs_uniform: n < t + r*s");
  if (k < 0 || k > n) throw parameter_error("build_Bs_uniform: need 0 <= k <= n");
  const std::uint64_t window = prefix_bits(n, t + r * s);
  std::vector<SubsetMask> members;
  for_each_ksubset(n, k, [&](const SubsetMask& m) {
    if (std::popcount(window & ~m.bits()) <= s) members.push_back(m);
  });
  return SetFamily::of(n, std::move(members), k);
}

SetFamily build_lex(int n, int k, std::uint64_t m) {
  std::uint64_t total = binom64(n, k);
  if (k > n) throw parameter_error("build_lex: k > n");
  if (m > total) throw parameter_error("build_lex: m exceeds C(n,k)");
  std::vector<SubsetMask> members;
  members.reserve(static_cast<std::size_t>(m));
  if (m > 0) {
    for_each_ksubset_until(n, k, [&](const SubsetMask& mask) {
      members.push_back(mask);
      return members.size() < m;
    });
  }
  return SetFamily::of(n, std::move(members), k);
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

namespace {

// Checks all distinct subsets of size <= depth_left+1 extending `acc`.
bool rwise_rec(const std::vector<SubsetMask>& ms, std::size_t next, std::uint64_t acc,
               int depth_left, int t) {
  for (std::size_t i = next; i < ms.size(); ++i) {
    std::uint64_t inter = acc & ms[i].bits();
    if (std::popcount(inter) < t) return false;
    if (depth_left > 1 && !rwise_rec(ms, i + 1, inter, depth_left - 1, t)) return false;
  }
  return true;
}

}  // namespace

bool is_rwise_t_intersecting(const SetFamily& f, const IntersectSpec& spec) {
  if (spec.r < 2) throw parameter_error("IntersectSpec: r >= 2 required");
  if (spec.t < 1) throw parameter_error("IntersectSpec: t >= 1 required");
  if (f.empty()) return true;
  const std::uint64_t all = SubsetMask::full(f.ground_size()).bits();
  return rwise_rec(f.members(), 0, all, spec.r, spec.t);
}

bool is_nontrivial(const SetFamily& f, int t) {
  if (f.empty()) throw parameter_error("is_nontrivial: empty family");
  return f.common_intersection().cardinality() < t;
}

bool are_cross_t_intersecting(const std::vector<SetFamily>& families, int t) {
  if (families.size() < 2)
    throw parameter_error("are_cross_t_intersecting: need at least two families");
  const int n = families.front().ground_size();
  for (const SetFamily& f : families)
    if (f.ground_size() != n)
      throw parameter_error("are_cross_t_intersecting: common ground set required");
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j)
      for (const SubsetMask& a : families[i].members())
        for (const SubsetMask& b : families[j].members())
          if ((a & b).cardinality() < t) return false;
  return true;
}

bool is_exactly_2wise_t(const SetFamily& f, int t) {
  if (f.empty()) return false;
  if (f.size() == 1) return f.member(0).cardinality() == t;
  bool hit = false;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      int c = (ms[i] & ms[j]).cardinality();
      if (c < t) return false;
      if (c == t) hit = true;
    }
  return hit;
}

// ---------------------------------------------------------------------------
// Quotients and slices
// ---------------------------------------------------------------------------

SetFamily quotient(const SetFamily& f, const SubsetMask& P, const SubsetMask& Q) {
  if (P.ground_size() != f.ground_size() || Q.ground_size() != f.ground_size())
    throw parameter_error("quotient: P,Q must live on the family ground set");
  if (!P.subset_of(Q)) throw parameter_error("quotient: P must be a subset of Q");
  std::vector<SubsetMask> members;
  for (const SubsetMask& m : f.members())
    if ((m & Q) == P) members.push_back(m - Q);
  return SetFamily::of(f.ground_size(), std::move(members));
}

SetFamily quotient(const SetFamily& f, const SubsetMask& P) { return quotient(f, P, P); }

namespace {

SubsetMask prefix_mask(int n, int upto) { return SubsetMask::from_bits(n, prefix_bits(n, upto)); }

}  // namespace

SetFamily slice(const SetFamily& f, int t, int i) {
  if (i < 0 || i > t + 3) throw parameter_error("slice: need 0 <= i <= t+3");
  SubsetMask pre = prefix_mask(f.ground_size(), t + 3);
  std::vector<SubsetMask> members;
  for (const SubsetMask& m : f.members())
    if ((m & pre).cardinality() == t + 3 - i) members.push_back(m);
  return SetFamily::of(f.ground_size(), std::move(members));
}

SetFamily tilde_slice(const SetFamily& f, int t, int i, const SubsetMask& T) {
  if (i < 0 || i > t + 3) throw parameter_error("tilde_slice: need 0 <= i <= t+3");
  SubsetMask pre = prefix_mask(f.ground_size(), t + 3);
  if (!T.subset_of(pre)) throw parameter_error("tilde_slice: T must be a subset of [t+3]");
  if (T.cardinality() != t + 3 - i)
    throw parameter_error("tilde_slice: |T| must equal t+3-i");
  std::vector<SubsetMask> members;
  for (const SubsetMask& m : f.members())
    if ((m & pre) == T) members.push_back(m - pre);
  return SetFamily::of(f.ground_size(), std::move(members));
}

std::vector<SetFamily> family_union_decomposition(const SetFamily& f, int t) {
  std::vector<SetFamily> slices;
  slices.reserve(static_cast<std::size_t>(t + 4));
  for (int i = 0; i <= t + 3; ++i) slices.push_back(slice(f, t, i));
  return slices;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string to_family_text(const SetFamily& f) {
  std::ostringstream out;
  out << "n=" << f.ground_size() << " k=";
  if (auto k = f.uniform_k())
    out << *k;
  else
    out << "mixed";
  out << '\n';
  for (const SubsetMask& m : f.members()) out << m.to_string() << '\n';
  return out.str();
}

SetFamily from_family_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw parameter_error("family file: missing header");
  int n = -1;
  std::optional<int> k;
  std::istringstream hs(header);
  std::string tok;
  while (hs >> tok) {
    if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
    if (tok.rfind("k=", 0) == 0 && tok.substr(2) != "mixed") k = std::stoi(tok.substr(2));
  }
  if (n < 0) throw parameter_error("family file: header must contain n=<n>");
  std::vector<SubsetMask> members;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    members.push_back(SubsetMask::parse(n, line));
  }
  return SetFamily::of(n, std::move(members), k);
}

void save_family(const SetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parameter_error("cannot open " + path + " for writing");
  out << to_family_text(f);
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_family_text(buf.str());
}

nlohmann::json to_family_json(const SetFamily& f) {
  nlohmann::json j;
  j["n"] = f.ground_size();
  if (auto k = f.uniform_k())
    j["k"] = *k;
  else
    j["k"] = "mixed";
  nlohmann::json members = nlohmann::json::array();
  for (const SubsetMask& m : f.members()) members.push_back(m.elements());
  j["members"] = std::move(members);
  return j;
}

SetFamily from_family_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::optional<int> k;
  if (j.contains("k") && j["k"].is_number_integer()) k = j["k"].get<int>();
  std::vector<SubsetMask> members;
  for (const auto& e : j.at("members"))
    members.push_back(SubsetMask::from_elements(n, e.get<std::vector<int>>()));
  return SetFamily::of(n, std::move(members), k);
}

SetFamily apply_permutation(const SetFamily& f, const std::vector<int>& perm) {
  const int n = f.ground_size();
  if (static_cast<int>(perm.size()) != n)
    throw parameter_error("apply_permutation: permutation must have length n");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw parameter_error("apply_permutation: not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<SubsetMask> members;
  members.reserve(f.size());
  for (const SubsetMask& m : f.members()) {
    SubsetMask image(n);
    for (int e : m.elements()) image = image.with(perm[static_cast<std::size_t>(e - 1)]);
    members.push_back(image);
  }
  return SetFamily::of(n, std::move(members), f.uniform_k());
}

}  // namespace extremal
