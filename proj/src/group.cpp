#include "cayley/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidGenerators: return "invalid-generators";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::TheoremViolation: return "theorem-violation";
  }
  return "unknown";
}

namespace {

constexpr long long kMaxOrder = 1LL << 26;

std::vector<std::pair<int, int>> factorize(int m) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Partitions of e into non-increasing parts.
void partitions(int e, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(e - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<int> invariant_from_prime_powers(
    const std::map<int, std::vector<int>>& exps) {
  std::size_t k = 0;
  for (const auto& [p, es] : exps) k = std::max(k, es.size());
  // Largest invariant factor takes the largest exponent of every prime.
  std::vector<int> out(k, 1);
  for (const auto& [p, es] : exps) {
    std::vector<int> sorted = es;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      out[k - 1 - i] *= ipow(p, sorted[i]);
  }
  return out;
}

}  // namespace

GroupSpec GroupSpec::with_coordinates(std::vector<int> factors) {
  if (factors.empty())
    throw Error(ErrorKind::InvalidSpec, "group needs at least one factor");
  long long order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw Error(ErrorKind::InvalidSpec,
                  "factor " + std::to_string(i) + " is " +
                      std::to_string(factors[i]) + "; factors must be >= 2");
    order *= factors[i];
    if (order > kMaxOrder)
      throw Error(ErrorKind::InstanceTooLarge, "group order exceeds 2^26");
  }
  GroupSpec g;
  g.factors_ = std::move(factors);
  g.order_ = static_cast<int>(order);
  g.strides_.assign(g.factors_.size(), 1);
  for (int i = g.rank() - 2; i >= 0; --i)
    g.strides_[i] = g.strides_[i + 1] * g.factors_[i + 1];
  return g;
}

std::vector<int> GroupSpec::invariant_factors() const {
  std::map<int, std::vector<int>> exps;
  for (int m : factors_)
    for (auto [p, e] : factorize(m)) exps[p].push_back(e);
  return invariant_from_prime_powers(exps);
}

int GroupSpec::id(const Element& e) const {
  int r = 0;
  for (int i = 0; i < rank(); ++i) r += e.coords[i] * strides_[i];
  return r;
}

Element GroupSpec::element(int id) const {
  Element e;
  e.coords.resize(factors_.size());
  for (int i = 0; i < rank(); ++i) {
    e.coords[i] = id / strides_[i];
    id %= strides_[i];
  }
  return e;
}

bool GroupSpec::valid(const Element& e) const {
  if (static_cast<int>(e.coords.size()) != rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i]) return false;
  return true;
}

int GroupSpec::add(int a, int b) const {
  if (rank() == 1) {
    int s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  int r = 0;
  for (int i = 0; i < rank(); ++i) {
    int ca = a / strides_[i];
    int cb = b / strides_[i];
    a %= strides_[i];
    b %= strides_[i];
    int c = ca + cb;
    if (c >= factors_[i]) c -= factors_[i];
    r += c * strides_[i];
  }
  return r;
}

int GroupSpec::neg(int a) const {
  int r = 0;
  for (int i = 0; i < rank(); ++i) {
    int c = a / strides_[i];
    a %= strides_[i];
    r += (c == 0 ? 0 : factors_[i] - c) * strides_[i];
  }
  return r;
}

int GroupSpec::scale(int a, long long k) const {
  int r = 0;
  for (int i = 0; i < rank(); ++i) {
    long long c = a / strides_[i];
    a %= strides_[i];
    long long m = factors_[i];
    long long v = ((c * (k % m)) % m + m) % m;
    r += static_cast<int>(v) * strides_[i];
  }
  return r;
}

int GroupSpec::element_order(int a) const {
  long long l = 1;
  for (int i = 0; i < rank(); ++i) {
    int c = a / strides_[i];
    a %= strides_[i];
    int m = factors_[i];
    int o = m / std::gcd(c, m);
    l = std::lcm(l, static_cast<long long>(o));
  }
  return static_cast<int>(l);
}

std::string GroupSpec::to_string() const {
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(factors_[i]);
  }
  return s;
}

GroupSpec make_group(const std::vector<int>& factors) {
  GroupSpec raw = GroupSpec::with_coordinates(factors);
  return GroupSpec::with_coordinates(raw.invariant_factors());
}

GroupSpec parse_group(std::string_view text) {
  std::vector<int> factors;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::InvalidSpec, "group spec '" + std::string(text) +
                                             "': " + msg + " at position " +
                                             std::to_string(i));
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (true) {
    if (i >= text.size() || (text[i] != 'Z' && text[i] != 'z'))
      throw fail("expected 'Z'");
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > kMaxOrder) throw fail("factor too large");
      ++i;
    }
    if (i == start) throw fail("expected factor digits");
    factors.push_back(static_cast<int>(v));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != 'x' && text[i] != 'X' && text[i] != '*')
      throw fail("expected 'x' between factors");
    ++i;
    skip_ws();
  }
  return GroupSpec::with_coordinates(factors);
}

std::vector<GroupSpec> enumerate_abelian_groups(int order) {
  if (order < 2)
    throw Error(ErrorKind::InvalidSpec, "group order must be >= 2");
  auto pf = factorize(order);
  // For each prime, every partition of its exponent.
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : pf) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<std::vector<int>> found;
  std::vector<std::size_t> idx(pf.size(), 0);
  while (true) {
    std::map<int, std::vector<int>> exps;
    for (std::size_t j = 0; j < pf.size(); ++j)
      exps[pf[j].first] = per_prime[j][idx[j]];
    found.push_back(invariant_from_prime_powers(exps));
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == per_prime[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<GroupSpec> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(GroupSpec::with_coordinates(f));
  return out;
}

int GeneratorSet::doubling() const {
  if (d2_ < 0) {
    VertexSet two(group_.order());
    std::vector<int> e = ids();
    for (int a : e)
      for (int b : e) two.insert(group_.add(a, b));
    d2_ = two.count();
  }
  return d2_;
}

GeneratorSet make_generators(const GroupSpec& group, const std::vector<int>& ids,
                             bool symmetrize) {
  GeneratorSet g;
  g.group_ = group;
  g.elems_ = VertexSet(group.order());
  for (int x : ids) {
    if (x < 0 || x >= group.order())
      throw Error(ErrorKind::InvalidGenerators,
                  "generator id " + std::to_string(x) + " outside the group");
    if (x == 0)
      throw Error(ErrorKind::InvalidGenerators,
                  "0 is not allowed in a generator set (self-loops)");
    g.elems_.insert(x);
  }
  if (g.elems_.empty())
    throw Error(ErrorKind::InvalidGenerators, "generator set is empty");
  for (int x : g.elems_.members()) {
    int nx = group.neg(x);
    if (g.elems_.contains(nx)) continue;
    if (!symmetrize)
      throw Error(ErrorKind::InvalidGenerators,
                  "generator set is not symmetric: -" + std::to_string(x) +
                      " = " + std::to_string(nx) + " missing");
    g.elems_.insert(nx);
  }
  return g;
}

GeneratorSet make_generators(const GroupSpec& group,
                             const std::vector<Element>& elems,
                             bool symmetrize) {
  std::vector<int> ids;
  for (const auto& e : elems) {
    if (!group.valid(e))
      throw Error(ErrorKind::InvalidGenerators,
                  "element does not match group " + group.to_string());
    ids.push_back(group.id(e));
  }
  return make_generators(group, ids, symmetrize);
}

VertexSet subgroup_generated(const GroupSpec& group, const VertexSet& s) {
  VertexSet h(group.order());
  h.insert(0);
  std::vector<int> gens = s.members();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int x : gens) {
      int v = group.add(u, x);
      if (!h.contains(v)) {
        h.insert(v);
        queue.push_back(v);
      }
    }
  }
  return h;
}

bool is_generating(const GroupSpec& group, const VertexSet& s) {
  return subgroup_generated(group, s).count() == group.order();
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(
    const GroupSpec& group, const GeneratorSet& gens) {
  // chi(x) = sum_i c_i x_i mod 2, with c_i = 0 forced on odd factors.
  const int k = group.rank();
  if (k > 30)
    throw Error(ErrorKind::InstanceTooLarge, "too many factors for bipartition");
  std::vector<Element> d;
  for (int x : gens.ids()) d.push_back(group.element(x));
  auto chi = [&](const Element& e, unsigned long long mask) {
    int s = 0;
    for (int i = 0; i < k; ++i)
      if ((mask >> (k - 1 - i)) & 1ULL) s += e.coords[i];
    return s & 1;
  };
  for (unsigned long long mask = 1; mask < (1ULL << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      if (((mask >> (k - 1 - i)) & 1ULL) && group.factors()[i] % 2 != 0)
        ok = false;
    for (std::size_t j = 0; j < d.size() && ok; ++j)
      if (chi(d[j], mask) != 1) ok = false;
    if (!ok) continue;
    VertexSet x(group.order()), y(group.order());
    for (int v = 0; v < group.order(); ++v)
      (chi(group.element(v), mask) ? y : x).insert(v);
    return std::make_pair(std::move(x), std::move(y));
  }
  return std::nullopt;
}

std::vector<std::vector<int>> all_symmetric_generator_sets(
    const GroupSpec& group) {
  std::vector<std::vector<int>> orbits;
  for (int x = 1; x < group.order(); ++x) {
    int nx = group.neg(x);
    if (nx < x) continue;
    orbits.push_back(nx == x ? std::vector<int>{x} : std::vector<int>{x, nx});
  }
  if (orbits.size() > 24)
    throw Error(ErrorKind::InstanceTooLarge,
                "too many generator orbits to enumerate");
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1UL << orbits.size()); ++mask) {
    std::vector<int> ids;
    for (std::size_t j = 0; j < orbits.size(); ++j)
      if ((mask >> j) & 1UL) ids.insert(ids.end(), orbits[j].begin(), orbits[j].end());
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace cayley
