#include "commprob/group.hpp"

#include "commprob/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_map>

namespace commprob {

namespace {

void require_order_within(std::size_t order, const Limits& limits, const std::string& what) {
  std::size_t cap = std::min(limits.order_cap, Limits::kMaxRepresentableOrder);
  if (order > cap) {
    throw OrderCapExceeded(what + " has order " + std::to_string(order) + " above the cap " +
                           std::to_string(cap));
  }
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::string perm_key(const Permutation& p) {
  auto images = p.images();
  return {reinterpret_cast<const char*>(images.data()), images.size() * sizeof(Permutation::Point)};
}

}  // namespace

FiniteGroup::FiniteGroup(detail::TrustedTable, std::string name, std::size_t order,
                         std::vector<Element> table, std::vector<std::string> labels,
                         std::vector<Permutation> permutations)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      permutations_(std::move(permutations)) {
  if (order_ == 0) throw InvalidTable("group order must be positive");
  if (order_ > Limits::kMaxRepresentableOrder) throw InvalidTable("group order exceeds index width");
  if (table_.size() != order_ * order_) throw InvalidTable("table size is not order^2");
  if (labels_.empty()) labels_ = index_labels(order_);
  if (labels_.size() != order_) throw InvalidTable("label count differs from order");
  check_identity_and_inverses();
}

void FiniteGroup::check_identity_and_inverses() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a) {
      throw InvalidTable("element 0 is not a two-sided identity");
    }
    auto r = row(static_cast<Element>(a));
    auto it = std::find(r.begin(), r.end(), Element{0});
    if (it == r.end()) throw InvalidTable("element " + std::to_string(a) + " has no right inverse");
    auto b = static_cast<Element>(it - r.begin());
    if (mul(b, static_cast<Element>(a)) != 0) {
      throw InvalidTable("element " + std::to_string(a) + " has no two-sided inverse");
    }
    inverse_[a] = b;
  }
}

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> labels, const Limits& limits) {
  if (order == 0 || table.size() != order * order) throw InvalidTable("table size is not order^2");
  for (Element e : table) {
    if (e >= order) throw InvalidTable("table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  std::vector<std::size_t> seen(order, 0);
  std::size_t stamp = 0;
  for (std::size_t a = 0; a < order; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < order; ++b) {
      Element e = table[a * order + b];
      if (seen[e] == stamp) throw InvalidTable("row " + std::to_string(a) + " repeats an element");
      seen[e] = stamp;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < order; ++a) {
      Element e = table[a * order + b];
      if (seen[e] == stamp) throw InvalidTable("column " + std::to_string(b) + " repeats an element");
      seen[e] = stamp;
    }
  }
  FiniteGroup g(detail::TrustedTable{}, std::move(name), order, std::move(table), std::move(labels));
  if (!check_associativity(g, limits.associativity_check_cap)) throw InvalidTable("table is not associative");
  return g;
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order_; ++a) e = std::lcm(e, element_order(static_cast<Element>(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ElementSet SubgroupEmbedding::elements() const {
  ElementSet out = inclusion;
  std::sort(out.begin(), out.end());
  return out;
}

bool check_associativity(const FiniteGroup& g, std::size_t exhaustive_cap, std::size_t samples) {
  const std::size_t n = g.order();
  if (n <= exhaustive_cap) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Element ab = g.mul(static_cast<Element>(a), static_cast<Element>(b));
        auto row_ab = g.row(ab);
        auto row_a = g.row(static_cast<Element>(a));
        auto row_b = g.row(static_cast<Element>(b));
        for (std::size_t c = 0; c < n; ++c) {
          if (row_ab[c] != row_a[row_b[c]]) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x61737363ULL);
  for (std::size_t i = 0; i < samples; ++i) {
    auto a = static_cast<Element>(rng() % n);
    auto b = static_cast<Element>(rng() % n);
    auto c = static_cast<Element>(rng() % n);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

FiniteGroup trivial_group() {
  return FiniteGroup(detail::TrustedTable{}, "cyclic(1)", 1, {0}, {"1"});
}

FiniteGroup closure(const std::vector<Permutation>& generators, std::size_t degree, const Limits& limits) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                           ", expected " + std::to_string(degree));
    }
  }
  std::string name = "perm(" + std::to_string(degree) + ";";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    name += (i == 0 ? " " : ", ") + generators[i].to_string();
  }
  name += ")";

  const std::size_t cap = std::min(limits.order_cap, Limits::kMaxRepresentableOrder);
  std::vector<Permutation> elements{Permutation(degree)};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  std::unordered_map<std::string, Element> index{{perm_key(elements[0]), 0}};

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation next = elements[head] * generators[k];
      auto [it, inserted] = index.try_emplace(perm_key(next), static_cast<Element>(elements.size()));
      if (!inserted) continue;
      if (elements.size() + 1 > cap) {
        throw OrderCapExceeded("closure of " + name + " exceeds the order cap " + std::to_string(cap));
      }
      elements.push_back(std::move(next));
      parent.push_back(head);
      via.push_back(k);
    }
  }

  const std::size_t n = elements.size();
  // right[k][x] = index of x * generator k.
  std::vector<std::vector<Element>> right(generators.size(), std::vector<Element>(n));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) right[k][x] = index.at(perm_key(elements[x] * generators[k]));
  }
  // Every b > 0 is parent(b) * gen(b), so a b = (a parent(b)) gen(b).
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = table.data() + a * n;
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[via[b]][row[parent[b]]];
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = elements[i].to_string();
  return FiniteGroup(detail::TrustedTable{}, std::move(name), n, std::move(table), std::move(labels),
                     std::move(elements));
}

FiniteGroup cyclic(std::size_t n, const Limits& limits) {
  if (n < 1) throw InvalidParameter("cyclic(n) needs n >= 1");
  require_order_within(n, limits, "cyclic(" + std::to_string(n) + ")");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (std::size_t a = 1; a < n; ++a) labels[a] = "x^" + std::to_string(a);
  return FiniteGroup(detail::TrustedTable{}, "cyclic(" + std::to_string(n) + ")", n, std::move(table),
                     std::move(labels));
}

FiniteGroup dihedral(std::size_t n, const Limits& limits) {
  if (n < 3) throw InvalidParameter("dihedral(n) needs n >= 3");
  const std::size_t order = 2 * n;
  require_order_within(order, limits, "dihedral(" + std::to_string(n) + ")");
  // (x^a y^f)(x^b y^g) = x^(a + (-1)^f b) y^(f+g)
  std::vector<Element> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    std::size_t a = u % n, f = u / n;
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t b = v % n, g = v / n;
      std::size_t p = f == 0 ? (a + b) % n : (a + n - b) % n;
      table[u * order + v] = static_cast<Element>(p + n * ((f + g) % 2));
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t u = 0; u < order; ++u) {
    std::size_t a = u % n, f = u / n;
    std::string x = a == 0 ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
    if (f == 0) {
      labels[u] = x.empty() ? "1" : x;
    } else {
      labels[u] = x.empty() ? "y" : x + " y";
    }
  }
  return FiniteGroup(detail::TrustedTable{}, "dihedral(" + std::to_string(n) + ")", order, std::move(table),
                     std::move(labels));
}

namespace {

void require_symmetric_degree(unsigned n, const Limits& limits, const char* family) {
  if (n < 1) throw InvalidParameter(std::string(family) + "(n) needs n >= 1");
  if (n > limits.max_symmetric_degree) {
    throw OrderCapExceeded(std::string(family) + "(" + std::to_string(n) + ") exceeds the maximum degree " +
                           std::to_string(limits.max_symmetric_degree));
  }
}

std::vector<Permutation::Point> iota_cycle(unsigned n) {
  std::vector<Permutation::Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Permutation::Point{1});
  return cycle;
}

}  // namespace

FiniteGroup symmetric(unsigned n, const Limits& limits) {
  require_symmetric_degree(n, limits, "sym");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {iota_cycle(n)}));
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  }
  return closure(gens, n, limits).renamed("sym(" + std::to_string(n) + ")");
}

FiniteGroup alternating(unsigned n, const Limits& limits) {
  require_symmetric_degree(n, limits, "alt");
  std::vector<Permutation> gens;
  for (unsigned k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return closure(gens, n, limits).renamed("alt(" + std::to_string(n) + ")");
}

FiniteGroup quaternion() {
  // Index 2u + s encodes (-1)^s e_u with e = 1, i, j, k.
  // e_u e_v = sign[u][v] e_{prod[u][v]}
  static constexpr int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int u = x / 2, v = y / 2;
      int s = (x % 2 + y % 2 + sign[u][v]) % 2;
      table[x * 8 + y] = static_cast<Element>(2 * prod[u][v] + s);
    }
  }
  return FiniteGroup(detail::TrustedTable{}, "q8", 8, std::move(table),
                     {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  const std::string name = "prod(" + g.name() + "," + h.name() + ")";
  require_order_within(n, limits, name);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ga = static_cast<Element>(a / nh), ha = static_cast<Element>(a % nh);
    for (std::size_t b = 0; b < n; ++b) {
      auto gb = static_cast<Element>(b / nh), hb = static_cast<Element>(b % nh);
      table[a * n + b] = static_cast<Element>(g.mul(ga, gb) * nh + h.mul(ha, hb));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(static_cast<Element>(a / nh)) + "," + h.label(static_cast<Element>(a % nh)) + ")";
  }
  return FiniteGroup(detail::TrustedTable{}, name, n, std::move(table), std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& acting, const FiniteGroup& normal,
                               const std::vector<std::vector<Element>>& action, const Limits& limits) {
  const std::size_t ng = acting.order(), nh = normal.order(), n = ng * nh;
  const std::string name = "sdp(" + normal.name() + "," + acting.name() + ")";
  require_order_within(n, limits, name);
  if (action.size() != ng) throw ActionNotHomomorphism("action must give one map per acting element");
  for (std::size_t g = 0; g < ng; ++g) {
    const auto& phi = action[g];
    if (phi.size() != nh) throw ActionNotAutomorphism("action map has wrong length");
    std::vector<bool> hit(nh, false);
    for (Element e : phi) {
      if (e >= nh || hit[e]) throw ActionNotAutomorphism("action of element " + std::to_string(g) + " is not a bijection");
      hit[e] = true;
    }
    for (std::size_t a = 0; a < nh; ++a) {
      for (std::size_t b = 0; b < nh; ++b) {
        auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
        if (phi[normal.mul(ea, eb)] != normal.mul(phi[a], phi[b])) {
          throw ActionNotAutomorphism("action of element " + std::to_string(g) + " does not preserve the table");
        }
      }
    }
  }
  for (std::size_t g1 = 0; g1 < ng; ++g1) {
    for (std::size_t g2 = 0; g2 < ng; ++g2) {
      const auto& composite = action[acting.mul(static_cast<Element>(g1), static_cast<Element>(g2))];
      for (std::size_t h = 0; h < nh; ++h) {
        if (composite[h] != action[g1][action[g2][h]]) {
          throw ActionNotHomomorphism("action is not a homomorphism into Aut(H)");
        }
      }
    }
  }
  // (h1 g1)(h2 g2) = h1 phi_g1(h2) g1 g2
  std::vector<Element> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    auto g1 = static_cast<Element>(u / nh), h1 = static_cast<Element>(u % nh);
    for (std::size_t v = 0; v < n; ++v) {
      auto g2 = static_cast<Element>(v / nh), h2 = static_cast<Element>(v % nh);
      table[u * n + v] = static_cast<Element>(acting.mul(g1, g2) * nh + normal.mul(h1, action[g1][h2]));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t u = 0; u < n; ++u) {
    labels[u] = "(" + normal.label(static_cast<Element>(u % nh)) + "," + acting.label(static_cast<Element>(u / nh)) + ")";
  }
  FiniteGroup out(detail::TrustedTable{}, name, n, std::move(table), std::move(labels));

  // H sits at indices 0..|H|-1; it must be normal with quotient equal to the acting group.
  ElementSet h_set(nh);
  std::iota(h_set.begin(), h_set.end(), Element{0});
  FiniteGroup q = quotient(out, h_set);
  if (q.order() != ng || !std::equal(q.table().begin(), q.table().end(), acting.table().begin())) {
    throw ActionNotHomomorphism("quotient by H does not reproduce the acting group");
  }
  return out;
}

void require_normal_subgroup(const FiniteGroup& g, const ElementSet& n) {
  if (n.empty() || n.front() != 0) throw NotSubgroup("subset does not contain the identity");
  std::vector<bool> in(g.order(), false);
  for (Element e : n) {
    if (e >= g.order()) throw NotSubgroup("element index out of range");
    in[e] = true;
  }
  for (Element a : n) {
    for (Element b : n) {
      if (!in[g.mul(a, b)]) throw NotSubgroup("subset is not closed under multiplication");
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Element a : n) {
      if (!in[g.conjugate(a, static_cast<Element>(x))]) throw NotNormal("subgroup is not normal");
    }
  }
}

std::vector<Element> coset_index(const FiniteGroup& g, const ElementSet& n) {
  constexpr auto unset = static_cast<Element>(0xFFFF);
  std::vector<Element> id(g.order(), unset);
  Element next = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (id[x] != unset) continue;
    for (Element e : n) id[g.mul(static_cast<Element>(x), e)] = next;
    ++next;
  }
  return id;
}

FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n) {
  require_normal_subgroup(g, n);
  std::vector<Element> id = coset_index(g, n);
  const std::size_t m = g.order() / n.size();
  std::vector<Element> rep(m);
  std::vector<bool> has(m, false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!has[id[x]]) {
      has[id[x]] = true;
      rep[id[x]] = static_cast<Element>(x);
    }
  }
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = id[g.mul(rep[a], rep[b])];
  }
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = g.label(rep[a]) + "N";
  return FiniteGroup(detail::TrustedTable{}, g.name() + "/N", m, std::move(table), std::move(labels));
}

namespace {

SubgroupEmbedding embed(const FiniteGroup& g, std::vector<Element> inclusion, std::string name) {
  const std::size_t m = inclusion.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[inclusion[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(inclusion[i], inclusion[j])];
  }
  std::vector<std::string> labels(m);
  std::vector<Permutation> perms;
  auto parent_perms = g.permutations();
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(inclusion[i]);
    if (!parent_perms.empty()) perms.push_back(parent_perms[inclusion[i]]);
  }
  FiniteGroup sub(detail::TrustedTable{}, std::move(name), m, std::move(table), std::move(labels), std::move(perms));
  return SubgroupEmbedding{std::move(sub), std::move(inclusion)};
}

}  // namespace

SubgroupEmbedding subgroup_generated(const FiniteGroup& g, const ElementSet& gens) {
  for (Element s : gens) {
    if (s >= g.order()) throw InvalidParameter("generator index out of range");
  }
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(elems[head], s);
      if (!in[next]) {
        in[next] = true;
        elems.push_back(next);
      }
    }
  }
  return embed(g, std::move(elems), "sub(" + g.name() + ")");
}

SubgroupEmbedding subgroup_from_elements(const FiniteGroup& g, const ElementSet& elements) {
  return embed(g, elements, "sub(" + g.name() + ")");
}

}  // namespace commprob
