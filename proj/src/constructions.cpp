#include "sst/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sst/errors.hpp"

namespace sst {

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw OrderCapExceeded(what + " has order " + std::to_string(order) + " above the cap " +
                           std::to_string(cap));
}

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t cap, const std::string& what) {
  if (a != 0 && b > cap / a + 1) check_cap(cap + 1, cap, what);
  check_cap(a * b, cap, what);
  return a * b;
}

std::vector<Generator> merge_labels(const std::vector<Generator>& left,
                                    const std::vector<Generator>& right) {
  std::set<std::string> seen;
  bool collision = false;
  for (const auto& g : left) seen.insert(g.label);
  for (const auto& g : right)
    if (seen.count(g.label)) collision = true;
  std::vector<Generator> out;
  for (const auto& g : left) out.push_back({collision ? "f1." + g.label : g.label, g.element});
  for (const auto& g : right) out.push_back({collision ? "f2." + g.label : g.label, g.element});
  return out;
}

using Map = std::vector<Element>;

Map compose(const Map& first, const Map& second) {
  Map out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

/// Extends generator images to a map on the whole kernel along its Cayley graph.
Map extend_to_automorphism(const GroupTable& kernel, const std::vector<Element>& images,
                           const std::string& actor_label) {
  const std::size_t n = kernel.order();
  const auto& gens = kernel.generators();
  Map phi(n, 0);
  std::vector<std::uint8_t> known(n, 0);
  known[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element v = kernel.mul(u, gens[i].element);
      const Element image = kernel.mul(phi[u], images[i]);
      if (known[v]) {
        if (phi[v] != image)
          throw InvalidAction("action of '" + actor_label +
                              "' does not extend to a homomorphism of the kernel");
        continue;
      }
      known[v] = 1;
      phi[v] = image;
      queue.push_back(v);
    }
  }
  if (std::find(known.begin(), known.end(), 0) != known.end())
    throw InvalidAction("kernel generators do not generate the kernel");
  std::vector<std::uint8_t> hit(n, 0);
  for (Element x : phi) hit[x] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw InvalidAction("action of '" + actor_label + "' is not bijective on the kernel");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (phi[kernel.mul(a, b)] != kernel.mul(phi[a], phi[b]))
        throw InvalidAction("action of '" + actor_label + "' is not multiplicative");
  return phi;
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidTable("cyclic group of order 0");
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<Element>((a + b) % n);
  return GroupTable("C" + std::to_string(n), n, std::move(mult),
                    {{"g", static_cast<Element>(n > 1 ? 1 : 0)}});
}

GroupTable dihedral_group(std::size_t n, std::size_t cap) {
  check_cap(2 * n, cap, "D" + std::to_string(2 * n));
  GroupTable rot = cyclic_group(n);
  rot.set_generators({{"r", static_cast<Element>(n > 1 ? 1 : 0)}});
  GroupTable flip = cyclic_group(2);
  flip.set_generators({{"s", 1}});
  const Element r_inv = rot.inv(rot.generators()[0].element);
  GroupTable g = semidirect_product(rot, flip, {{"s", {{"r", r_inv}}}}, cap);
  g.set_name("D" + std::to_string(2 * n));
  return g;
}

GroupTable permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                             std::vector<std::string> labels, std::size_t cap) {
  using Perm = std::vector<std::size_t>;
  for (const auto& p : gens) {
    if (p.size() != degree) throw InvalidTable("permutation generator has wrong length");
    std::vector<std::uint8_t> hit(degree, 0);
    for (auto x : p) {
      if (x >= degree || hit[x]) throw InvalidTable("generator is not a permutation");
      hit[x] = 1;
    }
  }
  if (labels.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("p" + std::to_string(i + 1));
  if (labels.size() != gens.size()) throw InvalidTable("label count does not match generators");

  auto product = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Perm> elements{identity};
  std::deque<Perm> queue{identity};
  while (!queue.empty()) {
    Perm u = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm v = product(u, s);
      if (elements.insert(v).second) {
        check_cap(elements.size(), cap, "permutation group");
        queue.push_back(std::move(v));
      }
    }
  }
  const std::vector<Perm> sorted(elements.begin(), elements.end());
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<Element>(i);
  const std::size_t n = sorted.size();
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = index.at(product(sorted[a], sorted[b]));
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) generators.push_back({labels[i], index.at(gens[i])});
  return GroupTable("Perm(" + std::to_string(degree) + ")", n, std::move(mult),
                    std::move(generators));
}

GroupTable symmetric_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidTable("symmetric group of degree 0");
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order = checked_product(order, k, cap, "S" + std::to_string(n));
  std::vector<std::vector<std::size_t>> gens;
  std::vector<std::string> labels;
  if (n >= 2) {
    std::vector<std::size_t> s(n), c(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[0], s[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {s, c};
    labels = {"s", "c"};
  }
  GroupTable g = permutation_group(n, gens, labels, cap);
  g.set_name("S" + std::to_string(n));
  return g;
}

GroupTable alternating_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidTable("alternating group of degree 0");
  std::size_t order = 1;
  for (std::size_t k = 3; k <= n; ++k) order = checked_product(order, k, cap, "A" + std::to_string(n));
  std::vector<std::vector<std::size_t>> gens;
  std::vector<std::string> labels;
  for (std::size_t k = 3; k <= n; ++k) {
    std::vector<std::size_t> t(n);
    std::iota(t.begin(), t.end(), 0);
    t[0] = 1;
    t[1] = k - 1;
    t[k - 1] = 0;
    gens.push_back(t);
    labels.push_back("t" + std::to_string(k));
  }
  GroupTable g = permutation_group(n, gens, labels, cap);
  g.set_name("A" + std::to_string(n));
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t cap) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = checked_product(na, nb, cap, a.name() + "x" + b.name());
  std::vector<Element> mult(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = x / nb, xb = x % nb;
    for (Element y = 0; y < n; ++y) {
      mult[x * n + y] = static_cast<Element>(a.mul(xa, y / nb) * nb + b.mul(xb, y % nb));
    }
  }
  std::vector<Generator> left, right;
  for (const auto& g : a.generators()) left.push_back({g.label, static_cast<Element>(g.element * nb)});
  for (const auto& g : b.generators()) right.push_back({g.label, g.element});
  return GroupTable(a.name() + "x" + b.name(), n, std::move(mult), merge_labels(left, right));
}

GroupTable semidirect_product(const GroupTable& kernel, const GroupTable& actor,
                              const std::vector<GeneratorAction>& action, std::size_t cap) {
  const std::size_t nk = kernel.order(), na = actor.order();
  const std::size_t n = checked_product(nk, na, cap, kernel.name() + ":" + actor.name());
  const auto& kgens = kernel.generators();
  const auto& agens = actor.generators();

  for (const auto& act : action) {
    if (!actor.generator(act.actor_label))
      throw InvalidAction("'" + act.actor_label + "' is not an actor generator");
    for (const auto& [label, image] : act.images) {
      if (!kernel.generator(label)) throw InvalidAction("'" + label + "' is not a kernel generator");
      if (image >= nk) throw InvalidAction("image of '" + label + "' out of range");
    }
  }

  // automorphism induced by each actor generator
  std::vector<Map> gen_maps;
  for (const auto& ag : agens) {
    std::vector<Element> images;
    for (const auto& kg : kgens) images.push_back(kg.element);
    for (const auto& act : action) {
      if (act.actor_label != ag.label) continue;
      for (const auto& [label, image] : act.images)
        for (std::size_t i = 0; i < kgens.size(); ++i)
          if (kgens[i].label == label) images[i] = image;
    }
    gen_maps.push_back(extend_to_automorphism(kernel, images, ag.label));
  }

  // right action: k^(a g) = (k^a)^g
  Map identity(nk);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Map> psi(na);
  std::vector<std::uint8_t> known(na, 0);
  psi[0] = identity;
  known[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < agens.size(); ++j) {
      const Element b = actor.mul(a, agens[j].element);
      Map candidate = compose(psi[a], gen_maps[j]);
      if (known[b]) {
        if (psi[b] != candidate)
          throw InvalidAction("action is not a homomorphism from the actor to Aut(kernel)");
        continue;
      }
      known[b] = 1;
      psi[b] = std::move(candidate);
      queue.push_back(b);
    }
  }
  if (std::find(known.begin(), known.end(), 0) != known.end())
    throw InvalidAction("actor generators do not generate the actor");

  std::vector<Element> mult(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = static_cast<Element>(x / nk), xk = static_cast<Element>(x % nk);
    for (Element y = 0; y < n; ++y) {
      const Element ya = static_cast<Element>(y / nk), yk = static_cast<Element>(y % nk);
      mult[x * n + y] =
          static_cast<Element>(actor.mul(xa, ya) * nk + kernel.mul(psi[ya][xk], yk));
    }
  }
  std::vector<Generator> left, right;
  for (const auto& g : kgens) left.push_back({g.label, g.element});
  for (const auto& g : agens) right.push_back({g.label, static_cast<Element>(g.element * nk)});
  return GroupTable(kernel.name() + ":" + actor.name(), n, std::move(mult),
                    merge_labels(left, right));
}

QuotientResult quotient(const GroupTable& g, const Bitset& n) {
  const std::size_t order = g.order();
  std::vector<Element> members = n.to_vector();
  if (members.empty() || members.front() != 0) throw NotNormal("not a subgroup (no identity)");
  for (Element m : members)
    for (Element x = 0; x < order; ++x)
      if (!n.test(g.conj(m, x))) throw NotNormal("subgroup is not normal in " + g.name());
  for (Element a : members)
    for (Element b : members)
      if (!n.test(g.mul(a, b))) throw NotNormal("member set is not closed under multiplication");

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> projection(order, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (projection[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) projection[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> mult(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mult[a * q + b] = projection[g.mul(reps[a], reps[b])];
  std::vector<Generator> gens;
  for (const auto& gen : g.generators()) gens.push_back({gen.label, projection[gen.element]});
  return {GroupTable(g.name() + "/N", q, std::move(mult), std::move(gens)), std::move(projection)};
}

InducedResult induced_table(const GroupTable& g, const Bitset& h) {
  std::vector<Element> embedding = h.to_vector();
  if (embedding.empty() || embedding.front() != 0) throw NotSubgroup("member set lacks the identity");
  std::vector<Element> local(g.order(), ~Element{0});
  for (std::size_t i = 0; i < embedding.size(); ++i) local[embedding[i]] = static_cast<Element>(i);
  const std::size_t n = embedding.size();
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element prod = g.mul(embedding[a], embedding[b]);
      if (!h.test(prod)) throw NotSubgroup("member set is not closed under multiplication");
      mult[a * n + b] = local[prod];
    }
  }
  // greedy generating set in ascending element order
  std::vector<Generator> gens;
  Bitset reached(n);
  reached.set(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (reached.test(i)) continue;
    gens.push_back({"h" + std::to_string(gens.size() + 1), static_cast<Element>(i)});
    std::deque<Element> queue;
    reached.for_each([&](std::uint32_t e) { queue.push_back(e); });
    while (!queue.empty()) {
      const Element u = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        const Element v = mult[u * n + s.element];
        if (!reached.test(v)) {
          reached.set(v);
          queue.push_back(v);
        }
      }
    }
  }
  return {GroupTable(g.name() + "|H", n, std::move(mult), std::move(gens)), std::move(embedding)};
}

}  // namespace sst
