#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schemeforge/errors.hpp"
#include "schemeforge/permutation.hpp"

namespace schemeforge {

/// A fully enumerated finite permutation group. Elements are listed in BFS
/// discovery order from the generator list, which fixes every downstream
/// labeling (cosets, orbitals). words[e] is a generator-index word with
/// gens[w0] * gens[w1] * ... == elements[e] under left-to-right composition.
class PermGroup {
public:
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> words;

  PermGroup() = default;

  static PermGroup generate(std::vector<Permutation> gens, const Caps& caps = {}) {
    if (gens.empty()) throw Error("generate: at least one generator required");
    const int n = gens[0].degree();
    if (static_cast<std::size_t>(n) > caps.degree_cap)
      throw CapExceeded("degree " + std::to_string(n) + " exceeds cap " + std::to_string(caps.degree_cap));
    for (const auto& g : gens) {
      if (g.degree() != n) throw Error("generate: generators have mixed degrees");
      if (!g.is_valid()) throw Error("generate: invalid permutation among generators");
    }

    PermGroup G;
    G.degree = n;
    G.generators = std::move(gens);

    Permutation id = Permutation::identity(n);
    G.elements.push_back(id);
    G.words.push_back({});
    G.index_.emplace(id, 0);

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < G.generators.size(); ++s) {
        Permutation h = compose(G.elements[e], G.generators[s]);
        if (G.index_.find(h) != G.index_.end()) continue;
        if (G.elements.size() >= caps.group_cap)
          throw CapExceeded("group too large: enumeration exceeds cap " + std::to_string(caps.group_cap));
        std::vector<int> w = G.words[e];
        w.push_back(static_cast<int>(s));
        G.index_.emplace(h, G.elements.size());
        G.elements.push_back(std::move(h));
        G.words.push_back(std::move(w));
        queue.push_back(G.elements.size() - 1);
      }
    }
    return G;
  }

  std::size_t order() const { return elements.size(); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return index_.find(p) != index_.end(); }

  /// Index of elements[a] * elements[b] (left-to-right).
  std::size_t product_index(std::size_t a, std::size_t b) const {
    auto idx = index_of(compose(elements[a], elements[b]));
    if (!idx) throw Error("product_index: group not closed (internal error)");
    return *idx;
  }

  bool is_transitive() const {
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    std::size_t count = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        int y = g(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          queue.push_back(y);
        }
      }
    }
    return count == static_cast<std::size_t>(degree);
  }

private:
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Orbits of H on {0,...,degree-1}. Each orbit is sorted; orbits are ordered
/// by minimal element, except that the orbit of base_point (when given) comes
/// first.
inline std::vector<std::vector<int>> orbits(const PermGroup& H,
                                            std::optional<int> base_point = std::nullopt) {
  const int n = H.degree;
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> result;
  auto expand = [&](int start) {
    if (orbit_of[static_cast<std::size_t>(start)] != -1) return;
    int id = static_cast<int>(result.size());
    std::vector<int> orb;
    std::deque<int> queue{start};
    orbit_of[static_cast<std::size_t>(start)] = id;
    orb.push_back(start);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& g : H.generators) {
        int y = g(x);
        if (orbit_of[static_cast<std::size_t>(y)] == -1) {
          orbit_of[static_cast<std::size_t>(y)] = id;
          orb.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  };
  if (base_point) expand(*base_point);
  for (int x = 0; x < n; ++x) expand(x);
  return result;
}

/// Subgroup of all enumerated elements fixing omega. Plain filter over the
/// element list; Schreier-Sims is out of scope at desk scale.
inline PermGroup point_stabilizer(const PermGroup& G, int omega, const Caps& caps = {}) {
  if (omega < 0 || omega >= G.degree) throw Error("point_stabilizer: point out of range");
  std::vector<Permutation> fixing;
  for (const auto& g : G.elements)
    if (g(omega) == omega && !g.is_identity()) fixing.push_back(g);
  if (fixing.empty()) fixing.push_back(Permutation::identity(G.degree));
  return PermGroup::generate(std::move(fixing), caps);
}

/// Elements fixing both points, as a group.
inline PermGroup two_point_stabilizer(const PermGroup& G, int a, int b, const Caps& caps = {}) {
  std::vector<Permutation> fixing;
  for (const auto& g : G.elements)
    if (g(a) == a && g(b) == b && !g.is_identity()) fixing.push_back(g);
  if (fixing.empty()) fixing.push_back(Permutation::identity(G.degree));
  return PermGroup::generate(std::move(fixing), caps);
}

/// Orbits of a transitive G on ordered pairs. The diagonal orbital has index 0;
/// the rest are numbered by their lexicographically minimal pair. suborbits[i]
/// is the set {u : (0,u) in O_i} for base point v = 0.
struct OrbitalData {
  int count = 0;
  std::vector<std::vector<int>> color;      // color[u][v] = orbital index
  std::vector<std::vector<int>> suborbits;  // indexed by orbital
};

inline OrbitalData orbitals(const PermGroup& G) {
  if (!G.is_transitive()) throw Error("orbitals: group is not transitive");
  const int n = G.degree;
  OrbitalData data;
  data.color.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));

  auto flood = [&](int u0, int v0, int c) {
    std::deque<std::pair<int, int>> queue{{u0, v0}};
    data.color[static_cast<std::size_t>(u0)][static_cast<std::size_t>(v0)] = c;
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (const auto& g : G.generators) {
        int a = g(x), b = g(y);
        if (data.color[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -1) {
          data.color[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
          queue.push_back({a, b});
        }
      }
    }
  };

  flood(0, 0, 0);  // transitivity makes the diagonal a single orbital
  int next = 1;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (data.color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == -1) flood(u, v, next++);
  data.count = next;

  data.suborbits.assign(static_cast<std::size_t>(data.count), {});
  for (int v = 0; v < n; ++v)
    data.suborbits[static_cast<std::size_t>(data.color[0][static_cast<std::size_t>(v)])].push_back(v);
  return data;
}

/// The action of G on right cosets Hx by right multiplication. Coset labels
/// follow the minimal BFS index of a coset member, so coset 0 is H itself.
struct GroupAction {
  PermGroup image;                   // induced permutation group on cosets
  std::vector<int> coset_of;         // G element index -> coset label
  std::vector<std::size_t> reps;     // coset label -> minimal element index
  int point_count() const { return image.degree; }

  /// Image of coset x under elements[e] of the source group.
  int act(const PermGroup& G, std::size_t e, int x) const {
    std::size_t moved = G.product_index(reps[static_cast<std::size_t>(x)], e);
    return coset_of[moved];
  }
};

inline GroupAction coset_action(const PermGroup& G, const std::vector<Permutation>& h_generators,
                                const Caps& caps = {}) {
  for (const auto& h : h_generators)
    if (!G.contains(h)) throw Error("coset_action: subgroup generator not in group");
  PermGroup H = h_generators.empty()
                    ? PermGroup::generate({Permutation::identity(G.degree)}, caps)
                    : PermGroup::generate(h_generators, caps);

  GroupAction action;
  action.coset_of.assign(G.order(), -1);
  for (std::size_t e = 0; e < G.order(); ++e) {
    if (action.coset_of[e] != -1) continue;
    int label = static_cast<int>(action.reps.size());
    action.reps.push_back(e);
    for (const auto& h : H.elements) {
      auto idx = G.index_of(compose(h, G.elements[e]));  // h * x, a member of Hx
      if (!idx) throw Error("coset_action: subgroup escapes group (internal error)");
      action.coset_of[*idx] = label;
    }
  }

  const int m = static_cast<int>(action.reps.size());
  if (static_cast<std::size_t>(m) > caps.degree_cap)
    throw CapExceeded("coset action degree " + std::to_string(m) + " exceeds cap");

  auto act_perm = [&](const Permutation& g) {
    std::vector<int> imgs(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      auto idx = G.index_of(compose(G.elements[action.reps[static_cast<std::size_t>(c)]], g));
      imgs[static_cast<std::size_t>(c)] = action.coset_of[*idx];
    }
    return Permutation(std::move(imgs));
  };

  std::vector<Permutation> image_gens;
  for (const auto& g : G.generators) image_gens.push_back(act_perm(g));
  action.image = PermGroup::generate(std::move(image_gens), caps);
  return action;
}

/// Searches for a regular subgroup as the kernel of a sign assignment on the
/// generators. Only applies when point stabilizers have order 2 (|G| = 2n);
/// otherwise returns nothing immediately. Each candidate assignment is
/// extended along BFS words and then verified to be a homomorphism over all
/// element pairs before its kernel is tested for regularity.
inline std::optional<PermGroup> find_regular_subgroup(const PermGroup& G, const Caps& caps = {}) {
  const std::size_t n = static_cast<std::size_t>(G.degree);
  if (!G.is_transitive() || G.order() != 2 * n) return std::nullopt;

  const std::size_t gens = G.generators.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << gens); ++mask) {
    std::vector<int> sign(G.order());
    for (std::size_t e = 0; e < G.order(); ++e) {
      int s = 0;
      for (int letter : G.words[e]) s ^= static_cast<int>((mask >> letter) & 1u);
      sign[e] = s;
    }
    bool hom = true;
    for (std::size_t a = 0; a < G.order() && hom; ++a)
      for (std::size_t b = 0; b < G.order(); ++b)
        if (sign[G.product_index(a, b)] != (sign[a] ^ sign[b])) {
          hom = false;
          break;
        }
    if (!hom) continue;

    std::vector<Permutation> kernel;
    bool free_action = true;
    for (std::size_t e = 0; e < G.order(); ++e) {
      if (sign[e] != 0) continue;
      if (!G.elements[e].is_identity() && G.elements[e].fixed_point_count() > 0) {
        free_action = false;
        break;
      }
      if (!G.elements[e].is_identity()) kernel.push_back(G.elements[e]);
    }
    if (!free_action || kernel.size() + 1 != n) continue;
    return PermGroup::generate(std::move(kernel), caps);
  }
  return std::nullopt;
}

}  // namespace schemeforge
