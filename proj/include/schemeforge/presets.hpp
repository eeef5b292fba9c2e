#pragma once

#include <string>
#include <vector>

#include "schemeforge/perm_group.hpp"

namespace schemeforge {

/// A named transitive group from the built-in catalog. The scheme under
/// study is always the orbital scheme of `group`.
struct Preset {
  std::string name;
  std::string description;
  PermGroup group;
};

namespace detail {

inline Permutation n_cycle(int n) {
  std::vector<int> imgs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) imgs[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(imgs));
}

inline Permutation reflection(int n) {
  std::vector<int> imgs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) imgs[static_cast<std::size_t>(i)] = (n - i) % n;
  return Permutation(std::move(imgs));
}

// A5 = <a, b | a^5 = b^2 = (ab)^3 = 1> with a a 5-cycle and b a double
// transposition; any faithful choice is equivalent up to conjugacy.
inline std::vector<Permutation> alternating5_generators() {
  return {Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 3, 2, 4})};
}

// AGL(1, 8) = Z_2^3 x| Z_7 on the field with 8 elements (bit-pattern
// labels, x^3 = x + 1): translation by 1 and multiplication by a
// primitive element.
inline std::vector<Permutation> frobenius56_generators() {
  return {Permutation({1, 0, 3, 2, 5, 4, 7, 6}), Permutation({0, 2, 4, 6, 3, 1, 7, 5})};
}

}  // namespace detail

/// Preset names: "cyclic-N", "dihedral-N", "s3-regular", "a5-cosets",
/// "frobenius56".
inline Preset make_preset(const std::string& name, const Caps& caps = {}) {
  auto starts_with = [&](const std::string& prefix) {
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
  };
  auto tail_int = [&](std::size_t offset) {
    try {
      int v = std::stoi(name.substr(offset));
      if (v < 1) throw ParseError("preset " + name + ": size must be positive");
      return v;
    } catch (const std::invalid_argument&) {
      throw ParseError("preset " + name + ": bad size parameter");
    }
  };

  if (starts_with("cyclic-")) {
    int n = tail_int(7);
    return {name, "cyclic group Z_" + std::to_string(n) + " acting on itself (thin)",
            PermGroup::generate({detail::n_cycle(n)}, caps)};
  }
  if (starts_with("dihedral-")) {
    int n = tail_int(9);
    if (n < 3) throw ParseError("preset " + name + ": dihedral groups need n >= 3");
    return {name, "dihedral group D_" + std::to_string(n) + " on cosets of a reflection",
            PermGroup::generate({detail::n_cycle(n), detail::reflection(n)}, caps)};
  }
  if (name == "s3-regular") {
    // S3 acting on itself: the coset action on the trivial subgroup
    PermGroup s3 = PermGroup::generate({parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)}, caps);
    GroupAction reg = coset_action(s3, {}, caps);
    return {name, "S_3 in its regular action (thin, non-abelian)", std::move(reg.image)};
  }
  if (name == "a5-cosets") {
    auto gens = detail::alternating5_generators();
    PermGroup a5 = PermGroup::generate(gens, caps);
    GroupAction act = coset_action(a5, {gens[1]}, caps);
    return {name, "A_5 on the 30 cosets of an involution", std::move(act.image)};
  }
  if (name == "frobenius56") {
    auto gens = detail::frobenius56_generators();
    PermGroup g = PermGroup::generate(gens, caps);
    GroupAction act = coset_action(g, {gens[0]}, caps);
    return {name, "Z_2^3 x| Z_7 on the 28 cosets of Z_2", std::move(act.image)};
  }
  throw ParseError("unknown preset: " + name);
}

inline std::vector<std::string> preset_catalog() {
  std::vector<std::string> names;
  for (int n = 3; n <= 10; ++n) names.push_back("cyclic-" + std::to_string(n));
  names.push_back("s3-regular");
  for (int n = 3; n <= 12; ++n) names.push_back("dihedral-" + std::to_string(n));
  names.push_back("a5-cosets");
  names.push_back("frobenius56");
  return names;
}

}  // namespace schemeforge
