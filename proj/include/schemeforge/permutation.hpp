#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schemeforge/errors.hpp"

namespace schemeforge {

/// A permutation of {0,...,n-1}, stored as the image sequence:
/// images[i] is the image of point i.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int degree) {
    std::vector<int> imgs(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) imgs[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(imgs));
  }

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int point) const { return images[static_cast<std::size_t>(point)]; }

  bool is_valid() const {
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
      if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
  }

  int fixed_point_count() const {
    int t = 0;
    for (int i = 0; i < degree(); ++i)
      if (images[static_cast<std::size_t>(i)] == i) ++t;
    return t;
  }

  int order() const {
    Permutation p = *this;
    int o = 1;
    while (!p.is_identity()) {
      std::vector<int> next(images.size());
      for (int i = 0; i < degree(); ++i) next[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(p(i))];
      p.images = std::move(next);
      ++o;
    }
    return o;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
};

/// Composition is left-to-right project-wide: compose(p, q) means
/// "apply p, then q", i.e. the image of x is q(p(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
  std::vector<int> imgs(p.images.size());
  for (int i = 0; i < p.degree(); ++i) imgs[static_cast<std::size_t>(i)] = q(p(i));
  return Permutation(std::move(imgs));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Parses cycle notation such as "(0 1 2)(3 4)". Points not mentioned are fixed.
inline Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = Permutation::identity(degree);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("cycle notation: expected '(' in \"" + text + "\"");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("cycle notation: missing ')' in \"" + text + "\"");
    std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
    std::vector<int> pts;
    std::string tok;
    while (cyc >> tok) {
      // allow comma separators
      tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
      if (tok.empty()) continue;
      int v;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
        throw ParseError("cycle notation: bad point \"" + tok + "\"");
      }
      if (v < 0 || v >= degree) throw ParseError("cycle notation: point out of range in \"" + text + "\"");
      pts.push_back(v);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i];
      int to = pts[(i + 1) % pts.size()];
      if (p.images[static_cast<std::size_t>(from)] != from)
        throw ParseError("cycle notation: point repeated in \"" + text + "\"");
      p.images[static_cast<std::size_t>(from)] = to;
    }
    pos = close + 1;
  }
  if (!p.is_valid()) throw ParseError("cycle notation: not a permutation: \"" + text + "\"");
  return p;
}

}  // namespace schemeforge
