#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/io.hpp"
#include "schemeforge/presets.hpp"

using namespace schemeforge;

namespace {

ClassificationReport classify_preset(const std::string& name, ClassifyOptions opts = {}) {
  Preset p = make_preset(name);
  Scheme s = from_orbitals(p.group);
  ClassificationReport rep = classify(s, &p.group, opts);
  rep.name = p.name;
  return rep;
}

}  // namespace

TEST_CASE("classification of the A5 coset instance") {
  ClassifyOptions opts;
  opts.cross_check_base = true;
  ClassificationReport r = classify_preset("a5-cosets", opts);

  CHECK(r.n == 30);
  CHECK(r.rank == 16);
  CHECK(r.thin == Thinness::quasi_thin);
  CHECK(r.dim_t0 == 450);
  CHECK(r.dim_t1 == 452);
  CHECK(r.dim_t == 452);
  REQUIRE(r.dim_t_tilde);
  CHECK(*r.dim_t_tilde == 452);

  CHECK(r.diamonds.size() == 2);
  CHECK(r.unordered_diamond_pairs == 1);

  // one diamond pair: T0 is a proper subalgebra, but T still fills T~
  REQUIRE(r.triply_regular_structural);
  CHECK_FALSE(*r.triply_regular_structural);
  CHECK_FALSE(r.triply_regular_brute);
  REQUIRE(r.t_equals_ttilde_structural);
  CHECK(*r.t_equals_ttilde_structural);
  REQUIRE(r.t_equals_ttilde_brute);
  CHECK(*r.t_equals_ttilde_brute);
  REQUIRE(r.triply_transitive_structural);
  CHECK_FALSE(*r.triply_transitive_structural);
  CHECK_FALSE(r.is_triply_transitive());
  CHECK(r.consistent);

  REQUIRE(r.wedderburn);
  CHECK_FALSE(r.wedderburn->applicable);
  REQUIRE(r.regular_subgroup_found);
  CHECK_FALSE(*r.regular_subgroup_found);

  REQUIRE(r.second_base);
  CHECK(r.second_base->t0 == 450);
  CHECK(r.second_base->t == 452);
  REQUIRE(r.second_base->t_tilde);
  CHECK(*r.second_base->t_tilde == 452);
}

TEST_CASE("classification of the Frobenius instance") {
  ClassificationReport r = classify_preset("frobenius56");

  CHECK(r.n == 28);
  CHECK(r.thin == Thinness::quasi_thin);
  CHECK(r.dim_t0 == 376);
  CHECK(r.dim_t1 == 400);
  CHECK(r.dim_t == 400);
  REQUIRE(r.dim_t_tilde);
  CHECK(*r.dim_t_tilde == 400);

  CHECK(r.diamonds.size() == 24);
  CHECK(r.unordered_diamond_pairs == 12);

  // many diamond pairs, yet every one is shielded: T = T~ without triple
  // regularity
  CHECK_FALSE(r.triply_regular_brute);
  REQUIRE(r.t_equals_ttilde_brute);
  CHECK(*r.t_equals_ttilde_brute);
  CHECK_FALSE(r.is_triply_transitive());
  REQUIRE(r.triply_regular_structural);
  CHECK_FALSE(*r.triply_regular_structural);
  REQUIRE(r.t_equals_ttilde_structural);
  CHECK(*r.t_equals_ttilde_structural);
  CHECK(r.consistent);
  REQUIRE(r.regular_subgroup_found);
  CHECK_FALSE(*r.regular_subgroup_found);
}

TEST_CASE("classification of thin and dihedral instances") {
  SECTION("thin Z6: everything coincides") {
    ClassificationReport r = classify_preset("cyclic-6");
    CHECK(r.thin == Thinness::thin);
    CHECK(r.rank == 6);
    CHECK(r.dim_t0 == 36);
    CHECK(r.dim_t == 36);
    REQUIRE(r.dim_t_tilde);
    CHECK(*r.dim_t_tilde == 36);
    CHECK(r.diamonds.empty());
    CHECK(r.triply_regular_brute);
    CHECK(r.is_triply_transitive());
    CHECK(r.consistent);
  }

  SECTION("dihedral instances are triply transitive with a regular subgroup") {
    for (const char* name : {"dihedral-5", "dihedral-6", "dihedral-9"}) {
      ClassificationReport r = classify_preset(name);
      CHECK(r.thin == Thinness::quasi_thin);
      CHECK(r.diamonds.empty());
      CHECK(r.triply_regular_brute);
      CHECK(r.is_triply_transitive());
      CHECK(r.consistent);
      REQUIRE(r.wedderburn);
      CHECK(r.wedderburn->applicable);
      CHECK(r.wedderburn->holds);
      REQUIRE(r.regular_subgroup_found);
      CHECK(*r.regular_subgroup_found);
    }
  }

  SECTION("verdicts are monotone along T0 <= T <= T~") {
    for (const std::string& name : preset_catalog()) {
      ClassificationReport r = classify_preset(name);
      if (r.is_triply_transitive()) {
        CHECK(r.triply_regular_brute);
        CHECK(*r.t_equals_ttilde_brute);
      }
      CHECK(r.dim_t0 <= r.dim_t1);
      CHECK(r.dim_t1 <= r.dim_t);
      REQUIRE(r.dim_t_tilde);
      CHECK(r.dim_t <= *r.dim_t_tilde);
      CHECK(r.consistent);
    }
  }
}

TEST_CASE("classification without an attached group") {
  Scheme s = from_orbitals(make_preset("dihedral-5").group);
  ClassificationReport r = classify(s, nullptr);
  CHECK(r.dim_t0 == 13);
  CHECK(r.dim_t == 13);
  CHECK_FALSE(r.dim_t_tilde);          // no group, no centralizer
  CHECK_FALSE(r.t_equals_ttilde_brute);
  CHECK_FALSE(r.triply_transitive_brute);
  CHECK_FALSE(r.wedderburn);
  CHECK_FALSE(r.regular_subgroup_found);
  CHECK(r.triply_regular_brute);  // T0 = T is still decidable
  CHECK(r.consistent);
}

TEST_CASE("classify rejects a group that does not realize the scheme") {
  Scheme pentagon = from_orbitals(make_preset("dihedral-5").group);
  PermGroup z5 = make_preset("cyclic-5").group;  // coarser orbital scheme
  CHECK_THROWS_AS(classify(pentagon, &z5), Error);

  PermGroup intransitive = PermGroup::generate({parse_cycles("(0 1)", 5)});
  CHECK_THROWS_AS(classify(pentagon, &intransitive), Error);
}

TEST_CASE("a relabeled color matrix still matches its group") {
  // swap two nontrivial class labels; classify must accept the group via the
  // bijection between class labelings
  Scheme s = from_orbitals(make_preset("dihedral-6").group);
  auto color = s.color;
  for (auto& row : color)
    for (int& c : row) {
      if (c == 1)
        c = 2;
      else if (c == 2)
        c = 1;
    }
  Scheme relabeled = from_color_matrix(color);
  PermGroup g = make_preset("dihedral-6").group;
  ClassificationReport r = classify(relabeled, &g);
  CHECK(r.dim_t0 == classify_preset("dihedral-6").dim_t0);
}

TEST_CASE("group and scheme specs parse") {
  SECTION("image-list generators") {
    json j = {{"name", "klein"},
              {"degree", 4},
              {"generators", {{1, 0, 3, 2}, {2, 3, 0, 1}}}};
    GroupSpec spec = parse_group_spec(j);
    CHECK(spec.name == "klein");
    REQUIRE(spec.generators.size() == 2);
    CHECK(PermGroup::generate(spec.generators).order() == 4);
  }

  SECTION("cycle-notation generators and subgroup by indices") {
    json j = {{"name", "d6"}, {"degree", 6}, {"cycles", {"(0 1 2 3 4 5)", "(1 5)(2 4)"}},
              {"subgroup", {{"indices", {1}}}}};
    GroupSpec spec = parse_group_spec(j);
    REQUIRE(spec.generators.size() == 2);
    CHECK(spec.has_subgroup);
    REQUIRE(spec.subgroup_generators.size() == 1);
    CHECK(spec.subgroup_generators[0] == spec.generators[1]);
  }

  SECTION("explicit subgroup generators") {
    json j = {{"degree", 3}, {"cycles", {"(0 1 2)", "(0 1)"}},
              {"subgroup", {{"cycles", {"(0 1)"}}}}};
    GroupSpec spec = parse_group_spec(j);
    CHECK(spec.has_subgroup);
    CHECK(spec.subgroup_generators.size() == 1);
  }

  SECTION("malformed specs throw ParseError") {
    CHECK_THROWS_AS(parse_group_spec(json{{"degree", 3}}), ParseError);
    CHECK_THROWS_AS(parse_group_spec(json{{"degree", 3}, {"generators", {{0, 0, 1}}}}), ParseError);
    CHECK_THROWS_AS(parse_group_spec(json{{"degree", 3}, {"cycles", {"(0 5)"}}}), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(json{{"n", 2}}), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(json{{"n", 3}, {"color", {{0, 1}, {1, 0}}}}), ParseError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
  }

  SECTION("scheme spec round trip") {
    json j = {{"n", 3}, {"color", {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}}};
    auto color = parse_scheme_spec(j);
    Scheme s = from_color_matrix(color);
    CHECK(s.d == 1);
    CHECK(s.valence[1] == 2);
  }
}

TEST_CASE("report JSON round trip") {
  ClassifyOptions opts;
  opts.cross_check_base = true;
  for (const char* name : {"a5-cosets", "dihedral-6", "cyclic-4"}) {
    ClassificationReport r = classify_preset(name, opts);
    json j = to_json(r);
    ClassificationReport back = report_from_json(j);
    CHECK(to_json(back) == j);
  }

  // text rendering mentions the headline facts
  ClassificationReport r = classify_preset("a5-cosets");
  std::string text = report_to_text(r);
  CHECK(text.find("degree 30, rank 16") != std::string::npos);
  CHECK(text.find("dim T0 = 450") != std::string::npos);
  CHECK(text.find("consistency: ok") != std::string::npos);
}
