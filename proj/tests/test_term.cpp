#include "doctest.h"
#include "support.hpp"
#include "xsat/term.hpp"

#include <random>

using namespace xsat;

namespace {
const char* kExample1 = "(((V x (V x W)) x V) x (V x W))";
}

TEST_CASE("parsing the grammar") {
  TermPtr t = parse_term("(V x W)");
  CHECK(t->kind() == Term::Kind::Cross);
  CHECK(t->left()->name() == "V");
  CHECK(t->right()->name() == "W");

  TermPtr ex1 = parse_term(kExample1);
  CHECK(print_term(ex1) == kExample1);
  CHECK(leaf_count(ex1) == 6);

  TermPtr mixed = parse_term("((V x [0,0,1]) x <1:2:3>)");
  CHECK(mixed->right()->kind() == Term::Kind::ProjConst);
  CHECK(mixed->left()->right()->kind() == Term::Kind::AffineConst);
  CHECK(print_term(mixed) == "((V x [0, 0, 1]) x <1 : 2 : 3>)");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_term("(V x W"), ParseError);     // missing paren
  CHECK_THROWS_AS(parse_term("(x x W)"), ParseError);    // reserved word as variable
  CHECK_THROWS_AS(parse_term("V x W"), ParseError);      // parens are mandatory
  CHECK_THROWS_AS(parse_term("(V y W)"), ParseError);    // wrong operator
  CHECK_THROWS_AS(parse_term("(VxW)"), ParseError);      // whitespace required
  CHECK_THROWS_AS(Term::var("x"), ParseError);
  CHECK_THROWS_AS(Term::var("2V"), ParseError);
}

TEST_CASE("print/parse round trip on random terms") {
  std::mt19937_64 rng(21);
  std::vector<std::string> vars = {"V", "W", "U3"};
  for (int i = 0; i < 100; ++i) {
    TermPtr t = test::random_cross_term(rng, 1 + static_cast<int>(rng() % 12), vars);
    std::string text = print_term(t);
    CHECK(print_term(parse_term(text)) == text);
  }
}

TEST_CASE("shared nodes print tree-expanded") {
  TermPtr v = Term::var("V");
  TermPtr shared = Term::cross(v, Term::var("W"));
  TermPtr t = Term::cross(shared, shared);
  CHECK(dag_node_count(t) == 4);
  CHECK(leaf_count(t) == 4);
  CHECK(print_term(t) == "((V x W) x (V x W))");
}

TEST_CASE("affine evaluation") {
  AffineAssignment a{{"V", Vec3{1, 0, 0}}, {"W", Vec3{0, 1, 0}}};
  CHECK(eval_affine(parse_term(kExample1), a).is_zero());
  CHECK(eval_affine(parse_term("V"), {{"V", Vec3{3, 1, 4}}}) == Vec3{3, 1, 4});
  AffineAssignment b{{"V", Vec3{1, 2, 3}}, {"W", Vec3{4, 5, 6}}};
  CHECK(eval_affine(parse_term("(V x W)"), b) == Vec3{-3, 6, -3});

  CHECK_THROWS_AS(eval_affine(parse_term("(V x W)"), AffineAssignment{{"V", Vec3{1, 0, 0}}}),
                  EvalError);
  CHECK_THROWS_AS(eval_affine(parse_term("(V x <1:0:0>)"), a), EvalError);
}

TEST_CASE("the example term vanishes everywhere") {
  std::mt19937_64 rng(22);
  TermPtr t = test::everywhere_zero_term();
  for (int i = 0; i < 100; ++i) {
    AffineAssignment a{{"V", test::random_vec3(rng)}, {"W", test::random_vec3(rng)}};
    CHECK(eval_affine(t, a).is_zero());
  }
}

TEST_CASE("projective evaluation and undefinedness") {
  ProjAssignment same{{"V", ProjPoint(Vec3{1, 0, 0})}, {"W", ProjPoint(Vec3{2, 0, 0})}};
  CHECK(!eval_projective(parse_term("(V x W)"), same));

  ProjAssignment distinct{{"V", ProjPoint(Vec3{1, 0, 0})}, {"W", ProjPoint(Vec3{0, 1, 0})}};
  CHECK(*eval_projective(parse_term("(V x W)"), distinct) == ProjPoint(Vec3{0, 0, 1}));

  // undefined at every assignment
  std::mt19937_64 rng(23);
  TermPtr ex1 = parse_term(kExample1);
  for (int i = 0; i < 50; ++i) {
    ProjAssignment a{{"V", ProjPoint(test::random_nonzero_vec3(rng))},
                     {"W", ProjPoint(test::random_nonzero_vec3(rng))}};
    CHECK(!eval_projective(ex1, a));
  }

  CHECK_THROWS_AS(eval_projective(parse_term("(V x [1,0,0])"), distinct), EvalError);
  CHECK_THROWS_AS(eval_projective(parse_term("(V x U)"), distinct), EvalError);
}

TEST_CASE("multidegree counts leaf occurrences") {
  auto d1 = multidegree(parse_term("(V x W)"));
  CHECK(d1.at("V") == 1);
  CHECK(d1.at("W") == 1);
  auto d2 = multidegree(parse_term(kExample1));
  CHECK(d2.at("V") == 4);
  CHECK(d2.at("W") == 2);
  CHECK(multidegree(parse_term("([1,0,0] x <0:1:0>)")).empty());
}

TEST_CASE("homogeneity: scaling one argument scales by its degree") {
  std::mt19937_64 rng(24);
  std::vector<std::string> vars = {"V", "W"};
  for (int i = 0; i < 60; ++i) {
    TermPtr t = test::random_cross_term(rng, 2 + static_cast<int>(rng() % 5), vars);
    AffineAssignment a{{"V", test::random_vec3(rng)}, {"W", test::random_vec3(rng)}};
    Scalar lambda(test::random_nonzero_rational(rng));
    auto deg = multidegree(t);
    for (const auto& var : vars) {
      if (!deg.count(var)) continue;
      AffineAssignment scaled = a;
      scaled[var] = lambda * a[var];
      CHECK(eval_affine(t, scaled) ==
            lambda.pow(static_cast<unsigned long>(deg[var])) * eval_affine(t, a));
    }
  }
}

TEST_CASE("projective and affine evaluation are compatible") {
  std::mt19937_64 rng(25);
  std::vector<std::string> vars = {"V", "W"};
  for (int i = 0; i < 80; ++i) {
    TermPtr t = test::random_cross_term(rng, 2 + static_cast<int>(rng() % 5), vars);
    AffineAssignment a{{"V", test::random_nonzero_vec3(rng)},
                       {"W", test::random_nonzero_vec3(rng)}};
    ProjAssignment pa;
    for (const auto& [k, v] : a) pa.emplace(k, ProjPoint(v));
    Vec3 affine = eval_affine(t, a);
    auto proj = eval_projective(t, pa);
    if (proj) {
      CHECK(!affine.is_zero());
      CHECK(ProjPoint(affine) == *proj);
    } else {
      // some sub-term vanished affinely
      CHECK(affine.is_zero());
    }
  }
}

TEST_CASE("equivariance lifts to terms") {
  std::mt19937_64 rng(26);
  std::vector<std::string> vars = {"V", "W"};
  for (int i = 0; i < 50; ++i) {
    TermPtr t = test::random_cross_term(rng, 2 + static_cast<int>(rng() % 4), vars);
    Mat3 o = test::random_rotation(rng);
    AffineAssignment a{{"V", test::random_vec3(rng)}, {"W", test::random_vec3(rng)}};
    AffineAssignment rotated;
    for (const auto& [k, v] : a) rotated[k] = o * v;
    CHECK(eval_affine(t, rotated) == o * eval_affine(t, a));
  }
}

TEST_CASE("substitution preserves sharing") {
  TermPtr t = parse_term("((V x W) x V)");
  TermPtr r = substitute(t, {{"V", parse_term("(U x W)")}});
  CHECK(print_term(r) == "(((U x W) x W) x (U x W))");
  CHECK(dag_node_count(r) == 6);  // (U x W) appears once as a node
  CHECK(tree_node_count(r) == 9);
  CHECK(substitute(t, {}) == t);
}
