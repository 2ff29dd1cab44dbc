#include "doctest.h"
#include "support.hpp"
#include "xsat/circuit.hpp"
#include "xsat/compile.hpp"
#include "xsat/problems.hpp"

#include <random>

using namespace xsat;

namespace {

std::map<std::string, Scalar> vector_point(const Vec3& v, const Vec3& w) {
  return {{"V[0]", v.x}, {"V[1]", v.y}, {"V[2]", v.z},
          {"W[0]", w.x}, {"W[1]", w.y}, {"W[2]", w.z}};
}

}  // namespace

TEST_CASE("coordinatizing a variable passes inputs through") {
  Circuit c = coordinatize(parse_term("V"));
  CHECK(c.outputs().size() == 3);
  CHECK(c.inputs() == std::vector<std::string>{"V[0]", "V[1]", "V[2]"});
  auto out = eval_circuit(c, {{"V[0]", Scalar(3)}, {"V[1]", Scalar(1)}, {"V[2]", Scalar(4)}});
  CHECK(out == std::vector<Scalar>{3, 1, 4});
}

TEST_CASE("coordinatized cross products match the evaluator") {
  Circuit c = coordinatize(parse_term("(V x W)"));
  auto out = eval_circuit(c, vector_point(Vec3{1, 2, 3}, Vec3{4, 5, 6}));
  CHECK(out == std::vector<Scalar>{-3, 6, -3});

  std::mt19937_64 rng(51);
  Circuit ex1 = coordinatize(test::everywhere_zero_term());
  Circuit vw = coordinatize(parse_term("((V x W) x V)"));
  for (int i = 0; i < 100; ++i) {
    Vec3 v = test::random_vec3(rng), w = test::random_vec3(rng);
    auto zero = eval_circuit(ex1, vector_point(v, w));
    CHECK(zero[0].is_zero());
    CHECK(zero[1].is_zero());
    CHECK(zero[2].is_zero());
    Vec3 expect = eval_affine(parse_term("((V x W) x V)"), {{"V", v}, {"W", w}});
    auto got = eval_circuit(vw, vector_point(v, w));
    CHECK(got == std::vector<Scalar>{expect.x, expect.y, expect.z});
  }
}

TEST_CASE("projective constants are rejected") {
  CHECK_THROWS_AS(coordinatize(parse_term("(V x <1:0:0>)")), EvalError);
}

TEST_CASE("affine constants become interned const gates") {
  Circuit c = coordinatize(parse_term("((V x [1,2,1]) x [1,2,1])"));
  int consts = 0;
  for (const auto& g : c.gates())
    if (g.op == Circuit::Op::Const) ++consts;
  CHECK(consts == 2);  // values 1 and 2 shared across both leaves
}

TEST_CASE("sum of squares") {
  Circuit c = sos(coordinatize(parse_term("(V x W)")));
  CHECK(c.outputs().size() == 1);
  auto zero = eval_circuit(c, vector_point(Vec3{1, 1, 1}, Vec3{2, 2, 2}));
  CHECK(zero[0].is_zero());
  auto nine = eval_circuit(c, vector_point(Vec3{1, 0, 0}, Vec3{0, 1, 2}));
  // value (0, -2, 1): squares sum to 5
  CHECK(nine[0] == Scalar(5));
  CHECK_THROWS_AS(sos(sos(coordinatize(parse_term("(V x W)")))), EvalError);
}

TEST_CASE("points with squared outputs") {
  // (0,0,0) -> 0 and (1,2,2) -> 9 through an explicit 3-output circuit
  Circuit c;
  int x = c.add_input("x"), y = c.add_input("y"), z = c.add_input("z");
  c.set_outputs({x, y, z});
  Circuit s = sos(c);
  CHECK(eval_circuit(s, {{"x", Scalar(0)}, {"y", Scalar(0)}, {"z", Scalar(0)}})[0] ==
        Scalar(0));
  CHECK(eval_circuit(s, {{"x", Scalar(1)}, {"y", Scalar(2)}, {"z", Scalar(2)}})[0] ==
        Scalar(9));
}

TEST_CASE("node counts stay within the linear bound") {
  std::mt19937_64 rng(52);
  std::vector<std::string> vars{"V", "W", "U"};
  for (int i = 0; i < 120; ++i) {
    TermPtr t = test::random_cross_term(rng, 1 + static_cast<int>(rng() % 10), vars);
    Circuit c = coordinatize(t);
    CHECK(static_cast<long long>(c.size()) <= 12 * leaf_count(t) + 9);
  }
  // shared gadget structures stay linear through hash-consing
  Instance inst = compile_constant_free(parse_poly("X*X*X - X - 1"));
  Circuit c = coordinatize(inst.terms[0]);
  CHECK(static_cast<long long>(c.size()) <= 12 * leaf_count(inst.terms[0]) + 9);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bound(coordinatize(parse_term("V"))) == 1);
  CHECK(degree_bound(coordinatize(parse_term("(V x W)"))) == 2);
  Circuit ex1 = coordinatize(test::everywhere_zero_term());
  CHECK(degree_bound(ex1) == 6);
  CHECK(degree_bound(sos(ex1)) == 12);

  std::mt19937_64 rng(53);
  std::vector<std::string> vars{"V", "W"};
  for (int i = 0; i < 50; ++i) {
    TermPtr t = test::random_cross_term(rng, 1 + static_cast<int>(rng() % 8), vars);
    CHECK(degree_bound(coordinatize(t)) == leaf_count(t));
  }
}

TEST_CASE("ring terms as circuits") {
  Circuit c = ring_to_circuit(parse_poly("X*X - 2"));
  CHECK(c.outputs().size() == 1);
  CHECK(eval_circuit(c, {{"X", Scalar(3)}})[0] == Scalar(7));
  CHECK(degree_bound(c) == 2);
}

TEST_CASE("identity testing: verdicts carry verified witnesses") {
  Circuit zero = sos(coordinatize(test::everywhere_zero_term()));
  PitResult pz = pit_random(zero, 40, 7);
  CHECK(!pz.nonzero);
  CHECK(pz.error_bound == "2^-40");
  CHECK(pz.trials == 8);
  CHECK(test::circuit_to_dense(coordinatize(test::everywhere_zero_term()))[0].is_zero());

  Circuit nz = sos(coordinatize(parse_term("(V x W)")));
  PitResult pn = pit_random(nz, 40, 7);
  CHECK(pn.nonzero);
  CHECK(pn.trials == 1);
  CHECK(!eval_circuit(nz, pn.witness)[0].is_zero());
}

TEST_CASE("sample set size follows the error budget") {
  Circuit ex1 = sos(coordinatize(parse_term("((V x W) x (V x (V x W)))")));
  long long deg = degree_bound(ex1);
  CHECK(deg == 10);
  PitResult r = pit_random(ex1, 20, 1, 1);
  mpz_class min_size = mpz_class(10) << 20;
  CHECK(r.sample_set_size >= min_size);
}

TEST_CASE("identity testing is deterministic in the seed") {
  Circuit nz = sos(coordinatize(parse_term("(V x W)")));
  PitResult a = pit_random(nz, 10, 99);
  PitResult b = pit_random(nz, 10, 99);
  CHECK(a.nonzero == b.nonzero);
  CHECK(a.witness == b.witness);
}

TEST_CASE("input-free circuits are tested exactly") {
  Circuit c;
  int one = c.add_const(Scalar(1));
  c.set_outputs({c.add_gate(Circuit::Op::Sub, one, one)});
  PitResult r = pit_random(c, 40, 1);
  CHECK(!r.nonzero);
  CHECK(r.error_bound == "exact");

  Circuit d;
  d.set_outputs({d.add_const(Scalar(5))});
  CHECK(pit_random(d, 40, 1).nonzero);
}

TEST_CASE("pit agrees with the dense oracle on random small terms") {
  std::mt19937_64 rng(54);
  std::vector<std::string> vars{"V", "W"};
  for (int i = 0; i < 60; ++i) {
    TermPtr t = test::random_cross_term(rng, 1 + static_cast<int>(rng() % 6), vars);
    bool dense_zero = test::coordinates_identically_zero(t);
    PitResult r = pit_random(sos(coordinatize(t)), 40, 1000 + i);
    CHECK(r.nonzero == !dense_zero);
  }
}

TEST_CASE("circuit dump format") {
  Circuit c = coordinatize(parse_term("V"));
  std::string d = c.dump();
  CHECK(d.find("outputs: 0 1 2") == 0);
  CHECK(d.find("0 input V[0] -") != std::string::npos);
}

TEST_CASE("nontriviality instances from polynomials agree with the oracles") {
  // p = 0 and p = X - X are trivial; p = X is not
  Instance zero = xnontriv_equation_from_poly(parse_poly("0"));
  Circuit cz = sos(coordinatize(zero.terms[0]));
  CHECK(!pit_random(cz, 30, 5).nonzero);

  Instance xmx = xnontriv_equation_from_poly(parse_poly("X - X"));
  CHECK(expand_dense(parse_poly("X - X")).is_zero());
  CHECK(!pit_random(sos(coordinatize(xmx.terms[0])), 30, 5).nonzero);

  Instance x = xnontriv_equation_from_poly(parse_poly("X"));
  CHECK(!expand_dense(parse_poly("X")).is_zero());
  PitResult r = pit_random(sos(coordinatize(x.terms[0])), 30, 5);
  CHECK(r.nonzero);
  CHECK(!eval_circuit(sos(coordinatize(x.terms[0])), r.witness)[0].is_zero());
}
