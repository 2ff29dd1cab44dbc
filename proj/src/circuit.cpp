#include "xsat/circuit.hpp"

#include <unordered_map>

namespace xsat {

int Circuit::add_input(const std::string& label) {
  auto it = input_ids_.find(label);
  if (it != input_ids_.end()) return it->second;
  int id = static_cast<int>(gates_.size());
  gates_.push_back(Gate{Op::Input, -1, -1, label, Scalar(0)});
  input_ids_.emplace(label, id);
  input_labels_.push_back(label);
  return id;
}

int Circuit::add_const(const Scalar& value) {
  auto it = const_ids_.find(value);
  if (it != const_ids_.end()) return it->second;
  int id = static_cast<int>(gates_.size());
  gates_.push_back(Gate{Op::Const, -1, -1, "", value});
  const_ids_.emplace(value, id);
  return id;
}

int Circuit::add_gate(Op op, int lhs, int rhs) {
  if (lhs < 0 || rhs < 0 || lhs >= static_cast<int>(gates_.size()) ||
      rhs >= static_cast<int>(gates_.size()))
    throw EvalError("gate operand out of range");
  auto key = std::make_tuple(static_cast<int>(op), lhs, rhs);
  auto it = gate_ids_.find(key);
  if (it != gate_ids_.end()) return it->second;
  int id = static_cast<int>(gates_.size());
  gates_.push_back(Gate{op, lhs, rhs, "", Scalar(0)});
  gate_ids_.emplace(key, id);
  return id;
}

void Circuit::set_outputs(std::vector<int> outs) {
  for (int o : outs)
    if (o < 0 || o >= static_cast<int>(gates_.size()))
      throw EvalError("output id out of range");
  outputs_ = std::move(outs);
}

std::string Circuit::dump() const {
  std::string out = "outputs:";
  for (int o : outputs_) out += " " + std::to_string(o);
  out += "\n";
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    out += std::to_string(i) + " ";
    switch (g.op) {
      case Op::Input:
        out += "input " + g.label + " -";
        break;
      case Op::Const:
        out += "const " + g.value.str() + " -";
        break;
      case Op::Add:
        out += "add " + std::to_string(g.lhs) + " " + std::to_string(g.rhs);
        break;
      case Op::Sub:
        out += "sub " + std::to_string(g.lhs) + " " + std::to_string(g.rhs);
        break;
      case Op::Mul:
        out += "mul " + std::to_string(g.lhs) + " " + std::to_string(g.rhs);
        break;
    }
    out += "\n";
  }
  return out;
}

Circuit coordinatize(const TermPtr& t) {
  Circuit c;
  std::unordered_map<const Term*, std::array<int, 3>> memo;
  auto go = [&](auto&& self, const TermPtr& n) -> std::array<int, 3> {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    std::array<int, 3> ids{};
    switch (n->kind()) {
      case Term::Kind::Var:
        for (int i = 0; i < 3; ++i)
          ids[i] = c.add_input(n->name() + "[" + std::to_string(i) + "]");
        break;
      case Term::Kind::AffineConst: {
        const Vec3& v = n->affine_value();
        ids = {c.add_const(v.x), c.add_const(v.y), c.add_const(v.z)};
        break;
      }
      case Term::Kind::ProjConst:
        throw EvalError("projective constant has no affine coordinates");
      case Term::Kind::Cross: {
        auto a = self(self, n->left());
        auto b = self(self, n->right());
        auto minor = [&](int i, int j) {
          return c.add_gate(Circuit::Op::Sub, c.add_gate(Circuit::Op::Mul, a[i], b[j]),
                            c.add_gate(Circuit::Op::Mul, a[j], b[i]));
        };
        ids = {minor(1, 2), minor(2, 0), minor(0, 1)};
        break;
      }
    }
    memo.emplace(n.get(), ids);
    return ids;
  };
  auto outs = go(go, t);
  c.set_outputs({outs[0], outs[1], outs[2]});
  return c;
}

Circuit sos(const Circuit& c) {
  if (c.outputs().size() != 3) throw EvalError("sum of squares expects 3 outputs");
  Circuit r = c;
  int s0 = r.add_gate(Circuit::Op::Mul, c.outputs()[0], c.outputs()[0]);
  int s1 = r.add_gate(Circuit::Op::Mul, c.outputs()[1], c.outputs()[1]);
  int s2 = r.add_gate(Circuit::Op::Mul, c.outputs()[2], c.outputs()[2]);
  r.set_outputs({r.add_gate(Circuit::Op::Add, r.add_gate(Circuit::Op::Add, s0, s1), s2)});
  return r;
}

Circuit ring_to_circuit(const RingPtr& p) {
  Circuit c;
  std::unordered_map<const RingTerm*, int> memo;
  auto go = [&](auto&& self, const RingPtr& n) -> int {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    int id = -1;
    switch (n->kind()) {
      case RingTerm::Kind::Var:
        id = c.add_input(n->name());
        break;
      case RingTerm::Kind::Const:
        id = c.add_const(n->value());
        break;
      case RingTerm::Kind::Add:
        id = c.add_gate(Circuit::Op::Add, self(self, n->left()), self(self, n->right()));
        break;
      case RingTerm::Kind::Sub:
        id = c.add_gate(Circuit::Op::Sub, self(self, n->left()), self(self, n->right()));
        break;
      case RingTerm::Kind::Mul:
        id = c.add_gate(Circuit::Op::Mul, self(self, n->left()), self(self, n->right()));
        break;
    }
    memo.emplace(n.get(), id);
    return id;
  };
  c.set_outputs({go(go, p)});
  return c;
}

std::vector<Scalar> eval_circuit(const Circuit& c,
                                 const std::map<std::string, Scalar>& point) {
  std::vector<Scalar> values(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gates()[i];
    switch (g.op) {
      case Circuit::Op::Input: {
        auto it = point.find(g.label);
        if (it == point.end()) throw EvalError("unbound circuit input '" + g.label + "'");
        values[i] = it->second;
        break;
      }
      case Circuit::Op::Const:
        values[i] = g.value;
        break;
      case Circuit::Op::Add:
        values[i] = values[g.lhs] + values[g.rhs];
        break;
      case Circuit::Op::Sub:
        values[i] = values[g.lhs] - values[g.rhs];
        break;
      case Circuit::Op::Mul:
        values[i] = values[g.lhs] * values[g.rhs];
        break;
    }
  }
  std::vector<Scalar> out;
  for (int o : c.outputs()) out.push_back(values[o]);
  return out;
}

long long degree_bound(const Circuit& c) {
  std::vector<long long> deg(c.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gates()[i];
    switch (g.op) {
      case Circuit::Op::Input:
        deg[i] = 1;
        break;
      case Circuit::Op::Const:
        deg[i] = 0;
        break;
      case Circuit::Op::Add:
      case Circuit::Op::Sub:
        deg[i] = std::max(deg[g.lhs], deg[g.rhs]);
        break;
      case Circuit::Op::Mul:
        deg[i] = deg[g.lhs] + deg[g.rhs];
        break;
    }
  }
  long long m = 0;
  for (int o : c.outputs()) m = std::max(m, deg[o]);
  return m;
}

PitResult pit_random(const Circuit& c, int error_exponent, unsigned long seed,
                     int trials) {
  if (c.outputs().size() != 1) throw EvalError("identity test expects a single output");
  if (error_exponent < 1) throw EvalError("error exponent must be at least 1");
  if (trials < 1) throw EvalError("need at least one trial");

  PitResult res;
  if (c.inputs().empty()) {
    // No inputs: the output is a constant, test it directly.
    auto v = eval_circuit(c, {});
    res.nonzero = !v[0].is_zero();
    res.error_bound = "exact";
    res.trials = 0;
    res.sample_set_size = 0;
    return res;
  }

  long long deg = std::max<long long>(1, degree_bound(c));
  mpz_class set_size = mpz_class(static_cast<long>(deg)) << error_exponent;  // |S| = 2^k * deg
  mpz_class half = (set_size + 1) / 2;
  mpz_class span = 2 * half + 1;  // symmetric range {-half, ..., half}
  res.sample_set_size = span;
  res.error_bound = "2^-" + std::to_string(error_exponent);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::map<std::string, Scalar> point;
    for (const auto& label : c.inputs()) {
      mpz_class draw = rng.get_z_range(span) - half;
      point.emplace(label, Scalar(draw));
    }
    res.trials = trial + 1;
    auto v = eval_circuit(c, point);
    if (!v[0].is_zero()) {
      res.nonzero = true;
      res.witness = std::move(point);
      return res;
    }
  }
  res.nonzero = false;
  return res;
}

}  // namespace xsat
