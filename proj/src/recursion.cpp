#include "ptboot/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

namespace ptboot {

int PolynomialPotential::degree() const {
  return static_cast<int>(coefficients.size()) - 1;
}

void PolynomialPotential::validate() const {
  if (degree() < 1) throw Error("potential degree must be >= 1");
  if (degree() > 8) throw DegreeTooHigh("potential degree must be <= 8");
  if (coefficients.back() == 0.0) throw Error("trailing potential coefficient must be nonzero");
}

double RecursionTerm::eval(double t, double E) const {
  double acc = 0.0;
  for (const auto& m : poly) acc += m.coeff * std::pow(t, m.t_pow) * std::pow(E, m.e_pow);
  return acc;
}

std::string RecursionRelation::to_json() const {
  nlohmann::json j;
  j["solved_offset"] = solved_offset;
  j["seed_count"] = seed_count();
  j["terms"] = nlohmann::json::array();
  for (const auto& term : terms) {
    nlohmann::json jt;
    jt["offset"] = term.offset;
    jt["poly"] = nlohmann::json::array();
    for (const auto& m : term.poly) jt["poly"].push_back({m.coeff, m.t_pow, m.e_pow});
    j["terms"].push_back(jt);
  }
  return j.dump(2);
}

RecursionRelation derive_x_moment_recursion(const PolynomialPotential& V) {
  V.validate();

  RecursionRelation rel;
  rel.terms.reserve(V.coefficients.size() + 2);
  auto term_at = [&rel](int offset) -> RecursionTerm& {
    for (auto& t : rel.terms)
      if (t.offset == offset) return t;
    rel.terms.push_back(RecursionTerm{offset, {}});
    return rel.terms.back();
  };

  // kinetic part: 4 t E m_{t-1} + t(t-1)(t-2) m_{t-3}
  term_at(-1).poly.push_back({4.0, 1, 1});
  term_at(-3).poly = {{1.0, 3, 0}, {-3.0, 2, 0}, {2.0, 1, 0}};
  // potential part: -(4t + 2k) c_k m_{t+k-1}
  for (int k = 0; k < static_cast<int>(V.coefficients.size()); ++k) {
    const double ck = V.coefficients[k];
    if (ck == 0.0) continue;
    auto& term = term_at(k - 1);
    term.poly.push_back({-4.0 * ck, 1, 0});
    if (k > 0) term.poly.push_back({-2.0 * k * ck, 0, 0});
  }

  std::sort(rel.terms.begin(), rel.terms.end(),
            [](const RecursionTerm& a, const RecursionTerm& b) { return a.offset < b.offset; });
  rel.solved_offset = rel.terms.back().offset;
  return rel;
}

MomentSequence evaluate_recursion(const RecursionRelation& rel, double E,
                                  const std::vector<double>& seeds, Index depth) {
  if (static_cast<int>(seeds.size()) != rel.seed_count())
    throw SeedCountMismatch("expected " + std::to_string(rel.seed_count()) + " seeds, got " +
                            std::to_string(seeds.size()));
  const int so = rel.solved_offset;
  if (so < 1) throw Error("relation cannot be advanced: solved_offset < 1");

  MomentSequence seq;
  seq.values.setZero(depth + 1);
  seq.values[0] = 1.0;
  for (int j = 1; j < so && j <= depth; ++j) seq.values[j] = seeds[j - 1];

  const RecursionTerm* lead = nullptr;
  for (const auto& t : rel.terms)
    if (t.offset == so) lead = &t;

  double scale = 1.0;
  for (Index t = 0; t + so <= depth; ++t) {
    const double den = lead->eval(static_cast<double>(t), E);
    if (std::abs(den) < 1e-12 * scale)
      throw SingularRecursion("leading coefficient vanished at t = " + std::to_string(t));
    double acc = 0.0;
    for (const auto& term : rel.terms) {
      if (term.offset == so) continue;
      const Index idx = t + term.offset;
      if (idx < 0) continue;  // those coefficients carry factors of t and vanish here
      acc += term.eval(static_cast<double>(t), E) * seq.values[idx];
    }
    seq.values[t + so] = -acc / den;
    scale = std::max(scale, std::abs(seq.values[t + so]));
  }
  seq.seed_description = "m0=1, seeds m1..m" + std::to_string(std::max(0, so - 1));
  return seq;
}

}  // namespace ptboot
