#include "cellalg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

namespace {

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& front_vars) {
  const Ring& ring = *ideal.ring;
  if (front_vars.empty()) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) {
      if (!g.is_zero()) gens.push_back(g);
    }
    return IdealPresentation(ideal.ring, std::move(gens));
  }
  std::vector<bool> front(ring.nvars(), false);
  for (auto v : front_vars) {
    if (v >= ring.nvars()) throw std::out_of_range("elimination variable out of range");
    front[v] = true;
  }
  std::vector<std::string> reordered;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (front[i]) reordered.push_back(ring.variables()[i]);
  }
  const std::size_t block = reordered.size();
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!front[i]) reordered.push_back(ring.variables()[i]);
  }
  RingPtr elim_ring = make_ring(ring.field(), reordered, MonomialOrder::block(block));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(change_ring(g, elim_ring));
  const GroebnerBasis gb = buchberger(IdealPresentation(elim_ring, gens));

  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    const auto sup = g.support();
    const bool free_of_front = std::all_of(sup.begin(), sup.end(), [&](std::size_t v) { return v >= block; });
    if (free_of_front) kept.push_back(change_ring(g, ideal.ring));
  }
  return IdealPresentation(ideal.ring, std::move(kept));
}

IdealPresentation ideal_intersection(const IdealPresentation& i, const IdealPresentation& j) {
  if (!same_ring(i.ring, j.ring)) throw AmbientMismatch("intersection of ideals in different rings");
  const Ring& ring = *i.ring;
  std::vector<std::string> vars{fresh_name(ring, "t")};
  vars.insert(vars.end(), ring.variables().begin(), ring.variables().end());
  RingPtr tagged = make_ring(ring.field(), vars, ring.order());
  const Polynomial t = Polynomial::variable(tagged, 0);
  const Polynomial one_minus_t = Polynomial::constant(tagged, Scalar(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(t * change_ring(g, tagged));
  for (const auto& g : j.generators) gens.push_back(one_minus_t * change_ring(g, tagged));
  const IdealPresentation elim = eliminate(IdealPresentation(tagged, gens), {0});
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators) out.push_back(change_ring(g, i.ring));
  return IdealPresentation(i.ring, std::move(out));
}

IdealPresentation ideal_quotient(const IdealPresentation& ideal, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  if (!same_ring(ideal.ring, b.ring())) throw AmbientMismatch("quotient element outside the ring");
  const IdealPresentation meet = ideal_intersection(ideal, IdealPresentation(ideal.ring, {b}));
  std::vector<Polynomial> out;
  for (const auto& g : meet.generators) {
    auto q = exact_divide(g, b);
    if (!q) throw InternalInconsistency("element of I ∩ (b) not divisible by b: " + g.to_string());
    out.push_back(std::move(*q));
  }
  return IdealPresentation(ideal.ring, std::move(out));
}

bool ideal_contains(const IdealPresentation& ideal, const Polynomial& f) {
  return normal_form(f, buchberger(ideal)).is_zero();
}

bool ideal_includes(const IdealPresentation& ideal, const IdealPresentation& j) {
  const GroebnerBasis gb = buchberger(ideal);
  return std::all_of(j.generators.begin(), j.generators.end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b) {
  return ideal_includes(a, b) && ideal_includes(b, a);
}

}  // namespace cellalg
