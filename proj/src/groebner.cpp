#include "cellalg/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <utility>

#include "cellalg/errors.hpp"

namespace cellalg {

namespace {

std::mutex g_budget_mutex;
GroebnerBudget g_budget;

std::atomic<bool> g_audit_on{false};
std::atomic<std::size_t> g_audit_checked{0};
std::atomic<std::size_t> g_audit_failed{0};

// Division returning quotient multipliers per divisor when requested.
Polynomial divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  std::vector<Polynomial>* quotients) {
  const auto& field = f.field();
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (d.is_zero() || !d.leading_monomial().divides(lt.mono)) continue;
      const Monomial m = lt.mono / d.leading_monomial();
      const Scalar c = field.div(lt.coeff, d.leading_coeff());
      if (quotients) (*quotients)[i] += Polynomial::monomial(f.ring(), m, c);
      p = p.sub_mul_term(c, m, d);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p -= Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
    }
  }
  // Leading terms were removed in decreasing order, so rem is already canonical.
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Polynomial> minimize_and_interreduce(std::vector<Polynomial> g, const MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    reduced.push_back(divide(minimal[i], others, nullptr).monic());
  }
  return reduced;
}

}  // namespace

IdealPresentation::IdealPresentation(RingPtr r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw AmbientMismatch("ideal generator outside the ambient ring");
  }
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBudget default_budget() {
  std::lock_guard lock(g_budget_mutex);
  return g_budget;
}

void set_default_budget(GroebnerBudget budget) {
  std::lock_guard lock(g_budget_mutex);
  g_budget = budget;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring)) throw AmbientMismatch("normal form across different rings");
  return divide(f, gb.basis, nullptr);
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& d : divisors) {
    if (!same_ring(f.ring(), d.ring())) throw AmbientMismatch("reduction across different rings");
  }
  return divide(f, divisors, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& field = f.field();
  Polynomial a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  Polynomial b = g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return a - b;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerBudget& budget) {
  RingPtr ring = ideal.ring->order() == order
                     ? ideal.ring
                     : make_ring(ideal.ring->field(), ideal.ring->variables(), order);
  const Polynomial one = Polynomial::constant(ring, Scalar(1));
  auto finish = [&](std::vector<Polynomial> basis) {
    GroebnerBasis gb{ring, std::move(basis)};
    if (g_audit_on.load()) {
      std::vector<Polynomial> gens;
      for (const auto& g : ideal.generators) gens.push_back(change_ring(g, ring));
      const bool ok = verify_reduced_basis(gb, gens).ok();
      ++g_audit_checked;
      if (!ok) ++g_audit_failed;
    }
    return gb;
  };

  std::vector<Polynomial> g;
  for (const auto& gen : ideal.generators) {
    Polynomial p = change_ring(gen, ring);
    if (p.is_zero()) continue;
    if (p.is_constant()) return finish({one});
    g.push_back(p.monic());
  }

  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  std::vector<Pair> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, g[i].leading_monomial().lcm(g[j].leading_monomial())});
      pending_index.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties broken by index for determinism.
    auto best = pending.begin();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const int c = order.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
    }
    const Pair pair = *best;
    pending.erase(best);
    pending_index.erase({pair.i, pair.j});

    if (++processed > budget.max_pairs) {
      throw BudgetExceeded("Groebner basis computation exceeded " +
                           std::to_string(budget.max_pairs) + " pairs");
    }

    const Monomial& lm_i = g[pair.i].leading_monomial();
    const Monomial& lm_j = g[pair.j].leading_monomial();
    if (lm_i.coprime(lm_j)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = g[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) continue;

    Polynomial h = divide(s_polynomial(g[pair.i], g[pair.j]), g, nullptr);
    if (h.is_zero()) continue;
    if (h.is_constant()) return finish({one});
    g.push_back(h.monic());
    if (g.size() > budget.max_basis) {
      throw BudgetExceeded("Groebner basis grew beyond " + std::to_string(budget.max_basis) +
                           " polynomials");
    }
    add_pairs_for(g.size() - 1);
  }
  return finish(minimize_and_interreduce(std::move(g), order));
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order) {
  return buchberger(ideal, order, default_budget());
}

GroebnerBasis buchberger(const IdealPresentation& ideal) {
  return buchberger(ideal, ideal.ring->order(), default_budget());
}

BasisCheck verify_reduced_basis(const GroebnerBasis& gb, const std::vector<Polynomial>& generators) {
  BasisCheck check;
  const auto& b = gb.basis;
  for (const auto& g : b) {
    if (g.is_zero() || !FieldSpec::is_one(g.leading_coeff())) {
      check.monic = false;
      check.detail = "non-monic element " + g.to_string();
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (i == k || b[k].is_zero()) continue;
      for (const auto& t : b[i].terms()) {
        if (b[k].leading_monomial().divides(t.mono)) {
          check.interreduced = false;
          check.detail = "term of " + b[i].to_string() + " divisible by leading monomial of " +
                         b[k].to_string();
        }
      }
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!normal_form(s_polynomial(b[i], b[j]), gb).is_zero()) {
        check.s_pairs_reduce = false;
        check.detail = "S-polynomial of " + b[i].to_string() + " and " + b[j].to_string();
      }
    }
  }
  for (const auto& g : generators) {
    if (!normal_form(change_ring(g, gb.ring), gb).is_zero()) {
      check.generators_reduce = false;
      check.detail = "generator " + g.to_string() + " does not reduce to 0";
    }
  }
  return check;
}

void enable_basis_audit(bool on) { g_audit_on.store(on); }

BasisAudit basis_audit() { return {g_audit_checked.load(), g_audit_failed.load()}; }

void reset_basis_audit() {
  g_audit_checked.store(0);
  g_audit_failed.store(0);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw AmbientMismatch("division across different rings");
  if (g.is_zero()) throw DivisionByZero("exact division by zero");
  std::vector<Polynomial> q{Polynomial(f.ring())};
  if (!divide(f, {g}, &q).is_zero()) return std::nullopt;
  return q[0];
}

}  // namespace cellalg
