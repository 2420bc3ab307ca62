// Acceptance criteria 1-8.  One PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cellalg/decide.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/groebner.hpp"
#include "cellalg/oracle.hpp"
#include "support.hpp"

using namespace cellalg;
using namespace testsupport;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. Q[x]/(f), n = 1, phi = (1): semisimple iff gcd(f, f') is constant.
Outcome univariate_family() {
  std::mt19937_64 rng(2024);
  auto r = ring_q({"x"});
  std::size_t agree = 0, squarefree = 0;
  const std::size_t total = 50;
  for (std::size_t i = 0; i < total; ++i) {
    Polynomial f(r);
    do {
      // half the draws get a forced repeated factor
      const auto base = random_poly(rng, r, i % 2 ? 6 : 3, 4, 4);
      f = i % 2 ? base : base * base;
    } while (f.total_degree() == 0 || f.total_degree() > 6);
    const auto qr = make_quotient_ring(IdealPresentation(r, {f}));
    const CellularAlgebraSpec spec = spec_of({layer(qr, {{"1"}})});
    const bool yes = check_semisimple(spec).answer == Answer::yes;
    const Dense d = to_dense(f);
    const bool sf = dense_gcd(d, dense_derivative(d)).c.size() == 1;
    squarefree += sf;
    agree += yes == sf;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree (" +
                              std::to_string(squarefree) + " squarefree)"};
}

// 2. Criteria (with the top layer added) vs Dickson radical of the realization.
Outcome oracle_equivalence() {
  std::size_t agree = 0, yes = 0;
  const std::size_t total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    const auto spec = oracle::random_instance(oracle::corpus_seed(7, i), oracle::RandomParams{});
    const auto c = oracle::oracle_check(spec);
    agree += c.applicable && c.agrees;
    yes += c.oracle_semisimple;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " oracle agreements (" +
                              std::to_string(yes) + " semisimple)"};
}

// 3. Unitalized switch algebras of M_2(Q).
Outcome switch_radical() {
  const auto m2 = oracle::matrix_algebra(FieldSpec::rationals(), 2);
  auto radical_dim = [&](const Vector& a0) {
    return oracle::dickson_radical(oracle::unitalize(oracle::switch_realization(m2, a0))).size();
  };
  const std::size_t id = radical_dim(*m2.identity());
  const std::size_t e11 = radical_dim(m2.basis_vector(0));
  const std::size_t zero = radical_dim(m2.zero());
  std::ostringstream os;
  os << "radical dims: Id " << id << ", E11 " << e11 << ", 0 " << zero;
  return {id == 0 && e11 > 0 && zero >= 4, os.str()};
}

// 4. Asymptotic map: multiplicative and bijective for unit dets, kernel otherwise.
Outcome asymptotic_isomorphism() {
  std::size_t unit_specs = 0, zd_specs = 0, failures = 0;
  std::mt19937_64 rng(44);
  for (std::size_t i = 0; (unit_specs < 20 || zd_specs < 20) && i < 5000; ++i) {
    const auto spec = oracle::random_instance(oracle::corpus_seed(4, i), oracle::RandomParams{});
    bool all_units = true, some_zd = false;
    for (const auto& l : spec.layers) {
      const auto det = det_phi(*l);
      all_units &= is_unit(*l->ring, det).unit;
      some_zd |= is_zero_divisor(*l->ring, det).zero_divisor;
    }
    if (all_units && unit_specs < 20) {
      ++unit_specs;
      for (const auto& l : spec.layers) {
        const auto& qr = l->ring;
        auto rnd = [&] {
          BMatrix m(qr, l->vdim);
          for (std::size_t s = 0; s < l->vdim; ++s)
            for (std::size_t t = 0; t < l->vdim; ++t) m.set(s, t, random_poly(rng, qr->ring(), 3, 3, 3));
          return make_layer_element(l, m);
        };
        for (int k = 0; k < 20; ++k) {
          const auto a = rnd(), b = rnd();
          if (!(asymptotic_map(*l, layer_multiply(a, b)) == asymptotic_map(*l, a) * asymptotic_map(*l, b)))
            ++failures;
        }
        // bijective: X -> X phi has full rank, and phi^-1 undoes it
        const Matrix op = right_multiplication_operator(l->phi);
        if (rank(op) != op.rows()) ++failures;
        const auto inv = phi_inverse(*l);
        if (!inv) {
          ++failures;
        } else {
          const auto a = rnd();
          if (!(asymptotic_map(*l, a) * *inv == a.coords)) ++failures;
        }
        if (asymptotic_kernel_element(l)) ++failures;
      }
    } else if (some_zd && zd_specs < 20) {
      ++zd_specs;
      bool found = false;
      for (const auto& l : spec.layers) {
        if (!is_zero_divisor(*l->ring, det_phi(*l)).zero_divisor) continue;
        const auto ker = asymptotic_kernel_element(l);
        if (ker && !ker->coords.is_zero() && asymptotic_map(*l, *ker).is_zero()) found = true;
      }
      if (!found) ++failures;
    }
  }
  std::ostringstream os;
  os << unit_specs << " unit-det specs, " << zd_specs << " zero-divisor specs, " << failures << " failures";
  return {unit_specs == 20 && zd_specs == 20 && failures == 0, os.str()};
}

// 5. det is a zero-divisor iff X -> X M is singular on M_n(B).
Outcome mccoy() {
  std::mt19937_64 rng(55);
  auto r = ring_q({"x", "y"});
  const std::vector<std::vector<std::string>> ideals = {
      {"x^2 - x", "y"}, {"x^2", "y^2"}, {"x^3 - x", "y - x"}, {"x^2 + 1", "y^2 - 2"}, {"x*y", "x^2 - x", "y^2"}};
  std::vector<QuotientRingPtr> rings;
  for (const auto& g : ideals) rings.push_back(quotient(r, g));
  std::size_t agree = 0, singular = 0;
  const std::size_t total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& qr = rings[i % rings.size()];
    const std::size_t n = 1 + i % 3;
    BMatrix m(qr, n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) m.set(s, t, random_poly(rng, r, 2, 2, 2));
    const Matrix op = right_multiplication_operator(m);
    const bool sing = rank(op) < op.rows();
    singular += sing;
    agree += is_zero_divisor(*qr, determinant(m)).zero_divisor == sing;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree (" +
                              std::to_string(singular) + " singular)"};
}

// 6. separable == semisimple over Q and F_5.
Outcome separable_self_check() {
  std::size_t agree = 0, total = 0;
  for (const FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
    oracle::RandomParams params;
    params.field = field;
    for (std::size_t i = 0; i < 150; ++i) {
      const auto spec = oracle::random_instance(oracle::corpus_seed(6, i), params);
      ++total;
      try {
        const auto layers = analyze(spec);
        agree += check_separable(layers).answer == check_semisimple(layers).answer;
      } catch (const InternalInconsistency&) {
      }
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree over Q and F5"};
}

// 7. artinian iff every layer has finitely many standard monomials.
Outcome artinian() {
  std::vector<CellularAlgebraSpec> specs;
  for (std::size_t i = 0; i < 40; ++i)
    specs.push_back(oracle::random_instance(oracle::corpus_seed(8, i), oracle::RandomParams{}));
  auto r = ring_q({"x", "y"});
  const auto zero_ideal = univariate_spec("0", {{"1"}});
  specs.push_back(zero_ideal);
  specs.push_back(spec_of({layer(quotient(r, {"x*y"}), {{"1"}}), layer(quotient(r, {"x^2", "y^2"}), {{"1"}})}));
  specs.push_back(spec_of({layer(quotient(r, {"x^2 - 1", "y^3"}), {{"1", "x"}, {"x", "y"}})}));
  specs.push_back(spec_of({layer(quotient(r, {"x^2 - y"}), {{"1"}})}));
  std::size_t agree = 0, implication_failures = 0;
  for (const auto& spec : specs) {
    bool finite = true;
    for (const auto& l : spec.layers) finite &= l->ring->zero_dimensional() && !l->ring->standard_monomials().empty();
    const auto layers = analyze(spec);
    const Answer art = check_artinian(layers).answer;
    agree += (art == Answer::yes) == finite;
    if (check_semisimple(layers).answer == Answer::yes && art != Answer::yes) ++implication_failures;
  }
  const bool zero_no = check_artinian(zero_ideal).answer == Answer::no;
  std::ostringstream os;
  os << agree << "/" << specs.size() << " agree, (0) in Q[x] answers " << (zero_no ? "NO" : "not NO") << ", "
     << implication_failures << " semisimple-without-artinian";
  return {agree == specs.size() && zero_no && implication_failures == 0, os.str()};
}

}  // namespace

int main() {
  enable_basis_audit(true);
  reset_basis_audit();
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "univariate family", 10, univariate_family},
      {2, "oracle equivalence", 60, oracle_equivalence},
      {3, "switch algebra radical", 1, switch_radical},
      {4, "asymptotic isomorphism", 30, asymptotic_isomorphism},
      {5, "McCoy cross-check", 30, mccoy},
      {6, "separable self-check", 30, separable_self_check},
      {7, "artinian test", 5, artinian},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_s;
    all &= pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " - " << o.detail
              << " (" << secs << " s, limit " << c.limit_s << " s)\n";
  }
  const auto audit = basis_audit();
  const bool audit_ok = audit.checked > 0 && audit.failed == 0;
  all &= audit_ok;
  std::cout << "criterion 8 [basis soundness]: " << (audit_ok ? "PASS" : "FAIL") << " - " << audit.checked
            << " bases verified, " << audit.failed << " failed\n";
  return all ? 0 : 1;
}
