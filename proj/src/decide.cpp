#include "cellalg/decide.hpp"

#include "cellalg/errors.hpp"

namespace cellalg {

std::string to_string(Property p) {
  switch (p) {
    case Property::artinian:
      return "artinian";
    case Property::semisimple:
      return "semisimple";
    case Property::jacobson_semisimple:
      return "jacobson_semisimple";
    case Property::semiprime:
      return "semiprime";
    case Property::separable:
      return "separable";
  }
  return "?";
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "YES";
    case Answer::no:
      return "NO";
    case Answer::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::optional<Property> property_from_string(const std::string& name) {
  if (name == "artinian") return Property::artinian;
  if (name == "semisimple") return Property::semisimple;
  if (name == "jacobson" || name == "jacobson_semisimple") return Property::jacobson_semisimple;
  if (name == "semiprime") return Property::semiprime;
  if (name == "separable") return Property::separable;
  return std::nullopt;
}

LayerCertificate analyze_layer(const CellLayer& layer, std::size_t index) {
  const QuotientRing& qr = *layer.ring;
  LayerCertificate cert{index,
                        qr.dimension(),
                        qr.zero_dimensional(),
                        is_radical(qr),
                        is_etale(qr),
                        det_phi(layer),
                        {},
                        {}};
  cert.det_unit = is_unit(qr, cert.det_phi);
  cert.det_zero_divisor = is_zero_divisor(qr, cert.det_phi);
  if (qr.zero_dimensional() && !qr.is_zero_ring()) {
    // McCoy: phi is a zero-divisor in M_n(B) iff det(phi) is one in B.
    const Matrix op = right_multiplication_operator(layer.phi);
    const bool singular = rank(op) < op.cols();
    if (singular != cert.det_zero_divisor.zero_divisor) {
      throw InternalInconsistency("layer " + std::to_string(index) +
                                  ": determinant zero-divisor test disagrees with the kernel of X -> X*phi");
    }
    if (cert.det_unit.unit == cert.det_zero_divisor.zero_divisor) {
      throw InternalInconsistency("layer " + std::to_string(index) +
                                  ": det(phi) is neither exactly a unit nor exactly a zero-divisor");
    }
  }
  return cert;
}

std::vector<LayerCertificate> analyze(const CellularAlgebraSpec& spec) {
  std::vector<LayerCertificate> out;
  out.reserve(spec.layers.size());
  for (std::size_t j = 0; j < spec.layers.size(); ++j) out.push_back(analyze_layer(*spec.layers[j], j + 1));
  return out;
}

namespace {

std::string layer_name(const LayerCertificate& c) { return "layer " + std::to_string(c.index); }

Verdict make_verdict(Property p, const std::vector<LayerCertificate>& layers, std::string cited) {
  Verdict v;
  v.property = p;
  v.layers = layers;
  v.cited_statement = std::move(cited);
  return v;
}

void fail(Verdict& v, Answer a, const LayerCertificate& c, std::string reason) {
  v.answer = a;
  v.failing_layer = c.index;
  v.reason = layer_name(c) + ": " + std::move(reason);
}

Verdict sufficient_criterion(Property p, const std::vector<LayerCertificate>& layers, std::string cited) {
  Verdict v = make_verdict(p, layers, std::move(cited));
  for (const auto& c : layers) {
    if (c.radical.answer == TriState::no) {
      fail(v, Answer::unknown, c, "B is not reduced");
      return v;
    }
    if (c.radical.answer == TriState::unknown) {
      fail(v, Answer::unknown, c, "reducedness of B is undecided for this presentation");
      return v;
    }
    if (c.det_zero_divisor.zero_divisor) {
      fail(v, Answer::unknown, c, "pivot phi is a zero-divisor (det = " + c.det_phi.to_string() + ")");
      return v;
    }
  }
  v.answer = Answer::yes;
  v.reason = "every B_j is reduced and no det(phi_j) is a zero-divisor";
  return v;
}

}  // namespace

Verdict check_artinian(const std::vector<LayerCertificate>& layers) {
  Verdict v = make_verdict(Property::artinian, layers, "artinian-iff-zero-dimensional-scheme");
  for (const auto& c : layers) {
    if (!c.zero_dimensional) {
      fail(v, Answer::no, c, "B is not finite-dimensional");
      return v;
    }
  }
  v.answer = Answer::yes;
  v.reason = "every B_j is finite-dimensional";
  return v;
}

Verdict check_semisimple(const std::vector<LayerCertificate>& layers) {
  Verdict v = make_verdict(Property::semisimple, layers,
                           "semisimple-iff-reduced-zero-dimensional-and-invertible-forms");
  for (const auto& c : layers) {
    if (!c.zero_dimensional) {
      fail(v, Answer::no, c, "B is not finite-dimensional");
      return v;
    }
    if (c.radical.answer != TriState::yes) {
      std::string why = "B is not reduced";
      for (const auto& m : c.radical.minimal_polynomials) {
        if (!m.squarefree) {
          why += ": minimal polynomial of " + m.variable + " is " + m.polynomial.to_string() + ", not squarefree";
          break;
        }
      }
      fail(v, Answer::no, c, why);
      return v;
    }
    if (!c.det_unit.unit) {
      fail(v, Answer::no, c, "det(phi) = " + c.det_phi.to_string() + " is not a unit");
      return v;
    }
  }
  v.answer = Answer::yes;
  v.reason = "every B_j is reduced and finite-dimensional and every det(phi_j) is a unit";
  return v;
}

Verdict check_jacobson_sufficient(const std::vector<LayerCertificate>& layers) {
  return sufficient_criterion(Property::jacobson_semisimple, layers,
                              "jacobson-semisimple-if-reduced-and-non-zero-divisor-forms");
}

Verdict check_semiprime_sufficient(const std::vector<LayerCertificate>& layers) {
  return sufficient_criterion(Property::semiprime, layers, "semiprime-if-reduced-and-non-zero-divisor-forms");
}

Verdict check_separable(const std::vector<LayerCertificate>& layers) {
  Verdict v = make_verdict(Property::separable, layers, "separable-iff-etale-layers-and-unit-determinants");
  v.answer = Answer::yes;
  v.reason = "every B_j is etale and every det(phi_j) is a unit";
  for (const auto& c : layers) {
    if (!c.etale.etale) {
      fail(v, Answer::no, c, "B is not etale: " + c.etale.reason);
      break;
    }
    if (!c.det_unit.unit) {
      fail(v, Answer::no, c, "det(phi) = " + c.det_phi.to_string() + " is not a unit");
      break;
    }
  }
  // Both supported fields are perfect, so separability and semisimplicity agree.
  if (v.answer != check_semisimple(layers).answer) {
    throw InternalInconsistency("separable verdict " + to_string(v.answer) +
                                " differs from the semisimple verdict over a perfect field");
  }
  return v;
}

Verdict check_artinian(const CellularAlgebraSpec& spec) { return check_artinian(analyze(spec)); }
Verdict check_semisimple(const CellularAlgebraSpec& spec) { return check_semisimple(analyze(spec)); }
Verdict check_jacobson_sufficient(const CellularAlgebraSpec& spec) {
  return check_jacobson_sufficient(analyze(spec));
}
Verdict check_semiprime_sufficient(const CellularAlgebraSpec& spec) {
  return check_semiprime_sufficient(analyze(spec));
}
Verdict check_separable(const CellularAlgebraSpec& spec) { return check_separable(analyze(spec)); }

Verdict check(Property property, const CellularAlgebraSpec& spec) {
  switch (property) {
    case Property::artinian:
      return check_artinian(spec);
    case Property::semisimple:
      return check_semisimple(spec);
    case Property::jacobson_semisimple:
      return check_jacobson_sufficient(spec);
    case Property::semiprime:
      return check_semiprime_sufficient(spec);
    case Property::separable:
      return check_separable(spec);
  }
  throw std::invalid_argument("unknown property");
}

FullReport full_report(const CellularAlgebraSpec& spec) {
  FullReport r;
  r.layers = analyze(spec);
  r.artinian = check_artinian(r.layers);
  r.semisimple = check_semisimple(r.layers);
  r.jacobson = check_jacobson_sufficient(r.layers);
  r.semiprime = check_semiprime_sufficient(r.layers);
  r.separable = check_separable(r.layers);
  r.asymptotic = asymptotic_algebra(spec);

  r.isomorphic_to_asymptotic = true;
  r.reduced_zero_dimensional = true;
  for (const auto& c : r.layers) {
    r.isomorphic_to_asymptotic = r.isomorphic_to_asymptotic && c.det_unit.unit;
    r.reduced_zero_dimensional =
        r.reduced_zero_dimensional && c.zero_dimensional && c.radical.answer == TriState::yes;
  }
  const bool semisimple = r.semisimple.answer == Answer::yes;
  r.asymptotic_equivalence_holds = semisimple == (r.isomorphic_to_asymptotic && r.reduced_zero_dimensional);

  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw InternalInconsistency(what);
  };
  require(r.asymptotic_equivalence_holds,
          "semisimple verdict disagrees with 'isomorphic to asymptotic algebra and reduced 0-dimensional'");
  require(!(r.artinian.answer == Answer::no && semisimple), "semisimple YES but artinian NO");
  require(!(r.artinian.answer == Answer::yes && r.jacobson.answer == Answer::yes) || semisimple,
          "artinian and Jacobson semisimple YES but semisimple not YES");
  require(r.separable.answer == r.semisimple.answer, "separable and semisimple verdicts differ");
  require(r.jacobson.answer == r.semiprime.answer, "Jacobson and semiprime criteria differ");
  return r;
}

}  // namespace cellalg
