#include "cli.hpp"

#include <cstdlib>
#include <iomanip>

#include "CLI11.hpp"

#include "cellalg/errors.hpp"
#include "cellalg/report.hpp"
#include "cellalg/spec_file.hpp"

namespace cellalg::cli {

namespace {

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (*end != '\0' || parsed == 0) return std::nullopt;
  return static_cast<std::size_t>(parsed);
}

std::string dim_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "infinite"; }

void print_verdict(std::ostream& out, const Verdict& v) {
  out << to_string(v.property) << ": " << to_string(v.answer) << "\n";
  out << "  reason: " << v.reason << "\n";
  out << "  cited: " << v.cited_statement << "\n";
  for (const auto& l : v.layers) {
    out << "  layer " << l.index << ": dimK " << dim_text(l.dimension) << ", reduced "
        << to_string(l.radical.answer) << " (" << l.radical.method << ")";
    for (const auto& m : l.radical.minimal_polynomials) {
      out << ", m_" << m.variable << " = " << m.polynomial.to_string() << (m.squarefree ? "" : " [not squarefree]");
    }
    out << ", det(phi) = " << l.det_phi.to_string() << (l.det_unit.unit ? " [unit]" : " [not a unit]");
    if (l.det_zero_divisor.zero_divisor) {
      out << " [zero-divisor";
      if (l.det_zero_divisor.witness) out << ", witness " << l.det_zero_divisor.witness->to_string();
      out << "]";
    }
    out << "\n";
  }
}

void print_asymptotic(std::ostream& out, const AsymptoticAlgebra& alg) {
  out << "asymptotic algebra: " << alg.description() << "\n";
  for (const auto& s : alg.summands) {
    out << "  layer " << s.layer << ": M_" << s.n << "(" << s.ring << "), dimK " << dim_text(s.dimension) << "\n";
  }
  out << "  total dimK " << dim_text(alg.dimension) << "\n";
}

void print_oracle(std::ostream& out, const oracle::OracleCheck& c) {
  if (!c.applicable) {
    out << "oracle: not applicable (" << c.reason << ")\n";
    return;
  }
  out << "oracle: realization dimK " << c.dimension << ", radical dimK " << c.radical_dimension
      << ", semisimple " << (c.oracle_semisimple ? "YES" : "NO") << "\n";
  out << "  criteria (with top layer): " << to_string(c.criteria_answer) << ", "
      << (c.agrees ? "agree" : "DISAGREE") << "\n";
}

// Loads and validates; returns an exit code on failure.
std::optional<int> load(const std::string& path, CellularAlgebraSpec& spec, std::ostream& err) {
  spec = parse_spec_file(path);
  const ValidationReport report = validate_spec(spec);
  if (!report.ok()) {
    for (const auto& i : report.issues) {
      err << path << ": invalid spec: layer " << i.layer << ": " << i.check << ": " << i.witness << "\n";
    }
    return kInvalidSpec;
  }
  return std::nullopt;
}

}  // namespace

void apply_budget_from_environment() {
  GroebnerBudget b;
  if (auto v = env_size("CELLALG_GB_MAX_PAIRS")) b.max_pairs = *v;
  if (auto v = env_size("CELLALG_GB_MAX_BASIS")) b.max_basis = *v;
  set_default_budget(b);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_budget_from_environment();

  CLI::App app{"Decision procedures for layered cellular algebra data", "cellalg"};
  app.require_subcommand(1);
  std::string file;
  std::string property;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::uint64_t prime = 0;

  auto* validate = app.add_subcommand("validate", "check a spec file against the layer axioms");
  validate->add_option("file", file, "spec file")->required();
  validate->add_flag("--json", json, "emit JSON");

  auto* check = app.add_subcommand("check", "decide one property");
  check->add_option("property", property, "artinian | semisimple | jacobson | semiprime | separable")
      ->required()
      ->check(CLI::IsMember({"artinian", "semisimple", "jacobson", "semiprime", "separable"}));
  check->add_option("file", file, "spec file")->required();
  check->add_flag("--json", json, "emit JSON");

  auto* asym = app.add_subcommand("asymptotic", "describe the asymptotic algebra");
  asym->add_option("file", file, "spec file")->required();
  asym->add_flag("--json", json, "emit JSON");

  auto* radical = app.add_subcommand("radical", "trace-form radical of the split realization (over Q)");
  radical->add_option("file", file, "spec file")->required();
  radical->add_flag("--json", json, "emit JSON");

  auto* corpus = app.add_subcommand("corpus", "generate random specs and cross-check them");
  corpus->add_option("--seed", seed, "corpus seed")->required();
  corpus->add_option("--count", count, "number of specs")->required();
  corpus->add_option("--prime", prime, "work over F_p and compare separable with semisimple instead");
  corpus->add_flag("--json", json, "emit JSON");

  auto* report = app.add_subcommand("report", "all verdicts, asymptotic algebra and oracle");
  report->add_option("file", file, "spec file")->required();
  report->add_flag("--json", json, "emit JSON");

  std::vector<const char*> argv{"cellalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kSyntaxOrIo;
  }

  try {
    if (*corpus) {
      nlohmann::json rows = nlohmann::json::array();
      std::size_t agreements = 0;
      oracle::RandomParams params;
      if (prime != 0) params.field = FieldSpec::prime_field(prime);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = oracle::corpus_seed(seed, i);
        const CellularAlgebraSpec spec = oracle::random_instance(s, params);
        if (prime != 0) {
          const auto layers = analyze(spec);
          const Answer semisimple = check_semisimple(layers).answer;
          const Answer separable = check_separable(layers).answer;
          const bool ok = semisimple == separable;
          agreements += ok ? 1 : 0;
          rows.push_back({{"seed", s}, {"semisimple", to_string(semisimple)}, {"separable", to_string(separable)},
                          {"agrees", ok}});
        } else {
          const oracle::OracleCheck c = oracle::oracle_check(spec);
          agreements += c.agrees ? 1 : 0;
          nlohmann::json row = to_json(c);
          row["seed"] = s;
          rows.push_back(row);
          if (!c.agrees && !json) err << "disagreement at instance seed " << s << ":\n" << print_spec(spec);
        }
      }
      if (json) {
        out << nlohmann::json{{"seed", seed},
                              {"count", count},
                              {"field", params.field.name()},
                              {"agreements", agreements},
                              {"instances", rows}}
                   .dump(2)
            << "\n";
      } else {
        out << agreements << "/" << count
            << (prime != 0 ? " separable/semisimple agreements" : " oracle agreements") << "\n";
      }
      return kOk;
    }

    CellularAlgebraSpec spec;
    if (auto code = load(file, spec, err)) {
      if (*validate && json) {
        out << to_json(validate_spec(spec)).dump(2) << "\n";
      }
      return *code;
    }

    if (*validate) {
      if (json) {
        out << to_json(validate_spec(spec)).dump(2) << "\n";
      } else {
        out << "valid: " << spec.layers.size() << " layer(s) over " << spec.field.name() << "\n";
      }
    } else if (*check) {
      const Verdict v = cellalg::check(*property_from_string(property), spec);
      if (json) {
        out << to_json(v).dump(2) << "\n";
      } else {
        print_verdict(out, v);
      }
    } else if (*asym) {
      const AsymptoticAlgebra alg = asymptotic_algebra(spec);
      if (json) {
        out << to_json(alg).dump(2) << "\n";
      } else {
        print_asymptotic(out, alg);
      }
    } else if (*radical) {
      const oracle::OracleCheck c = oracle::oracle_check(spec);
      if (json) out << nlohmann::json{{"oracle", to_json(c)}}.dump(2) << "\n";
      if (!c.applicable) {
        if (!json) err << file << ": oracle not applicable: " << c.reason << "\n";
        return kInvalidSpec;
      }
      if (!json) print_oracle(out, c);
    } else if (*report) {
      const FullReport r = full_report(spec);
      const oracle::OracleCheck c = oracle::oracle_check(spec);
      if (json) {
        out << to_json(r, &c).dump(2) << "\n";
      } else {
        for (const Verdict* v : r.verdicts()) print_verdict(out, *v);
        print_asymptotic(out, r.asymptotic);
        out << "semisimple iff isomorphic to asymptotic algebra and reduced 0-dimensional: "
            << (r.asymptotic_equivalence_holds ? "holds" : "VIOLATED") << "\n";
        print_oracle(out, c);
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    err << file << ":" << e.what() << "\n";
    return kSyntaxOrIo;
  } catch (const SpecIoError& e) {
    err << "error: " << e.what() << "\n";
    return kSyntaxOrIo;
  } catch (const BudgetExceeded& e) {
    err << "error: resource budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kSyntaxOrIo;
  }
}

}  // namespace cellalg::cli
