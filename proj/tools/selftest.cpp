#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "torusvoa/torusvoa.hpp"

namespace torusvoa::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::string series_mismatch(const QSeries& a, const QSeries& b) {
  const Agreement ag = agreement_order(a, b);
  if (ag.full) return {};
  return "differ at q^(" + ag.order->str() + ")";
}

std::vector<Check> checks(unsigned threads) {
  std::vector<Check> out;

  out.push_back({"inverse euler product counts partitions to q^30", [] {
    const QSeries inv = qs_invert_unit(euler_product(31), 31);
    for (int n = 0; n <= 30; ++n) {
      if (inv.coefficient(n) != partitions_of(n, n).size()) return "p(" + std::to_string(n) + ") wrong";
    }
    return std::string();
  }});

  out.push_back({"kostka agrees with Jacobi-Trudi (|lambda| <= 6, r <= 3)", [] {
    for (int r = 1; r <= 3; ++r) {
      for (int w = 0; w <= 6; ++w) {
        for (const auto& lambda : partitions_of(w, r)) {
          for (const auto& [content, coeff] : schur_expand_oracle(lambda, r)) {
            if (kostka(lambda, content) != coeff) return to_string(lambda) + " content " + to_string(content);
          }
        }
      }
    }
    return std::string();
  }});

  out.push_back({"kappa formulas and Casimir identity (|lambda| <= 8, r <= 4)", [] {
    for (int r = 2; r <= 4; ++r) {
      for (int w = 0; w <= 8; ++w) {
        for (const auto& lambda : partitions_of(w, r)) {
          if (kappa(lambda) != kappa_from_differences(lambda, r)) return "kappa " + to_string(lambda);
          const Rational expect = Rational(kappa(lambda)) + Rational(r * w) - Rational(w * w, r);
          if (casimir_pairing(weight_of_partition(lambda, r)) != expect) return "casimir " + to_string(lambda);
        }
      }
    }
    return std::string();
  }});

  out.push_back({"principal specialization: palindromic, dimension, alternant (r <= 4)", [] {
    for (int r = 2; r <= 4; ++r) {
      for (int w = 0; w <= 6; ++w) {
        for (const auto& lambda : partitions_of(w, r)) {
          const QSeries s = principal_spec(lambda, r);
          const WeightVector mu = weight_of_partition(lambda, r);
          if (s != s.reflected()) return "not palindromic " + to_string(lambda);
          if (s.coefficient_sum() != weyl_dim(mu)) return "dimension " + to_string(lambda);
          if (s != alternant_spec_oracle(mu)) return "alternant " + to_string(lambda);
        }
      }
      if (weyl_denominator(r) != weyl_denominator_alternant(r)) return "denominator r=" + std::to_string(r);
    }
    return std::string();
  }});

  out.push_back({"tensor power specialization (r <= 3, c <= 3, n <= 3)", [] {
    for (int r = 2; r <= 3; ++r) {
      for (int c = 1; c <= 3; ++c) {
        for (int n = 0; n <= 3; ++n) {
          QSeries lhs = QSeries::one();
          for (int k = 0; k < c; ++k) lhs = lhs * principal_spec(Partition::rectangle(n, 1), r);
          QSeries rhs;
          for (const auto& [lambda, k] : kostka_by_shape(Composition(std::vector<int>(c, n)), r)) {
            rhs = rhs + principal_spec(lambda, r).scaled(k);
          }
          if (lhs != rhs) return "r=" + std::to_string(r) + " c=" + std::to_string(c) + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  }});

  out.push_back({"zero-weight and full-dimension statements, bijection (r <= 3)", [] {
    for (int r = 2; r <= 3; ++r) {
      for (int w = 0; w <= 8; ++w) {
        for (const auto& lambda : partitions_of(w, r)) {
          const auto rep = check_prop_zero_weight(lambda, r);
          if (!rep.passed()) return rep.detail;
        }
      }
      for (int n = 0; n * (r + 1) <= 9; ++n) {
        for (const auto& lambda : full_dim_shapes(n, r)) {
          for (const auto& rep : {check_prop_full_dim(lambda, n, r), phi_bijection_check(lambda, n, r)}) {
            if (rep.verdict != Verdict::pass) return rep.check + " " + rep.detail;
          }
        }
      }
    }
    return std::string();
  }});

  out.push_back({"singlet limit (r,c,p) = (2,2,2), n = 10, below q^8", [threads] {
    EvaluationOptions opts;
    opts.threads = threads;
    const auto rep = verify_singlet_theorem(2, 2, 2, 10, 8, opts);
    return rep.passed() ? std::string() : rep.detail + " agreement " + rep.agreement.order->str();
  }});

  out.push_back({"singlet limit (r,c,p) = (3,2,2), n = 6, below q^6", [threads] {
    EvaluationOptions opts;
    opts.threads = threads;
    const auto rep = verify_singlet_theorem(3, 2, 2, 6, 6, opts);
    return rep.passed() ? std::string() : "agreement " + rep.agreement.order->str();
  }});

  out.push_back({"triplet limit (r,p) = (2,2), cosets 0 and 1, below q^6", [threads] {
    EvaluationOptions opts;
    opts.threads = threads;
    for (const auto& rep : {verify_triplet_theorem(2, 2, 0, 8, 6, opts), verify_triplet_theorem(2, 2, 1, 7, 6, opts)}) {
      if (!rep.passed()) return "coset " + std::to_string(*rep.coset) + " agreement " + rep.agreement.order->str();
    }
    return std::string();
  }});

  out.push_back({"character enumeration bound is stable under doubling", [threads] {
    for (auto kind : {CharacterKind::singlet, CharacterKind::triplet}) {
      const CharacterSpec spec{2, 2, kind, kind == CharacterKind::triplet ? 1 : 0, 12};
      CharacterOptions once;
      once.threads = threads;
      CharacterOptions twice = once;
      twice.bound_scale = 2;
      const QSeries a = kind == CharacterKind::singlet ? singlet_char(spec, once) : triplet_char(spec, once);
      const QSeries b = kind == CharacterKind::singlet ? singlet_char(spec, twice) : triplet_char(spec, twice);
      if (auto why = series_mismatch(a, b); !why.empty()) return to_string(kind) + " " + why;
    }
    return std::string();
  }});

  return out;
}

}  // namespace

bool selftest(std::ostream& out, unsigned threads) {
  bool ok = true;
  for (const auto& check : checks(threads)) {
    std::string failure;
    try {
      failure = check.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      out << "PASS " << check.name << "\n";
    } else {
      out << "FAIL " << check.name << ": " << failure << "\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace torusvoa::cli
