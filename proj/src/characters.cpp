// characters.cpp
// --------------
// Implements the phi_beta evaluations, S', the normalized Hopf pairing, the
// fake quantum dimension, and twist exponents on top of root_data.

#include <superlink/characters.hpp>

#include <utility>

namespace superlink {

namespace {

// q^e - q^{-e}
LaurentElement bracket_of(const ExponentForm& e) {
  LaurentElement out = LaurentElement::q_power(e);
  out -= LaurentElement::q_power(-e);
  return out;
}

// sum_w epsilon(w) q^{2 <w(shift), beta>}
LaurentElement alternating_weyl_sum(const RootData& rd, const Weight& shift, const Weight& beta) {
  LaurentElement out = LaurentElement::zero();
  for (const WeylElement& w : weyl_elements(rd)) {
    ExponentForm e = pair_weights(rd, w.apply(shift), beta);
    e *= Rational(2);
    out.add_term(e, Rational(w.det));
  }
  return out;
}

// prod over even positive roots of (q^{<alpha,beta>} - q^{-<alpha,beta>})
LaurentElement even_weyl_denominator(const RootData& rd, const Weight& beta) {
  LaurentElement out = LaurentElement::one();
  for (const Root& root : rd.positive_roots) {
    if (root.odd) continue;
    out *= bracket_of(pair_weights(rd, root.weight, beta));
  }
  return out;
}

LaurentElement divide_or_flag_degenerate(const LaurentElement& numerator,
                                         const LaurentElement& denominator, const Weight& beta) {
  try {
    return exact_div(numerator, denominator);
  } catch (const Error& err) {
    // At a fully numeric beta a failed division means the even Weyl
    // denominator degenerated (some <alpha, beta> = 0); anywhere else a
    // failure would be a genuine internal inconsistency, so it propagates.
    if (err.code() != Errc::not_divisible || !beta.is_constant()) throw;
    raise(Errc::degenerate_evaluation,
          "even Weyl denominator does not divide at this numeric evaluation point");
  }
}

void require_same_algebra(const TypicalLabel& lambda, const TypicalLabel& mu) {
  if (!(lambda.rd->spec == mu.rd->spec)) {
    raise(Errc::color_mismatch, "labels belong to different algebras: " + lambda.rd->spec.name() +
                                    " vs " + mu.rd->spec.name());
  }
}

}  // namespace

int TypicalLabel::symbol() const {
  if (a.is_constant()) return 0;
  return a.linear().begin()->first;
}

bool TypicalLabel::typical() const {
  if (symbolic()) return true;
  return is_typical(*rd, c, a.constant_part());
}

TypicalLabel make_label(std::shared_ptr<const RootData> rd, std::vector<long> c, ExponentForm a,
                        bool odd_module) {
  if (!rd) raise(Errc::invalid_spec, "label requires algebra data");
  if (!a.is_affine() || (!a.is_constant() && (a.linear().size() != 1 ||
                                              a.linear().begin()->second != Rational(1) ||
                                              a.constant_part() != Rational(0)))) {
    raise(Errc::invalid_spec, "label parameter must be a plain symbol or a rational constant");
  }
  TypicalLabel label{std::move(rd), std::move(c), std::move(a), odd_module};
  (void)label.weight();  // validates the c part (length, nonnegativity)
  return label;
}

LaurentElement phi_char(const TypicalLabel& label, const Weight& beta, CharVariant variant,
                        CharRoute route) {
  const RootData& rd = *label.rd;
  if (beta.dim() != rd.spec.basis_dim()) {
    raise(Errc::invalid_spec, "evaluation weight has wrong dimension");
  }
  const bool super = variant == CharVariant::super_char;

  LaurentElement numerator;
  if (route == CharRoute::factored) {
    // prod over odd roots of (1 -+ q^{-2<alpha,beta>}) times the alternating
    // sum over the even-rho-shifted orbit.
    Weight shift = label.weight();
    shift += rd.rho0;
    numerator = alternating_weyl_sum(rd, shift, beta);
    for (const Root& root : rd.positive_roots) {
      if (!root.odd) continue;
      ExponentForm e = pair_weights(rd, root.weight, beta);
      e *= Rational(-2);
      LaurentElement factor = LaurentElement::one();
      if (super) {
        factor -= LaurentElement::q_power(e);
      } else {
        factor += LaurentElement::q_power(e);
      }
      numerator *= factor;
    }
  } else {
    // prod over odd roots of (q^{<alpha,beta>} -+ q^{-<alpha,beta>}) times
    // the alternating sum over the full-rho-shifted orbit.
    Weight shift = label.weight();
    shift += rd.rho;
    numerator = alternating_weyl_sum(rd, shift, beta);
    for (const Root& root : rd.positive_roots) {
      if (!root.odd) continue;
      ExponentForm e = pair_weights(rd, root.weight, beta);
      LaurentElement factor = LaurentElement::q_power(e);
      if (super) {
        factor -= LaurentElement::q_power(-e);
      } else {
        factor += LaurentElement::q_power(-e);
      }
      numerator *= factor;
    }
  }

  LaurentElement out = divide_or_flag_degenerate(numerator, even_weyl_denominator(rd, beta), beta);
  if (super && label.odd_module) out = -out;
  return out;
}

LaurentElement sprime(const TypicalLabel& lambda, const TypicalLabel& mu) {
  require_same_algebra(lambda, mu);
  if (!lambda.typical()) {
    raise(Errc::atypical_label, "S' requires a typical first label");
  }
  Weight beta = mu.weight();
  beta += lambda.rd->rho;
  return phi_char(lambda, beta, CharVariant::super_char);
}

LaurentElement normalized_hopf(const TypicalLabel& lambda, const TypicalLabel& mu) {
  require_same_algebra(lambda, mu);
  const RootData& rd = *lambda.rd;
  Weight shift = lambda.weight();
  shift += rd.rho;
  Weight beta = mu.weight();
  beta += rd.rho;
  LaurentElement out = divide_or_flag_degenerate(alternating_weyl_sum(rd, shift, beta),
                                                 even_weyl_denominator(rd, rd.rho), beta);
  if (lambda.odd_module != mu.odd_module) out = -out;
  return out;
}

DhatParts dhat(const TypicalLabel& label) {
  const RootData& rd = *label.rd;
  if (!label.typical()) {
    raise(Errc::atypical_label, "fake quantum dimension is undefined at atypical labels");
  }
  Weight shifted = label.weight();
  shifted += rd.rho;

  LaurentElement even_shifted = LaurentElement::one();
  LaurentElement even_base = LaurentElement::one();
  LaurentElement odd_product = LaurentElement::one();
  for (const Root& root : rd.positive_roots) {
    ExponentForm pairing = pair_weights(rd, shifted, root.weight);
    if (!root.odd) {
      // The parameter direction is orthogonal to every even root, so these
      // pairings are parameter-free whatever the label.
      if (!pairing.is_constant()) {
        raise(Errc::internal_error, "even-root pairing picked up the label parameter");
      }
      even_shifted *= bracket_of(pairing);
      even_base *= bracket_of(pair_weights(rd, rd.rho, root.weight));
    } else {
      odd_product *= bracket_of(pairing);
    }
  }

  DhatParts parts;
  parts.m0 = exact_div(even_shifted, even_base);
  parts.m1 = std::move(odd_product);
  parts.value = LaurentFraction(parts.m0);
  parts.value *= LaurentFraction(parts.m1).inverse();
  if (label.odd_module) parts.value = -parts.value;
  return parts;
}

ExponentForm twist_exponent(const TypicalLabel& label) {
  const RootData& rd = *label.rd;
  Weight lambda = label.weight();
  Weight shifted = lambda;
  Weight two_rho = rd.rho;
  two_rho *= Rational(2);
  shifted += two_rho;
  return pair_weights(rd, lambda, shifted);
}

}  // namespace superlink
