// characters.hpp
// --------------
// Character-level quantities for typical highest-weight modules: the
// evaluation maps phi_beta (formal exponential e^gamma |-> q^{2<gamma,beta>}),
// super/ordinary characters, the pairing S'(lambda, mu), the fake quantum
// dimension dhat = M0/M1, and twist exponents.  Everything is exact; numeric
// degeneracies surface as typed errors instead of being regularized.

#pragma once

#include <superlink/errors.hpp>
#include <superlink/root_data.hpp>

#include <memory>

namespace superlink {

// A labeled highest weight w_a^c with a shared algebra descriptor.  The
// parameter `a` is either a single formal symbol (coefficient 1) or a
// rational constant; `odd_module` selects the parity-shifted avatar of the
// module, which flips the sign of the supercharacter and of dhat.
struct TypicalLabel {
  std::shared_ptr<const RootData> rd;
  std::vector<long> c;
  ExponentForm a;
  bool odd_module = false;

  Weight weight() const { return weight_from_label(*rd, c, a); }
  bool symbolic() const { return !a.is_constant(); }
  // Symbol index of a symbolic parameter; 0 for numeric labels.
  int symbol() const;
  // Symbolic labels are generically typical; numeric ones are checked.
  bool typical() const;
};

// Validates the label shape: c sized for the algebra with nonnegative
// entries, and `a` either constant or exactly one symbol with coefficient 1.
TypicalLabel make_label(std::shared_ptr<const RootData> rd, std::vector<long> c, ExponentForm a,
                        bool odd_module = false);

enum class CharVariant { super_char, ordinary_char };

// Two independent evaluation routes that must agree (kept separate as an
// internal cross-check): `factored` uses the product formula for the odd
// part over the even Weyl character; `weyl_sum` divides the rho-shifted
// alternating sum by the even denominator directly.
enum class CharRoute { factored, weyl_sum };

// phi_beta(sch V(label)) or phi_beta(ch V(label)).
// Errors: Errc::degenerate_evaluation when the Weyl denominator fails to
// divide at a fully numeric beta; Errc::not_divisible otherwise (internal).
LaurentElement phi_char(const TypicalLabel& label, const Weight& beta, CharVariant variant,
                        CharRoute route = CharRoute::factored);

// S'(lambda, mu) = phi_{mu+rho}(sch V(lambda)).  Requires lambda typical.
LaurentElement sprime(const TypicalLabel& lambda, const TypicalLabel& mu);

// dhat(mu) * S'(lambda, mu), computed from the manifestly symmetric display:
// the alternating sum of q^{2<w(lambda+rho), mu+rho>} divided exactly by the
// q-Weyl denominator at beta = rho.
LaurentElement normalized_hopf(const TypicalLabel& lambda, const TypicalLabel& mu);

struct DhatParts {
  LaurentElement m0;       // even-root ratio, a Laurent polynomial in q alone
  LaurentElement m1;       // odd-root product in q and q_a = q^a
  LaurentFraction value;   // dhat = m0 / m1, negated for odd_module labels
};

// The fake quantum dimension as an explicit fraction.
// Errors: Errc::atypical_label for numeric labels at an atypical value.
DhatParts dhat(const TypicalLabel& label);

// <lambda, lambda + 2 rho>, the exponent of the twist on V(lambda).
ExponentForm twist_exponent(const TypicalLabel& label);

}  // namespace superlink
