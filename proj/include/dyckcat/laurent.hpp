#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "dyckcat/errors.hpp"

namespace dyckcat {

using Coef = mpz_class;
using Expo = std::vector<int>;  // one (possibly negative) exponent per variable

/// Multivariate Laurent polynomial with exact integer coefficients.
/// Canonical form: no zero coefficients; term map keyed by exponent tuple.
class LaurentPoly {
  public:
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, Coef c);
    static LaurentPoly monomial(Expo exps, Coef coef = 1);
    /// x_i, 1-based.
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Coef>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(int k) const;  // k >= 0

    /// Exact quotient in the Laurent ring; throws divisibility_error when
    /// none exists over the integers.
    LaurentPoly exact_div(const LaurentPoly& o) const;

    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    bool positive_coefficients() const;
    /// Per-variable minimum exponent over all terms (0 for the zero poly).
    Expo min_exponents() const;

    /// Deterministic rendering: numerator over a positive monomial
    /// denominator, terms sorted by total degree then exponent tuple.
    std::string canonical_string() const;

  private:
    void add_term(const Expo& e, const Coef& c);

    int nvars_;
    std::map<Expo, Coef> terms_;
};

}  // namespace dyckcat
