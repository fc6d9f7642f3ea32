#include "dyckcat/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dyckcat {

LaurentPoly LaurentPoly::constant(int nvars, Coef c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Expo exps, Coef coef) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (coef != 0) p.terms_[std::move(exps)] = std::move(coef);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw invalid_input_error("variable index out of range");
    Expo e(nvars, 0);
    e[i - 1] = 1;
    return monomial(std::move(e));
}

void LaurentPoly::add_term(const Expo& e, const Coef& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw invalid_input_error("nvars mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw invalid_input_error("nvars mismatch");
    LaurentPoly out(nvars_);
    Expo e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw invalid_input_error("negative power");
    LaurentPoly out = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Expo LaurentPoly::min_exponents() const {
    Expo mins(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int v = 0; v < nvars_; ++v) mins[v] = first ? e[v] : std::min(mins[v], e[v]);
        first = false;
    }
    return mins;
}

namespace {

// Graded-lex comparison used for division leads and rendering order.
bool deg_lex_less(const Expo& a, const Expo& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw invalid_input_error("nvars mismatch");
    if (o.is_zero()) throw divisibility_error("division by zero polynomial");
    if (is_zero()) return zero(nvars_);

    // Shift both operands into the polynomial ring. If the quotient exists
    // in the Laurent ring it is a polynomial after this normalization.
    Expo sa = min_exponents(), sb = o.min_exponents();
    auto shifted = [&](const LaurentPoly& p, const Expo& s) {
        LaurentPoly out(p.nvars_);
        for (const auto& [e, c] : p.terms_) {
            Expo f(e);
            for (int v = 0; v < p.nvars_; ++v) f[v] -= s[v];
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    };
    LaurentPoly rem = shifted(*this, sa);
    LaurentPoly den = shifted(o, sb);

    auto lead = [](const LaurentPoly& p) {
        auto best = p.terms_.begin();
        for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
            if (deg_lex_less(best->first, it->first)) best = it;
        return best;
    };

    LaurentPoly quot(nvars_);
    auto dl = lead(den);
    while (!rem.is_zero()) {
        auto rl = lead(rem);
        Expo qe(nvars_);
        for (int v = 0; v < nvars_; ++v) {
            qe[v] = rl->first[v] - dl->first[v];
            if (qe[v] < 0) throw divisibility_error("leading monomial does not divide");
        }
        Coef qc, rcheck;
        mpz_fdiv_qr(qc.get_mpz_t(), rcheck.get_mpz_t(), rl->second.get_mpz_t(), dl->second.get_mpz_t());
        if (rcheck != 0) throw divisibility_error("leading coefficient does not divide");
        LaurentPoly step = monomial(qe, qc);
        quot = quot + step;
        rem = rem - step * den;
    }

    // Undo the normalization shift.
    Expo back(nvars_);
    for (int v = 0; v < nvars_; ++v) back[v] = sa[v] - sb[v];
    return quot * monomial(std::move(back));
}

bool LaurentPoly::positive_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::canonical_string() const {
    if (terms_.empty()) return "0";

    Expo mins = min_exponents();
    Expo den(nvars_, 0);
    for (int v = 0; v < nvars_; ++v) den[v] = std::max(0, -mins[v]);

    std::vector<std::pair<Expo, Coef>> num;
    num.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        Expo f(e);
        for (int v = 0; v < nvars_; ++v) f[v] += den[v];
        num.emplace_back(std::move(f), c);
    }
    std::sort(num.begin(), num.end(),
              [](const auto& a, const auto& b) { return deg_lex_less(a.first, b.first); });

    auto factor_text = [&](const Expo& e, std::ostringstream& os, const Coef& coef) {
        bool any = false;
        Coef a = abs(coef);
        if (a != 1) {
            os << a.get_str();
            any = true;
        }
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (any) os << '*';
            os << 'x' << (v + 1);
            if (e[v] != 1) os << '^' << e[v];
            any = true;
        }
        if (!any) os << '1';
    };

    std::ostringstream nums;
    for (size_t i = 0; i < num.size(); ++i) {
        if (i > 0) nums << (num[i].second > 0 ? " + " : " - ");
        else if (num[i].second < 0) nums << '-';
        factor_text(num[i].first, nums, num[i].second);
    }

    int den_factors = 0;
    for (int v = 0; v < nvars_; ++v)
        if (den[v] > 0) ++den_factors;
    if (den_factors == 0) return nums.str();

    std::ostringstream dens;
    bool first = true;
    for (int v = 0; v < nvars_; ++v) {
        if (den[v] == 0) continue;
        if (!first) dens << '*';
        first = false;
        dens << 'x' << (v + 1);
        if (den[v] != 1) dens << '^' << den[v];
    }

    std::ostringstream out;
    if (num.size() > 1)
        out << '(' << nums.str() << ')';
    else
        out << nums.str();
    out << '/';
    if (den_factors > 1)
        out << '(' << dens.str() << ')';
    else
        out << dens.str();
    return out.str();
}

}  // namespace dyckcat
