#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nideal/bits.hpp"
#include "nideal/codeword.hpp"
#include "nideal/errors.hpp"

namespace nideal {

// A product of distinct plain factors x_i (i in sigma) and complemented
// factors (1 - x_j) (j in tau), with sigma and tau disjoint subsets of
// {1..n}. sigma = tau = {} is the constant 1. The zero polynomial is not
// a Pseudomonomial; interfaces that can produce it return PseudoOrZero.
class Pseudomonomial {
public:
    Pseudomonomial(int n, Mask sigma, Mask tau) : n_(n), sigma_(sigma), tau_(tau)
    {
        check_ambient(n);
        if (sigma & tau)
            throw ValidationError("OverlappingFactors: indices " + format_index_set(sigma & tau)
                                  + " appear both plain and complemented");
        if ((sigma | tau) & ~full_mask(n))
            throw ValidationError("IndexOutOfRange: factor index exceeds n = " + std::to_string(n));
    }

    int n() const { return n_; }
    Mask sigma() const { return sigma_; }
    Mask tau() const { return tau_; }
    int degree() const { return mask_size(sigma_ | tau_); }
    bool is_one() const { return (sigma_ | tau_) == 0; }

    // "x1*x2*(1-x3)" with factors in ascending index order; "1" when empty.
    std::string to_string() const
    {
        if (is_one())
            return "1";
        std::string out;
        for (int i = 1; i <= n_; ++i) {
            if (!mask_has(sigma_ | tau_, i))
                continue;
            if (!out.empty())
                out += "*";
            if (mask_has(sigma_, i))
                out += "x" + std::to_string(i);
            else
                out += "(1-x" + std::to_string(i) + ")";
        }
        return out;
    }

    friend bool operator==(const Pseudomonomial&, const Pseudomonomial&) = default;

private:
    int n_;
    Mask sigma_;
    Mask tau_;
};

using PseudoOrZero = std::optional<Pseudomonomial>;

inline Pseudomonomial pm_make(int n, Mask sigma, Mask tau) { return Pseudomonomial(n, sigma, tau); }

inline Pseudomonomial pm_make(int n, std::initializer_list<int> sigma, std::initializer_list<int> tau)
{
    check_ambient(n);
    Mask s = 0, t = 0;
    for (int i : sigma) {
        if (i < 1 || i > n)
            throw ValidationError("IndexOutOfRange: " + std::to_string(i));
        s |= mask_bit(i);
    }
    for (int j : tau) {
        if (j < 1 || j > n)
            throw ValidationError("IndexOutOfRange: " + std::to_string(j));
        t |= mask_bit(j);
    }
    return Pseudomonomial(n, s, t);
}

inline Pseudomonomial pm_one(int n) { return Pseudomonomial(n, 0, 0); }

// 1 iff sigma lies inside supp(v) and tau misses it.
inline bool pm_eval(const Pseudomonomial& f, const Codeword& v)
{
    if (f.n() != v.n())
        throw ValidationError("LengthMismatch: pseudomonomial over n = " + std::to_string(f.n())
                              + " evaluated at word of length " + std::to_string(v.n()));
    return (f.sigma() & ~v.support()) == 0 && (f.tau() & v.support()) == 0;
}

// f | g, i.e. sigma_f <= sigma_g and tau_f <= tau_g.
inline bool pm_divides(const Pseudomonomial& f, const Pseudomonomial& g)
{
    if (f.n() != g.n())
        throw ValidationError("AmbientMismatch: " + std::to_string(f.n()) + " vs "
                              + std::to_string(g.n()));
    return (f.sigma() & ~g.sigma()) == 0 && (f.tau() & ~g.tau()) == 0;
}

// The degree-n pseudomonomial rho_v that is 1 exactly at v.
inline Pseudomonomial indicator(const Codeword& v)
{
    return Pseudomonomial(v.n(), v.support(), full_mask(v.n()) & ~v.support());
}

// The words where f evaluates to 1; f equals the sum of their indicators.
// Free variables of f range over all values, so there are 2^(n-deg) words.
inline std::vector<Codeword> pm_expand_indicators(const Pseudomonomial& f)
{
    Mask free = full_mask(f.n()) & ~(f.sigma() | f.tau());
    std::vector<Codeword> out;
    Mask sub = free;
    for (;;) {
        out.emplace_back(f.n(), f.sigma() | sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & free;
    }
    std::sort(out.begin(), out.end(), codeword_less);
    return out;
}

// (degree, lex sigma, lex tau): the enumeration and display order.
inline bool pm_canonical_less(const Pseudomonomial& a, const Pseudomonomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    if (a.sigma() != b.sigma())
        return lex_mask_less(a.sigma(), b.sigma());
    return lex_mask_less(a.tau(), b.tau());
}

// All 3^n pseudomonomials over F2[n] in canonical order.
inline std::vector<Pseudomonomial> enumerate_pseudomonomials(int n)
{
    check_ambient(n);
    std::size_t count = 1;
    for (int i = 0; i < n; ++i)
        count *= 3;
    std::vector<Pseudomonomial> all;
    all.reserve(count);
    Mask full = full_mask(n);
    for (Mask vars = 0;; ++vars) {
        // vars = sigma | tau; split each occupied set into the two kinds.
        Mask sigma = vars;
        for (;;) {
            all.emplace_back(n, sigma, vars & ~sigma);
            if (sigma == 0)
                break;
            sigma = (sigma - 1) & vars;
        }
        if (vars == full)
            break;
    }
    std::sort(all.begin(), all.end(), pm_canonical_less);
    return all;
}

} // namespace nideal
