#pragma once

// Left multiplication of a PBW monomial by one generator, shared by the
// enveloping algebra (coefficients polynomial in K) and the modules
// (rational coefficients, K fixed to the level).

#include "parahiggs/affine.hpp"

#include <map>
#include <unordered_map>

namespace parahiggs::detail {

template <class C>
using TermMap = std::map<Monomial, C>;

template <class C>
void add_term(TermMap<C>& out, const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
}

template <class C>
void add_scaled(TermMap<C>& out, const TermMap<C>& in, const C& s) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : in) add_term(out, m, c * s);
}

/// Policy requirements:
///   bool creates(const LoopGen&)         - may stand in a basis monomial
///   std::optional<C> on_vacuum(const LoopGen&)  - eigenvalue on the generator
///                                          (nullopt: annihilates it)
template <class C, class Policy>
class Straightener {
public:
    Straightener(C kappa, Policy policy) : kappa_(std::move(kappa)), policy_(std::move(policy)) {}

    const Policy& policy() const { return policy_; }

    /// x * m, where m is a basis monomial.
    const TermMap<C>& act(const LoopGen& x, const Monomial& m) {
        Monomial key;
        key.reserve(m.size() + 1);
        key.push_back(x);
        key.insert(key.end(), m.begin(), m.end());
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        TermMap<C> out;
        if (m.empty()) {
            if (policy_.creates(x)) {
                out.emplace(Monomial{x}, C(1));
            } else if (auto ev = policy_.on_vacuum(x)) {
                add_term(out, Monomial{}, *ev);
            }
        } else if (policy_.creates(x) && !(m.front() < x)) {
            Monomial prepended;
            prepended.reserve(m.size() + 1);
            prepended.push_back(x);
            prepended.insert(prepended.end(), m.begin(), m.end());
            out.emplace(std::move(prepended), C(1));
        } else {
            // x y rest = y (x rest) + [x, y] rest
            const LoopGen& y = m.front();
            const Monomial rest(m.begin() + 1, m.end());
            const TermMap<C>& inner = act(x, rest);  // node-based map: references survive rehashing
            for (const auto& [mono, c] : inner) add_scaled(out, act(y, mono), c);
            const LoopBracket br = loop_bracket(x, y);
            if (br.term) add_scaled(out, act(br.term->second, rest), C(br.term->first));
            if (!br.central.is_zero()) add_term(out, rest, kappa_ * C(br.central));
        }
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

    /// x * v
    TermMap<C> act(const LoopGen& x, const TermMap<C>& v) {
        TermMap<C> out;
        for (const auto& [m, c] : v) add_scaled(out, act(x, m), c);
        return out;
    }

private:
    C kappa_;
    Policy policy_;
    std::unordered_map<Monomial, TermMap<C>, MonomialHash> cache_;
};

}  // namespace parahiggs::detail
