#include "starq/weyl.hpp"

namespace starq {

WeylContext::WeylContext(Ctx phase_ctx,
                         std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing,
                         std::uint32_t n)
    : phase(std::move(phase_ctx)), pairs(std::move(pairing)), order(n) {
    if (!phase) throw error("WeylContext: null phase context");
    std::vector<bool> seen(phase->size(), false);
    for (const auto& [x, y] : pairs) {
        if (x >= phase->size() || y >= phase->size() || x == y)
            throw error("WeylContext: bad pairing");
        if (seen[x] || seen[y]) throw error("WeylContext: variable paired twice");
        seen[x] = seen[y] = true;
    }
}

int WeylContext::position_slot(std::uint32_t phase_var) const {
    for (std::size_t s = 0; s < pairs.size(); ++s)
        if (pairs[s].first == phase_var) return static_cast<int>(s);
    return -1;
}

int WeylContext::momentum_slot(std::uint32_t phase_var) const {
    for (std::size_t s = 0; s < pairs.size(); ++s)
        if (pairs[s].second == phase_var) return static_cast<int>(s);
    return -1;
}

BiVector WeylContext::matching_bivector() const {
    RMat pi(phase->size(), phase->size());
    for (const auto& [x, y] : pairs) {
        pi.at(x, y) = Rational(-1); // {y, x} = 1
        pi.at(y, x) = Rational(1);
    }
    return BiVector(std::move(pi));
}

WeylOp WeylOp::position(const WeylContext& ctx, std::uint32_t slot) {
    WeylOp op(ctx);
    op.add_term(Monomial::variable(slot), Monomial{}, HScalar::constant(1, ctx.order));
    return op;
}

WeylOp WeylOp::momentum(const WeylContext& ctx, std::uint32_t slot) {
    WeylOp op(ctx);
    op.add_term(Monomial{}, Monomial::variable(slot), HScalar::constant(1, ctx.order));
    return op;
}

void WeylOp::add_term(const Monomial& xpart, const Monomial& dpart, const HScalar& c) {
    if (c.is_zero()) return;
    Key key{xpart, dpart};
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp WeylOp::operator-() const {
    WeylOp r(ctx_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(-1));
    return r;
}

WeylOp operator+(WeylOp a, const WeylOp& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
}

WeylOp operator-(WeylOp a, const WeylOp& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c.scaled(-1));
    return a;
}

WeylOp WeylOp::scaled_h(const HScalar& s) const {
    WeylOp r(ctx_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

namespace {
// normal-order (ℏ∂)^b x^c for one variable:
//   Σ_k k! C(b,k) C(c,k) ℏ^k x^{c-k} (ℏ∂)^{b-k}
// multi-variable words factor across slots.
void normal_order_cross(const Monomial& b, const Monomial& c, std::uint32_t order,
                        std::vector<std::tuple<Monomial, Monomial, HScalar>>& out) {
    std::vector<std::uint32_t> slots;
    std::uint32_t nslots = std::max(b.max_var(), c.max_var());
    for (std::uint32_t v = 0; v < nslots; ++v)
        if (b.exponent(v) > 0 && c.exponent(v) > 0) slots.push_back(v);

    std::vector<std::uint32_t> k(slots.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == slots.size()) {
            std::uint32_t total = 0;
            Rational w(1);
            std::vector<std::uint32_t> xe(nslots, 0), de(nslots, 0);
            for (std::uint32_t v = 0; v < nslots; ++v) {
                xe[v] = c.exponent(v);
                de[v] = b.exponent(v);
            }
            for (std::size_t s = 0; s < slots.size(); ++s) {
                std::uint32_t v = slots[s], kv = k[s];
                total += kv;
                w *= Rational(factorial(kv) * binomial(b.exponent(v), kv) *
                              binomial(c.exponent(v), kv));
                xe[v] -= kv;
                de[v] -= kv;
            }
            if (total > order) return;
            out.emplace_back(Monomial::from_exponents(xe), Monomial::from_exponents(de),
                             HScalar::hbar_power(total, w, order));
            return;
        }
        std::uint32_t v = slots[pos];
        std::uint32_t kmax = std::min(b.exponent(v), c.exponent(v));
        for (std::uint32_t kv = 0; kv <= kmax; ++kv) {
            k[pos] = kv;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}
} // namespace

WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) {
    if (!same_context(p.ctx().phase, q.ctx().phase) || p.ctx().pairs != q.ctx().pairs ||
        p.ctx().order != q.ctx().order)
        throw context_error("weyl_mul: context mismatch");
    WeylOp out(p.ctx());
    std::vector<std::tuple<Monomial, Monomial, HScalar>> cross;
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kq, cq] : q.terms()) {
            // (x^a ∂^b)(x^c ∂^d): rewrite ∂^b x^c
            cross.clear();
            normal_order_cross(kp.second, kq.first, p.ctx().order, cross);
            HScalar c = cp * cq;
            for (const auto& [xm, dm, w] : cross)
                out.add_term(kp.first * xm, dm * kq.second, c * w);
        }
    }
    return out;
}

WeylOp phi(const Poly& f, const WeylContext& ctx) {
    require_same_context(f.ctx(), ctx.phase, "phi");
    WeylOp out(ctx);
    std::size_t n = ctx.dim();
    for (const auto& [m, coeff] : f.terms()) {
        // validate that the monomial only involves paired variables
        for (const auto& [v, e] : m.factors())
            if (ctx.position_slot(v) < 0 && ctx.momentum_slot(v) < 0)
                throw error("phi: unpaired variable " + f.ctx()->name(v));
        std::vector<std::uint32_t> a(n, 0), b(n, 0);
        for (const auto& [v, e] : m.factors()) {
            int s = ctx.position_slot(v);
            if (s >= 0)
                a[static_cast<std::size_t>(s)] = e;
            else
                b[static_cast<std::size_t>(ctx.momentum_slot(v))] = e;
        }
        // Weyl-symmetric ordering of Π x_i^{a_i} ŷ_i^{b_i}, normal-ordered:
        //   Π_i Σ_{k_i} C(a_i,k_i) C(b_i,k_i) k_i! (ℏ/2)^{k_i} x^{a_i-k_i} ŷ^{b_i-k_i}
        std::vector<std::uint32_t> k(n, 0);
        auto rec = [&](auto&& self, std::size_t slot) -> void {
            if (slot == n) {
                std::uint32_t total = 0;
                Rational w = coeff;
                std::vector<std::uint32_t> xe(n, 0), de(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    total += k[i];
                    w *= Rational(binomial(a[i], k[i]) * binomial(b[i], k[i]) * factorial(k[i]),
                                  Integer(1) << k[i]);
                    xe[i] = a[i] - k[i];
                    de[i] = b[i] - k[i];
                }
                if (total > ctx.order) return;
                out.add_term(Monomial::from_exponents(xe), Monomial::from_exponents(de),
                             HScalar::hbar_power(total, w, ctx.order));
                return;
            }
            std::uint32_t kmax = std::min(a[slot], b[slot]);
            for (std::uint32_t kv = 0; kv <= kmax; ++kv) {
                k[slot] = kv;
                self(self, slot + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

WeylOp phi(const HSeries& f, const WeylContext& ctx) {
    WeylOp out(ctx);
    for (std::uint32_t j = 0; j <= std::min(f.order(), ctx.order); ++j) {
        if (f.coeff(j).is_zero()) continue;
        out = out + phi(f.coeff(j), ctx).scaled_h(HScalar::hbar_power(j, 1, ctx.order));
    }
    return out;
}

HXSeries weyl_apply(const WeylOp& p, const XSeries& s) {
    if (p.ctx().dim() != 1) throw error("weyl_apply: single base variable required");
    if (!s.ctx() || s.ctx()->size() != 1)
        throw error("weyl_apply: series must live in a one-variable context");
    std::uint32_t order = p.ctx().order;
    HXSeries out(s.ctx(), order, s.cap());
    Poly x = Poly::variable(s.ctx(), 0);
    for (const auto& [key, c] : p.terms()) {
        std::uint32_t a = key.first.exponent(0), b = key.second.exponent(0);
        if (b > order) continue;
        XSeries v = s;
        for (std::uint32_t k = 0; k < b; ++k) v = v.diff(0);
        // caps shrink under differentiation; pad back to the output cap
        XSeries vv(s.ctx(), s.cap());
        for (std::uint32_t d = 0; d <= v.cap(); ++d) vv.mutable_part(d) = v.part(d);
        for (std::uint32_t k = 0; k < a; ++k) vv = vv.times_poly(x);
        for (std::uint32_t j = 0; j + b <= order && j <= c.order(); ++j) {
            if (c.coeff(j) == 0) continue;
            out.mutable_level(j + b) = out.level(j + b) + vv.scaled(c.coeff(j));
        }
    }
    return out;
}

std::string to_string(const WeylOp& op) {
    if (op.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : op.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string word;
        for (const auto& [v, e] : key.first.factors()) {
            if (!word.empty()) word += "*";
            word += op.ctx().phase->name(op.ctx().pairs[v].first);
            if (e > 1) word += "^" + std::to_string(e);
        }
        for (const auto& [v, e] : key.second.factors()) {
            if (!word.empty()) word += "*";
            word += "(h*d/d" + op.ctx().phase->name(op.ctx().pairs[v].first) + ")";
            if (e > 1) word += "^" + std::to_string(e);
        }
        out += "(" + to_string(c) + ")";
        if (!word.empty()) out += "*" + word;
    }
    return out;
}

} // namespace starq
