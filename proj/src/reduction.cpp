#include "starq/reduction.hpp"

namespace starq {

F lin_bracket(const LinForm& f, const LinForm& g) {
    F acc(0);
    for (std::size_t i = 0; i < f.x.size(); ++i)
        acc = acc + f.x[i] * g.y[i] - f.y[i] * g.x[i];
    for (std::size_t k = 0; k < f.z.size(); ++k)
        acc = acc + f.z[k] * g.w[k] - f.w[k] * g.z[k];
    return acc;
}

LinearLagrangian::LinearLagrangian(FMat m, FMat n) : M(std::move(m)), N(std::move(n)) {
    std::size_t d = M.rows();
    if (M.cols() != d || N.rows() != d || N.cols() != d)
        throw error("LinearLagrangian: M and N must be square of equal size");
    // Poisson closure -M_{ij}N_{kj} + N_{ij}M_{kj} = 0, i.e. N·Mᵀ symmetric
    FMat nmt = N * M.transpose();
    if (!nmt.is_symmetric()) throw error("LinearLagrangian: equations do not Poisson-commute");
    if (M.rank() < d && N.rank() < d)
        throw error("LinearLagrangian: both M and N rank-deficient (not Lagrangian)");
}

CoisotropicSubspace::CoisotropicSubspace(FMat x, FMat y) : X(std::move(x)), Y(std::move(y)) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols())
        throw error("CoisotropicSubspace: block shape mismatch");
    std::size_t n = dim_n(), m = codim();
    // linear coisotropic: pairwise brackets vanish identically on the span
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s) {
            F acc(0);
            for (std::size_t i = 0; i < n; ++i)
                acc = acc + X.at(r, i) * Y.at(s, i) - Y.at(r, i) * X.at(s, i);
            if (!acc.is_zero())
                throw error("CoisotropicSubspace: generators are not bracket-closed");
        }
}

GaussianForm::GaussianForm(std::vector<std::string> v, FMat k, FMat j, F off)
    : vars(std::move(v)), K(std::move(k)), J(std::move(j)), c(std::move(off)) {
    if (K.rows() != K.cols() || K.rows() != vars.size())
        throw error("GaussianForm: K must be square over the named variables");
    if (!K.is_symmetric()) throw error("GaussianForm: K must be symmetric");
    if (J.rows() != K.rows()) throw error("GaussianForm: J row count mismatch");
}

GaussianForm lagrangian_wavefunction(const LinearLagrangian& L,
                                     const std::vector<std::string>& var_names) {
    std::size_t n = L.dim();
    if (var_names.size() != n) throw error("lagrangian_wavefunction: variable names mismatch");

    if (L.M.rank() == n) {
        FMat Q = L.M.inverse() * L.N;
        if (!Q.is_symmetric())
            throw error("lagrangian_wavefunction: M^{-1}N not symmetric");
        return GaussianForm(var_names, Q, FMat(n, 0));
    }

    // rank-deficient M: row-reduce [M | N] so the rows outside M's row space
    // become pure-x equations, solve those for pivot x's, and recurse on the
    // reduced block
    FMat A(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            A.at(i, j) = L.M.at(i, j);
            A.at(i, n + j) = L.N.at(i, j);
        }
    // eliminate on the M block
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && A.at(piv, col) == F(0)) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(A.at(piv, j), A.at(r, j));
        F f = F(1) / A.at(r, col);
        for (std::size_t j = 0; j < 2 * n; ++j) A.at(r, j) = A.at(r, j) * f;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || A.at(i, col) == F(0)) continue;
            F g = A.at(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) A.at(i, j) = A.at(i, j) - g * A.at(r, j);
        }
        ++r;
    }
    std::size_t pure = n - r; // pure-x equations

    // solve the pure-x block for pivot x variables
    FMat PX(pure, n);
    for (std::size_t i = 0; i < pure; ++i)
        for (std::size_t j = 0; j < n; ++j) PX.at(i, j) = A.at(r + i, n + j);
    if (PX.rank() != pure)
        throw error("lagrangian_wavefunction: pure-x equations are degenerate (not Lagrangian)");

    // pick pivot columns of PX
    std::vector<std::size_t> pivots;
    {
        FMat E = PX;
        std::size_t rr = 0;
        for (std::size_t col = 0; col < n && rr < pure; ++col) {
            std::size_t piv = rr;
            while (piv < pure && E.at(piv, col) == F(0)) ++piv;
            if (piv == pure) continue;
            if (piv != rr)
                for (std::size_t j = 0; j < n; ++j) std::swap(E.at(piv, j), E.at(rr, j));
            F f = F(1) / E.at(rr, col);
            for (std::size_t j = 0; j < n; ++j) E.at(rr, j) = E.at(rr, j) * f;
            for (std::size_t i = 0; i < pure; ++i) {
                if (i == rr || E.at(i, col) == F(0)) continue;
                F g = E.at(i, col);
                for (std::size_t j = 0; j < n; ++j) E.at(i, j) = E.at(i, j) - g * E.at(rr, j);
            }
            pivots.push_back(col);
            ++rr;
        }
        // substitution x_pivot = Σ S·x_free
        std::vector<bool> is_piv(n, false);
        for (auto c : pivots) is_piv[c] = true;
        std::vector<std::size_t> frees;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_piv[j]) frees.push_back(j);
        std::size_t nf = frees.size();

        FMat S(pure, nf); // x_{pivot i} = Σ_j S(i,j) x_{free j}
        for (std::size_t i = 0; i < pure; ++i)
            for (std::size_t j = 0; j < nf; ++j) S.at(i, j) = F(0) - E.at(i, frees[j]);

        // reduced system over the surviving variables, rows 0..r-1
        FMat Mr(r, r), Nr(r, nf);
        // surviving y's: the unit pivot columns of the reduced M rows
        std::vector<std::size_t> ycols;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(A.at(i, j) == F(0))) {
                    ycols.push_back(j);
                    break;
                }
        if (ycols.size() != r) throw error("lagrangian_wavefunction: unexpected M structure");
        // the reduction pairs surviving x's and y's positionally; that is only
        // sound when the M rows have no support outside their pivot columns
        // (then Poisson closure forces the pure-x pivots onto the missing y's)
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t support = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (!(A.at(i, j) == F(0))) ++support;
            if (support != 1)
                throw error("lagrangian_wavefunction: mixed y support, unsupported shape");
        }
        if (frees != std::vector<std::size_t>(ycols.begin(), ycols.end()))
            throw error("lagrangian_wavefunction: pure-x pivots do not match the missing y's");
        if (nf != r)
            throw error("lagrangian_wavefunction: surviving block is not square (not Lagrangian)");
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) Mr.at(i, j) = A.at(i, ycols[j]);
            for (std::size_t j = 0; j < nf; ++j) {
                F v = A.at(i, n + frees[j]);
                for (std::size_t p = 0; p < pure; ++p)
                    v = v + A.at(i, n + pivots[p]) * S.at(p, j);
                Nr.at(i, j) = v;
            }
        }
        std::vector<std::string> names;
        for (auto j : frees) names.push_back(var_names[j]);
        return lagrangian_wavefunction(LinearLagrangian(Mr, Nr), names);
    }
}

bool annihilates(const GaussianForm& psi, const LinForm& gen) {
    std::size_t n = psi.n(), g = psi.sources();
    if (gen.x.size() != n || gen.z.size() != g) throw error("annihilates: shape mismatch");
    // [u·x + ρ·z + Σ v_i (-(Kx)_i + (Jz)_i) + Σ τ_k (xᵀJ)_k] ψ = 0
    for (std::size_t i = 0; i < n; ++i) {
        F coeff = gen.x[i];
        for (std::size_t j = 0; j < n; ++j) coeff = coeff - psi.K.at(i, j) * gen.y[j];
        for (std::size_t k = 0; k < g; ++k) coeff = coeff + psi.J.at(i, k) * gen.w[k];
        if (!coeff.is_zero()) return false;
    }
    for (std::size_t k = 0; k < g; ++k) {
        F coeff = gen.z[k];
        for (std::size_t i = 0; i < n; ++i) coeff = coeff + psi.J.at(i, k) * gen.y[i];
        if (!coeff.is_zero()) return false;
    }
    return true;
}

Extension extend_coisotropic(const CoisotropicSubspace& G) {
    if (G.dim_n() != 2 || G.codim() != 1)
        throw error("extend_coisotropic: implemented for the 4-dimensional codimension-1 case");
    F a = G.X.at(0, 0), b = G.X.at(0, 1), c = G.Y.at(0, 0), d = G.Y.at(0, 1);

    Extension E;
    LinForm zeta(2, 1), xi(2, 1);
    if (!c.is_zero() && !d.is_zero()) {
        // ζ₁ = a x₁ + c y₁,  ξ₁ = x₁/c - x₂/d
        zeta.x[0] = a;
        zeta.y[0] = c;
        xi.x[0] = F(1) / c;
        xi.x[1] = F(0) - F(1) / d;
        E.normalization = "zeta = a*x1 + c*y1, xi = x1/c - x2/d";
    } else if (c.is_zero() && !d.is_zero() && !a.is_zero()) {
        // H_G = a x₁ + b x₂ + d y₂: ζ₁ = a x₁; ξ₁ needs a y-part
        zeta.x[0] = a;
        xi.y[0] = F(0) - F(1) / a;
        xi.x[1] = F(0) - F(1) / d;
        E.normalization = "zeta = a*x1, xi = -y1/a - x2/d (c = 0 pivot)";
    } else if (d.is_zero() && !c.is_zero() && !b.is_zero()) {
        // mirrored pivot: ζ₁ = b x₂, ξ with y₂ component
        zeta.x[1] = b;
        xi.y[1] = F(0) - F(1) / b;
        xi.x[0] = F(0) - F(1) / c;
        E.normalization = "zeta = b*x2, xi = -y2/b - x1/c (d = 0 pivot)";
    } else {
        throw error("extend_coisotropic: degenerate parameters, no supported pivot");
    }
    E.zeta.push_back(zeta);
    E.xi.push_back(xi);

    if (!extension_is_coisotropic(G, E))
        throw error("extend_coisotropic: produced extension fails the bracket conditions");
    return E;
}

bool extension_is_coisotropic(const CoisotropicSubspace& G, const Extension& E) {
    std::size_t n = G.dim_n(), g = E.g();
    std::vector<LinForm> gens;
    for (std::size_t k = 0; k < g; ++k) {
        LinForm zk(n, g); // z_k - ζ_k
        zk.z[k] = F(1);
        for (std::size_t i = 0; i < n; ++i) {
            zk.x[i] = F(0) - E.zeta[k].x[i];
            zk.y[i] = F(0) - E.zeta[k].y[i];
        }
        gens.push_back(zk);
        LinForm wk(n, g); // w_k - ξ_k
        wk.w[k] = F(1);
        for (std::size_t i = 0; i < n; ++i) {
            wk.x[i] = F(0) - E.xi[k].x[i];
            wk.y[i] = F(0) - E.xi[k].y[i];
        }
        gens.push_back(wk);
    }
    for (std::size_t r = 0; r < G.codim(); ++r) {
        LinForm hg(n, g);
        for (std::size_t i = 0; i < n; ++i) {
            hg.x[i] = G.X.at(r, i);
            hg.y[i] = G.Y.at(r, i);
        }
        gens.push_back(hg);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!lin_bracket(gens[i], gens[j]).is_zero()) return false;
    return true;
}

GaussianForm coisotropic_wavefunction(const CoisotropicSubspace& G, const Extension& E,
                                      const std::vector<std::string>& var_names) {
    std::size_t n = G.dim_n(), g = E.g();
    // unknowns: K (symmetric n×n) and J (n×g); conditions per generator
    // ℓ = u·x + v·y + ρ·z + τ·w:
    //   x-coefficients: u - K v + J τ = 0
    //   z-coefficients: ρ + Jᵀ v = 0
    std::size_t nK = n * (n + 1) / 2, nJ = n * g;
    auto kidx = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        // row-major upper triangle
        return i * n - i * (i + 1) / 2 + j;
    };
    std::vector<LinForm> gens;
    {
        for (std::size_t k = 0; k < g; ++k) {
            LinForm zk(n, g);
            zk.z[k] = F(1);
            for (std::size_t i = 0; i < n; ++i) {
                zk.x[i] = F(0) - E.zeta[k].x[i];
                zk.y[i] = F(0) - E.zeta[k].y[i];
            }
            gens.push_back(zk);
            LinForm wk(n, g);
            wk.w[k] = F(1);
            for (std::size_t i = 0; i < n; ++i) {
                wk.x[i] = F(0) - E.xi[k].x[i];
                wk.y[i] = F(0) - E.xi[k].y[i];
            }
            gens.push_back(wk);
        }
        for (std::size_t r = 0; r < G.codim(); ++r) {
            LinForm hg(n, g);
            for (std::size_t i = 0; i < n; ++i) {
                hg.x[i] = G.X.at(r, i);
                hg.y[i] = G.Y.at(r, i);
            }
            gens.push_back(hg);
        }
    }
    std::size_t rows = gens.size() * (n + g);
    FMat A(rows, nK + nJ);
    FVec rhs(rows, F(0));
    std::size_t row = 0;
    for (const auto& gen : gens) {
        for (std::size_t i = 0; i < n; ++i, ++row) {
            // u_i - Σ_j K_{ij} v_j + Σ_k J_{ik} τ_k = 0
            rhs[row] = F(0) - gen.x[i];
            for (std::size_t j = 0; j < n; ++j)
                A.at(row, kidx(i, j)) = A.at(row, kidx(i, j)) - gen.y[j];
            for (std::size_t k = 0; k < g; ++k)
                A.at(row, nK + i * g + k) = A.at(row, nK + i * g + k) + gen.w[k];
        }
        for (std::size_t k = 0; k < g; ++k, ++row) {
            // ρ_k + Σ_i J_{ik} v_i = 0
            rhs[row] = F(0) - gen.z[k];
            for (std::size_t i = 0; i < n; ++i)
                A.at(row, nK + i * g + k) = A.at(row, nK + i * g + k) + gen.y[i];
        }
    }
    auto sol = A.solve(rhs);
    if (!sol) throw error("coisotropic_wavefunction: singular pivot, no Gaussian solution");
    FMat K(n, n), J(n, g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) K.at(i, j) = (*sol)[kidx(i, j)];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < g; ++k) J.at(i, k) = (*sol)[nK + i * g + k];
    GaussianForm psi(var_names, K, J);
    for (const auto& gen : gens)
        if (!annihilates(psi, gen))
            throw error("coisotropic_wavefunction: solution fails to annihilate");
    return psi;
}

FMat central_identity_quadratic(const FMat& Kprime, const FMat& J) {
    F det = Kprime.det_laplace();
    if (det.is_zero())
        throw error("central identity: det(K+Q) = 0, fail to intersect transversally");
    return (J.transpose() * Kprime.adjugate() * J).scaled(F(1) / det);
}

std::pair<PolyT<F>, PolyT<F>> central_identity(const FMat& Kprime, const PolyT<F>& V,
                                               const Ctx& source_ctx, std::uint32_t order) {
    std::size_t n = Kprime.rows();
    if (!source_ctx || source_ctx->size() != n)
        throw error("central_identity: source context size mismatch");
    F det = Kprime.det_laplace();
    if (det.is_zero())
        throw error("central identity: det(K') = 0, fail to intersect transversally");
    FMat inv = Kprime.adjugate().scaled(F(1) / det);
    PolyT<F> Q(source_ctx);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F half = inv.at(i, j) / F(2);
            if (half.is_zero()) continue;
            Q += PolyT<F>::variable(source_ctx, i, half) * PolyT<F>::variable(source_ctx, j);
        }
    // P_{m+1} relates to P_m by one application of -V(∂_J) against P_m e^Q
    PolyT<F> P = PolyT<F>::constant(source_ctx, F(1));
    PolyT<F> total = P;
    F mfact(1);
    for (std::uint32_t m = 1; m <= order; ++m) {
        PolyT<F> next(source_ctx);
        for (const auto& [mono, coeff] : V.terms()) {
            PolyT<F> term = P.scaled(F(0) - coeff);
            for (const auto& [var, exp] : mono.factors())
                for (std::uint32_t e = 0; e < exp; ++e)
                    term = term.diff(var) + term * Q.diff(var);
            next += term;
        }
        P = next;
        mfact = mfact * F(static_cast<int>(m));
        total += P.scaled(F(1) / mfact);
    }
    return {total, Q};
}

EliminationResult eliminate_and_quantise(const CoisotropicSubspace& G, const LinearLagrangian& L,
                                         const Extension& E) {
    std::size_t n = G.dim_n();
    if (E.g() != 1) throw error("eliminate_and_quantise: single source supported");
    // homogeneous system on (x, y): L rows then G rows
    std::size_t rows = n + G.codim();
    FMat A(rows, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            A.at(i, j) = L.N.at(i, j);
            A.at(i, n + j) = L.M.at(i, j);
        }
    for (std::size_t r = 0; r < G.codim(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            A.at(n + r, j) = G.X.at(r, j);
            A.at(n + r, n + j) = G.Y.at(r, j);
        }
    std::vector<F> kappa = A.kernel_by_minors();
    bool all_zero = true;
    for (const auto& v : kappa) all_zero &= v.is_zero();
    if (all_zero) throw error("eliminate_and_quantise: fail to intersect transversally");

    auto eval_form = [&](const LinForm& f) {
        F acc(0);
        for (std::size_t i = 0; i < n; ++i)
            acc = acc + f.x[i] * kappa[i] + f.y[i] * kappa[n + i];
        return acc;
    };
    F z1 = eval_form(E.zeta[0]);
    F w1 = eval_form(E.xi[0]);
    if (z1.is_zero()) throw error("eliminate_and_quantise: fail to intersect transversally");
    F c1 = w1 / z1;

    // ℏ ∂_{z1} ψ = c1 z1 ψ  ⇒  ψ = exp((1/(2ℏ)) c1 z1²)
    FMat Kz(1, 1);
    Kz.at(0, 0) = F(0) - c1;
    return {c1, GaussianForm({"z1"}, Kz, FMat(1, 0))};
}

ReduceReport reduce_wavefunction(const CoisotropicSubspace& G, const LinearLagrangian& L) {
    std::size_t n = G.dim_n();
    std::vector<std::string> xnames;
    for (std::size_t i = 0; i < n; ++i) xnames.push_back("x" + std::to_string(i + 1));

    Extension E = extend_coisotropic(G);
    GaussianForm psi_L = lagrangian_wavefunction(L, xnames);
    if (psi_L.n() != n)
        throw error("reduce_wavefunction: Lagrangian eliminated variables, unsupported here");
    GaussianForm psi_G = coisotropic_wavefunction(G, E, xnames);

    ReduceReport rep{E,          psi_L,      psi_G,      psi_L.dual().K,
                     FMat(),     F(0),       false,      FMat(),
                     F(0),       F(0),       false,      E.normalization};
    rep.K_prime = psi_G.K + rep.Q_kernel;
    rep.det_K_prime = rep.K_prime.det();
    rep.transversal = !rep.det_K_prime.is_zero();
    if (!rep.transversal) return rep;

    rep.C_gauss = central_identity_quadratic(rep.K_prime, psi_G.J);
    EliminationResult elim = eliminate_and_quantise(G, L, E);
    rep.c1 = elim.c1;
    rep.c0_recomputed = F(0) - elim.c1;
    bool agree = true;
    if (rep.C_gauss.rows() == 1)
        agree = rep.C_gauss.at(0, 0) == rep.c1;
    else
        agree = false;
    rep.routes_agree = agree;
    return rep;
}

std::string to_string(const GaussianForm& psi, const std::vector<std::string>& source_names) {
    // exponent (1/h)(-1/2 Σ K_ij v_i v_j + Σ J_ik v_i s_k + c)
    std::string out = "exp((1/h)*(";
    bool any = false;
    for (std::size_t i = 0; i < psi.n(); ++i)
        for (std::size_t j = i; j < psi.K.cols(); ++j) {
            F coeff = psi.K.at(i, j);
            if (coeff.is_zero()) continue;
            F scale = (i == j) ? F(Rational(-1, 2)) : F(-1);
            std::string term = to_string(scale * coeff) + "*" + psi.vars[i] +
                               (i == j ? "^2" : "*" + psi.vars[j]);
            out += (any ? " + " : "") + term;
            any = true;
        }
    for (std::size_t i = 0; i < psi.n(); ++i)
        for (std::size_t k = 0; k < psi.sources(); ++k) {
            F coeff = psi.J.at(i, k);
            if (coeff.is_zero()) continue;
            std::string src = k < source_names.size() ? source_names[k] : "z" + std::to_string(k + 1);
            out += (any ? " + " : "") + to_string(coeff) + "*" + psi.vars[i] + "*" + src;
            any = true;
        }
    if (!psi.c.is_zero()) {
        out += (any ? " + " : "") + to_string(psi.c);
        any = true;
    }
    if (!any) out += "0";
    return out + "))";
}

} // namespace starq
