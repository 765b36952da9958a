#include "ncprob/meixner.hpp"

#include <algorithm>

#include "ncprob/error.hpp"

namespace ncprob {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

// Same coefficients with a smaller cap; the dense layout shares its prefix.
NCSeries recapped(const NCSeries& f, int cap) {
    NCSeries out(f.alphabet(), cap);
    for (std::size_t k = 0; k < out.term_count(); ++k) out.coeff(k) = f.coeff(k);
    return out;
}

SeriesTuple derivative_tuple(const NCSeries& f) {
    SeriesTuple out;
    for (int i = 1; i <= f.alphabet(); ++i) out.push_back(left_derivative(i, f));
    return out;
}

std::vector<PdeResidual> pde_residual(const Functional& phi, const MeixnerParams& p, const NCSeries& gen,
                                      const Rational& shift) {
    p.validate();
    require_standardized(phi);
    if (p.d != phi.alphabet()) throw ShapeError("parameters and functional have different alphabets");
    const int n = phi.degree_cap();
    const int d = p.d;
    const SeriesTuple first = derivative_tuple(gen);
    std::vector<PdeResidual> out;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            NCSeries r = left_derivative(i, first[at(j)]);
            if (i == j) r -= NCSeries::one(d, n);
            for (int k = 1; k <= d; ++k) {
                const Rational& b = p.B(k, i, j);
                if (!b.is_zero()) r -= b * first[at(k)];
            }
            const Rational c = p.C(at(i), at(j)) + shift;
            if (!c.is_zero()) r -= c * (first[at(i)] * first[at(j)]);
            out.push_back({i, j, r.truncated(std::max(n - 2, 0))});
        }
    }
    return out;
}

std::vector<NCPolynomial> coefficients(const PolySeries& g) {
    std::vector<NCPolynomial> out;
    for (std::size_t k = 0; k < g.term_count(); ++k) out.push_back(g.coeff(k));
    return out;
}

int family_degree(const Functional& phi, int n) {
    require_standardized(phi);
    if (n < 0) throw DomainError("polynomial degree must be nonnegative");
    if (2 * n > phi.degree_cap()) {
        throw DepthError("orthogonality to degree " + std::to_string(n) + " needs moments to degree " +
                         std::to_string(2 * n));
    }
    return n;
}

}  // namespace

MeixnerParams MeixnerParams::univariate(const Rational& b, const Rational& c) {
    return {1, {Matrix::from_rows({{b}})}, Matrix::from_rows({{c}})};
}

void MeixnerParams::validate() const {
    if (d < 1) throw ShapeError("d must be positive");
    const auto n = static_cast<std::size_t>(d);
    if (T.size() != n) throw ShapeError("T must hold " + std::to_string(d) + " matrices");
    for (const Matrix& t : T) {
        if (t.rows() != n || t.cols() != n) throw ShapeError("each T_i must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (C.rows() != n || C.cols() != n) throw ShapeError("C must be " + std::to_string(d) + "x" + std::to_string(d));
}

bool MeixnerParams::is_symmetric() const {
    for (int k = 1; k <= d; ++k) {
        for (int i = 1; i <= d; ++i) {
            for (int j = 1; j <= d; ++j) {
                if (B(k, i, j) != B(k, j, i) || B(k, i, j) != B(i, k, j)) return false;
            }
        }
    }
    return true;
}

bool MeixnerParams::satisfies_commutation() const {
    for (const Matrix& t : T) {
        for (std::size_t a = 0; a < t.rows(); ++a) {
            for (std::size_t a2 = 0; a2 < t.cols(); ++a2) {
                if (t(a, a2).is_zero()) continue;
                for (std::size_t b = 0; b < C.cols(); ++b) {
                    if (C(a2, b) != C(a, b)) return false;
                }
            }
        }
    }
    return true;
}

bool MeixnerParams::is_positive() const {
    for (std::size_t i = 0; i < C.rows(); ++i) {
        for (std::size_t j = 0; j < C.cols(); ++j) {
            if (C(i, j) + 1 < 0) return false;
        }
    }
    return true;
}

FockData meixner_to_fock(const MeixnerParams& p, int depth) {
    p.validate();
    FockData data = FockData::zero(p.d, depth);
    const auto d = static_cast<std::size_t>(p.d);
    for (int k = 1; k <= depth; ++k) {
        auto& level = data.C[static_cast<std::size_t>(k - 1)];
        const std::size_t size = data.level_size(k);
        if (k == 1) {
            std::fill(level.begin(), level.end(), Rational(1));
        } else {
            const std::size_t tail = size / (d * d);
            for (std::size_t w = 0; w < size; ++w) level[w] = 1 + p.C(w / (d * tail), (w / tail) % d);
        }
        const Matrix rest = Matrix::identity(data.level_size(k - 1));
        for (int i = 1; i <= p.d; ++i) data.T[at(i)][static_cast<std::size_t>(k)] = kronecker(p.T[at(i)], rest);
    }
    return data;
}

Functional meixner_functional(const MeixnerParams& p, int n) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    return fock_functional(meixner_to_fock(p, (n + 1) / 2), n);
}

void require_standardized(const Functional& phi) {
    if (phi.degree_cap() < 2) throw PreconditionError("standardization needs moments to degree 2");
    for (int i = 1; i <= phi.alphabet(); ++i) {
        if (!phi.moment(MultiIndex(phi.alphabet(), {i})).is_zero()) throw PreconditionError("phi[x_" + std::to_string(i) + "] is not zero");
        for (int j = 1; j <= phi.alphabet(); ++j) {
            if (phi.moment(MultiIndex(phi.alphabet(), {i, j})) != Rational(i == j ? 1 : 0)) {
                throw PreconditionError("covariance is not the identity at (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
            }
        }
    }
}

std::vector<PdeResidual> free_pde_residual(const Functional& phi, const MeixnerParams& p) {
    return pde_residual(phi, p, free_cumulants(phi), 0);
}

std::vector<PdeResidual> boolean_pde_residual(const Functional& phi, const MeixnerParams& p) {
    return pde_residual(phi, p, boolean_cumulants(phi), 1);
}

int lowest_residual_degree(const std::vector<PdeResidual>& residuals) {
    int lowest = -1;
    for (const PdeResidual& r : residuals) {
        const int deg = r.residual.lowest_degree();
        if (deg >= 0 && (lowest < 0 || deg < lowest)) lowest = deg;
    }
    return lowest;
}

ShefferReport sheffer_coincidence_check(const Functional& phi) {
    return sheffer_coincidence_check(phi, identity_tuple(phi.alphabet(), phi.degree_cap()));
}

ShefferReport sheffer_coincidence_check(const Functional& phi, const SeriesTuple& v) {
    const int d = phi.alphabet();
    if (static_cast<int>(v.size()) != d) throw ShapeError("V must have one component per variable");
    const int n = v.front().degree_cap();
    if (n > phi.degree_cap()) throw DepthError("V has a higher cap than the moments");
    const NCSeries m = recapped(phi.moment_series(), n);
    const NCSeries r = recapped(free_cumulants(phi), n);
    const NCSeries eta = recapped(boolean_cumulants(phi), n);
    const NCSeries one = NCSeries::one(v.front().alphabet(), n);

    const NCSeries m_v = substitute(m, v);
    SeriesTuple u;
    for (const NCSeries& vi : v) u.push_back((one + m_v) * vi);
    const NCSeries r_u = substitute(r, u);

    ShefferReport report;
    report.r_u_equals_m_v = r_u == m_v;
    const NCSeries inv = mul_inverse(one + r_u);
    report.v_recovered = true;
    for (std::size_t i = 0; i < v.size(); ++i) report.v_recovered = report.v_recovered && inv * u[i] == v[i];

    const PolySeries free_side = mul_inverse(PolySeries::from_series(one + r_u, d) - PolySeries::linear_form(u, d));
    const PolySeries boolean_side = mul_inverse(PolySeries::from_series(one, d) - PolySeries::linear_form(v, d)) *
                                    PolySeries::from_series(one - substitute(eta, v), d);
    report.generating_functions_agree = free_side == boolean_side;
    return report;
}

std::vector<NCPolynomial> free_meixner_polynomials(const Functional& phi, int n) {
    family_degree(phi, n);
    const int d = phi.alphabet();
    const NCSeries r = free_cumulants(phi);
    // D R has cap N - 1, so U is exact to degree n.
    SeriesTuple dr;
    for (const NCSeries& f : derivative_tuple(r)) dr.push_back(recapped(f, n));
    const SeriesTuple u = comp_inverse(dr);
    const PolySeries g = PolySeries::from_series(NCSeries::one(d, n) + substitute(recapped(r, n), u), d) -
                         PolySeries::linear_form(u, d);
    return coefficients(mul_inverse(g));
}

std::vector<NCPolynomial> boolean_meixner_polynomials(const Functional& phi, int n) {
    family_degree(phi, n);
    const int d = phi.alphabet();
    const NCSeries eta = boolean_cumulants(phi);
    SeriesTuple deta;
    for (const NCSeries& f : derivative_tuple(eta)) deta.push_back(recapped(f, n));
    const SeriesTuple v = comp_inverse(deta);
    const NCSeries one = NCSeries::one(d, n);
    const PolySeries g = mul_inverse(PolySeries::from_series(one, d) - PolySeries::linear_form(v, d)) *
                         PolySeries::from_series(one - substitute(recapped(eta, n), v), d);
    return coefficients(g);
}

bool pairwise_orthogonal(const Functional& phi, const std::vector<NCPolynomial>& family) {
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = 0; b < family.size(); ++b) {
            if (a != b && !phi.inner(family[a], family[b]).is_zero()) return false;
        }
    }
    return true;
}

MeixnerParams bt_transform_params(const MeixnerParams& p, const Rational& t) {
    p.validate();
    MeixnerParams out = p;
    for (std::size_t i = 0; i < out.C.rows(); ++i) {
        for (std::size_t j = 0; j < out.C.cols(); ++j) out.C(i, j) += t;
    }
    return out;
}

Functional bt_transform_series(const Functional& phi, const Rational& t) {
    const Rational s = 1 + t;
    if (s.is_zero()) throw DomainError("B_t is undefined at t = -1");
    return boolean_power(free_power(phi, s), 1 / s);
}

MeixnerParams bp_bijection_params(const MeixnerParams& p) { return bt_transform_params(p, 1); }

Functional bp_bijection_series(const Functional& phi) { return moments_from_free_cumulants(boolean_cumulants(phi)); }

Functional univariate_meixner(const Rational& b, const Rational& c, int n) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    JacobiData jacobi;
    for (int k = 0; k <= (n + 1) / 2; ++k) jacobi.beta.push_back(k == 0 ? Rational(0) : b);
    for (int k = 1; k <= n / 2 + 1; ++k) jacobi.gamma.push_back(k == 1 ? Rational(1) : 1 + c);
    std::vector<Rational> m = jacobi_moments(jacobi, n);
    m.erase(m.begin());
    return Functional::from_moments(m);
}

Functional bernoulli_functional(const Rational& beta, int n) {
    if (beta.is_zero()) throw DomainError("beta must be nonzero");
    if (n < 0) throw DomainError("degree must be nonnegative");
    const Rational b2 = beta * beta;
    const Rational other = -1 / beta;
    std::vector<Rational> m;
    for (int k = 1; k <= n; ++k) m.push_back((pow(beta, k) + b2 * pow(other, k)) / (1 + b2));
    return Functional::from_moments(m);
}

std::pair<Functional, Functional> laha_lukacs_pair(const Rational& alpha, const Rational& a, int n) {
    if (alpha <= 0 || alpha >= 1) throw DomainError("alpha must lie strictly between 0 and 1");
    if (n < 0) throw DomainError("degree must be nonnegative");
    NCSeries eta_x(1, n);
    NCSeries eta_y(1, n);
    for (int k = 2; k <= n; ++k) {
        const Rational base = pow(a, k - 2);
        eta_x.set(MultiIndex::repeated(1, 1, static_cast<std::size_t>(k)), alpha * base);
        eta_y.set(MultiIndex::repeated(1, 1, static_cast<std::size_t>(k)), (1 - alpha) * base);
    }
    return {moments_from_boolean_cumulants(eta_x), moments_from_boolean_cumulants(eta_y)};
}

LahaLukacsReport laha_lukacs_check(const Functional& x, const Functional& y, int n) {
    if (x.alphabet() != 1 || y.alphabet() != 1) throw ShapeError("X and Y must be univariate");
    if (n < 0) throw DomainError("order must be nonnegative");
    const int cap = n + 2;
    if (x.degree_cap() < cap || y.degree_cap() < cap) {
        throw DepthError("order " + std::to_string(n) + " needs moments to degree " + std::to_string(cap));
    }
    if (!x.moment(1).is_zero() || !y.moment(1).is_zero()) throw PreconditionError("X and Y must be centered");
    LahaLukacsReport report;
    report.alpha = x.moment(2);
    report.beta = y.moment(2);
    if (report.alpha + report.beta != 1) throw PreconditionError("phi[X^2] + phi[Y^2] must equal 1");
    const Rational& alpha = report.alpha;
    const Rational& beta = report.beta;

    const Functional joint = boolean_product({x, y});
    const NCPolynomial x1 = NCPolynomial::variable(2, 1);
    const NCPolynomial x2 = NCPolynomial::variable(2, 2);
    const NCPolynomial s = x1 + x2;
    const NCPolynomial v = beta * x1 - alpha * x2;

    report.variance_identity = true;
    NCPolynomial s_pow = NCPolynomial::constant(2, 1);
    for (int k = 0; k <= n; ++k) {
        const Rational lhs = joint.evaluate(s_pow * v * v);
        const Rational rhs = alpha * beta * joint.evaluate(s_pow * s * s);
        report.variance_identity = report.variance_identity && lhs == rhs;
        s_pow = s_pow * s;
    }

    const Functional sum = boolean_convolve(x, y);
    const NCSeries k_s = boolean_cumulants(sum);
    const NCSeries k_x = boolean_cumulants(x);
    const NCSeries k_y = boolean_cumulants(y);
    report.cumulants_proportional = k_x == alpha * k_s && k_y == beta * k_s;

    // eta[S, ..., S, V, V] by multilinear expansion over the joint Boolean cumulants.
    const NCSeries eta = boolean_cumulants(joint);
    report.mixed_cumulants = true;
    for (int m = 2; m <= cap; ++m) {
        Rational total = 0;
        for (const MultiIndex& w : words_of_length(2, m)) {
            Rational weight = 1;
            for (int pos = m - 2; pos < m; ++pos) weight *= w[static_cast<std::size_t>(pos)] == 1 ? beta : -alpha;
            total += weight * eta[w];
        }
        report.mixed_cumulants = report.mixed_cumulants && total == alpha * beta * k_s[MultiIndex::repeated(1, 1, static_cast<std::size_t>(m))];
    }

    const NCSeries z = NCSeries::variable(1, cap, 1);
    const NCSeries ms = recapped(sum.moment_series(), cap);
    const Rational a = cap >= 3 ? sum.moment(3) : Rational(0);
    report.moment_relation = ms * (NCSeries::one(1, cap) - a * z - z * z) == z * z;
    return report;
}

}  // namespace ncprob
