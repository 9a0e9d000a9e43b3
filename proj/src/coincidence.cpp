#include "coble/coincidence.hpp"

#include <string>

#include "coble/error.hpp"
#include "coble/parallel.hpp"

namespace coble {

namespace {

void check_quadratic(const binary_form& f, const char* name) {
    if (f.degree() != 2)
        fail("InvalidTriple", std::string(name) + " must have degree 2");
}

Rat discriminant(const binary_form& f) {
    return f[1] * f[1] - Rat(4) * f[0] * f[2];
}

// rank of the 2x3 matrix with rows f, g is at most 1
bool rank_at_most_one(const binary_form& f, const binary_form& g) {
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (f[i] * g[j] != f[j] * g[i]) return false;
    return true;
}

qmat adjugate3(const qmat& x) {
    qmat r(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            size_t r0 = (j == 0) ? 1 : 0;
            size_t r1 = (j == 2) ? 1 : 2;
            size_t c0 = (i == 0) ? 1 : 0;
            size_t c1 = (i == 2) ? 1 : 2;
            Rat minor = x(r0, c0) * x(r1, c1) - x(r0, c1) * x(r1, c0);
            r(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return r;
}

void check_lambda_shape(const qmat& lambda) {
    if (lambda.rows() != 3 || lambda.cols() != 3)
        fail("BadInput", "lambda must be a 3x3 matrix");
}

binary_form third_row_combination(const binary_form& a, const binary_form& b,
                                  const binary_form& c, const qmat& lambda) {
    return a * lambda(2, 0) + b * lambda(2, 1) + c * lambda(2, 2);
}

} // namespace

void validate_triple(const binary_form& a, const binary_form& b,
                     const binary_form& c) {
    const binary_form* forms[3] = {&a, &b, &c};
    const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        check_quadratic(*forms[i], names[i]);
        if (forms[i]->is_zero())
            fail("InvalidTriple", std::string(names[i]) + " is zero");
        if (discriminant(*forms[i]) == 0)
            fail("InvalidTriple",
                 std::string(names[i]) + " has a double root");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (resultant(*forms[i], *forms[j]) == 0)
                fail("InvalidTriple", std::string(names[i]) + " and " +
                                          names[j] + " share a root");
}

coeff_matrices build_matrices(const binary_form& a, const binary_form& b,
                              const binary_form& c) {
    const binary_form* forms[3] = {&a, &b, &c};
    const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) check_quadratic(*forms[i], names[i]);

    coeff_matrices out;
    out.m = qmat(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) out.m(i, j) = (*forms[i])[j];

    out.n = qmat(3, 3);
    const size_t pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (size_t row = 0; row < 3; ++row) {
        const binary_form& x = *forms[pairs[row][0]];
        const binary_form& y = *forms[pairs[row][1]];
        out.n(row, 0) = x[0] * y[1] - x[1] * y[0];
        out.n(row, 1) = x[0] * y[2] - x[2] * y[0];
        out.n(row, 2) = x[1] * y[2] - x[2] * y[1];
    }

    // N with its columns reversed coincides with adj(S M^t S), S =
    // diag(1, -1, 1), and det N = -(det M)^2; both hold for every triple,
    // degenerate or not.
    qmat reversed(3, 3);
    qmat conjugated(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            reversed(i, j) = out.n(i, 2 - j);
            Rat e = out.m(j, i);
            if ((i == 1) != (j == 1)) e = -e;
            conjugated(i, j) = e;
        }
    require(reversed == adjugate3(conjugated), "InternalError",
            "Jacobian companion matrix identity failed");
    Rat dm = det(out.m);
    require(det(out.n) == -dm * dm, "InternalError",
            "Jacobian companion determinant identity failed");
    return out;
}

bool coincidence_condition(const binary_form& a, const binary_form& b,
                           const binary_form& c) {
    validate_triple(a, b, c);
    return det(build_matrices(a, b, c).m) == 0;
}

mobius_map pompilj_residual(const binary_form& a, const binary_form& b,
                            const binary_form& c) {
    validate_triple(a, b, c);
    mobius_map sigma_a = pencil_involution(b, c);
    mobius_map sigma_b = pencil_involution(a, c);
    mobius_map sigma_c = pencil_involution(a, b);
    mobius_map t = compose(compose(sigma_a, sigma_b), sigma_c);
    return compose(t, t);
}

bool family_coincidence_test(const binary_form& a, const binary_form& b,
                             const qmat& lambda, const binary_form& c) {
    validate_triple(a, b, c);
    check_lambda_shape(lambda);
    if (det(lambda) == 0) fail("SingularLambda", "lambda is not invertible");
    binary_form g2 = third_row_combination(a, b, c, lambda);
    return rank_at_most_one(g2, jacobian(a, b));
}

std::vector<family_scan_entry> family_scan(const binary_form& a,
                                           const binary_form& b,
                                           const binary_form& c,
                                           const std::vector<qmat>& lambdas) {
    validate_triple(a, b, c);
    for (const qmat& lambda : lambdas) check_lambda_shape(lambda);
    binary_form jac_ab = jacobian(a, b);
    return parallel_map_ranges<family_scan_entry>(
        lambdas.size(), [&](size_t begin, size_t end) {
            std::vector<family_scan_entry> part;
            part.reserve(end - begin);
            for (size_t i = begin; i < end; ++i) {
                family_scan_entry e;
                e.lambda = lambdas[i];
                if (det(e.lambda) == 0) {
                    e.singular = true;
                    part.push_back(e);
                    continue;
                }
                binary_form g2 = third_row_combination(a, b, c, e.lambda);
                qmat m(3, 3);
                for (size_t j = 0; j < 3; ++j) {
                    m(0, j) = a[j];
                    m(1, j) = b[j];
                    m(2, j) = g2[j];
                }
                e.det_m = det(m);
                e.coincident = (e.det_m == 0);
                e.marked_fix = rank_at_most_one(g2, jac_ab);
                part.push_back(e);
            }
            return part;
        });
}

} // namespace coble
