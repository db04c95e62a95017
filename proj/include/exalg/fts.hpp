#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exalg/brown.hpp"

namespace exalg {

using Vec = std::vector<Rat>;

// Rational coordinate engine for a 56-dimensional Brown algebra with a
// chosen skew generator: the multiplication structure tensor, the involution
// as a signed permutation, and the derived triple-system forms b, t, q, nu.
//
// Two constructions produce one: the split algebra B(J, F x F, zeta) in its
// natural basis (alpha, j, j', beta), and the quadratic descent algebra
// B(J, Delta) in its descent basis over F.  Everything downstream of the
// construction (ideals machinery, flag classification) runs on exact
// rational coordinates regardless of the original field.
class FtsAlgebra {
public:
    static FtsAlgebra from_split(const BrownCtx<Rat>& ctx);
    static FtsAlgebra from_descent(const QuadDescent& qd, const Rat& skew_scale = Rat(1));

    int dim() const { return kBrownDim; }
    const std::string& label() const { return label_; }
    const Vec& s0() const { return s0_; }
    const Rat& mu() const { return mu_; }
    Vec unit() const { return unit_; }
    static Vec basis_vec(int k) {
        Vec v(kBrownDim);
        v[k] = Rat(1);
        return v;
    }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec bar(const Vec& x) const;
    Vec brace(const Vec& x, const Vec& y, const Vec& z) const;
    Vec u_apply(const Vec& e, const Vec& x) const;

    // Matrices of left and right multiplication.
    RatMatrix left_mul_matrix(const Vec& e) const;
    RatMatrix right_mul_matrix(const Vec& e) const;

    // U_e = 2 R_e L_e Bar - L_{e bar(e)} as a 56 x 56 matrix; the columns
    // are U_e applied to the basis.  u_apply is the brace-route reference.
    RatMatrix u_matrix(const Vec& e) const;
    // U_{e+f} - U_e - U_f without forming the three operators.
    RatMatrix polarized_u_matrix(const Vec& e, const Vec& f) const;
    // V_{x,y} = L_{x bar(y)} + R_x R_bar(y) - R_y R_bar(x).
    RatMatrix v_matrix(const Vec& x, const Vec& y) const;
    // z -> t(u, v, z).
    RatMatrix t_matrix(const Vec& u, const Vec& v) const;

    // b resolved through psi(x, y) s0 = b(x, y) 1 (definitional route).
    Rat b_via_psi(const Vec& x, const Vec& y) const;
    // b through the precomputed Gram matrix (fast route).
    Rat b(const Vec& x, const Vec& y) const;
    const RatMatrix& b_gram() const { return bgram_; }

    Vec t(const Vec& y, const Vec& z, const Vec& w) const;
    Rat q(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const;
    Rat nu(const Vec& x) const;

    // Batch kernel: U matrices for many elements at once (OpenMP across
    // elements; identical output to mapping u_matrix serially).
    std::vector<RatMatrix> u_matrices(const std::vector<Vec>& es) const;

    Vec random_element(RandomSource& rng, bool integer_only = false) const;

private:
    FtsAlgebra() = default;
    void finish_build();

    const SparseVec<Rat>& cell(int i, int j) const { return tensor_[i * kBrownDim + j]; }

    std::vector<SparseVec<Rat>> tensor_;
    std::array<int, kBrownDim> bar_perm_{};
    std::array<int, kBrownDim> bar_sign_{};
    Vec s0_, unit_;
    Rat mu_;
    RatMatrix bgram_;
    std::string label_;
};

} // namespace exalg
