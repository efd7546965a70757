#pragma once

#include <map>
#include <string>
#include <vector>

#include "pluriloc/multiindex.hpp"
#include "pluriloc/types.hpp"

namespace pluriloc {

/// Homogeneous polynomial of degree k in n complex variables.
/// Coefficients are stored densely over enumerate_multiindices(n, k),
/// so coefficient vectors are interchangeable across modules.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() = default;
    HomogeneousPolynomial(int dimension, int degree);
    HomogeneousPolynomial(int dimension, int degree, CVec dense_coefficients);

    // Sparse construction; indices not present are zero. Every key must have order == degree.
    static HomogeneousPolynomial from_terms(int dimension, int degree,
                                            const std::map<std::vector<int>, Complex>& terms);

    int dimension() const { return dimension_; }
    int degree() const { return degree_; }
    const CVec& coefficients() const { return coeffs_; }
    CVec& coefficients() { return coeffs_; }

    Complex eval(const CVec& point) const;
    Complex eval_real(const RVec& point) const;

    bool is_zero(double tol = 0.0) const;

    std::string to_json() const;
    static HomogeneousPolynomial from_json(const std::string& text);

private:
    int dimension_ = 0;
    int degree_ = 0;
    CVec coeffs_;
};

/// Row of the degree-k monomial design matrix at a point: entry for alpha is
/// point^alpha, times sqrt(k!/alpha!) when scaled (improves sphere-sample
/// conditioning at higher degree). Order matches enumerate_multiindices.
CVec monomial_vector(const CVec& point, int degree, bool scaled = false);

/// eval via dot product with a monomial_vector under the same scaling convention.
Complex eval_with_vector(const CVec& coeffs_in_basis, const CVec& monomials);

}  // namespace pluriloc
