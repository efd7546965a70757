#include "pluriloc/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pluriloc {

HomogeneousPolynomial::HomogeneousPolynomial(int dimension, int degree)
    : dimension_(dimension), degree_(degree),
      coeffs_(monomial_count(dimension, degree), Complex(0.0)) {
    if (dimension < 1) throw std::invalid_argument("HomogeneousPolynomial: dimension >= 1");
    if (degree < 0) throw std::invalid_argument("HomogeneousPolynomial: degree >= 0");
}

HomogeneousPolynomial::HomogeneousPolynomial(int dimension, int degree, CVec dense)
    : HomogeneousPolynomial(dimension, degree) {
    if (dense.size() != coeffs_.size())
        throw std::invalid_argument("HomogeneousPolynomial: coefficient vector has wrong length");
    coeffs_ = std::move(dense);
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(
    int dimension, int degree, const std::map<std::vector<int>, Complex>& terms) {
    HomogeneousPolynomial p(dimension, degree);
    const auto indices = enumerate_multiindices(dimension, degree);
    for (const auto& [alpha, c] : terms) {
        if (static_cast<int>(alpha.size()) != dimension)
            throw std::invalid_argument("from_terms: index dimension mismatch");
        MultiIndex mi{alpha};
        if (mi.order() != degree)
            throw std::invalid_argument("from_terms: index order != degree");
        bool found = false;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i].entries == alpha) {
                p.coeffs_[i] = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("from_terms: index not in enumeration");
    }
    return p;
}

Complex HomogeneousPolynomial::eval(const CVec& point) const {
    if (static_cast<int>(point.size()) != dimension_)
        throw std::invalid_argument("eval: dimension mismatch");
    const CVec mono = monomial_vector(point, degree_, false);
    Complex s = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * mono[i];
    return s;
}

Complex HomogeneousPolynomial::eval_real(const RVec& point) const {
    return eval(complexify(point));
}

bool HomogeneousPolynomial::is_zero(double tol) const {
    for (const auto& c : coeffs_)
        if (std::abs(c) > tol) return false;
    return true;
}

std::string HomogeneousPolynomial::to_json() const {
    nlohmann::json j;
    j["dimension"] = dimension_;
    j["degree"] = degree_;
    auto coeffs = nlohmann::json::array();
    const auto indices = enumerate_multiindices(dimension_, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == Complex(0.0)) continue;
        coeffs.push_back({indices[i].entries, coeffs_[i].real(), coeffs_[i].imag()});
    }
    j["coefficients"] = coeffs;
    return j.dump();
}

HomogeneousPolynomial HomogeneousPolynomial::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::map<std::vector<int>, Complex> terms;
    for (const auto& entry : j.at("coefficients")) {
        terms[entry.at(0).get<std::vector<int>>()] =
            Complex(entry.at(1).get<double>(), entry.at(2).get<double>());
    }
    return from_terms(j.at("dimension").get<int>(), j.at("degree").get<int>(), terms);
}

CVec monomial_vector(const CVec& point, int degree, bool scaled) {
    const int n = static_cast<int>(point.size());
    const auto indices = enumerate_multiindices(n, degree);
    CVec v(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Complex m = 1.0;
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < indices[i].entries[j]; ++e) m *= point[j];
        if (scaled) m *= std::sqrt(multinomial(indices[i]));
        v[i] = m;
    }
    return v;
}

Complex eval_with_vector(const CVec& coeffs_in_basis, const CVec& monomials) {
    if (coeffs_in_basis.size() != monomials.size())
        throw std::invalid_argument("eval_with_vector: length mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < monomials.size(); ++i) s += coeffs_in_basis[i] * monomials[i];
    return s;
}

}  // namespace pluriloc
