#include "pluriloc/fields.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pluriloc {

namespace {

// quintic smoothstep: 0 -> 0, 1 -> 1, C^2 at both ends
double smoothstep5(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

}  // namespace

ScalarField::ScalarField(FieldFamily fam, int dimension, std::vector<FieldComponent> comps)
    : family_(fam), dimension_(dimension), comps_(std::move(comps)) {
    if (dimension_ != 2 && dimension_ != 3)
        throw std::invalid_argument("ScalarField: dimension must be 2 or 3");
    if (comps_.empty()) throw std::invalid_argument("ScalarField: at least one component");
    for (auto& c : comps_) {
        if (static_cast<int>(c.center.size()) != dimension_)
            throw std::invalid_argument("ScalarField: component center dimension mismatch");
        if (c.radius <= 0.0) throw std::invalid_argument("ScalarField: radius/width > 0");
        if (family_ == FieldFamily::SmoothedBall) {
            if (c.width <= 0.0 || c.width > c.radius)
                throw std::invalid_argument("ScalarField: ball width in (0, radius]");
        }
    }
    r_eff_ = 0.0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        r_eff_ = std::max(r_eff_, euclid_norm(comps_[i].center) + component_reach(i));
}

ScalarField ScalarField::gaussian(int dim, std::vector<FieldComponent> comps) {
    return ScalarField(FieldFamily::Gaussian, dim, std::move(comps));
}
ScalarField ScalarField::smoothed_ball(int dim, std::vector<FieldComponent> comps) {
    return ScalarField(FieldFamily::SmoothedBall, dim, std::move(comps));
}
ScalarField ScalarField::bump_sum(int dim, std::vector<FieldComponent> comps) {
    return ScalarField(FieldFamily::BumpSum, dim, std::move(comps));
}

double ScalarField::component_profile(std::size_t i, double r) const {
    const FieldComponent& c = comps_[i];
    switch (family_) {
        case FieldFamily::Gaussian:
            return c.amplitude * std::exp(-(r * r) / (c.radius * c.radius));
        case FieldFamily::SmoothedBall:
            if (r >= c.radius) return 0.0;
            if (r <= c.radius - c.width) return c.amplitude;
            return c.amplitude * smoothstep5((c.radius - r) / c.width);
        case FieldFamily::BumpSum: {
            if (r >= c.radius) return 0.0;
            const double q = r / c.radius;
            return c.amplitude * std::exp(1.0 - 1.0 / (1.0 - q * q));
        }
    }
    return 0.0;
}

double ScalarField::component_reach(std::size_t i) const {
    const FieldComponent& c = comps_[i];
    if (family_ == FieldFamily::Gaussian) {
        const double a = std::max(std::abs(c.amplitude), 1.0);
        return c.radius * std::sqrt(std::log(a / 1e-12));
    }
    return c.radius;  // compactly supported families
}

std::vector<double> ScalarField::component_breakpoints(std::size_t i) const {
    const FieldComponent& c = comps_[i];
    switch (family_) {
        case FieldFamily::Gaussian: return {};
        case FieldFamily::SmoothedBall: return {c.radius - c.width, c.radius};
        case FieldFamily::BumpSum: return {c.radius};
    }
    return {};
}

double ScalarField::operator()(const RVec& x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw std::invalid_argument("ScalarField: point dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        double d2 = 0.0;
        for (int j = 0; j < dimension_; ++j) {
            const double d = x[j] - comps_[i].center[j];
            d2 += d * d;
        }
        s += component_profile(i, std::sqrt(d2));
    }
    return s;
}

std::vector<RVec> ScalarField::support_samples(int count, unsigned seed) const {
    double amax = 0.0;
    for (const auto& c : comps_) amax = std::max(amax, std::abs(c.amplitude));
    const double threshold = 1e-9 * amax;
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    std::vector<RVec> out;
    out.reserve(count);
    const double R = effective_radius();
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 2000000L)
            throw std::runtime_error("support_samples: rejection sampling failed");
        RVec x(dimension_);
        for (int j = 0; j < dimension_; ++j) x[j] = uniform(-R, R);
        if (std::abs((*this)(x)) > threshold) out.push_back(std::move(x));
    }
    return out;
}

std::string ScalarField::to_json() const {
    nlohmann::json j;
    switch (family_) {
        case FieldFamily::Gaussian: j["family"] = "gaussian"; break;
        case FieldFamily::SmoothedBall: j["family"] = "smoothed-ball"; break;
        case FieldFamily::BumpSum: j["family"] = "bump-sum"; break;
    }
    j["dimension"] = dimension_;
    auto comps = nlohmann::json::array();
    for (const auto& c : comps_) {
        comps.push_back({{"center", c.center},
                         {"radius", c.radius},
                         {"width", c.width},
                         {"amplitude", c.amplitude}});
    }
    j["components"] = comps;
    return j.dump();
}

ScalarField ScalarField::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::string fam = j.at("family").get<std::string>();
    std::vector<FieldComponent> comps;
    for (const auto& cj : j.at("components")) {
        FieldComponent c;
        c.center = cj.at("center").get<RVec>();
        c.radius = cj.value("radius", 1.0);
        c.width = cj.value("width", 0.1);
        c.amplitude = cj.value("amplitude", 1.0);
        comps.push_back(std::move(c));
    }
    const int dim = j.at("dimension").get<int>();
    if (fam == "gaussian") return gaussian(dim, std::move(comps));
    if (fam == "smoothed-ball") return smoothed_ball(dim, std::move(comps));
    if (fam == "bump-sum") return bump_sum(dim, std::move(comps));
    throw std::invalid_argument("ScalarField: unknown family '" + fam + "'");
}

}  // namespace pluriloc
