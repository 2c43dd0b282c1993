/*   Copyright 2026 The credal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "credal/discount.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace credal {

namespace {

// a^alpha with the 0^0 = 1 convention, so alpha = 0 yields total ignorance.
double exp_discount(double a, double alpha) {
    if (alpha == 0.0) return 1.0;
    return std::pow(a, alpha);
}

double round9(double v) { return std::round(v * 1e9) / 1e9; }

}  // namespace

LinguisticCredibility::LinguisticCredibility(std::string name,
                                             std::vector<std::pair<double, double>> points)
    : name_(std::move(name)), points_(std::move(points)) {
    if (points_.empty()) {
        throw std::invalid_argument("linguistic value needs at least one point");
    }
    double prev = -1.0;
    for (const auto& [y, g] : points_) {
        detail::require_grade(y, "linguistic abscissa");
        detail::require_grade(g, "linguistic grade");
        if (y <= prev) {
            throw std::invalid_argument("linguistic abscissas must be strictly increasing");
        }
        prev = y;
    }
}

bool LinguisticCredibility::normal() const {
    return std::any_of(points_.begin(), points_.end(),
                       [](const auto& p) { return p.second == 1.0; });
}

LinguisticCredibility LinguisticCredibility::unknown() {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 10; ++i) pts.emplace_back(i / 10.0, 1.0);
    return LinguisticCredibility("unknown", std::move(pts));
}

LinguisticCredibility antonym(const LinguisticCredibility& alpha) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(alpha.points().size());
    for (const auto& [y, g] : alpha.points()) pts.emplace_back(1.0 - y, g);
    std::reverse(pts.begin(), pts.end());
    return LinguisticCredibility(alpha.name(), std::move(pts));
}

double center_of_maximum(const LinguisticCredibility& alpha) {
    double best = -1.0, lo = 0.0, hi = 0.0;
    for (const auto& [y, g] : alpha.points()) {
        if (g > best) {
            best = g;
            lo = hi = y;
        } else if (g == best) {
            hi = y;
        }
    }
    return (lo + hi) / 2.0;
}

Type2FuzzySet::Type2FuzzySet(UniversePtr universe, std::vector<GradeList> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) throw std::invalid_argument("null universe");
    if (grades_.size() != universe_->size()) {
        throw std::invalid_argument("grade list count does not match universe size");
    }
    for (const auto& list : grades_) {
        double prev = -1.0;
        for (const auto& [g, m] : list) {
            detail::require_grade(g, "type-2 grade");
            detail::require_grade(m, "type-2 membership");
            if (g <= prev) {
                throw std::invalid_argument("type-2 grades must be strictly increasing");
            }
            prev = g;
        }
    }
}

FuzzySet discount(const FuzzySet& a, double alpha, const DiscountModel& model) {
    detail::require_grade(alpha, "credibility");
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        g[i] = model.kind == DiscountModel::Kind::Exponential
                   ? exp_discount(a[i], alpha)
                   : conorm_apply(model.s, 1.0 - alpha, a[i]);
    }
    return FuzzySet(a.universe(), std::move(g));
}

Type2FuzzySet discount_linguistic(const FuzzySet& a, const LinguisticCredibility& alpha,
                                  const DiscountModel& model) {
    const bool exponential = model.kind == DiscountModel::Kind::Exponential;
    const LinguisticCredibility source = exponential ? alpha : antonym(alpha);
    std::vector<Type2FuzzySet::GradeList> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::map<double, double> merged;  // rounded grade -> max membership
        for (const auto& [y, m] : source.points()) {
            double g = exponential ? exp_discount(a[i], y) : conorm_apply(model.s, y, a[i]);
            double key = round9(g);
            auto [it, inserted] = merged.emplace(key, m);
            if (!inserted) it->second = std::max(it->second, m);
        }
        out[i].assign(merged.begin(), merged.end());
    }
    return Type2FuzzySet(a.universe(), std::move(out));
}

FuzzySet discount_pointwise(const FuzzySet& a, const FuzzySet& h, Conorm s) {
    detail::require_same_universe(a, h);
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        g[i] = conorm_apply(s, 1.0 - h[i], a[i]);
    }
    return FuzzySet(a.universe(), std::move(g));
}

double proximity_to_set(std::size_t x, const FuzzySet& a) {
    const Universe& u = *a.universe();
    if (!u.has_proximity()) {
        throw std::invalid_argument("universe has no proximity relation");
    }
    double m = 0.0;
    for (std::size_t y = 0; y < a.size(); ++y) {
        m = std::max(m, std::min(a[y], u.proximity(x, y)));
    }
    return m;
}

ProximityProfile::ProximityProfile(std::string tag, std::vector<double> parameters,
                                   std::function<double(double, double)> evaluate)
    : tag_(std::move(tag)), parameters_(std::move(parameters)), evaluate_(std::move(evaluate)) {}

ProximityProfile ProximityProfile::cap(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("cap profile needs kappa >= 0");
    return ProximityProfile("cap", {kappa}, [kappa](double alpha, double b) {
        return std::min(1.0, alpha * (1.0 + kappa * b));
    });
}

ProximityProfile ProximityProfile::pow(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("pow profile needs kappa >= 0");
    return ProximityProfile("pow", {kappa}, [kappa](double alpha, double b) {
        return 1.0 - std::pow(1.0 - alpha, 1.0 + kappa * b);
    });
}

ProximityProfile ProximityProfile::standard() { return pow(3.0); }

ProfileReport validate_profile(const ProximityProfile& f) {
    constexpr int n = 101;
    constexpr double step = 1.0 / (n - 1);
    // Bound on the change of f across one grid step; flags jumps a
    // continuous profile with moderate slope would never produce.
    constexpr double max_jump = 0.1;
    auto fail = [](const std::string& msg) { return ProfileReport{false, msg}; };
    auto fmt = [](double a, double b) {
        std::ostringstream os;
        os << "alpha=" << a << " b=" << b;
        return os.str();
    };
    for (int j = 0; j < n; ++j) {
        double b = j * step;
        if (std::abs(f(0.0, b)) > 1e-12) return fail("f(0,b) != 0 at " + fmt(0.0, b));
        if (std::abs(f(1.0, b) - 1.0) > 1e-12) return fail("f(1,b) != 1 at " + fmt(1.0, b));
    }
    for (int i = 0; i < n; ++i) {
        double alpha = i * step;
        for (int j = 0; j < n; ++j) {
            double b = j * step;
            double v = f(alpha, b);
            if (!(v >= 0.0 && v <= 1.0)) return fail("value outside [0,1] at " + fmt(alpha, b));
            if (i + 1 < n) {
                double d = f(alpha + step, b) - v;
                if (d < -1e-12) return fail("not monotone in alpha at " + fmt(alpha, b));
                if (d > max_jump + 1e-9) return fail("discontinuity in alpha at " + fmt(alpha, b));
            }
            if (j + 1 < n) {
                double d = f(alpha, b + step) - v;
                if (d < -1e-12) return fail("not monotone in b at " + fmt(alpha, b));
                if (d > max_jump + 1e-9) return fail("discontinuity in b at " + fmt(alpha, b));
            }
        }
    }
    return {};
}

FuzzySet discount_proximity(const FuzzySet& a, double alpha, const ProximityProfile& f,
                            Conorm s, ProximityMode mode) {
    detail::require_grade(alpha, "credibility");
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double b = proximity_to_set(i, a);
        if (mode == ProximityMode::Literal) {
            g[i] = conorm_apply(s, 1.0 - f(alpha, b), a[i]);
        } else {
            g[i] = conorm_apply(s, 1.0 - alpha, b);
        }
    }
    return FuzzySet(a.universe(), std::move(g));
}

}  // namespace credal
