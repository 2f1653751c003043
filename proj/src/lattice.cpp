#include "logsurf/lattice.hpp"

#include <set>

namespace logsurf {

SurfaceModel::SurfaceModel(std::vector<std::string> classes,
                           Matrix intersection,
                           Divisor canonical,
                           long euler_top,
                           std::vector<BoundaryComponent> boundary)
    : classes_(std::move(classes)),
      intersection_(std::move(intersection)),
      canonical_(std::move(canonical)),
      euler_top_(euler_top),
      boundary_(std::move(boundary)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (!index_.emplace(classes_[i], i).second)
            throw InputError("duplicate class '" + classes_[i] + "'");
    }
    if (intersection_.size() != classes_.size())
        throw InputError("intersection matrix size does not match class count");
    for (std::size_t i = 0; i < intersection_.size(); ++i) {
        if (intersection_[i].size() != classes_.size())
            throw InputError("intersection matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (intersection_[i][j] != intersection_[j][i])
                throw InputError("intersection matrix is not symmetric");
    }
    for (const auto& [cls, c] : canonical_.coefficients())
        if (!has_class(cls)) throw InputError("canonical divisor uses unknown class '" + cls + "'");
    std::set<std::string> seen;
    for (const auto& b : boundary_) {
        if (!has_class(b.cls)) throw InputError("boundary component uses unknown class '" + b.cls + "'");
        if (!seen.insert(b.cls).second)
            throw InputError("boundary component '" + b.cls + "' listed twice");
        if (b.genus < 0) throw InputError("boundary component '" + b.cls + "' has negative genus");
    }
}

std::size_t SurfaceModel::index(const std::string& cls) const {
    auto it = index_.find(cls);
    if (it == index_.end()) throw InputError("unknown class '" + cls + "'");
    return it->second;
}

Divisor SurfaceModel::boundary_divisor() const {
    Divisor d;
    for (const auto& b : boundary_) d.add(b.cls, 1);
    return d;
}

Rational intersect(const Divisor& a, const Divisor& b, const SurfaceModel& model) {
    Rational total = 0;
    for (const auto& [ca, va] : a.coefficients()) {
        const std::size_t i = model.index(ca);
        for (const auto& [cb, vb] : b.coefficients()) total += va * vb * model.pair(i, model.index(cb));
    }
    return total;
}

bool is_effective(const Divisor& d) {
    for (const auto& [cls, c] : d.coefficients())
        if (c < 0) return false;
    return true;
}

bool leq(const Divisor& a, const Divisor& b) {
    return is_effective(b - a);
}

Matrix cycle_matrix(const Cycle& cycle, const SurfaceModel& model) {
    std::set<std::string> seen;
    std::vector<std::size_t> idx;
    idx.reserve(cycle.size());
    for (const auto& cls : cycle) {
        if (!seen.insert(cls).second) throw InputError("cycle repeats class '" + cls + "'");
        idx.push_back(model.index(cls));
    }
    Matrix m(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = model.pair(idx[i], idx[j]);
    return m;
}

bool is_negative_definite(const Cycle& cycle, const SurfaceModel& model) {
    if (cycle.empty()) return true;
    const Matrix m = cycle_matrix(cycle, model);
    const std::vector<int> signs = leading_minor_signs(m);
    if (signs.size() < m.size()) return false; // a leading minor vanished
    for (std::size_t k = 0; k < signs.size(); ++k) {
        const int want = (k % 2 == 0) ? -1 : 1; // (-1)^(k+1) det > 0
        if (signs[k] != want) return false;
    }
    return true;
}

} // namespace logsurf
