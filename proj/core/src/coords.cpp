#include "goldform/coords.hpp"

#include <cmath>
#include <numbers>

#include "goldform/errors.hpp"

namespace gf {

const char* role_name(CoordRole r) {
    switch (r) {
        case CoordRole::Shear: return "shear";
        case CoordRole::Length: return "length";
        case CoordRole::Twist: return "twist";
        case CoordRole::SideTwist: return "side-twist";
        case CoordRole::Other: return "other";
    }
    return "other";
}

CoordRole role_from_name(const std::string& s) {
    if (s == "shear") return CoordRole::Shear;
    if (s == "length") return CoordRole::Length;
    if (s == "twist") return CoordRole::Twist;
    if (s == "side-twist") return CoordRole::SideTwist;
    if (s == "other") return CoordRole::Other;
    throw GraphError("unknown coordinate role '" + s + "'");
}

int CoordinateSystem::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

int CoordinateSystem::add(const std::string& name, CoordRole role) {
    if (index(name) >= 0) throw GraphError("duplicate coordinate " + name);
    names.push_back(name);
    roles.push_back(role);
    return static_cast<int>(names.size()) - 1;
}

std::vector<std::string> CoordinateSystem::free_names() const {
    std::vector<std::string> r;
    for (int i : free) r.push_back(names[i]);
    return r;
}

std::vector<int> CoordinateSystem::dependent() const {
    std::vector<bool> isfree(names.size(), false);
    for (int i : free) isfree[i] = true;
    std::vector<int> r;
    for (size_t i = 0; i < names.size(); ++i)
        if (!isfree[i]) r.push_back(static_cast<int>(i));
    return r;
}

namespace {

Eigen::MatrixXd relation_matrix(const CoordinateSystem& cs) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cs.relations.size(), cs.names.size());
    for (size_t r = 0; r < cs.relations.size(); ++r)
        for (auto [k, c] : cs.relations[r].terms) a(r, k) += c;
    return a;
}

int rank_of(const Eigen::MatrixXd& m) {
    if (m.cols() == 0 || m.rows() == 0) return 0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.rank());
}

cplx reduce_mod(cplx r) {
    const double two_pi = 2.0 * std::numbers::pi;
    return {r.real(), r.imag() - two_pi * std::round(r.imag() / two_pi)};
}

}  // namespace

std::vector<int> choose_free(const CoordinateSystem& cs, const std::vector<std::vector<int>>& groups) {
    Eigen::MatrixXd a = relation_matrix(cs);
    int target = rank_of(a);
    if (target != static_cast<int>(cs.relations.size())) throw GraphError("coordinate relations are dependent");
    std::vector<int> dep;
    auto try_add = [&](int k) {
        if (static_cast<int>(dep.size()) == target) return false;
        for (int d : dep)
            if (d == k) return false;
        Eigen::MatrixXd sub(a.rows(), dep.size() + 1);
        for (size_t i = 0; i < dep.size(); ++i) sub.col(i) = a.col(dep[i]);
        sub.col(dep.size()) = a.col(k);
        if (rank_of(sub) != static_cast<int>(dep.size()) + 1) return false;
        dep.push_back(k);
        return true;
    };
    for (const auto& g : groups)
        for (int k : g)
            if (try_add(k)) break;
    for (size_t k = 0; k < cs.names.size(); ++k) try_add(static_cast<int>(k));
    if (static_cast<int>(dep.size()) != target) throw GraphError("cannot choose a dependent set");
    std::vector<bool> isdep(cs.names.size(), false);
    for (int d : dep) isdep[d] = true;
    std::vector<int> fr;
    for (size_t k = 0; k < cs.names.size(); ++k)
        if (!isdep[k]) fr.push_back(static_cast<int>(k));
    return fr;
}

Lift::Lift(const CoordinateSystem& cs) : n_(cs.names.size()), free_(cs.free), dep_(cs.dependent()) {
    if (dep_.size() != cs.relations.size())
        throw GraphError("free basis size does not match the number of relations");
    Eigen::MatrixXd a = relation_matrix(cs);
    Eigen::MatrixXcd ad(dep_.size(), dep_.size()), af(dep_.size(), free_.size());
    for (size_t i = 0; i < dep_.size(); ++i) ad.col(i) = a.col(dep_[i]).cast<cplx>();
    for (size_t i = 0; i < free_.size(); ++i) af.col(i) = a.col(free_[i]).cast<cplx>();
    Eigen::VectorXcd rhs(dep_.size());
    for (size_t r = 0; r < cs.relations.size(); ++r) rhs(r) = cs.relations[r].rhs;
    if (dep_.empty()) {
        solve_ = Eigen::MatrixXcd::Zero(0, free_.size());
        offset_ = Eigen::VectorXcd::Zero(0);
        return;
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(ad);
    if (!lu.isInvertible()) throw GraphError("dependent block of the relations is singular");
    solve_ = -lu.solve(af);
    offset_ = lu.solve(rhs);
}

std::vector<cplx> Lift::tangent(const std::vector<cplx>& fv) const {
    if (fv.size() != free_.size()) throw GraphError("free tangent has wrong dimension");
    std::vector<cplx> t(n_, 0.0);
    Eigen::VectorXcd f(fv.size());
    for (size_t i = 0; i < fv.size(); ++i) {
        f(i) = fv[i];
        t[free_[i]] = fv[i];
    }
    Eigen::VectorXcd d = solve_ * f;
    for (size_t i = 0; i < dep_.size(); ++i) t[dep_[i]] = d(i);
    return t;
}

std::vector<cplx> Lift::point(const std::vector<cplx>& fv) const {
    std::vector<cplx> x = tangent(fv);
    for (size_t i = 0; i < dep_.size(); ++i) x[dep_[i]] += offset_(i);
    return x;
}

std::vector<cplx> Lift::basis_tangent(int i) const {
    std::vector<cplx> f(free_.size(), 0.0);
    f.at(i) = 1.0;
    return tangent(f);
}

std::vector<cplx> Lift::restrict_free(const std::vector<cplx>& full) const {
    std::vector<cplx> r;
    for (int i : free_) r.push_back(full.at(i));
    return r;
}

double relation_residual(const CoordinateSystem& cs, const std::vector<cplx>& x) {
    double m = 0.0;
    for (const auto& rel : cs.relations) {
        cplx s = -rel.rhs;
        for (auto [k, c] : rel.terms) s += c * x.at(k);
        if (rel.modular) s = reduce_mod(s);
        m = std::max(m, std::abs(s));
    }
    return m;
}

std::vector<cplx> complete_point(const CoordinateSystem& cs, const std::map<std::string, cplx>& bound, double tol) {
    for (const auto& [name, value] : bound)
        if (cs.index(name) < 0) throw GraphError("point binds unknown coordinate '" + name + "'");
    std::vector<cplx> fv;
    for (int i : cs.free) {
        auto it = bound.find(cs.names[i]);
        if (it == bound.end()) throw GraphError("free coordinate '" + cs.names[i] + "' is unbound");
        fv.push_back(it->second);
    }
    Lift lift(cs);
    std::vector<cplx> x = lift.point(fv);
    for (const auto& [name, value] : bound) {
        int k = cs.index(name);
        cplx diff = value - x[k];
        if (std::abs(reduce_mod(diff)) > tol)
            throw GraphError("coordinate '" + name + "' is inconsistent with the relations");
        x[k] = value;
    }
    if (relation_residual(cs, x) > tol) throw GraphError("bound coordinates violate the relations");
    return x;
}

}  // namespace gf
