#include "goldform/expr.hpp"

#include "goldform/errors.hpp"
#include "goldform/structural.hpp"

namespace gf {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr e_const(const Mat2c& k, std::string label) {
    Expr e;
    e.op = Op::Const;
    e.k = k;
    e.label = std::move(label);
    return make(std::move(e));
}

ExprPtr e_a() {
    static const ExprPtr a = e_const(a_matrix(), "A");
    return a;
}

ExprPtr e_b() {
    static const ExprPtr b = e_const(b_matrix(), "B");
    return b;
}

ExprPtr e_identity() {
    static const ExprPtr i = e_const(Mat2c::identity(), "I");
    return i;
}

ExprPtr e_shear(int coord) {
    Expr e;
    e.op = Op::Shear;
    e.coord = coord;
    return make(std::move(e));
}

ExprPtr e_toric(int coord) {
    Expr e;
    e.op = Op::Toric;
    e.coord = coord;
    return make(std::move(e));
}

bool is_identity(const ExprPtr& x) { return x->op == Op::Const && x->label == "I"; }

ExprPtr e_mul(const ExprPtr& x, const ExprPtr& y) {
    if (is_identity(x)) return y;
    if (is_identity(y)) return x;
    if ((y->op == Op::Inv && y->a == x) || (x->op == Op::Inv && x->a == y)) return e_identity();
    Expr e;
    e.op = Op::Mul;
    e.a = x;
    e.b = y;
    return make(std::move(e));
}

ExprPtr e_inv(const ExprPtr& x) {
    if (is_identity(x)) return x;
    if (x->op == Op::Inv) return x->a;
    Expr e;
    e.op = Op::Inv;
    e.a = x;
    return make(std::move(e));
}

ExprPtr e_low_c(const ExprPtr& x) {
    Expr e;
    e.op = Op::LowC;
    e.a = x;
    return make(std::move(e));
}

ExprPtr e_low_l(const ExprPtr& x) {
    Expr e;
    e.op = Op::LowL;
    e.a = x;
    return make(std::move(e));
}

ExprPtr e_product(const std::vector<ExprPtr>& factors) {
    ExprPtr r = e_identity();
    for (const auto& f : factors) r = e_mul(r, f);
    return r;
}

ExprPtr e_named(std::string name, const ExprPtr& x) {
    Expr e = *x;
    e.name = std::move(name);
    return make(std::move(e));
}

void collect_coords(const ExprPtr& x, std::vector<bool>& used) {
    if (!x) return;
    if (x->coord >= 0) {
        if (static_cast<size_t>(x->coord) >= used.size()) used.resize(x->coord + 1, false);
        used[x->coord] = true;
    }
    collect_coords(x->a, used);
    collect_coords(x->b, used);
}

const Mat2J& Evaluator::eval(const ExprPtr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Mat2J r;
    switch (e->op) {
        case Op::Const:
            r = lift(e->k);
            break;
        case Op::Shear:
            if (e->coord < 0 || static_cast<size_t>(e->coord) >= x_.size())
                throw GraphError("coordinate index out of range");
            r = shear_matrix(exp(x_[e->coord]));
            break;
        case Op::Toric:
            if (e->coord < 0 || static_cast<size_t>(e->coord) >= x_.size())
                throw GraphError("coordinate index out of range");
            r = toric_matrix(x_[e->coord]);
            break;
        case Op::Mul: {
            Mat2J l = eval(e->a);
            r = l * eval(e->b);
            break;
        }
        case Op::Inv:
            r = eval_inverse(e->a);
            break;
        case Op::LowC:
            r = diag_lower(eval(e->a)).c;
            break;
        case Op::LowL:
            r = diag_lower(eval(e->a)).lambda;
            break;
    }
    return memo_.emplace(e.get(), r).first->second;
}

const Mat2J& Evaluator::eval_inverse(const ExprPtr& e) {
    auto it = inv_memo_.find(e.get());
    if (it != inv_memo_.end()) return it->second;
    Mat2J r;
    if (e->op == Op::Inv) {
        r = eval(e->a);
    } else {
        const Mat2J& m = eval(e);
        r = m.inverse();
    }
    return inv_memo_.emplace(e.get(), r).first->second;
}

Mat2c eval_value(const ExprPtr& e, const std::vector<cplx>& point) {
    std::vector<Jet> x(point.begin(), point.end());
    Evaluator ev(std::move(x));
    return value_of(ev.eval(e));
}

std::vector<Jet> seed_jets(const std::vector<cplx>& point, const std::vector<std::vector<cplx>>& dirs) {
    std::vector<Jet> x(point.size());
    for (size_t i = 0; i < point.size(); ++i) {
        x[i].v = point[i];
        for (size_t k = 0; k < dirs.size() && k < 3; ++k) x[i].d[k] = dirs[k][i];
    }
    return x;
}

}  // namespace gf
