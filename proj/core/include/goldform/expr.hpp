#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "goldform/mat2.hpp"

namespace gf {

// Jump matrices are stored as expressions in the coordinates so that the same
// graph can be evaluated on plain numbers and on jets.
enum class Op { Const, Shear, Toric, Mul, Inv, LowC, LowL };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    Op op = Op::Const;
    Mat2c k{};            // Const
    std::string label;    // Const: "A", "B", "I" or empty for a literal
    int coord = -1;       // Shear, Toric
    ExprPtr a, b;         // operands
    std::string name;     // optional definition name kept by serialization
};

ExprPtr e_const(const Mat2c& k, std::string label = {});
ExprPtr e_a();
ExprPtr e_b();
ExprPtr e_identity();
ExprPtr e_shear(int coord);
ExprPtr e_toric(int coord);
ExprPtr e_mul(const ExprPtr& x, const ExprPtr& y);
ExprPtr e_inv(const ExprPtr& x);
ExprPtr e_low_c(const ExprPtr& x);
ExprPtr e_low_l(const ExprPtr& x);
ExprPtr e_product(const std::vector<ExprPtr>& factors);
ExprPtr e_named(std::string name, const ExprPtr& x);

bool is_identity(const ExprPtr& x);

// Every coordinate index the expression depends on.
void collect_coords(const ExprPtr& x, std::vector<bool>& used);

// Memoized evaluation of an expression DAG at a jet-valued point.
class Evaluator {
public:
    explicit Evaluator(std::vector<Jet> coords) : x_(std::move(coords)) {}

    const Mat2J& eval(const ExprPtr& e);
    const Mat2J& eval_inverse(const ExprPtr& e);

private:
    std::vector<Jet> x_;
    std::unordered_map<const Expr*, Mat2J> memo_;
    std::unordered_map<const Expr*, Mat2J> inv_memo_;
};

Mat2c eval_value(const ExprPtr& e, const std::vector<cplx>& point);

std::vector<Jet> seed_jets(const std::vector<cplx>& point, const std::vector<std::vector<cplx>>& dirs);

}  // namespace gf
