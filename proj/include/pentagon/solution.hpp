#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/linalg.hpp"
#include "pentagon/tensor.hpp"

namespace pentagon {

enum class PentagonMethod { Legs, Blocks, Both };

/// First place where the pentagon identity breaks, 1-based.
/// Legs: an entry (row, col) of the n^3 x n^3 identity.
/// Blocks: the block pair (i, p) of sum_j A_ij (x) A_jp = R (A_ip (x) I) R^{-1}.
struct PentagonWitness {
    PentagonMethod method = PentagonMethod::Legs;
    std::size_t first = 0;
    std::size_t second = 0;

    std::string to_string() const;
};

struct PentagonVerdict {
    bool holds = false;
    std::optional<PentagonWitness> witness;
};

/// R^12 R^13 R^23 = R^23 R^12. The blocks method needs R invertible
/// (NotInvertible otherwise); Both throws InternalError if the two disagree.
PentagonVerdict verify_pentagon(const Tensor2& r, PentagonMethod method = PentagonMethod::Both);

/// T = R^{-1}. Throws NotInvertible.
Tensor2 hopf_transform(const Tensor2& r);
/// T^12 T^23 = T^23 T^13 T^12.
bool verify_hopf_equation(const Tensor2& t);

enum class Side { Left, Right };

/// A validated invertible pentagon solution R in M_n (x) M_n together with
/// everything derived from a minimal expansion R = sum a_i (x) b_i.
class PentagonSolution {
public:
    std::size_t n() const { return r_.n(); }
    const Field& field() const { return r_.field(); }
    const Tensor2& r() const { return r_; }
    /// R^{-1}
    const Tensor2& u() const { return u_; }
    /// Length l(R).
    std::size_t m() const { return a_.size(); }
    /// Basis of P = R_(l).
    const std::vector<Mat>& a_basis() const { return a_; }
    /// Basis of H = R_(r).
    const std::vector<Mat>& b_basis() const { return b_; }
    const SpanCoordinates& a_span() const { return a_span_; }
    const SpanCoordinates& b_span() const { return b_span_; }
    /// R^{-1} = sum gamma(i,j) a_i (x) b_j
    const Mat& gamma() const { return gamma_; }
    /// Coordinates of I_n in a_basis / b_basis.
    const Vec& one_in_p() const { return one_in_p_; }
    const Vec& one_in_h() const { return one_in_h_; }

private:
    friend PentagonSolution analyze(const Tensor2& r);

    Tensor2 r_;
    Tensor2 u_;
    std::vector<Mat> a_;
    std::vector<Mat> b_;
    SpanCoordinates a_span_;
    SpanCoordinates b_span_;
    Mat gamma_;
    Vec one_in_p_;
    Vec one_in_h_;
};

/// Validates R (nonzero, invertible, pentagon by both methods) and derives the
/// length, coefficient bases, gamma and unitarity coordinates.
/// Throws ZeroTensor, NotInvertible, PentagonFails; UnitarityFails and
/// GammaOutsideSpan indicate bugs.
PentagonSolution analyze(const Tensor2& r);

/// Length of an arbitrary tensor (rank of its coefficient matrix).
std::size_t tensor_length(const Tensor2& t);

/// Left: A^{R,l} = {a | R(a(x)1) = a(x)1}; Right: A^{R,r} = {a | (1(x)a)R = 1(x)a}.
std::vector<Mat> coinvariants(const PentagonSolution& s, Side side);
/// Left: {a | R(1(x)a) = 1(x)a}; Right: {a | (a(x)1)R = a(x)1}.
std::vector<Mat> r_invariants(const PentagonSolution& s, Side side);
bool is_r_invariant(const PentagonSolution& s, Side side, const Mat& a);

struct SubalgebraResult {
    std::vector<Mat> basis;
    std::size_t dim = 0;
};

/// Subalgebra of M_n generated by P and H; throws BoundViolated if dim > m^2.
SubalgebraResult generated_subalgebra(const PentagonSolution& s);

struct LagrangeReport {
    std::size_t n = 0;
    std::size_t dim_p = 0;
    std::size_t dim_h = 0;
    std::size_t dim_coinv_l = 0;
    std::size_t dim_coinv_r = 0;
    bool relations_hold = false;
};

LagrangeReport lagrange_report(const PentagonSolution& s);

}  // namespace pentagon
