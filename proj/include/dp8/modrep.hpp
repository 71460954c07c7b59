#pragma once

#include "dp8/lie.hpp"
#include "dp8/rng.hpp"

namespace dp8 {

// A representation of a structure-constant Lie algebra on Q^m: one action
// matrix per basis vector. Construction checks bracket compatibility.
class ModuleAction {
 public:
  ModuleAction(LieAlgebra<Rat> algebra, std::vector<Mat<Rat>> action)
      : algebra_(std::move(algebra)), act_(std::move(action)) {
    if (int(act_.size()) != algebra_.dim())
      throw std::invalid_argument("ModuleAction: one matrix per basis vector required");
    m_ = act_.empty() ? 0 : act_[0].rows();
    for (const auto& a : act_)
      if (a.rows() != m_ || a.cols() != m_)
        throw std::invalid_argument("ModuleAction: square matrices of equal size required");
    for (int i = 0; i < algebra_.dim(); ++i)
      for (int j = 0; j < algebra_.dim(); ++j) {
        Mat<Rat> lhs = Mat<Rat>::bracket(act_[i], act_[j]);
        Mat<Rat> rhs(m_, m_);
        for (int k = 0; k < algebra_.dim(); ++k) {
          const Rat& c = algebra_.sc()[i][j][k];
          if (c != 0) rhs = rhs + c * act_[k];
        }
        if (!(lhs == rhs))
          throw std::invalid_argument("ModuleAction: action does not respect the bracket");
      }
  }

  const LieAlgebra<Rat>& algebra() const { return algebra_; }
  int module_dim() const { return m_; }
  const std::vector<Mat<Rat>>& matrices() const { return act_; }

  Mat<Rat> apply(const Vec<Rat>& x) const {
    Mat<Rat> m(m_, m_);
    for (int i = 0; i < algebra_.dim(); ++i)
      if (x[i] != 0) m = m + x[i] * act_[i];
    return m;
  }

  bool same_algebra(const ModuleAction& o) const {
    return algebra_.dim() == o.algebra_.dim() && algebra_.sc() == o.algebra_.sc();
  }

 private:
  LieAlgebra<Rat> algebra_;
  std::vector<Mat<Rat>> act_;
  int m_ = 0;
};

struct WeightDecomposition {
  std::vector<Vec<Rat>> cartan_elements;
  // weight tuple (one integer per Cartan element) with its joint eigenspace
  std::vector<std::pair<std::vector<Rat>, Subspace<Rat>>> spaces;
};

// Simultaneous eigenspace decomposition under the h-elements of the given
// triples. Throws std::domain_error when an h fails to act semisimply with
// rational eigenvalues, which signals a module of the wrong type.
WeightDecomposition weight_decompose(const ModuleAction& action,
                                     const std::vector<Sl2Triple<Rat>>& triples);

// Generic intertwiner: an invertible M with M a(x) = b(x) M for all x, found
// as a generic element of the solution space of the linear system.
std::optional<Mat<Rat>> module_iso_linear(const ModuleAction& a, const ModuleAction& b);

// Intertwiner construction through highest weight vectors, for irreducible
// modules of a split sum of sl2's (one or two triples). Deterministic: the
// highest weight vector is the canonical basis vector scaled to leading
// coefficient 1, and the basis is generated by lowering operators in
// lexicographic order.
std::optional<Mat<Rat>> highest_weight_iso(const ModuleAction& a, const ModuleAction& b,
                                           const std::vector<Sl2Triple<Rat>>& triples);

// Intertwiner for 9-dimensional modules of the 6-dimensional blowup algebra:
// match the three Levi summands of dimensions 2,3,4 and fix the two relative
// scalars through the nilradical action.
std::optional<Mat<Rat>> blowup_module_iso(const ModuleAction& a, const ModuleAction& b,
                                          const Sl2Triple<Rat>& levi_triple,
                                          const std::vector<Vec<Rat>>& nilradical_basis);

}  // namespace dp8
