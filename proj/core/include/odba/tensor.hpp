#ifndef ODBA_TENSOR_HPP
#define ODBA_TENSOR_HPP

#include <vector>

#include "odba/types.hpp"

namespace odba {

// Dense complex operator on a tensor product of spin-1/2 factors.
//
// Convention: factor 1 is the leftmost (slowest-varying) index, so for
// basis index x of a k-factor space, factor j carries bit (k-j) of x and
// embed_site(a,1,2) * embed_site(b,2,2) == kron(a,b) entrywise.
// Factors are numbered 1..k throughout.
struct DenseOperator {
  Eigen::Index dim = 0;
  Mat entries;
  std::vector<int> factor_dims;

  DenseOperator() = default;
  DenseOperator(Mat m, std::vector<int> dims);

  int num_factors() const { return static_cast<int>(factor_dims.size()); }
};

// Identity on n spin-1/2 factors.
DenseOperator identity_op(int n_factors);

Mat kron(const Mat& a, const Mat& b);

// op2 acting on factor j of an N-factor space, identity elsewhere.
DenseOperator embed_site(const Mat& op2, int j, int n_factors);

// op4 acting on factors (i, j): the first tensor slot of op4 is factor i,
// the second is factor j.  i and j need not be adjacent or ordered.
DenseOperator embed_pair(const Mat& op4, int i, int j, int n_factors);

// Transpose the indices of factor k only.  Involutive.
DenseOperator partial_transpose(const DenseOperator& op, int k);

// Partial trace over the listed factors (1-based, nonempty).  Tracing all
// factors leaves a 1x1 operator holding the full trace.
DenseOperator trace_factors(const DenseOperator& op,
                            const std::vector<int>& factors);

// result <- embed(op4 on factors i,j) * result, computed in O(16 dim^2)
// without forming the embedded matrix.  Used by the monodromy builders.
void apply_pair_left(const Mat& op4, int i, int j, int n_factors, Mat& m);

}  // namespace odba

#endif
