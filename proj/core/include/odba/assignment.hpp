#ifndef ODBA_ASSIGNMENT_HPP
#define ODBA_ASSIGNMENT_HPP

#include <Eigen/Dense>
#include <vector>

namespace odba {

// Minimum-cost assignment on a square cost matrix (Jonker-Volgenant style
// shortest augmenting paths).  Returns the column assigned to each row.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

}  // namespace odba

#endif
