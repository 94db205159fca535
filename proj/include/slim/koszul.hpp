#pragma once

// The one sign engine. Shared by the cochain complex, the L-infinity checker
// and the A-point machinery, so Koszul conventions cannot drift apart.
//
// Convention: graded-antisymmetric means swapping adjacent arguments x,y
// multiplies by -(-1)^{|x||y|}; for a permutation sigma of graded elements
// chi(sigma) = sgn(sigma) * eps(sigma) is the sign relating the permuted and
// unpermuted evaluations.

#include <cstdint>
#include <vector>

namespace slim {

// sign picked up by swapping adjacent graded elements in an antisymmetric context
inline int swap_sign(int grade_a, int grade_b) {
    return (grade_a & 1) && (grade_b & 1) ? 1 : -1;
}

// Sorts labels ascending (stable), returning the accumulated chi sign, or 0
// when two equal labels of even grade collide (the monomial vanishes).
// grade_of(label) -> 0/1.
template <class GradeOf>
int sort_labels_chi(std::vector<int>& labels, GradeOf&& grade_of) {
    int sign = 1;
    const int n = static_cast<int>(labels.size());
    for (int i = 1; i < n; ++i) {
        int j = i;
        while (j > 0 && labels[j] < labels[j - 1]) {
            sign *= swap_sign(grade_of(labels[j]), grade_of(labels[j - 1]));
            std::swap(labels[j], labels[j - 1]);
            --j;
        }
    }
    for (int i = 1; i < n; ++i)
        if (labels[i] == labels[i - 1] && (grade_of(labels[i]) & 1) == 0) return 0;
    return sign;
}

// chi(sigma; x_1..x_n) where perm[i] holds sigma(i+1)-1, i.e. the permuted
// sequence is (x_{perm[0]}, x_{perm[1]}, ...). grades indexed by original slot.
inline int chi_of_permutation(std::vector<int> perm, const std::vector<int>& grades) {
    int sign = 1;
    const int n = static_cast<int>(perm.size());
    for (int i = 1; i < n; ++i) {
        int j = i;
        while (j > 0 && perm[j] < perm[j - 1]) {
            sign *= swap_sign(grades[perm[j]], grades[perm[j - 1]]);
            std::swap(perm[j], perm[j - 1]);
            --j;
        }
    }
    return sign;
}

// eps_1^{i-1}(i) in 0-based form: sign for moving element at slot i through
// slots [0, i): (-1)^{|x_i| * (|x_0| + ... + |x_{i-1}|)}
inline int eps_to_front(const std::vector<int>& grades, int i) {
    if ((grades[i] & 1) == 0) return 1;
    int s = 0;
    for (int r = 0; r < i; ++r) s += grades[r] & 1;
    return (s & 1) ? -1 : 1;
}

} // namespace slim
