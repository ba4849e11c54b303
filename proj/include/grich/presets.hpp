#pragma once

#include <string>
#include <vector>

#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich::presets {

WordSource fibonacci();
WordSource thue_morse();  // t_{2,2}
WordSource t33();         // t_{3,3}

/// Fixed point of phi over {0..7}.
WordSource word_u();
/// mu(u) over {0..5}.
WordSource word_v();

Substitution phi();
Substitution mu();
Substitution eta();
/// pi on {0,2,4,6}; other letters map to themselves.
Letter pi(Letter a);

SymmetryGroup id_r(std::size_t alphabet_size);
SymmetryGroup i2(std::size_t m);

/// Theta_0, Theta_1, Theta_2 over {0..7}.
std::vector<SymmetryMap> thetas();
/// Psi_0, Psi_1, Psi_2 over {0..5}.
std::vector<SymmetryMap> psis();
SymmetryGroup group_g();
SymmetryGroup group_h();
/// H_i generated by Psi_i and Psi_{i+1 mod 3}.
SymmetryGroup group_h_sub(std::size_t i);

/// Order-4 cyclic group generated by reversal composed with the 4-cycle 0->1->2->3->0.
SymmetryGroup cyclic_antimorphism_group();

}  // namespace grich::presets
