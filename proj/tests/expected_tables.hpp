#pragma once

// Frozen reference values, generated by tests/oracle/oracle.py.
// Regenerate with: python3 tests/oracle/oracle.py

namespace qrep_expected {

inline constexpr unsigned a_count = 3;
inline constexpr const char* a_labels[3] = {"S1", "S2", "P1"};
inline constexpr unsigned a_dims[3][2] = {{1, 0}, {0, 1}, {1, 1}};
inline constexpr unsigned a_hom[3][3] = {
    {1, 0, 0},
    {0, 1, 1},
    {1, 0, 1},
};
inline constexpr unsigned a_ext1[3][3] = {
    {0, 1, 0},
    {0, 0, 0},
    {0, 0, 0},
};

inline constexpr unsigned b_count = 11;
inline constexpr const char* b_labels[11] = {"(S2,0)", "(P1,0)", "(S1,0)", "(0,S2)", "(0,P1)", "(0,S1)", "(S1,S1)_1", "(S2,S2)_1", "(P1,P1)_1", "(P1,S2)_f", "(S1,P1)_f"};
inline constexpr unsigned b_dims[11][4] = {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}};
inline constexpr unsigned b_hom[11][11] = {
    {1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0},
    {0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1},
    {0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 2},
    {0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1},
};
inline constexpr unsigned b_ext1[11][11] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0},
};
inline constexpr unsigned b_ext2[11][11] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

// object images under the six functors, as indices into the
// small catalog (-1 encodes the zero module)
inline constexpr int b_istar[11] = {1, 2, 0, -1, -1, -1, -1, -1, -1, 0, -1};
inline constexpr int b_ishriek[11] = {1, 2, 0, -1, -1, -1, 0, 1, 2, 2, 0};
inline constexpr int b_jstar[11] = {-1, -1, -1, 1, 2, 0, 0, 1, 2, 1, 2};

// subcategories as bitmasks over catalog indices
inline constexpr unsigned thick_a_masks[5] = {0, 1, 2, 4, 7};
inline constexpr unsigned thick_b_rows[5] = {7, 103, 655, 1303, 2047};
inline constexpr unsigned a_silting_masks[2] = {6, 5};
inline constexpr unsigned a_vee_layers[2][3] = {
    {255, 0, 0},
    {0, 1, 0},
};
inline constexpr unsigned a_hat_layers[2][3] = {
    {1, 0, 0},
    {0, 255, 0},
};
inline constexpr unsigned glued_pair_t_mask = 1435;
inline constexpr unsigned glued_pair_f_mask = 2047;
inline constexpr unsigned proj_b_mask = 387;
inline constexpr unsigned ext_closed_example_mask = 1399;
inline constexpr unsigned ext_closed_thick_masks[4] = {7, 103, 1303, 1399};
inline constexpr unsigned ext_closed_small_masks[4] = {0, 1, 4, 5};

}  // namespace qrep_expected
