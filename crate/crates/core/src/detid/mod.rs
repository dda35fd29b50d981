//! The determinant identity for admissible sequences and the objects used to
//! establish it: block reduction, the matrices `m`, `s`, `m'`, `m''`, `m'''`,
//! the q-binomial lemma and the triangulating matrix.
//!
//! `T` stands for `q^{2x}`; evaluating at `x -> ∞` is the substitution `T = 0`
//! and `x = 1/2 - k` is `T = q^{1-2k}`.

mod lemma;
mod matrices;
mod seq;
mod triangulate;

pub use lemma::{alternating_qbinom_sum, cleared_row, halfinteger_symmetry_check, qbinom_identity_check, ClearedEntry};
pub use matrices::{
    block_check, matrix_m, matrix_m_raw, matrix_mpp, matrix_mppp, matrix_mppp_inf, matrix_mprime,
    matrix_mprime_cols, matrix_s, matrix_s_raw, mppp_entry, mppp_inf_entry, reversed_column, starred,
    theorem_check, theorem_factor, theorem_sides, MPPP_MAX,
};
pub use seq::{
    admissible_from_dyck, catalan, dyck_from_admissible, enumerate_admissible, enumerate_dyck,
    parse_sequence, reduce_blocks, AdmissibleSeq, Block, DyckPath, Step, ADMISSIBLE_MAX,
};
pub use triangulate::{
    alpha_sequence, column_relation_holds, solution_basis, starred_solution, triangulating_matrix,
    verify_triangulization, x_invariance_witness, TriangulatingMatrix, TriangulationReport,
};
