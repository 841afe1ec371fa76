//! Finite abelian p-groups through their Smith normal form matrices.

pub mod snf;
pub mod types;

pub use snf::{snf, IntMatrix, SmithForm, SnfMatrix};
pub use types::{
    direct_factor_total, direct_factorizations, groups_of_order, snf_divisor_count, subgroup_class_total,
    u_decompositions, unitary_factor_total, unitary_factorizations, Factorization, Factorizations, GroupType,
    UDecompositions, MAX_DIVISOR_BOX,
};
