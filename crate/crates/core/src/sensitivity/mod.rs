//! Subdifferentials of the feasible-set and Pareto-front mappings, the
//! single-objective value function, and Lipschitz moduli.
//!
//! For a weight `alpha` write `c_alpha = sum alpha_i c_i`. The subgradients
//! contributed by `alpha` at an anchor attaining the scalarized optimum are
//! `y = -lambda / s`, where `lambda` ranges over the optimal multipliers of
//! `min <c_alpha, x>` on `F(b_bar)` and `s` is the normalizing dual norm.
//! Since `lambda >= 0`, `||y||_1 = sum lambda / s` is maximized by one LP.

mod grid;
mod subdiff;
mod value_function;

pub use grid::{GridMode, WeightGrid, WeightPoint};
pub use subdiff::{
    lip_modulus, modulus_of, subdiff_f, subdiff_p, Exactness, Modulus, ModulusReport,
    ModulusTarget, SubdiffPiece, SubdiffSet, Subgradient,
};
pub use value_function::{
    lp_relations, lp_value_function, subdiff_p_lp, LpRelations, ValueFunction,
};
