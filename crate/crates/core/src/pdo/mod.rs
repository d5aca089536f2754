//! A truncated model of the completed ring of partial differential
//! operators in two variables with power-series coefficients.

pub mod change;
pub mod operator;
pub mod order;
pub mod pairs;
pub mod parse;
pub mod random;

pub use change::LinearChange;
pub use operator::{OpKey, TruncatedOperator};
pub use order::{
    a1_check, a1_index, bold_ord, components, highest_term, homogeneous_component, is_monic, ord2, ord_gamma,
    ord_m, order_value, symbol, BoldOrder, OrderValue,
};
pub use pairs::{
    is_normalized_pair, is_one_quasi_elliptic_pair, is_quasi_elliptic_pair, rank_gcd, renormalize,
    renormalizing_change, spectral_module_action, ModuleElement,
};
pub use parse::{parse_operator, parse_terms};
