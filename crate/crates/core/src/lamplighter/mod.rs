//! The lamplighter group `Z/p wr Z`.

pub mod ball;
pub mod element;
pub mod matrix;
pub mod metric;

pub use ball::{BallEntry, BallIndex, Letter, Word, DEFAULT_BALL_CAP};
pub use element::LampElement;
pub use matrix::{to_matrix, LampMatrix};
pub use metric::{
    bound_formula, word_length_exact, word_length_bound, check_length_bound,
    BoundEdgeCase, BoundViolation,
};
