//! Shifted symmetric polynomials and the Harish-Chandra map.

mod basis;
mod hc;
mod named;
mod poly;

pub use basis::{express_in_estar_basis, i_star, omega, pi_star, EstarPolynomial};
pub use hc::harish_chandra;
pub use named::{e_star, h_star, jacobian_full_rank, s_star, s_star_rssyt};
pub use poly::ShiftedPolynomial;
