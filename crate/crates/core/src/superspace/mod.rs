//! The supersymmetric algebra `C[M_{m0|m1+n,d}]`, biproducts and bitableaux.

mod biproduct;
mod poly;
mod straighten;
mod symbol;

pub use biproduct::{
    biproduct, bitableau, highest_weight_vector, laplace_check, laplace_split_places,
    laplace_split_symbols, polarize_bitableau, polarize_word, signed_minor, word_is_odd,
};
pub use poly::{SuperMonomial, SuperPolynomial, SuperVariable};
pub use straighten::{schur_module_dimension, standard_bitableaux, straighten};
pub use symbol::{Symbol, SymbolClass};
