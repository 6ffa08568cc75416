//! Noncommutative polynomials and Lie elements in the letters {a, b}:
//! bracket and ad-powers, shuffle products, the Dynkin Lie test, Lazard
//! elimination onto the alphabet c_i = ad(a)^{i-1}(b), the push operator on
//! words, the Ber operator and the tangential elements t01, t02, t12.

pub mod ber;
pub mod cpoly;
pub mod lazard;
pub mod ncpoly;
pub mod word;

pub use ber::{ber_apply, ber_inv_apply, t_elements, TElements};
pub use cpoly::CPoly;
pub use lazard::to_c_coordinates;
pub use ncpoly::{LieElement, NCPoly};
pub use word::{shuffle_words, Letter, Word};
