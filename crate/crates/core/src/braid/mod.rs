//! Braid words, permutation braids, Garside normal form and Markov moves.

mod garside;
mod markov;
mod word;

pub use garside::{braids_equal, normal_form, NormalForm};
pub use markov::destabilize;
pub use word::{cycle_braid, half_twist, simple_braid, BraidWord};
