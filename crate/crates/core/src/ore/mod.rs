//! Ore extensions presented by ordered generators and commutation relations,
//! with PBW normal forms.

mod element;
mod monomial;
mod parse;
mod presentation;
mod rewrite;

pub use element::Element;
pub use monomial::{count_up_to, monomials_of_degree, Monomial};
pub(crate) use parse::parse_tensor;
pub use parse::parse_word;
pub use presentation::{GeneratorInfo, OrePresentation};
pub use rewrite::{normal_form, normal_form_words, pbw_count, verify_pbw_consistency};
