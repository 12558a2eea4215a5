//! Coproduct, counit and antipode on Hopf presentations, with axiom checks.

mod hopf;
mod tensor;
mod verify;

pub(crate) use crate::ore::parse_tensor;
pub use hopf::HopfPresentation;
pub use tensor::{componentwise_product, Tensor};
pub use verify::{
    apply_algebra_map, parse_images, verify_antipode, verify_coassociativity,
    verify_coassociativity_to, verify_compatibility, verify_morphism,
};
