pub mod homology;
pub mod mul;
pub mod tor;
pub mod verify;
