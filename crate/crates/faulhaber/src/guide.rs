//! The book chapters from `book/src`, included here so that every code
//! sample in the guide compiles and runs under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
