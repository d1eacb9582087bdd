//! Runs every code block in the guide as a doc test, one module per
//! chapter, so `cargo test --doc` keeps the book honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/model.md")]
pub mod model {}

#[doc = include_str!("../../../book/src/reduction.md")]
pub mod reduction {}

#[doc = include_str!("../../../book/src/equilibrium.md")]
pub mod equilibrium {}

#[doc = include_str!("../../../book/src/paradox.md")]
pub mod paradox {}

#[doc = include_str!("../../../book/src/pseudo.md")]
pub mod pseudo {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
