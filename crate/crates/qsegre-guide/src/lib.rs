//! Doc-test carrier for the book in `book/`.
//!
//! mdbook renders the chapters but cannot run their Rust listings against
//! this workspace's crates. Including each chapter as module documentation
//! makes `cargo test --doc` compile and run every listing, so the book
//! breaks loudly when the library changes underneath it.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/states.md")]
pub mod states {}

#[doc = include_str!("../../../book/src/separability.md")]
pub mod separability {}

#[doc = include_str!("../../../book/src/measure.md")]
pub mod measure {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/cones.md")]
pub mod cones {}

#[doc = include_str!("../../../book/src/hypercube.md")]
pub mod hypercube {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
