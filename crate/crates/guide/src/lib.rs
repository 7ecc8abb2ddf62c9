//! The chapters of the guide in `book/src`, compiled as doc modules so that
//! every Rust snippet runs under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}
#[doc = include_str!("../../../book/src/sandpiles.md")]
pub mod sandpiles {}
#[doc = include_str!("../../../book/src/tableaux.md")]
pub mod tableaux {}
#[doc = include_str!("../../../book/src/decorations.md")]
pub mod decorations {}
#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}
#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}
#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
