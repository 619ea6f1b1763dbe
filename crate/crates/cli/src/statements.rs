//! Statement labels realized by the subcommands.
//!
//! Each label appears as `[label]` in the long help of exactly one command.

pub const STATEMENTS: &[&str] = &[
    "taft-hopf",
    "hh-truncated",
    "hh-taft",
    "hh-semisimple",
    "hh-path-algebra",
    "hc-sbi",
    "hc-path-and-semisimple",
    "hc-truncated",
    "hc-taft",
    "sigma-cycles",
    "auslander-quiver",
    "auslander-resolutions",
    "auslander-ext",
    "happel-resolution",
    "gamma-homology",
    "chern-character",
    "chern-tensor",
    "k0-product",
    "k0-commutative",
];
