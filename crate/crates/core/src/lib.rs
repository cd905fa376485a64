//! Geometric programs whose coefficients are triangular or trapezoidal
//! two-fold uncertain variables.
//!
//! Each coefficient is first reduced to a single-fold uncertainty
//! distribution ([`twofold`]). The chance-constrained program then becomes a
//! deterministic posynomial program ([`chance`]), which is solved through its
//! dual ([`gp`]).
//!
//! ## Examples
//!
//! ```text
//! examples/
//! ├── critical_values.rs     optimistic, pessimistic and expected values
//! ├── reduce_triangular.rs   reduced curves against the two-fold band
//! ├── reduce_trapezoidal.rs  breakpoints, plateaus, CSV curve
//! ├── gp_dual.rs             dual method on a posynomial program
//! ├── chance_sweep.rs        uncertain program built in code, swept over γ
//! ├── problem_file.rs        JSON problem file to solution
//! └── tables.rs              both bundled cases over γ = 0.1..0.9
//! ```
//!
//! ```bash
//! cargo run --example reduce_triangular
//! cargo run --example problem_file -- crates/core/data/case2.json 0.3
//! ```

pub mod chance;
pub mod cli;
pub mod error;
pub mod gp;
pub mod numeric;
pub mod problem_file;
pub mod twofold;
pub mod uncertain;

pub use error::{Error, Result};
