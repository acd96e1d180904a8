//! Sparse multivariate Laurent polynomials.
//!
//! A [`SparsePoly`] stores only its nonzero coefficients, keyed by signed
//! exponent vectors ([`MultiIndex`]), in either an ordered or a hashed term
//! map ([`Backend`]). On top of that sit ring arithmetic, evaluation,
//! substitution and differentiation, order-agnostic coefficient views, a
//! polyform text format, and two applications: trapped random walks on
//! periodic lattices and closed-walk counts for d-dimensional knights.
//!
//! ```
//! use spray::SparsePoly;
//!
//! let x = SparsePoly::lone(1, 3).unwrap();
//! let y = SparsePoly::lone(2, 3).unwrap();
//! let p = (&x + &y) * (&x - &y) - (x.pow(2).unwrap() - y.pow(2).unwrap());
//! assert_eq!(p.to_string(), "the NULL multinomial of arity 3");
//! ```

pub mod algebra;
pub mod applications;
pub mod calculus;
pub mod constructors;
pub mod error;
pub mod index;
pub mod oracle;
pub mod poly;
pub mod textio;
pub mod views;

pub use applications::{
    free_walk_pmf, knight_closed_walks, knight_closed_walks_in, run_walk, timestep, WalkConfig,
    WalkOutcome,
};
pub use constructors::RandomSpec;
pub use error::{Result, SprayError};
pub use index::{Exponent, MultiIndex};
pub use poly::{Backend, SparsePoly};
pub use textio::{parse, parse_in, render, FormatOptions};
pub use views::UnorderedView;
