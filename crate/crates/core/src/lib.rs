//! Exact integer machinery for stride-k identities of k-step Fibonacci
//! sequences.
//!
//! The k-step sequence `F(n) = F(n-1) + ... + F(n-k)` satisfies
//! `F(n) = sum_{i=1..k} P[k][i] * F(n - k*i)` where `P` is the triangle with
//! `P[i][j] = 2 P[i-1][j] - P[i-1][j-1]`. This crate builds every object
//! involved in certifying that identity:
//!
//! * [`poly`]: dense integer polynomials with exact long division.
//! * [`triangles`]: the `P` and `Q` coefficient triangles.
//! * [`sequences`]: integer linear recurrences evaluated on both sides of
//!   their seed window, plus a numeric identity checker.
//! * [`prover`]: the minimal polynomial `r_k`, the identity polynomial `p_k`,
//!   the explicit quotient `q_k`, the long-hand product matrix `M` and the
//!   per-column case checker.
//! * [`decimation`]: an independent oracle that recovers the decimated
//!   characteristic polynomial from companion-matrix powers.

pub mod decimation;
pub mod error;
pub mod poly;
pub mod prover;
pub mod sequences;
pub mod triangles;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use poly::IntPoly;
