//! Exact-arithmetic construction and verification of the doubly stochastic
//! matrices behind the sharpened Strichartz inequality for radial data.
//!
//! The central objects are the quartic Laguerre product coefficients
//! `Q(a,b,c,d) = int_0^inf L_a(x/2) L_b(x/2) L_c(x/2) L_d(x/2) e^{-x} dx` and
//! the antidiagonal matrices `Q_S`. Everything that certifies a theorem or a
//! conjecture — double stochasticity, positivity, characteristic polynomials,
//! eigenvalue multiplicities, spectral-gap bounds, the kernel bridge
//! `Q_S^2 = P kappa_S P^t`, and the hat-check counting identity — runs in
//! exact rational arithmetic. Floating point appears only on the consumer
//! side: the sharpened-inequality evaluator on user coefficient data and a
//! cross-check eigensolver.

pub mod error;
pub mod functional;
pub mod hatcheck;
pub mod kernel;
pub mod laguerre;
pub mod matrix;
pub mod moments;
pub mod poly;
pub mod qmatrix;
pub mod rational;
pub mod report;
pub mod spectra;

pub use error::Error;
pub use matrix::RatMatrix;
pub use poly::RatPoly;
pub use rational::Rational;
