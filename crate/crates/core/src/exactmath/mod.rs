//! Exact arithmetic: rationals, coefficient fields and dense polynomials.

pub mod field;
pub mod poly;
pub mod polyq;
pub mod rational;
pub mod tower;

pub use field::{Field, Gf2m, PrimeField, QuadField, QuadNum, Rationals};
pub use poly::Poly;
pub use polyq::{discriminant, resultant, PolyFp, PolyQ};
pub use rational::{parse_rational, Rational};
pub use tower::{QuadExt, TowerNum};

pub type PolyQuad = Poly<QuadField>;
pub type PolyGf2m = Poly<Gf2m>;
