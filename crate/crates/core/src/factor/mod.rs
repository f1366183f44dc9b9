//! Polynomial factorization over Q, finite fields and quadratic fields, and
//! decomposition types.

pub mod dtype;
pub mod finite;
pub mod quadratic;
pub mod rational;
pub mod roots;
pub mod squarefree;
pub mod zmod;

use serde::Serialize;

use crate::exactmath::polyq::to_json_coeffs;
use crate::exactmath::{Field, Poly, Rationals};

pub use dtype::{decomposition_type, DecompType, FoldPolicy};
pub use finite::{factor_over_finite_field, FiniteField};
pub use quadratic::factor_over_quadratic;
pub use rational::factor_over_rationals;
pub use roots::{has_root_mod_p, rational_roots};
pub use squarefree::squarefree_decompose;

/// `unit * prod(factor^mult)`, factors monic, irreducible and distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> Factorization<F> {
    pub fn reconstruct(&self, field: &F) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(field.clone(), self.unit.clone()), |acc, (f, e)| {
                acc.mul(&f.pow(*e))
            })
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, e)| f.deg() * *e as usize).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn has_repeated_factor(&self) -> bool {
        self.factors.iter().any(|(_, e)| *e > 1)
    }

    pub fn linear_factors(&self) -> impl Iterator<Item = &Poly<F>> {
        self.factors.iter().filter(|(f, _)| f.deg() == 1).map(|(f, _)| f)
    }

    pub fn has_linear_factor(&self) -> bool {
        self.linear_factors().next().is_some()
    }

    /// Orders factors by degree, then multiplicity; ties keep their order.
    pub(crate) fn sort_by_degree(&mut self) {
        self.factors.sort_by_key(|(f, e)| (f.deg(), *e));
    }
}

impl Factorization<Rationals> {
    /// Deterministic order: degree, then coefficients from the top down.
    pub fn canonical_sort(&mut self) {
        self.factors.sort_by(|(f, e), (g, k)| {
            f.deg()
                .cmp(&g.deg())
                .then_with(|| f.coeffs().iter().rev().cmp(g.coeffs().iter().rev()))
                .then(e.cmp(k))
        });
    }

    pub fn to_json(&self) -> FactorizationJson {
        FactorizationJson {
            unit: crate::exactmath::rational::format_rational(&self.unit),
            factors: self
                .factors
                .iter()
                .map(|(f, e)| FactorJson {
                    poly: to_json_coeffs(f),
                    text: f.to_string(),
                    mult: *e,
                })
                .collect(),
        }
    }

    /// Roots of the linear factors.
    pub fn rational_roots(&self) -> Vec<crate::exactmath::Rational> {
        self.linear_factors().map(|f| -f.coeff(0)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorJson {
    pub poly: Vec<String>,
    pub text: String,
    pub mult: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationJson {
    pub unit: String,
    pub factors: Vec<FactorJson>,
}

impl std::fmt::Display for Factorization<Rationals> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::exactmath::rational::display_rational;
        use num_traits::One;
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(display_rational(&self.unit));
        }
        for (g, e) in &self.factors {
            let body = format!("({g})");
            parts.push(if *e > 1 { format!("{body}^{e}") } else { body });
        }
        f.write_str(&parts.join(" * "))
    }
}
