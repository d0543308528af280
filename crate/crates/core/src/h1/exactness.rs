//! Inflation–restriction exactness and unit detection for abstract coefficients.

use serde::Serialize;

use super::cocycle::{self, canonical_representative, cohomologous_exhaustive, unit_cocycle, Cocycle};
use super::ggroup::{AbstractCoefficients, FixedCoefficients, GGroup, RestrictedCoefficients};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InflationRestriction {
    pub quotient_classes: usize,
    pub classes: usize,
    /// Indices (into `H^1(G, X)`) of inflated classes, in quotient-class order.
    pub image: Vec<usize>,
    /// Indices of classes that restrict to the neutral class on `N`.
    pub restriction_kernel: Vec<usize>,
    pub inflation_injective: bool,
    pub exact: bool,
}

/// `1 → H^1(G/N, X^N) → H^1(G, X) → H^1(N, X)`: checks injectivity of
/// inflation and that its image is the kernel of restriction.
pub fn inflation_restriction<C: GGroup>(c: &C, normal: &[usize], cap: usize) -> Result<InflationRestriction> {
    let (classes, _) = cocycle::h1(c, cap)?;
    let reps: Vec<&Cocycle<C::Elem>> = classes.iter().map(|d| &d.representative).collect();
    let fixed = FixedCoefficients::new(c, normal, cap)?;
    let (quotient, _) = cocycle::h1(&fixed, cap)?;
    let mut image = Vec::with_capacity(quotient.len());
    for q in &quotient {
        let inflated = cocycle::inflate_values(&q.representative, fixed.projection());
        debug_assert!(cocycle::is_cocycle(c, inflated.values()));
        let canon = canonical_representative(c, &inflated, cap)?;
        image.push(reps.binary_search(&&canon).expect("canonical representatives are listed"));
    }
    let restricted = RestrictedCoefficients::new(c, normal)?;
    let unit = unit_cocycle(&restricted);
    let mut restriction_kernel = Vec::new();
    for (i, d) in classes.iter().enumerate() {
        let r = cocycle::restrict_values(&d.representative, restricted.embedding());
        if cohomologous_exhaustive(&restricted, &r, &unit, cap)?.is_some() {
            restriction_kernel.push(i);
        }
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let inflation_injective = sorted.len() == image.len();
    let exact = sorted == restriction_kernel;
    Ok(InflationRestriction {
        quotient_classes: quotient.len(),
        classes: classes.len(),
        image,
        restriction_kernel,
        inflation_injective,
        exact,
    })
}

/// Per class of `H^1(G, X)`: whether some class `e` makes `(d, e)` neutral in
/// `H^1(G, X × X)`, the block-sum cancellation at the level of value tables.
pub fn abstract_units(c: &AbstractCoefficients, cap: usize) -> Result<Vec<bool>> {
    let (classes, _) = cocycle::h1(c, cap)?;
    let square = c.square();
    let k = c.x().order();
    let unit = unit_cocycle(&*square);
    classes
        .iter()
        .map(|d| {
            for e in &classes {
                let pair: Vec<usize> = d
                    .representative
                    .values()
                    .iter()
                    .zip(e.representative.values())
                    .map(|(&x, &y)| x * k + y)
                    .collect();
                let pair = Cocycle::from_values_unchecked(pair);
                if cohomologous_exhaustive(&*square, &pair, &unit, cap)?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        })
        .collect()
}
