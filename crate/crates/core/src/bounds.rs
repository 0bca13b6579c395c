//! Bounds on dimℓ(G(U) ⊓ H) in terms of the factors, checked against the
//! exact value.
//!
//! * Sandwich: if some minimum local generator of G lies inside U, then
//!   `max(dimℓ(G|U), dimℓ(H)) ≤ dimℓ(G(U) ⊓ H) ≤ max(dimℓ(G), dimℓ(H))`.
//! * General: for a minimum local generator S_G of G with `k = |S_G ∩ U|`,
//!   `dimℓ(G(U) ⊓ H) ≤ n(H)(dimℓ(G) − k) + k`.

use serde::Serialize;

use crate::dimension::{find_dimension, local_dimension, DimensionKind, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::VertexSubset;
use crate::products::{hierarchical_product, ProductSpec};

/// Largest product for which [`verify_bounds`] runs an exact search unless
/// told otherwise.
pub const DEFAULT_MAX_EXACT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichBounds {
    /// Some minimum local generator of G is contained in U.
    pub applicable: bool,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralBound {
    pub bound: usize,
    /// Largest `|S_G ∩ U|` over minimum local generators S_G of G.
    pub best_k: usize,
    /// The lexicographically least S_G attaining `best_k`.
    pub witness: VertexSubset,
}

/// `n(H)(|s_g| − k) + k` with `k = |s_g ∩ U|`.
pub fn general_bound_for(spec: &ProductSpec, s_g: &VertexSubset) -> usize {
    let k = s_g.members().iter().filter(|&&g| spec.u.contains(g)).count();
    spec.h.order() * (s_g.len() - k) + k
}

struct FactorData {
    local_g: usize,
    local_h: usize,
    bases_g: Vec<VertexSubset>,
    basis_h: VertexSubset,
}

fn factor_data(spec: &ProductSpec) -> Result<FactorData> {
    let g = find_dimension(&spec.g, &DimensionKind::Local, &SearchOptions::all_bases())?;
    let h = local_dimension(&spec.h)?;
    Ok(FactorData {
        local_g: g.value,
        local_h: h.value,
        bases_g: g.all_minimum_bases.unwrap_or_default(),
        basis_h: h.basis,
    })
}

fn sandwich_from(spec: &ProductSpec, f: &FactorData) -> Result<(SandwichBounds, Option<VertexSubset>)> {
    let applicable = f.bases_g.iter().any(|b| b.is_subset_of(&spec.u));
    if !applicable {
        return Ok((
            SandwichBounds {
                applicable,
                lower: None,
                upper: None,
            },
            None,
        ));
    }
    // A local generator of G inside U is also a U-local generator, so this
    // search always succeeds here.
    let gu = find_dimension(
        &spec.g,
        &DimensionKind::ULocal(spec.u.clone()),
        &SearchOptions::default(),
    )?;
    Ok((
        SandwichBounds {
            applicable,
            lower: Some(gu.value.max(f.local_h)),
            upper: Some(f.local_g.max(f.local_h)),
        },
        Some(gu.basis),
    ))
}

fn general_from(spec: &ProductSpec, f: &FactorData) -> GeneralBound {
    let k_of = |b: &VertexSubset| b.members().iter().filter(|&&g| spec.u.contains(g)).count();
    // first basis (lexicographic) with the largest k
    let witness = f
        .bases_g
        .iter()
        .fold(None::<&VertexSubset>, |best, b| match best {
            Some(x) if k_of(x) >= k_of(b) => Some(x),
            _ => Some(b),
        })
        .expect("a connected graph has a local metric basis")
        .clone();
    let best_k = k_of(&witness);
    GeneralBound {
        bound: general_bound_for(spec, &witness),
        best_k,
        witness,
    }
}

/// Decides applicability by enumerating every minimum local generator of G.
pub fn sandwich_bounds(spec: &ProductSpec) -> Result<SandwichBounds> {
    Ok(sandwich_from(spec, &factor_data(spec)?)?.0)
}

/// The general bound for the minimum local generator of G with the most
/// vertices in U, which gives the smallest value since `n(H) ≥ 1`.
pub fn general_upper_bound(spec: &ProductSpec) -> Result<GeneralBound> {
    Ok(general_from(spec, &factor_data(spec)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsWitnesses {
    pub local_basis_g: VertexSubset,
    pub local_basis_h: VertexSubset,
    pub u_local_basis_g: Option<VertexSubset>,
    pub general_basis_g: VertexSubset,
    pub product_basis: VertexSubset,
}

/// Every bound next to the exact product dimension. Bound violations are
/// listed rather than raised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n_g: usize,
    pub n_h: usize,
    pub u: VertexSubset,
    pub local_g: usize,
    pub local_h: usize,
    pub u_local_g: Option<usize>,
    #[serde(rename = "applicable_22")]
    pub sandwich_applicable: bool,
    #[serde(rename = "lower_22")]
    pub sandwich_lower: Option<usize>,
    #[serde(rename = "upper_22")]
    pub sandwich_upper: Option<usize>,
    #[serde(rename = "upper_25")]
    pub general_upper: usize,
    pub best_k: usize,
    pub exact: usize,
    pub witnesses: BoundsWitnesses,
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes both bounds and the exact dimℓ of the product.
///
/// Fails with [`Error::InstanceTooLarge`] when the product has more than
/// `max_exact` vertices.
pub fn verify_bounds(spec: &ProductSpec, max_exact: usize) -> Result<BoundsReport> {
    let vertices = spec.g.order() * spec.h.order();
    if vertices > max_exact {
        return Err(Error::InstanceTooLarge {
            vertices,
            limit: max_exact,
        });
    }
    let f = factor_data(spec)?;
    let (sandwich, u_basis) = sandwich_from(spec, &f)?;
    let general = general_from(spec, &f);
    let product = hierarchical_product(spec)?;
    let exact = local_dimension(product.graph())?;

    let mut violations = Vec::new();
    if let (Some(lo), Some(hi)) = (sandwich.lower, sandwich.upper) {
        if exact.value < lo {
            violations.push(format!("exact {} below sandwich lower bound {lo}", exact.value));
        }
        if exact.value > hi {
            violations.push(format!("exact {} above sandwich upper bound {hi}", exact.value));
        }
    }
    if exact.value > general.bound {
        violations.push(format!(
            "exact {} above general bound {} (k = {})",
            exact.value, general.bound, general.best_k
        ));
    }

    Ok(BoundsReport {
        n_g: spec.g.order(),
        n_h: spec.h.order(),
        u: spec.u.clone(),
        local_g: f.local_g,
        local_h: f.local_h,
        u_local_g: u_basis.as_ref().map(VertexSubset::len),
        sandwich_applicable: sandwich.applicable,
        sandwich_lower: sandwich.lower,
        sandwich_upper: sandwich.upper,
        general_upper: general.bound,
        best_k: general.best_k,
        exact: exact.value,
        witnesses: BoundsWitnesses {
            local_basis_g: f.bases_g[0].clone(),
            local_basis_h: f.basis_h,
            u_local_basis_g: u_basis,
            general_basis_g: general.witness,
            product_basis: exact.basis,
        },
        violations,
    })
}
