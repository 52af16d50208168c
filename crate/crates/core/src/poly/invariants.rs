use num_bigint::BigInt;
use serde::Serialize;

use super::IntPoly;
use crate::activity::{external_inactivity, internal_inactivity, EdgeOrder};
use crate::error::{Error, Result};
use crate::graph::{BipGraph, Side};
use crate::hypertree::{enumerate_hypertrees, HypertreeSet};

/// Hypertrees of a graph together with both polynomials, for one order.
#[derive(Clone, Debug, Serialize)]
pub struct Invariants {
    pub hypertrees: HypertreeSet,
    pub interior: IntPoly,
    pub exterior: IntPoly,
}

impl Invariants {
    /// Hyperedges are the `E` class of `g`; `order` ranks them.
    pub fn compute(g: &BipGraph, order: &EdgeOrder) -> Result<Self> {
        check_order(g, order)?;
        let hypertrees = enumerate_hypertrees(g)?;
        let interior = interior_from_set(&hypertrees, order)?;
        let exterior = exterior_from_set(&hypertrees, order)?;
        Ok(Invariants {
            hypertrees,
            interior,
            exterior,
        })
    }
}

fn check_order(g: &BipGraph, order: &EdgeOrder) -> Result<()> {
    if order.len() != g.e_count() {
        return Err(Error::InvalidOrder(format!(
            "order covers {} hyperedges, graph has {}",
            order.len(),
            g.e_count()
        )));
    }
    Ok(())
}

/// `I(x) = Σ_f x^{ῑ(f)}` with the `E` class as hyperedges.
pub fn interior_polynomial(g: &BipGraph, order: &EdgeOrder) -> Result<IntPoly> {
    check_order(g, order)?;
    interior_from_set(&enumerate_hypertrees(g)?, order)
}

/// `X(y) = Σ_f y^{ε̄(f)}` with `side` as the hyperedge class; `order`
/// ranks that class.
pub fn exterior_polynomial(g: &BipGraph, order: &EdgeOrder, side: Side) -> Result<IntPoly> {
    let g = g.oriented(side);
    check_order(&g, order)?;
    exterior_from_set(&enumerate_hypertrees(&g)?, order)
}

pub fn interior_from_set(b: &HypertreeSet, order: &EdgeOrder) -> Result<IntPoly> {
    tally(b, |f| internal_inactivity(b, f, order))
}

pub fn exterior_from_set(b: &HypertreeSet, order: &EdgeOrder) -> Result<IntPoly> {
    tally(b, |f| external_inactivity(b, f, order))
}

fn tally(b: &HypertreeSet, flags: impl Fn(&[u32]) -> Result<Vec<bool>>) -> Result<IntPoly> {
    let mut counts: Vec<u64> = vec![0; b.width() + 1];
    for f in b {
        let k = flags(f.values())?.iter().filter(|&&x| x).count();
        counts[k] += 1;
    }
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}
