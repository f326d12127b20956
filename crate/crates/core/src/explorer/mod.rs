//! Bounded verifiers for the structural results about `(S, •)` and
//! exhaustive searches for the objects the open questions are about.
//!
//! Every search is exhaustive over vertex labels `≤ bound`, partitioned
//! across threads by leading vertex and merged in a fixed sort order, so
//! results are independent of the thread count.

mod absorb;
mod chain;
mod cycle;
mod fiber;
mod verify;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::carrier::{PrimeLoop, SElement};
use crate::error::{Error, Result};

pub use absorb::absorbing_partner;
pub use chain::{find_ap_chain, find_equal_edge_path};
pub use cycle::{canonical_form, find_equal_edge_cycle, find_quartets};
pub use fiber::fiber_solutions;
pub use verify::{
    verify_bertrand_bound, verify_lemma_adjacent, verify_no_equal_triangle, verify_twin_adjacency,
};

fn to_elements(values: &[u64]) -> Result<Vec<SElement>> {
    values.iter().map(|&v| SElement::new(v)).collect()
}

fn check_distinct(values: &[u64]) -> Result<()> {
    let unique: BTreeSet<u64> = values.iter().copied().collect();
    if unique.len() != values.len() {
        return Err(Error::invalid(format!(
            "elements are not distinct: {values:?}"
        )));
    }
    Ok(())
}

/// Distinct elements whose consecutive products all equal `edge_value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub elements: Vec<SElement>,
    pub edge_value: SElement,
    pub is_arithmetic: bool,
    pub common_difference: Option<u64>,
}

impl Chain {
    /// Build and validate a chain from its elements in order.
    pub fn from_elements(lp: &PrimeLoop, values: &[u64]) -> Result<Chain> {
        if values.len() < 2 {
            return Err(Error::invalid("a chain needs at least two elements"));
        }
        let elements = to_elements(values)?;
        check_distinct(values)?;
        let edge_value = lp.dot(values[0], values[1])?;
        for w in values.windows(2) {
            let v = lp.dot(w[0], w[1])?;
            if v != edge_value {
                return Err(Error::invalid(format!(
                    "{} • {} = {v}, expected {edge_value}",
                    w[0], w[1]
                )));
            }
        }
        let step = values[1].checked_sub(values[0]).filter(|&d| d > 0);
        let common_difference =
            step.filter(|&d| values.windows(2).all(|w| w[1].checked_sub(w[0]) == Some(d)));
        Ok(Chain {
            elements,
            edge_value,
            is_arithmetic: common_difference.is_some(),
            common_difference,
        })
    }

    pub fn values(&self) -> Vec<u64> {
        self.elements.iter().map(|e| e.get()).collect()
    }

    /// Re-check every invariant; used on chains read back from reports.
    pub fn validate(&self, lp: &PrimeLoop) -> Result<()> {
        let rebuilt = Chain::from_elements(lp, &self.values())?;
        if rebuilt != *self {
            return Err(Error::invalid(format!(
                "chain fields disagree with its elements: {self:?}"
            )));
        }
        Ok(())
    }
}

/// A cycle of distinct elements with one common edge value, stored in
/// canonical form (see [`canonical_form`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EqualEdgeCycle {
    pub vertices: Vec<SElement>,
    pub edge_value: SElement,
}

impl EqualEdgeCycle {
    /// Canonicalize and validate a cycle given in any rotation or direction.
    pub fn from_vertices(lp: &PrimeLoop, values: &[u64]) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::invalid("a cycle needs at least three vertices"));
        }
        to_elements(values)?;
        check_distinct(values)?;
        let canonical = canonical_form(values);
        let n = canonical.len();
        let edge_value = lp.dot(canonical[0], canonical[1])?;
        for i in 0..n {
            let (a, b) = (canonical[i], canonical[(i + 1) % n]);
            let v = lp.dot(a, b)?;
            if v != edge_value {
                return Err(Error::invalid(format!(
                    "{a} • {b} = {v}, expected {edge_value}"
                )));
            }
        }
        Ok(EqualEdgeCycle {
            vertices: canonical.into_iter().map(SElement::new_unchecked).collect(),
            edge_value,
        })
    }

    pub(crate) fn from_canonical_unchecked(values: Vec<u64>, edge_value: u64) -> Self {
        debug_assert_eq!(canonical_form(&values), values);
        EqualEdgeCycle {
            vertices: values.into_iter().map(SElement::new_unchecked).collect(),
            edge_value: SElement::new_unchecked(edge_value),
        }
    }

    pub fn values(&self) -> Vec<u64> {
        self.vertices.iter().map(|e| e.get()).collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_vertex(&self) -> u64 {
        self.vertices.iter().map(|v| v.get()).max().unwrap_or(0)
    }

    pub fn validate(&self, lp: &PrimeLoop) -> Result<()> {
        let rebuilt = EqualEdgeCycle::from_vertices(lp, &self.values())?;
        if rebuilt != *self {
            return Err(Error::invalid(format!(
                "cycle is not canonical or mislabelled: {self:?}"
            )));
        }
        Ok(())
    }

    /// Sort key used for every cycle listing: largest vertex, then vertices.
    pub fn sort_key(&self) -> (u64, Vec<u64>) {
        (self.max_vertex(), self.values())
    }
}

/// Pairs `a > b` with `a • b = x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub x: SElement,
    pub bound: u64,
    pub pairs: Vec<(u64, u64)>,
    pub count: u64,
    pub includes_one: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statement {
    /// No three distinct elements have pairwise equal products.
    NoTriangle,
    /// Twin primes `p, p+2` give equal or adjacent products with any smaller `x`.
    TwinAdjacency,
    /// `N(t)` and `N(t+2)` are equal or adjacent for even `t`.
    LemmaAdjacent,
    /// `N(t) < 2t` for `t ≥ 2`.
    BertrandBound,
}

impl Statement {
    pub fn name(self) -> &'static str {
        match self {
            Statement::NoTriangle => "no_triangle",
            Statement::TwinAdjacency => "twin_adjacency",
            Statement::LemmaAdjacent => "lemma_adjacent",
            Statement::BertrandBound => "bertrand_bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub bound: u64,
    pub checked: u64,
    pub violations: Vec<Vec<u64>>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}
