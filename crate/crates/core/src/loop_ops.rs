//! The operation `•` and bounded checks of the loop axioms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carrier::{is_in_s, BoundedLoop, PrimeLoop, SElement};
use crate::error::{Error, Result};

/// `a • b = N(|a − b|)`.
pub fn dot(lp: &PrimeLoop, a: u64, b: u64) -> Result<SElement> {
    lp.dot(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Closure,
    Commutativity,
    Identity,
    SelfInverse,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Closure,
        Axiom::Commutativity,
        Axiom::Identity,
        Axiom::SelfInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Closure => "closure",
            Axiom::Commutativity => "commutativity",
            Axiom::Identity => "identity",
            Axiom::SelfInverse => "self_inverse",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub witness: Vec<u64>,
}

/// How many solutions `x` each equation `a • x = v` has within the bound,
/// over every row `a` and every value `v` the row attains.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionStats {
    pub rows: u64,
    pub achievable_values: u64,
    pub uniquely_solvable: u64,
    pub max_solutions: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub bound: u64,
    pub closure_ok: bool,
    pub commutativity_ok: bool,
    pub identity_ok: bool,
    pub self_inverse_ok: bool,
    pub counterexamples: Vec<Counterexample>,
    pub pairs_checked: u64,
    pub sampled: bool,
    pub division: DivisionStats,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.closure_ok && self.commutativity_ok && self.identity_ok && self.self_inverse_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxiomMode {
    #[default]
    Exhaustive,
    /// Closure and commutativity on `pairs` random pairs; identity and
    /// self-inverse are still checked for every element.
    Sample { pairs: u64, seed: u64 },
}

fn check_pair(b: &BoundedLoop, x: u64, y: u64, out: &mut Vec<Counterexample>) {
    let xy = b.dot(x, y);
    if !is_in_s(xy) {
        out.push(Counterexample {
            axiom: Axiom::Closure,
            witness: vec![x, y, xy],
        });
    }
    let yx = b.dot(y, x);
    if xy != yx {
        out.push(Counterexample {
            axiom: Axiom::Commutativity,
            witness: vec![x, y],
        });
    }
}

/// Verify closure, commutativity, identity and self-inverse on
/// `S ∩ [1, bound]`.
pub fn check_axioms(lp: &PrimeLoop, bound: u64, mode: AxiomMode) -> Result<AxiomReport> {
    let b = BoundedLoop::new(lp, bound)?;
    let verts = b.vertices();

    let (mut counterexamples, pairs_checked) = match mode {
        AxiomMode::Exhaustive => {
            let found: Vec<Counterexample> = (0..verts.len())
                .into_par_iter()
                .flat_map_iter(|i| {
                    let mut out = Vec::new();
                    for &y in &verts[i..] {
                        check_pair(&b, verts[i], y, &mut out);
                    }
                    out
                })
                .collect();
            let n = verts.len() as u64;
            (found, n * (n + 1) / 2)
        }
        AxiomMode::Sample { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            for _ in 0..pairs {
                let x = verts[rng.gen_range(0..verts.len())];
                let y = verts[rng.gen_range(0..verts.len())];
                check_pair(&b, x, y, &mut out);
            }
            (out, pairs)
        }
    };

    for &a in verts {
        if b.dot(a, 1) != a {
            counterexamples.push(Counterexample {
                axiom: Axiom::Identity,
                witness: vec![a],
            });
        }
        if b.dot(a, a) != 1 {
            counterexamples.push(Counterexample {
                axiom: Axiom::SelfInverse,
                witness: vec![a],
            });
        }
    }
    counterexamples.sort();
    counterexamples.dedup();

    let ok = |axiom| !counterexamples.iter().any(|c| c.axiom == axiom);
    Ok(AxiomReport {
        bound,
        closure_ok: ok(Axiom::Closure),
        commutativity_ok: ok(Axiom::Commutativity),
        identity_ok: ok(Axiom::Identity),
        self_inverse_ok: ok(Axiom::SelfInverse),
        counterexamples,
        pairs_checked,
        sampled: matches!(mode, AxiomMode::Sample { .. }),
        division: division_stats(&b),
    })
}

/// Bounded left-division statistics. Reported, not asserted: nothing
/// guarantees unique solvability of `a • x = v`.
pub fn division_stats(b: &BoundedLoop) -> DivisionStats {
    let verts = b.vertices();
    verts
        .par_iter()
        .map(|&a| {
            let mut row: Vec<u64> = verts.iter().map(|&x| b.dot(a, x)).collect();
            row.sort_unstable();
            let mut stats = DivisionStats {
                rows: 1,
                ..Default::default()
            };
            for run in row.chunk_by(|p, q| p == q) {
                stats.achievable_values += 1;
                stats.uniquely_solvable += (run.len() == 1) as u64;
                stats.max_solutions = stats.max_solutions.max(run.len() as u64);
            }
            stats
        })
        .reduce(DivisionStats::default, |l, r| DivisionStats {
            rows: l.rows + r.rows,
            achievable_values: l.achievable_values + r.achievable_values,
            uniquely_solvable: l.uniquely_solvable + r.uniquely_solvable,
            max_solutions: l.max_solutions.max(r.max_solutions),
        })
}

/// Lexicographically smallest `(a, b, c)` in `S ∩ [1, bound]` with
/// `(a • b) • c ≠ a • (b • c)`.
///
/// With `distinct` set, only pairwise distinct triples are considered.
/// Without it, self-inverse makes `(3, 3, 5)` an immediate witness.
pub fn find_nonassociative_witness(
    lp: &PrimeLoop,
    bound: u64,
    distinct: bool,
) -> Result<Option<[u64; 3]>> {
    let b = BoundedLoop::new(lp, bound)?;
    let verts = b.vertices();
    // a • b < 2·bound, so the outer products need N up to 4·bound
    let table = lp.ensure(4 * bound + 4)?;
    let n = |d: u64| {
        if d <= b.bound() {
            b.next_in_s(d)
        } else {
            table.successor(d).expect("table covers 2·bound + 2")
        }
    };
    Ok(verts.par_iter().find_map_first(|&x| {
        for &y in verts {
            if distinct && y == x {
                continue;
            }
            let xy = b.dot(x, y);
            for &z in verts {
                if distinct && (z == x || z == y) {
                    continue;
                }
                let left = n(xy.abs_diff(z));
                let right = n(x.abs_diff(b.dot(y, z)));
                if left != right {
                    return Some([x, y, z]);
                }
            }
        }
        None
    }))
}

/// Convenience wrapper that turns a missing witness into [`Error::NotFound`].
pub fn require_nonassociative_witness(
    lp: &PrimeLoop,
    bound: u64,
    distinct: bool,
) -> Result<[u64; 3]> {
    find_nonassociative_witness(lp, bound, distinct)?.ok_or(Error::NotFound {
        what: "non-associative triple",
        range: 1..=bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_examples() {
        let lp = PrimeLoop::new();
        let d = |a, b| dot(&lp, a, b).unwrap().get();
        assert_eq!(d(41, 47), 7);
        assert_eq!(d(101, 7), 97);
        assert_eq!(d(137, 23), 127);
        assert_eq!(d(1, 1), 1);
        for a in [1, 3, 5, 97, 7919] {
            assert_eq!(d(a, 1), a);
            assert_eq!(d(a, a), 1);
        }
    }

    #[test]
    fn axioms_small_bounds() {
        let lp = PrimeLoop::new();
        for bound in [1, 2, 3, 100] {
            let r = check_axioms(&lp, bound, AxiomMode::Exhaustive).unwrap();
            assert!(r.all_hold(), "bound {bound}");
            assert!(r.counterexamples.is_empty());
            assert!(!r.sampled);
        }
        let r = check_axioms(&lp, 1, AxiomMode::Exhaustive).unwrap();
        assert_eq!(r.pairs_checked, 1);
        assert_eq!(r.division.rows, 1);
        let r = check_axioms(&lp, 100, AxiomMode::Exhaustive).unwrap();
        assert_eq!(r.pairs_checked, 25 * 26 / 2);
        assert_eq!(r.division.rows, 25);
    }

    #[test]
    fn sample_mode_is_seeded() {
        let lp = PrimeLoop::new();
        let mode = AxiomMode::Sample {
            pairs: 5_000,
            seed: 7,
        };
        let r1 = check_axioms(&lp, 10_000, mode).unwrap();
        let r2 = check_axioms(&lp, 10_000, mode).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.sampled && r1.all_hold());
        assert_eq!(r1.pairs_checked, 5_000);
    }

    #[test]
    fn nonassociative_witnesses() {
        let lp = PrimeLoop::new();
        assert_eq!(
            find_nonassociative_witness(&lp, 10, true).unwrap(),
            Some([3, 5, 7])
        );
        assert_eq!(
            find_nonassociative_witness(&lp, 100, true).unwrap(),
            Some([3, 5, 7])
        );
        assert_eq!(find_nonassociative_witness(&lp, 3, true).unwrap(), None);
        assert_eq!(find_nonassociative_witness(&lp, 3, false).unwrap(), None);
        assert_eq!(
            find_nonassociative_witness(&lp, 10, false).unwrap(),
            Some([3, 3, 5])
        );
        assert!(require_nonassociative_witness(&lp, 3, true)
            .unwrap_err()
            .is_not_found());
    }
}
