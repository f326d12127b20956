use super::FiberReport;
use crate::carrier::{BoundedLoop, PrimeLoop, SElement};
use crate::error::Result;

/// All pairs `a > b` in `S ∩ [1, bound]` with `a • b = x`, sorted by
/// `(a, b)`. Pairs with `b = 1` are dropped unless `include_one` is set.
pub fn fiber_solutions(
    lp: &PrimeLoop,
    x: u64,
    bound: u64,
    include_one: bool,
) -> Result<FiberReport> {
    let x = SElement::new(x)?;
    let b = BoundedLoop::new(lp, bound)?;
    let mut pairs: Vec<(u64, u64)> = b
        .vertices()
        .iter()
        .filter(|&&low| include_one || low != 1)
        .flat_map(|&low| {
            b.neighbors(low, x.get())
                .filter(move |&high| high > low)
                .map(move |high| (high, low))
        })
        .collect();
    pairs.sort_unstable();
    Ok(FiberReport {
        x,
        bound,
        count: pairs.len() as u64,
        pairs,
        includes_one: include_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twin_examples() {
        let lp = PrimeLoop::new();
        let r = fiber_solutions(&lp, 3, 100, false).unwrap();
        assert_eq!(
            r.pairs,
            [
                (5, 3),
                (7, 5),
                (13, 11),
                (19, 17),
                (31, 29),
                (43, 41),
                (61, 59),
                (73, 71)
            ]
        );
        assert_eq!(r.count, 8);
        let r = fiber_solutions(&lp, 3, 100, true).unwrap();
        assert_eq!(r.count, 9);
        assert_eq!(r.pairs[0], (3, 1));
        assert_eq!(fiber_solutions(&lp, 1, 100, true).unwrap().count, 0);
    }

    #[test]
    fn rejects_non_member() {
        let lp = PrimeLoop::new();
        assert!(fiber_solutions(&lp, 9, 100, false)
            .unwrap_err()
            .is_invalid_argument());
    }
}
