//! Rank over the rationals by incremental row echelon form.
//!
//! Kept separate from the integer elimination on purpose: the two routes
//! share no code, so agreement between them is evidence for both.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Rank of the span of the given sparse vectors (index, value).
pub fn rational_rank<I, V>(vectors: I) -> usize
where
    I: IntoIterator<Item = V>,
    V: IntoIterator<Item = (usize, i64)>,
{
    // pivot index -> reduced vector whose leading index is the pivot
    let mut basis: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for v in vectors {
        let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, x) in v {
            let e = row.entry(i).or_insert_with(BigRational::zero);
            *e += BigRational::from_integer(BigInt::from(x));
        }
        row.retain(|_, x| !x.is_zero());
        while let Some((lead, lead_val)) = row.iter().next().map(|(&k, v)| (k, v.clone())) {
            let Some(b) = basis.get(&lead) else {
                break;
            };
            let factor = lead_val / &b[&lead];
            for (&j, y) in b {
                let e = row.entry(j).or_insert_with(BigRational::zero);
                *e -= &factor * y;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
        if let Some(&lead) = row.keys().next() {
            basis.insert(lead, row);
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(Vec::<Vec<(usize, i64)>>::new()), 0);
        assert_eq!(rational_rank([vec![(0, 1), (1, -1)], vec![(0, -1), (1, 1)]]), 1);
        assert_eq!(rational_rank([vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]]), 2);
        assert_eq!(rational_rank([vec![(0, 0)], vec![(3, 5)]]), 1);
        assert_eq!(
            rational_rank([vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (2, -1)]]),
            2
        );
    }
}
