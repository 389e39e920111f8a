//! Invariant factors of an integer matrix.
//!
//! Sparse elimination over arbitrary-precision integers. The pivot is always an
//! entry of least absolute value; when a row or column operation leaves a
//! non-zero remainder, that remainder becomes the next pivot, so the pivot
//! magnitude strictly decreases until it divides its row and column. The
//! diagonal found this way is then brought into divisibility order by replacing
//! pairs `(a, b)` with `(gcd, lcm)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

struct Sparse {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// row `dst` -= q * row `src`
    fn row_axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        let src_row: Vec<(usize, BigInt)> = self.rows[src].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src_row {
            let cur = self.rows[dst].get(&c).cloned().unwrap_or_default();
            self.set(dst, c, cur - q * v);
        }
    }

    fn smallest(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                if best.is_none_or(|(_, _, b)| v.abs() < b.abs()) {
                    if v.abs().is_one() {
                        return Some((r, c));
                    }
                    best = Some((r, c, v));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }
}

/// Non-zero diagonal of a diagonal form, in any order.
fn diagonalize(mut m: Sparse) -> Vec<BigUint> {
    let mut diag = Vec::new();
    while let Some((mut r, mut c)) = m.smallest() {
        loop {
            let p = m.rows[r][&c].clone();
            let mut next = None;
            let others: Vec<usize> = m.cols[c].iter().copied().filter(|&x| x != r).collect();
            for x in others {
                let q = &m.rows[x][&c] / &p;
                m.row_axpy(x, &q, r);
                if m.rows[x].contains_key(&c) && next.is_none() {
                    next = Some((x, c));
                }
            }
            if let Some(n) = next {
                (r, c) = n;
                continue;
            }
            // column c is clear apart from the pivot, so column operations
            // against it only touch row r
            let others: Vec<usize> = m.rows[r].keys().copied().filter(|&x| x != c).collect();
            for y in others {
                let rem = &m.rows[r][&y] % &p;
                if !rem.is_zero() && next.is_none() {
                    next = Some((r, y));
                }
                m.set(r, y, rem);
            }
            if let Some(n) = next {
                (r, c) = n;
                continue;
            }
            diag.push(p.abs().to_biguint().unwrap());
            m.set(r, c, BigInt::zero());
            break;
        }
    }
    diag
}

/// The non-zero invariant factors `d_1 | d_2 | ...` of the matrix given by its
/// non-zero entries `(row, col, value)`.
pub fn invariant_factors(
    nrows: usize,
    ncols: usize,
    entries: impl IntoIterator<Item = (usize, usize, i64)>,
) -> Vec<BigUint> {
    let mut m = Sparse {
        rows: vec![BTreeMap::new(); nrows],
        cols: vec![BTreeSet::new(); ncols],
    };
    for (r, c, v) in entries {
        let cur = m.rows[r].get(&c).cloned().unwrap_or_default();
        m.set(r, c, cur + BigInt::from(v));
    }
    let mut diag = diagonalize(m);
    let units = diag.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigUint> = diag.drain(..).filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigUint::one(); units];
    out.extend(rest);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(m: &[Vec<i64>]) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (r, row) in m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    out.push((r, c, v));
                }
            }
        }
        out
    }

    fn factors(m: &[Vec<i64>]) -> Vec<u64> {
        let ncols = m.first().map_or(0, Vec::len);
        invariant_factors(m.len(), ncols, dense(m))
            .into_iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    fn det(m: &[Vec<i128>]) -> i128 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s & (1 << i) != 0).collect())
            .collect()
    }

    /// Invariant factors as quotients of determinantal divisors (gcd of all k x k minors).
    fn by_minors(m: &[Vec<i64>]) -> Vec<u64> {
        let (nr, nc) = (m.len(), m[0].len());
        let mut prev: i128 = 1;
        let mut out = Vec::new();
        for k in 1..=nr.min(nc) {
            let mut g: i128 = 0;
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let sub: Vec<Vec<i128>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                        .collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g == 0 {
                break;
            }
            out.push((g / prev) as u64);
            prev = g;
        }
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(factors(&[vec![4, 6]]), vec![2]);
        assert_eq!(factors(&[vec![-1], vec![1]]), vec![1]);
    }

    proptest! {
        #[test]
        fn agrees_with_determinantal_divisors(
            m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-6i64..7, c), r)
            })
        ) {
            prop_assert_eq!(factors(&m), by_minors(&m));
        }
    }
}
