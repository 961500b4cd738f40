//! Invariant factors by integer elimination with smallest-pivot selection.
//!
//! The elimination is generic over the entry type. It first runs on `i64`
//! with checked arithmetic and restarts on `BigInt` if any intermediate
//! overflows, so results are always exact.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub(crate) trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    fn divides(&self, n: &Self) -> bool;
    /// `self - q * b`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn checked_add(&self, b: &Self) -> Option<Self>;
    fn abs_big(&self) -> BigUint;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divides(&self, n: &Self) -> bool {
        n % self == 0
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        i64::checked_add(*self, *b)
    }
    fn abs_big(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divides(&self, n: &Self) -> bool {
        n.is_multiple_of(self)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn abs_big(&self) -> BigUint {
        self.magnitude().clone()
    }
}

struct Overflow;

/// Dense row-major working matrix.
struct Work<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Scalar> Work<T> {
    fn at(&self, r: usize, c: usize) -> &T {
        &self.a[r * self.cols + c]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize, from: usize) {
        if r1 != r2 {
            for c in from..self.cols {
                self.a.swap(r1 * self.cols + c, r2 * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize, from: usize) {
        if c1 != c2 {
            for r in from..self.rows {
                self.a.swap(r * self.cols + c1, r * self.cols + c2);
            }
        }
    }

    /// row[target] -= q * row[source], over columns `from..`.
    fn row_sub(&mut self, target: usize, source: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for c in from..self.cols {
            let s = &self.a[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let s = s.clone();
            let t = &mut self.a[target * self.cols + c];
            *t = t.sub_mul(q, &s).ok_or(Overflow)?;
        }
        Ok(())
    }

    fn col_sub(&mut self, target: usize, source: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for r in from..self.rows {
            let s = &self.a[r * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let s = s.clone();
            let t = &mut self.a[r * self.cols + target];
            *t = t.sub_mul(q, &s).ok_or(Overflow)?;
        }
        Ok(())
    }

    fn row_add(&mut self, target: usize, source: usize, from: usize) -> Result<(), Overflow> {
        for c in from..self.cols {
            let s = self.a[source * self.cols + c].clone();
            let t = &mut self.a[target * self.cols + c];
            *t = t.checked_add(&s).ok_or(Overflow)?;
        }
        Ok(())
    }

    /// Position of a nonzero entry of least magnitude in the trailing block,
    /// returning early on a unit.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                if v.is_unit() {
                    return Some((r, c));
                }
                match best {
                    Some((br, bc)) if self.at(br, bc).cmp_abs(v) != Ordering::Greater => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    }

    fn diagonalize(mut self) -> Result<Vec<BigUint>, Overflow> {
        let mut factors = Vec::new();
        let limit = self.rows.min(self.cols);
        let mut t = 0;
        while t < limit {
            let Some((r, c)) = self.smallest_in_block(t) else {
                break;
            };
            self.swap_rows(t, r, t);
            self.swap_cols(t, c, t);

            loop {
                // Clear column t and row t; a nonzero remainder becomes the
                // new, strictly smaller pivot.
                let mut smaller: Option<(usize, usize)> = None;
                for r in t + 1..self.rows {
                    if self.at(r, t).is_zero() {
                        continue;
                    }
                    let q = self.at(r, t).quot(self.at(t, t));
                    self.row_sub(r, t, &q, t)?;
                    if !self.at(r, t).is_zero() {
                        smaller = Some((r, t));
                    }
                }
                for c in t + 1..self.cols {
                    if self.at(t, c).is_zero() {
                        continue;
                    }
                    let q = self.at(t, c).quot(self.at(t, t));
                    self.col_sub(c, t, &q, t)?;
                    if !self.at(t, c).is_zero() {
                        smaller = Some((t, c));
                    }
                }
                if let Some((r, c)) = smaller {
                    self.swap_rows(t, r, t);
                    self.swap_cols(t, c, t);
                    continue;
                }

                // The pivot must divide the whole trailing block.
                let pivot = self.at(t, t).clone();
                if pivot.is_unit() {
                    break;
                }
                let offender = (t + 1..self.rows).find(|&r| {
                    (t + 1..self.cols).any(|c| !pivot.divides(self.at(r, c)))
                });
                match offender {
                    Some(r) => self.row_add(t, r, t)?,
                    None => break,
                }
            }
            factors.push(self.at(t, t).abs_big());
            t += 1;
        }
        Ok(factors)
    }
}

/// Rank and invariant factors `d1 | d2 | ... | dr` of a matrix given as
/// sparse triplets `(row, col, value)`; duplicate positions are summed.
///
/// Unit pivots are eliminated on the sparse matrix first; only the block
/// left without units goes through the dense elimination.
#[cfg(test)]
pub(crate) fn invariant_factors_triplets(
    rows: usize,
    cols: usize,
    triplets: &[(usize, usize, i64)],
) -> Vec<BigUint> {
    let (rank, torsion) = rank_and_torsion(rows, cols, triplets);
    let mut out = alloc::vec![BigUint::one(); rank - torsion.len()];
    out.extend(torsion);
    out
}

/// Rank together with the invariant factors other than 1, ascending. Unit
/// factors are only counted, which keeps large unimodular blocks cheap.
pub(crate) fn rank_and_torsion(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> (usize, Vec<BigUint>) {
    if let Some(f) = SparseRows::new(rows, cols, triplets).and_then(SparseRows::factors) {
        return f;
    }
    let mut big = alloc::vec![BigInt::zero(); rows * cols];
    for &(r, c, v) in triplets {
        big[r * cols + c] += v;
    }
    let all = big_factors(rows, cols, big);
    let rank = all.len();
    (rank, all.into_iter().filter(|d| !d.is_one()).collect())
}

/// Row-major sparse matrix with a column index, for unit-pivot elimination.
/// The column index may hold stale or repeated rows; readers recheck.
struct SparseRows {
    rows: Vec<Vec<(usize, i64)>>,
    col_rows: Vec<Vec<usize>>,
    alive: Vec<bool>,
    scratch: Vec<(usize, i64)>,
}

impl SparseRows {
    fn new(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> Option<Self> {
        let mut data: Vec<Vec<(usize, i64)>> = alloc::vec![Vec::new(); rows];
        for &(r, c, v) in triplets {
            data[r].push((c, v));
        }
        for row in &mut data {
            row.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = lv.checked_add(v)?,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            *row = merged;
        }
        let mut col_rows = alloc::vec![Vec::new(); cols];
        for (r, row) in data.iter().enumerate() {
            for &(c, _) in row {
                col_rows[c].push(r);
            }
        }
        Some(SparseRows {
            rows: data,
            col_rows,
            alive: alloc::vec![true; rows],
            scratch: Vec::new(),
        })
    }

    /// `row[target] -= f * row[source]`, keeping the column index current.
    fn row_sub(&mut self, target: usize, source: usize, f: i64) -> Option<()> {
        let (a, b) = (&self.rows[target], &self.rows[source]);
        let mut out = core::mem::take(&mut self.scratch);
        out.clear();
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            let take_a = y == b.len() || (x < a.len() && a[x].0 < b[y].0);
            let take_b = x == a.len() || (y < b.len() && b[y].0 < a[x].0);
            if take_a {
                out.push(a[x]);
                x += 1;
            } else if take_b {
                let (c, v) = b[y];
                out.push((c, v.checked_mul(f)?.checked_neg()?));
                self.col_rows[c].push(target);
                y += 1;
            } else {
                let c = a[x].0;
                let v = a[x].1.checked_sub(b[y].1.checked_mul(f)?)?;
                if v != 0 {
                    out.push((c, v));
                }
                x += 1;
                y += 1;
            }
        }
        self.scratch = core::mem::replace(&mut self.rows[target], out);
        Some(())
    }

    fn entry(&self, r: usize, c: usize) -> Option<i64> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |&(col, _)| col).ok().map(|k| row[k].1)
    }

    /// Live rows with a nonzero entry in column `c`; compacts the index.
    fn column(&mut self, c: usize) -> &[usize] {
        let mut list = core::mem::take(&mut self.col_rows[c]);
        list.sort_unstable();
        list.dedup();
        list.retain(|&r| self.alive[r] && self.entry(r, c).is_some());
        self.col_rows[c] = list;
        &self.col_rows[c]
    }

    fn factors(mut self) -> Option<(usize, Vec<BigUint>)> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| (self.rows[r].len(), r));
        let mut queue: VecDeque<usize> = order.into_iter().collect();
        let mut units = 0usize;
        while let Some(r) = queue.pop_front() {
            if !self.alive[r] {
                continue;
            }
            let pivot = self.rows[r]
                .iter()
                .filter(|&&(_, v)| v == 1 || v == -1)
                .min_by_key(|&&(c, _)| (self.col_rows[c].len(), c))
                .copied();
            let Some((c, p)) = pivot else { continue };
            let others: Vec<usize> = self.column(c).iter().copied().filter(|&o| o != r).collect();
            for o in others {
                let a = self.entry(o, c)?;
                self.row_sub(o, r, a.checked_mul(p)?)?;
                queue.push_back(o);
            }
            self.rows[r].clear();
            self.alive[r] = false;
            units += 1;
        }

        let live_rows: Vec<usize> = (0..self.rows.len()).filter(|&r| !self.rows[r].is_empty()).collect();
        let mut used = alloc::vec![false; self.col_rows.len()];
        for &r in &live_rows {
            for &(c, _) in &self.rows[r] {
                used[c] = true;
            }
        }
        let live_cols: Vec<usize> = (0..used.len()).filter(|&c| used[c]).collect();
        let mut col_pos = alloc::vec![usize::MAX; used.len()];
        for (k, &c) in live_cols.iter().enumerate() {
            col_pos[c] = k;
        }
        let (h, w) = (live_rows.len(), live_cols.len());
        let mut dense = alloc::vec![0i64; h * w];
        for (k, &r) in live_rows.iter().enumerate() {
            for &(c, v) in &self.rows[r] {
                dense[k * w + col_pos[c]] = v;
            }
        }
        let rest = match (Work { rows: h, cols: w, a: dense.clone() }).diagonalize() {
            Ok(f) => f,
            Err(Overflow) => big_factors(h, w, dense.into_iter().map(BigInt::from).collect()),
        };
        let rank = units + rest.len();
        Some((rank, rest.into_iter().filter(|d| !d.is_one()).collect()))
    }
}

pub(crate) fn invariant_factors_big(rows: usize, cols: usize, entries: &[BigInt]) -> Vec<BigUint> {
    let small: Option<Vec<i64>> = entries.iter().map(|x| x.to_i64()).collect();
    if let Some(a) = small {
        if let Ok(f) = (Work { rows, cols, a }).diagonalize() {
            return f;
        }
    }
    big_factors(rows, cols, entries.to_vec())
}

fn big_factors(rows: usize, cols: usize, a: Vec<BigInt>) -> Vec<BigUint> {
    match (Work { rows, cols, a }).diagonalize() {
        Ok(f) => f,
        Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
    }
}
