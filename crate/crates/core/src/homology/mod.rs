//! Exact integer linear algebra and graded cohomology groups.

mod matrix;
mod snf;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub use matrix::IntegerMatrix;

use crate::complex::{sparse_product, StateComplex, Variant};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::poly::IntPolynomial;

/// Invariant factors `d1 | d2 | ... | dr` where `r` is the rank.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigUint> {
    snf::invariant_factors_big(m.rows(), m.cols(), m.entries())
}

/// Columns form a basis of the integer kernel `{v : M v = 0}`.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let echelon = matrix::column_echelon(m);
    echelon.transform.col_range(echelon.rank)
}

/// A finitely generated abelian group `Z^r + Z_{d1} + ... + Z_{dk}` in
/// invariant-factor form (`d1 | d2 | ...`, all `>= 2`).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Direct sum of `Z^free` with cyclic groups of the given orders, put in
    /// canonical form. Order `0` means `Z`, order `1` is trivial.
    pub fn from_cyclic(free: usize, orders: &[u64]) -> Result<Self> {
        let n = orders.len();
        let mut diag = IntegerMatrix::zeros(n, n);
        for (k, &d) in orders.iter().enumerate() {
            diag.set(k, k, d.into());
        }
        let factors = smith_normal_form(&diag);
        let rank = factors.len();
        Self::from_factors(free + (n - rank), &factors)
    }

    fn from_factors(free: usize, factors: &[BigUint]) -> Result<Self> {
        let torsion = factors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(AbelianGroup {
            free_rank: free,
            torsion,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> Result<AbelianGroup> {
        let orders: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
        Self::from_cyclic(self.free_rank + other.free_rank, &orders)
    }

    /// `A (x) B` for finitely generated groups.
    pub fn tensor(&self, other: &AbelianGroup) -> Result<AbelianGroup> {
        let mut orders = Vec::new();
        for &a in &self.torsion {
            orders.extend(core::iter::repeat_n(a, other.free_rank));
        }
        for &b in &other.torsion {
            orders.extend(core::iter::repeat_n(b, self.free_rank));
        }
        for &a in &self.torsion {
            for &b in &other.torsion {
                orders.push(num_integer::gcd(a, b));
            }
        }
        Self::from_cyclic(self.free_rank * other.free_rank, &orders)
    }

    /// `Tor(A, B)`: only torsion pairs contribute, `Tor(Z_a, Z_b) = Z_gcd(a,b)`.
    pub fn tor(&self, other: &AbelianGroup) -> Result<AbelianGroup> {
        let mut orders = Vec::new();
        for &a in &self.torsion {
            for &b in &other.torsion {
                orders.push(num_integer::gcd(a, b));
            }
        }
        Self::from_cyclic(0, &orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str(" ⊕ ") };
            first = false;
            r
        };
        if self.free_rank > 0 {
            sep(f)?;
            if self.free_rank == 1 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
        }
        for d in &self.torsion {
            sep(f)?;
            write!(f, "Z_{d}")?;
        }
        Ok(())
    }
}

/// `ker(d_out) / im(d_in)`.
///
/// The image of `d_in` is rewritten in coordinates of a kernel basis of
/// `d_out`; the Smith form of that coordinate matrix gives the torsion and
/// its rank the size of the image.
pub fn homology_group(d_out: &IntegerMatrix, d_in: &IntegerMatrix) -> Result<AbelianGroup> {
    let Some(product) = d_out.mul(d_in) else {
        return Err(Error::Dimension(format!(
            "outgoing map has {} columns, incoming map has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    };
    if !product.is_zero() {
        return Err(Error::ComplexIntegrity("d_out * d_in != 0".into()));
    }
    let echelon = matrix::column_echelon(d_out);
    let kernel_dim = d_out.cols() - echelon.rank;
    // V^{-1} d_in: the first `rank` rows vanish on the kernel.
    let coords = echelon
        .inverse
        .mul(d_in)
        .expect("square transform")
        .row_range(echelon.rank);
    let factors = smith_normal_form(&coords);
    AbelianGroup::from_factors(kernel_dim - factors.len(), &factors)
}

/// Groups indexed by internal degree `j`; trivial groups are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedAbelianGroup {
    parts: BTreeMap<usize, AbelianGroup>,
}

impl GradedAbelianGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, j: usize, group: AbelianGroup) {
        if group.is_zero() {
            self.parts.remove(&j);
        } else {
            self.parts.insert(j, group);
        }
    }

    pub fn get(&self, j: usize) -> AbelianGroup {
        self.parts.get(&j).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &AbelianGroup)> {
        self.parts.iter().map(|(&j, g)| (j, g))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Graded dimension `sum_j rank(M_j) q^j`; blind to torsion.
    pub fn qdim(&self) -> IntPolynomial {
        let mut coeffs = Vec::new();
        for (&j, g) in &self.parts {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, 0);
            }
            coeffs[j] += g.free_rank() as i64;
        }
        IntPolynomial::new(coeffs)
    }

    /// Degree shift `{l}`: every generator moves from degree `j` to `j + l`.
    pub fn shifted(&self, l: usize) -> Self {
        GradedAbelianGroup {
            parts: self.parts.iter().map(|(&j, g)| (j + l, g.clone())).collect(),
        }
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        // Highest degree first, e.g. "Z_2{2} ⊕ Z{1}".
        let mut first = true;
        for (j, g) in self.parts.iter().rev() {
            let mut summands: Vec<alloc::string::String> = Vec::new();
            match g.free_rank() {
                0 => {}
                1 => summands.push(format!("Z{{{j}}}")),
                r => summands.push(format!("Z^{r}{{{j}}}")),
            }
            summands.extend(g.torsion().iter().map(|d| format!("Z_{d}{{{j}}}")));
            for s in summands {
                if !first {
                    f.write_str(" ⊕ ")?;
                }
                first = false;
                f.write_str(&s)?;
            }
        }
        Ok(())
    }
}

/// Cohomology `H^{i,j}` of a bigraded complex; trivial groups are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedCohomology {
    degrees: BTreeMap<usize, GradedAbelianGroup>,
}

impl GradedCohomology {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize, j: usize, group: AbelianGroup) {
        let entry = self.degrees.entry(i).or_default();
        entry.insert(j, group);
        if entry.is_zero() {
            self.degrees.remove(&i);
        }
    }

    /// `H^i` as a graded group.
    pub fn degree(&self, i: usize) -> GradedAbelianGroup {
        self.degrees.get(&i).cloned().unwrap_or_default()
    }

    pub fn group(&self, i: usize, j: usize) -> AbelianGroup {
        self.degrees.get(&i).map(|g| g.get(j)).unwrap_or_default()
    }

    /// Nontrivial groups as `(i, j, group)`, sorted by `(i, j)`.
    pub fn groups(&self) -> Vec<(usize, usize, AbelianGroup)> {
        self.degrees
            .iter()
            .flat_map(|(&i, g)| g.iter().map(move |(j, a)| (i, j, a.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Highest `i` with `H^i != 0`.
    pub fn max_degree(&self) -> Option<usize> {
        self.degrees.keys().next_back().copied()
    }

    /// Shift every internal degree up by `l`.
    pub fn shifted(&self, l: usize) -> Self {
        GradedCohomology {
            degrees: self.degrees.iter().map(|(&i, g)| (i, g.shifted(l))).collect(),
        }
    }

    /// Keep only `H^i` with `i <= max_i`.
    pub fn truncated(&self, max_i: usize) -> Self {
        GradedCohomology {
            degrees: self.degrees.range(..=max_i).map(|(&i, g)| (i, g.clone())).collect(),
        }
    }

    /// `sum_i (-1)^i qdim H^i`.
    pub fn euler_polynomial(&self) -> IntPolynomial {
        self.degrees.iter().fold(IntPolynomial::zero(), |acc, (&i, g)| {
            if i % 2 == 0 {
                &acc + &g.qdim()
            } else {
                &acc - &g.qdim()
            }
        })
    }
}

impl fmt::Display for GradedCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return f.write_str("0");
        }
        for (k, (i, g)) in self.degrees.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "H^{i} = {g}")?;
        }
        Ok(())
    }
}

/// Cohomology of the `variant` complex of `graph`.
///
/// Uses the standard factor shortcut: with `d_in : C^{i-1} -> C^i` and
/// `d_out : C^i -> C^{i+1}`, the free rank of `H^i` is
/// `dim C^i - rank d_out - rank d_in` and its torsion is the non-unit
/// invariant factors of `d_in` (the kernel of `d_out` is saturated).
pub fn graded_cohomology(graph: &SignedGraph, variant: Variant) -> Result<GradedCohomology> {
    let complex = StateComplex::new(graph, variant)?;
    cohomology_of(&complex)
}

pub(crate) fn cohomology_of(complex: &StateComplex<'_>) -> Result<GradedCohomology> {
    let mut out = GradedCohomology::new();
    let top = complex.max_i();
    for j in 0..=complex.max_j() {
        let dims: Vec<usize> = (0..=top).map(|i| complex.rank(i, j)).collect();
        if dims.iter().all(|&d| d == 0) {
            continue;
        }
        // factors[i] = rank and torsion of d : C^{i,j} -> C^{i+1,j}
        let mut factors: Vec<(usize, Vec<BigUint>)> = Vec::with_capacity(top + 1);
        let mut previous: Option<Vec<(usize, usize, i64)>> = None;
        for i in 0..=top {
            let (rows, cols, entries) = complex.differential_entries(i, j);
            if let Some(prev) = &previous {
                if !sparse_product(&entries, prev).is_empty() {
                    return Err(Error::ComplexIntegrity(format!(
                        "{} complex: d^{} d^{} != 0 at j = {j}",
                        complex.variant(),
                        i,
                        i - 1
                    )));
                }
            }
            factors.push(snf::rank_and_torsion(rows, cols, &entries));
            previous = Some(entries);
        }
        for i in 0..=top {
            let rank_out = factors[i].0;
            let (rank_in, torsion) = if i == 0 {
                (0, &[][..])
            } else {
                (factors[i - 1].0, &factors[i - 1].1[..])
            };
            let free = dims[i] - rank_out - rank_in;
            out.insert(i, j, AbelianGroup::from_factors(free, torsion)?);
        }
    }
    Ok(out)
}

/// Cohomology computed bidegree by bidegree through [`homology_group`];
/// slower than [`graded_cohomology`] and kept as an independent route.
pub fn graded_cohomology_by_kernels(graph: &SignedGraph, variant: Variant) -> Result<GradedCohomology> {
    let complex = StateComplex::new(graph, variant)?;
    let mut out = GradedCohomology::new();
    for j in 0..=complex.max_j() {
        for i in 0..=complex.max_i() {
            let n = complex.rank(i, j);
            if n == 0 {
                continue;
            }
            let d_out = complex.differential(i, j).to_integer_matrix();
            let d_in = if i == 0 {
                IntegerMatrix::zeros(n, 0)
            } else {
                complex.differential(i - 1, j).to_integer_matrix()
            };
            out.insert(i, j, homology_group(&d_out, &d_in)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn factors_u64(m: &IntegerMatrix) -> Vec<u64> {
        smith_normal_form(m).iter().map(|x| x.to_u64().unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(factors_u64(&IntegerMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(factors_u64(&IntegerMatrix::from_rows(2, 2, &[[2, 0], [0, 0]])), vec![2]);
        assert_eq!(factors_u64(&IntegerMatrix::from_rows(2, 2, &[[0, 2], [3, 0]])), vec![1, 6]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&IntegerMatrix::zeros(2, 3));
        assert_eq!(k.cols(), 3);
        assert_eq!(smith_normal_form(&k).len(), 3);

        let k = kernel_basis(&IntegerMatrix::from_rows(1, 2, &[[1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(&v[0] + &v[1], BigInt::zero());
        assert!(v[0] == BigInt::one() || v[0] == -BigInt::one());

        let k = kernel_basis(&IntegerMatrix::from_rows(2, 1, &[[1], [1]]));
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn homology_of_zero_maps_is_free() {
        let d_out = IntegerMatrix::zeros(0, 4);
        let d_in = IntegerMatrix::zeros(4, 0);
        assert_eq!(homology_group(&d_out, &d_in).unwrap(), AbelianGroup::free(4));
    }

    #[test]
    fn homology_detects_torsion_and_bad_complexes() {
        // Z --2--> Z --0--> 0
        let d_in = IntegerMatrix::from_rows(1, 1, &[[2]]);
        let d_out = IntegerMatrix::zeros(0, 1);
        assert_eq!(homology_group(&d_out, &d_in).unwrap().torsion(), &[2]);

        let d_out = IntegerMatrix::from_rows(1, 1, &[[1]]);
        assert!(matches!(
            homology_group(&d_out, &d_in),
            Err(Error::ComplexIntegrity(_))
        ));
        let wrong = IntegerMatrix::zeros(1, 3);
        assert!(matches!(homology_group(&wrong, &d_in), Err(Error::Dimension(_))));
    }

    #[test]
    fn cyclic_canonical_form() {
        let g = AbelianGroup::from_cyclic(1, &[6, 4, 1, 0]).unwrap();
        assert_eq!(g.free_rank(), 2);
        assert_eq!(g.torsion(), &[2, 12]);
        assert_eq!(format!("{g}"), "Z^2 ⊕ Z_2 ⊕ Z_12");
    }

    #[test]
    fn tensor_and_tor() {
        let z2 = AbelianGroup::from_cyclic(0, &[2]).unwrap();
        let z = AbelianGroup::free(1);
        assert_eq!(z2.tensor(&z2).unwrap(), z2);
        assert_eq!(z2.tor(&z2).unwrap(), z2);
        assert_eq!(z.tensor(&z2).unwrap(), z2);
        assert!(z.tor(&z2).unwrap().is_zero());
        let z4 = AbelianGroup::from_cyclic(0, &[4]).unwrap();
        let z6 = AbelianGroup::from_cyclic(0, &[6]).unwrap();
        assert_eq!(z4.tor(&z6).unwrap(), z2);
    }

    #[test]
    fn graded_display() {
        let mut h = GradedCohomology::new();
        h.insert(1, 2, AbelianGroup::from_cyclic(0, &[2]).unwrap());
        h.insert(1, 1, AbelianGroup::free(1));
        assert_eq!(format!("{h}"), "H^1 = Z_2{2} ⊕ Z{1}");
        h.insert(1, 1, AbelianGroup::zero());
        h.insert(1, 2, AbelianGroup::zero());
        assert!(h.is_zero());
    }
}
