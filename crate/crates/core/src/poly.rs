//! Signed chromatic polynomials.
//!
//! The number of proper signed colorings is a polynomial in `lambda` on odd
//! `lambda` and a (generally different) polynomial on even `lambda`; a
//! [`ParityPolynomial`] keeps both branches.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::complex::{StateComplex, Variant};
use crate::error::Result;
use crate::graph::{Edge, EdgeSubset, SignedGraph};
use crate::homology::cohomology_of;

/// Integer polynomial, coefficients in ascending powers, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: i64, power: usize) -> Self {
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = coeff;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> i64 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    /// `p(inner)`.
    pub fn compose(&self, inner: &IntPolynomial) -> IntPolynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, &c| &(&acc * inner) + &Self::constant(c))
    }

    /// `p(1 + q)`, the substitution linking colorings to graded ranks.
    pub fn at_one_plus(&self) -> IntPolynomial {
        self.compose(&IntPolynomial::new(vec![1, 1]))
    }

    /// First power where the two polynomials differ.
    pub fn first_difference(&self, other: &IntPolynomial) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// Renders with a named variable, highest power first.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayPoly { poly: self, var }
    }
}

struct DisplayPoly<'a> {
    poly: &'a IntPolynomial,
    var: &'a str,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.poly.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "{}", self.var)?,
                (1, m) => write!(f, "{m}{}", self.var)?,
                (k, 1) => write!(f, "{}^{k}", self.var)?,
                (k, m) => write!(f, "{m}{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Signed chromatic polynomial: one polynomial valid for odd `lambda`
/// (the chromatic branch) and one for even `lambda` (the balanced branch).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParityPolynomial {
    pub odd: IntPolynomial,
    pub even: IntPolynomial,
}

impl ParityPolynomial {
    pub fn new(odd: IntPolynomial, even: IntPolynomial) -> Self {
        ParityPolynomial { odd, even }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn eval(&self, lambda: i64) -> i128 {
        if lambda.rem_euclid(2) == 1 {
            self.odd.eval(lambda)
        } else {
            self.even.eval(lambda)
        }
    }

    pub fn branch(&self, variant: Variant) -> Option<&IntPolynomial> {
        match variant {
            Variant::Chromatic => Some(&self.odd),
            Variant::Balanced => Some(&self.even),
            Variant::Unsigned => None,
        }
    }
}

impl Add for &ParityPolynomial {
    type Output = ParityPolynomial;
    fn add(self, rhs: &ParityPolynomial) -> ParityPolynomial {
        ParityPolynomial::new(&self.odd + &rhs.odd, &self.even + &rhs.even)
    }
}

impl Sub for &ParityPolynomial {
    type Output = ParityPolynomial;
    fn sub(self, rhs: &ParityPolynomial) -> ParityPolynomial {
        ParityPolynomial::new(&self.odd - &rhs.odd, &self.even - &rhs.even)
    }
}

impl Mul for &ParityPolynomial {
    type Output = ParityPolynomial;
    fn mul(self, rhs: &ParityPolynomial) -> ParityPolynomial {
        ParityPolynomial::new(&self.odd * &rhs.odd, &self.even * &rhs.even)
    }
}

impl fmt::Display for ParityPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "odd: {}; even: {}",
            self.odd.display_with("λ"),
            self.even.display_with("λ")
        )
    }
}

type MemoKey = (usize, Vec<(usize, usize, bool)>);

fn memo_key(g: &SignedGraph) -> MemoKey {
    let mut edges: Vec<(usize, usize, bool)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            (a, b, e.sign.is_positive())
        })
        .collect();
    edges.sort_unstable();
    (g.vertex_count(), edges)
}

/// Deletion-contraction on a positive non-loop edge, switching an endpoint
/// of a negative edge first when no positive one is left.
///
/// Base cases: a positive loop gives zero; a graph with only negative
/// loops on `n` of its `m` vertices gives `lambda^(m-n) (lambda-1)^n` on
/// odd `lambda` and `lambda^m` on even `lambda`.
pub fn chromatic_dc(g: &SignedGraph) -> ParityPolynomial {
    let mut memo = BTreeMap::new();
    dc(g, &mut memo)
}

fn dc(g: &SignedGraph, memo: &mut BTreeMap<MemoKey, ParityPolynomial>) -> ParityPolynomial {
    let edges = g.edges();
    if edges.iter().any(|e| e.is_loop() && e.sign.is_positive()) {
        return ParityPolynomial::zero();
    }
    let key = memo_key(g);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }

    let result = if let Some(e) = edges.iter().position(|e| !e.is_loop() && e.sign.is_positive()) {
        let deleted = g.delete_edge(e).expect("edge index in range");
        let contracted = g.contract_edge(e).expect("non-loop edge");
        &dc(&deleted, memo) - &dc(&contracted, memo)
    } else if let Some(e) = edges.iter().find(|e| !e.is_loop()) {
        let switched = g.vertex_switch(e.tail).expect("vertex in range");
        dc(&switched, memo)
    } else {
        let m = g.vertex_count();
        let mut looped = vec![false; m];
        for Edge { tail, .. } in edges {
            looped[*tail] = true;
        }
        let n = looped.iter().filter(|&&b| b).count();
        let lambda = IntPolynomial::var();
        let lambda_minus_one = IntPolynomial::new(vec![-1, 1]);
        ParityPolynomial::new(
            &lambda.pow(m - n) * &lambda_minus_one.pow(n),
            lambda.pow(m),
        )
    };
    memo.insert(key, result.clone());
    result
}

/// `Q` polynomial: colorings with `k(u) = sign(e) k(w)` on every edge.
/// Odd branch `lambda^b`; even branch `lambda^b` if balanced, else zero.
pub fn q_polynomial(g: &SignedGraph) -> Result<ParityPolynomial> {
    g.check_subset_size()?;
    let c = g.components_unchecked(g.full_subset());
    Ok(q_from_counts(c.balanced_count, c.is_balanced()))
}

fn q_from_counts(balanced: usize, all_balanced: bool) -> ParityPolynomial {
    let odd = IntPolynomial::monomial(1, balanced);
    let even = if all_balanced {
        odd.clone()
    } else {
        IntPolynomial::zero()
    };
    ParityPolynomial::new(odd, even)
}

/// Inclusion-exclusion: `sum_s (-1)^|s| Q([G : s])`.
pub fn chromatic_statesum(g: &SignedGraph) -> Result<ParityPolynomial> {
    g.check_subset_size()?;
    let mut odd = vec![0i64; g.vertex_count() + 1];
    let mut even = vec![0i64; g.vertex_count() + 1];
    for mask in 0..1u64 << g.edge_count() {
        let s = EdgeSubset(mask);
        let c = g.components_unchecked(s);
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        odd[c.balanced_count] += sign;
        if c.is_balanced() {
            even[c.balanced_count] += sign;
        }
    }
    Ok(ParityPolynomial::new(
        IntPolynomial::new(odd),
        IntPolynomial::new(even),
    ))
}

/// Chromatic polynomial of the underlying unsigned graph.
pub fn unsigned_chromatic(g: &SignedGraph) -> IntPolynomial {
    chromatic_dc(&g.all_positive()).odd
}

/// The chromatic polynomial matching `variant` (odd branch for chromatic,
/// even branch for balanced, the unsigned polynomial of the underlying graph
/// for unsigned), evaluated at `lambda = 1 + q`.
pub fn chromatic_at_one_plus(g: &SignedGraph, variant: Variant) -> IntPolynomial {
    match chromatic_dc(g).branch(variant) {
        Some(branch) => branch.at_one_plus(),
        None => unsigned_chromatic(g).at_one_plus(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerSource {
    Chain,
    Cohomology,
}

/// `sum_i (-1)^i qdim C^i` or `sum_i (-1)^i qdim H^i` as a polynomial in `q`.
pub fn euler_polynomial(g: &SignedGraph, variant: Variant, source: EulerSource) -> Result<IntPolynomial> {
    let complex = StateComplex::new(g, variant)?;
    match source {
        EulerSource::Chain => {
            let mut coeffs = vec![0i64; complex.max_j() + 1];
            for i in 0..=complex.max_i() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for (j, c) in coeffs.iter_mut().enumerate() {
                    *c += sign * complex.rank(i, j) as i64;
                }
            }
            Ok(IntPolynomial::new(coeffs))
        }
        EulerSource::Cohomology => Ok(cohomology_of(&complex)?.euler_polynomial()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::Sign;
    use alloc::format;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(p(&[0, 0, 1]).at_one_plus(), p(&[1, 2, 1]));
        assert_eq!(p(&[-1, 3, -3, 1]).eval(3), 8);
        assert_eq!(format!("{}", p(&[-1, 3, -3, 1]).display_with("λ")), "λ^3 - 3λ^2 + 3λ - 1");
        assert_eq!(format!("{}", p(&[0, -1])), "-x");
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
    }

    #[test]
    fn sp3_by_deletion_contraction() {
        let poly = chromatic_dc(&sp3());
        assert_eq!(poly.odd, p(&[-1, 3, -3, 1]));
        assert_eq!(poly.even, p(&[0, 3, -3, 1]));
    }

    #[test]
    fn positive_triangle() {
        let poly = chromatic_dc(&positive_cycle(3));
        assert_eq!(poly.odd, p(&[0, 2, -3, 1]));
        assert_eq!(poly.even, p(&[0, 2, -3, 1]));
    }

    #[test]
    fn negative_loop_graphs() {
        for m in 1..4 {
            for n in 0..=m {
                let poly = chromatic_dc(&sn(m, n));
                let lambda = IntPolynomial::var();
                let odd = &lambda.pow(m - n) * &p(&[-1, 1]).pow(n);
                assert_eq!(poly.odd, odd);
                assert_eq!(poly.even, lambda.pow(m));
                assert_eq!(chromatic_statesum(&sn(m, n)).unwrap(), poly);
            }
        }
    }

    #[test]
    fn statesum_examples() {
        assert_eq!(chromatic_statesum(&sp3()).unwrap(), chromatic_dc(&sp3()));
        let e = chromatic_statesum(&SignedGraph::edgeless(4)).unwrap();
        assert_eq!(e.odd, IntPolynomial::monomial(1, 4));
        assert_eq!(e.even, IntPolynomial::monomial(1, 4));
        let sp2 = chromatic_statesum(&sp2()).unwrap();
        assert_eq!(sp2.odd, p(&[1, -2, 1]));
        assert_eq!(sp2.even, p(&[0, -2, 1]));
    }

    #[test]
    fn positive_loop_kills() {
        let g = SignedGraph::new(2, [(0, 1, Sign::Negative), (1, 1, Sign::Positive)]).unwrap();
        assert_eq!(chromatic_dc(&g), ParityPolynomial::zero());
        assert_eq!(chromatic_statesum(&g).unwrap(), ParityPolynomial::zero());
    }

    #[test]
    fn q_examples() {
        let q = q_polynomial(&two_component_example()).unwrap();
        assert_eq!(q.odd, IntPolynomial::var());
        assert!(q.even.is_zero());
        let q = q_polynomial(&path(&[Sign::Negative, Sign::Positive])).unwrap();
        assert_eq!(q.odd, IntPolynomial::var());
        assert_eq!(q.even, IntPolynomial::var());
        let q = q_polynomial(&sn(2, 2)).unwrap();
        assert_eq!(q.odd, IntPolynomial::one());
        assert!(q.even.is_zero());
    }

    #[test]
    fn euler_examples() {
        let g = sp3();
        for source in [EulerSource::Chain, EulerSource::Cohomology] {
            assert_eq!(euler_polynomial(&g, Variant::Chromatic, source).unwrap(), p(&[0, 0, 0, 1]));
            assert_eq!(euler_polynomial(&g, Variant::Balanced, source).unwrap(), p(&[1, 0, 0, 1]));
            assert_eq!(euler_polynomial(&sp2(), Variant::Balanced, source).unwrap(), p(&[-1, 0, 1]));
        }
    }
}
