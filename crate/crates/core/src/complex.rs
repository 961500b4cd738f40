//! Enhanced-state cochain complexes.
//!
//! Three variants share one construction. A state is an edge subset `s`
//! plus a label in `{1, x}` for each component of `[G : s]`; the bidegree is
//! `(|s|, number of x labels)`. The differential adds one absent edge at a
//! time with sign `(-1)^n(e)`, multiplying labels when two components merge
//! (`x * x = 0`). The variants differ only in which states exist:
//!
//! * `Unsigned`: every state (signs ignored).
//! * `Chromatic`: unbalanced components must carry `1`.
//! * `Balanced`: `[G : s]` itself must be balanced.
//!
//! Restricted differentials are computed directly on the restricted bases:
//! targets that leave the variant's basis are dropped, which is the
//! projection of the unsigned differential.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, ComponentStructure, EdgeSubset, SignedGraph};
use crate::homology::IntegerMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Unsigned,
    Chromatic,
    Balanced,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Unsigned, Variant::Chromatic, Variant::Balanced];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Unsigned => "unsigned",
            Variant::Chromatic => "chromatic",
            Variant::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        match s {
            "unsigned" => Ok(Variant::Unsigned),
            "chromatic" => Ok(Variant::Chromatic),
            "balanced" => Ok(Variant::Balanced),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

/// Generator of `M = Z 1 + Z x`; `One` has degree 0 and `X` degree 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    One,
    X,
}

impl Label {
    /// Multiplication in `M`; `None` is the zero outcome of `x * x`.
    pub fn mul(self, other: Label) -> Option<Label> {
        match (self, other) {
            (Label::One, Label::One) => Some(Label::One),
            (Label::X, Label::X) => None,
            _ => Some(Label::X),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Label::One => '1',
            Label::X => 'x',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnhancedState {
    pub subset: EdgeSubset,
    /// One label per component of `[G : subset]`, in representative order.
    pub labels: Vec<Label>,
}

impl EnhancedState {
    pub fn i(&self) -> usize {
        self.subset.len()
    }

    pub fn j(&self) -> usize {
        self.labels.iter().filter(|&&l| l == Label::X).count()
    }

    /// Bit `c` is set when component `c` carries `x`.
    pub fn label_mask(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Label::X)
            .fold(0, |m, (c, _)| m | (1u64 << c))
    }

    /// Per-vertex rendering such as `(100, x1x)`: edge membership bits in
    /// edge order, then the label of each vertex's component.
    pub fn render(&self, graph: &SignedGraph) -> String {
        let structure = graph.components_unchecked(self.subset);
        let bits: String = (0..graph.edge_count())
            .map(|e| if self.subset.contains(e) { '1' } else { '0' })
            .collect();
        let labels: String = (0..graph.vertex_count())
            .map(|v| self.labels[structure.component_of[v]].symbol())
            .collect();
        format!("({bits}, {labels})")
    }
}

/// Differential `C^{i,j} -> C^{i+1,j}` as a sparse matrix over the
/// deterministic bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub i: usize,
    pub j: usize,
    /// Basis of `C^{i,j}` (columns).
    pub source: Vec<EnhancedState>,
    /// Basis of `C^{i+1,j}` (rows).
    pub target: Vec<EnhancedState>,
    /// `(row, col, value)`, sorted by column then row.
    pub entries: Vec<(usize, usize, i64)>,
}

impl DifferentialMatrix {
    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn to_integer_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows(), self.cols());
        for &(r, c, v) in &self.entries {
            m.set(r, c, v.into());
        }
        m
    }
}

/// Counting sort of triplets by column: entries of column `c` are
/// `flat[ptr[c]..ptr[c + 1]]` as `(row, value)`.
fn group_by_column(triplets: &[(usize, usize, i64)], width: usize) -> (Vec<usize>, Vec<(usize, i64)>) {
    let mut ptr = alloc::vec![0usize; width + 1];
    for &(_, c, _) in triplets {
        ptr[c + 1] += 1;
    }
    for c in 0..width {
        ptr[c + 1] += ptr[c];
    }
    let mut next = ptr.clone();
    let mut flat = alloc::vec![(0usize, 0i64); triplets.len()];
    for &(r, c, v) in triplets {
        flat[next[c]] = (r, v);
        next[c] += 1;
    }
    (ptr, flat)
}

/// Product of two sparse matrices given as triplets; zero entries removed.
/// The result is sorted by column, then row.
pub(crate) fn sparse_product(
    left: &[(usize, usize, i64)],
    right: &[(usize, usize, i64)],
) -> Vec<(usize, usize, i64)> {
    let inner = left.iter().map(|&(_, c, _)| c + 1).max().unwrap_or(0);
    let height = left.iter().map(|&(r, _, _)| r + 1).max().unwrap_or(0);
    let width = right.iter().map(|&(_, c, _)| c + 1).max().unwrap_or(0);
    // left grouped by its column, to meet right's rows; right by column
    let (left_ptr, left_flat) = group_by_column(left, inner);
    let (right_ptr, right_flat) = group_by_column(right, width);
    let mut acc = alloc::vec![0i64; height];
    let mut touched: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for c in 0..width {
        for &(k, v) in &right_flat[right_ptr[c]..right_ptr[c + 1]] {
            if k >= inner {
                continue;
            }
            for &(r, w) in &left_flat[left_ptr[k]..left_ptr[k + 1]] {
                if acc[r] == 0 {
                    touched.push(r);
                }
                acc[r] += w * v;
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for r in touched.drain(..) {
            if acc[r] != 0 {
                out.push((r, c, acc[r]));
            }
            acc[r] = 0;
        }
    }
    out
}

/// Cached data for computing bases and differentials of one graph and
/// variant.
pub struct StateComplex<'g> {
    graph: &'g SignedGraph,
    variant: Variant,
    structures: Vec<ComponentStructure>,
}

impl<'g> StateComplex<'g> {
    pub fn new(graph: &'g SignedGraph, variant: Variant) -> Result<Self> {
        graph.check_subset_size()?;
        let m = graph.edge_count();
        let structures = (0..1u64 << m)
            .map(|mask| graph.components_unchecked(EdgeSubset(mask)))
            .collect();
        Ok(StateComplex {
            graph,
            variant,
            structures,
        })
    }

    pub fn graph(&self) -> &SignedGraph {
        self.graph
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn structure(&self, s: EdgeSubset) -> &ComponentStructure {
        &self.structures[s.0 as usize]
    }

    /// Highest cohomological degree with a possibly nonzero group.
    pub fn max_i(&self) -> usize {
        self.graph.edge_count()
    }

    /// Highest internal degree with a possibly nonzero group.
    pub fn max_j(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Mask of components that may carry `x` in a state on `s`; `None` when
    /// the subset carries no states at all.
    fn free_components(&self, s: EdgeSubset) -> Option<u64> {
        let st = self.structure(s);
        let all = st.components.len();
        match self.variant {
            Variant::Unsigned => Some(low_bits(all)),
            Variant::Chromatic => Some(
                st.components
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.balanced)
                    .fold(0, |m, (k, _)| m | (1u64 << k)),
            ),
            Variant::Balanced => st.is_balanced().then(|| low_bits(all)),
        }
    }

    /// Label masks of states on `s` with exactly `j` x labels, in
    /// lexicographic order of label tuples (component 0 most significant,
    /// `1 < x`).
    fn label_masks(&self, s: EdgeSubset, j: usize) -> Vec<u64> {
        let mut out = Vec::new();
        if let Some(free) = self.free_components(s) {
            push_lex_masks(free, j, 0, &mut out);
        }
        out
    }

    fn state(&self, s: EdgeSubset, mask: u64) -> EnhancedState {
        let k = self.structure(s).components.len();
        EnhancedState {
            subset: s,
            labels: (0..k)
                .map(|c| {
                    if mask & (1 << c) != 0 {
                        Label::X
                    } else {
                        Label::One
                    }
                })
                .collect(),
        }
    }

    fn basis_keys(&self, i: usize, j: usize) -> Vec<(EdgeSubset, u64)> {
        let m = self.graph.edge_count();
        if i > m {
            return Vec::new();
        }
        subsets_of_size(m, i)
            .flat_map(|s| self.label_masks(s, j).into_iter().map(move |mask| (s, mask)))
            .collect()
    }

    pub fn basis(&self, i: usize, j: usize) -> Vec<EnhancedState> {
        self.basis_keys(i, j)
            .into_iter()
            .map(|(s, mask)| self.state(s, mask))
            .collect()
    }

    pub fn rank(&self, i: usize, j: usize) -> usize {
        let m = self.graph.edge_count();
        if i > m {
            return 0;
        }
        subsets_of_size(m, i)
            .filter_map(|s| self.free_components(s))
            .map(|free| binomial(free.count_ones() as usize, j))
            .sum()
    }

    /// Image of one basis state under the differential, as
    /// `(target subset, target label mask, coefficient)` terms.
    fn apply_into(&self, s: EdgeSubset, mask: u64, out: &mut Vec<(EdgeSubset, u64, i64)>) {
        out.clear();
        let from = self.structure(s);
        for e in 0..self.graph.edge_count() {
            if s.contains(e) {
                continue;
            }
            let t = s.with(e);
            let to = self.structure(t);
            let Some(target_mask) = push_labels(from, to, mask) else {
                continue;
            };
            let keep = match self.variant {
                Variant::Unsigned => true,
                Variant::Chromatic => to
                    .components
                    .iter()
                    .enumerate()
                    .all(|(c, comp)| comp.balanced || target_mask & (1 << c) == 0),
                Variant::Balanced => to.is_balanced(),
            };
            if keep {
                let sign = if s.count_before(e) % 2 == 0 { 1 } else { -1 };
                out.push((t, target_mask, sign));
            }
        }
    }

    pub fn differential(&self, i: usize, j: usize) -> DifferentialMatrix {
        let (_, _, entries) = self.differential_entries(i, j);
        DifferentialMatrix {
            i,
            j,
            source: self.basis(i, j),
            target: self.basis(i + 1, j),
            entries,
        }
    }

    /// `(rows, cols, triplets)` of `d : C^{i,j} -> C^{i+1,j}`, triplets
    /// sorted by column then row.
    pub(crate) fn differential_entries(&self, i: usize, j: usize) -> (usize, usize, Vec<(usize, usize, i64)>) {
        let m = self.graph.edge_count();
        let sources = self.basis_keys(i, j);
        // Row offset of each target subset, indexed by subset mask.
        let mut offsets = alloc::vec![usize::MAX; if i < m { 1usize << m } else { 0 }];
        let mut rows = 0;
        if i < m {
            for t in subsets_of_size(m, i + 1) {
                if let Some(free) = self.free_components(t) {
                    offsets[t.0 as usize] = rows;
                    rows += binomial(free.count_ones() as usize, j);
                }
            }
        }
        let mut entries = Vec::new();
        let mut image = Vec::new();
        for (col, &(s, mask)) in sources.iter().enumerate() {
            let start = entries.len();
            self.apply_into(s, mask, &mut image);
            for &(t, tm, v) in &image {
                let offset = offsets[t.0 as usize];
                let free = self
                    .free_components(t)
                    .filter(|_| offset != usize::MAX)
                    .expect("differential target outside the variant basis");
                entries.push((offset + lex_rank(free, tm, j), col, v));
            }
            entries[start..].sort_unstable();
        }
        (rows, sources.len(), entries)
    }
}

/// Appends, in lexicographic order of label tuples (`1 < x`, lowest
/// component most significant), every mask inside `free` with `j` bits.
fn push_lex_masks(free: u64, j: usize, prefix: u64, out: &mut Vec<u64>) {
    if j == 0 {
        out.push(prefix);
        return;
    }
    let left = free.count_ones() as usize;
    if left < j {
        return;
    }
    let low = free & free.wrapping_neg();
    let rest = free & !low;
    // `1` on the lowest free component sorts first.
    push_lex_masks(rest, j, prefix, out);
    push_lex_masks(rest, j - 1, prefix | low, out);
}

/// Position of `mask` in the order produced by [`push_lex_masks`].
fn lex_rank(free: u64, mask: u64, j: usize) -> usize {
    let mut rank = 0;
    let mut need = j;
    let mut left = free.count_ones() as usize;
    let mut rest = free;
    while rest != 0 && need > 0 {
        let low = rest & rest.wrapping_neg();
        rest &= !low;
        left -= 1;
        if mask & low != 0 {
            rank += binomial(left, need);
            need -= 1;
        }
    }
    rank
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Carries a label mask from `[G : s]` to a coarser partition `[G : t]`
/// (each `t` component is a union of `s` components). Two `x` labels
/// landing in one component multiply to zero, reported as `None`.
fn push_labels(from: &ComponentStructure, to: &ComponentStructure, mask: u64) -> Option<u64> {
    let mut out = 0u64;
    for (c, comp) in from.components.iter().enumerate() {
        if mask & (1 << c) == 0 {
            continue;
        }
        let bit = 1u64 << to.component_of[comp.representative];
        if out & bit != 0 {
            return None;
        }
        out |= bit;
    }
    Some(out)
}

/// Basis of `C^{i,j}` in deterministic order: subsets ascending as
/// bitmasks, then label tuples lexicographically with `1 < x`.
pub fn enumerate_basis(
    graph: &SignedGraph,
    variant: Variant,
    i: usize,
    j: usize,
) -> Result<Vec<EnhancedState>> {
    Ok(StateComplex::new(graph, variant)?.basis(i, j))
}

pub fn differential_matrix(
    graph: &SignedGraph,
    variant: Variant,
    i: usize,
    j: usize,
) -> Result<DifferentialMatrix> {
    Ok(StateComplex::new(graph, variant)?.differential(i, j))
}

/// Per-bidegree summary of the splitting `C^{i,j}(G) = C^{i,j}(G-e) + C^{i-1,j}(G/e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeBlock {
    pub i: usize,
    pub j: usize,
    pub total_rank: usize,
    pub deletion_rank: usize,
    pub contraction_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub variant: Variant,
    pub blocks: Vec<ConeBlock>,
    /// The state bijection holds in every bidegree.
    pub bijection: bool,
    /// The differential is `[[d_del, 0], [m, -d_con]]` under the bijection.
    pub block_triangular: bool,
    /// `m` commutes with the differentials of the deletion and contraction.
    pub chain_map: bool,
    /// First discrepancy found, if any.
    pub failure: Option<String>,
}

impl ConeReport {
    pub fn holds(&self) -> bool {
        self.bijection && self.block_triangular && self.chain_map
    }
}

/// Where a state of `G` goes under the splitting.
#[derive(Clone, Copy)]
enum Part {
    Deletion(usize),
    Contraction(usize),
}

/// Checks that the complex of `graph` is the mapping cone of the map
/// `C(G-e) -> C(G/e)` induced by adding `e`. The edge must be a positive,
/// non-loop edge placed first in the edge order.
pub fn cone_decomposition(graph: &SignedGraph, e: usize, variant: Variant) -> Result<ConeReport> {
    let edge = graph.edge(e)?;
    if e != 0 {
        return Err(Error::Precondition(format!(
            "cone edge must be the first edge, got index {e}"
        )));
    }
    if !edge.sign.is_positive() {
        return Err(Error::Precondition("cone edge must be positive".into()));
    }
    if edge.is_loop() {
        return Err(Error::ContractLoop(e));
    }
    let deleted = graph.delete_edge(e)?;
    let contracted = graph.contract_edge(e)?;
    let whole = StateComplex::new(graph, variant)?;
    let del = StateComplex::new(&deleted, variant)?;
    let con = StateComplex::new(&contracted, variant)?;

    let (keep, gone) = edge.endpoints();
    let rename = |v: usize| {
        if v < gone {
            v
        } else if v == gone {
            keep
        } else {
            v - 1
        }
    };

    let mut report = ConeReport {
        variant,
        blocks: Vec::new(),
        bijection: true,
        block_triangular: true,
        chain_map: true,
        failure: None,
    };
    let fail = |report: &mut ConeReport, msg: String| {
        if report.failure.is_none() {
            report.failure = Some(msg);
        }
    };

    let index_of = |keys: Vec<(EdgeSubset, u64)>| -> BTreeMap<(EdgeSubset, u64), usize> {
        keys.into_iter().enumerate().map(|(k, key)| (key, k)).collect()
    };

    // Split coordinates of each basis state of G, per bidegree.
    let classify = |i: usize, j: usize| -> Option<Vec<Part>> {
        let del_index = index_of(del.basis_keys(i, j));
        let con_index = if i == 0 {
            BTreeMap::new()
        } else {
            index_of(con.basis_keys(i - 1, j))
        };
        let mut seen_del = alloc::vec![false; del_index.len()];
        let mut seen_con = alloc::vec![false; con_index.len()];
        let mut parts = Vec::new();
        for (s, mask) in whole.basis_keys(i, j) {
            let reduced = EdgeSubset(s.0 >> 1);
            if !s.contains(0) {
                // Same vertex set and edges: components and labels agree.
                let k = *del_index.get(&(reduced, mask))?;
                if core::mem::replace(&mut seen_del[k], true) {
                    return None;
                }
                parts.push(Part::Deletion(k));
            } else {
                let from = whole.structure(s);
                let to = con.structure(reduced);
                if from.components.len() != to.components.len() {
                    return None;
                }
                let mut cmask = 0u64;
                for (c, comp) in from.components.iter().enumerate() {
                    let image = to.component_of[rename(comp.representative)];
                    if comp.balanced != to.components[image].balanced {
                        return None;
                    }
                    if mask & (1 << c) != 0 {
                        cmask |= 1 << image;
                    }
                }
                let k = *con_index.get(&(reduced, cmask))?;
                if core::mem::replace(&mut seen_con[k], true) {
                    return None;
                }
                parts.push(Part::Contraction(k));
            }
        }
        if seen_del.iter().all(|&x| x) && seen_con.iter().all(|&x| x) {
            Some(parts)
        } else {
            None
        }
    };

    for j in 0..=whole.max_j() {
        let mut parts_by_i: Vec<Option<Vec<Part>>> = Vec::new();
        for i in 0..=whole.max_i() + 1 {
            let parts = classify(i, j);
            let total = whole.rank(i, j);
            let deletion_rank = del.rank(i, j);
            let contraction_rank = if i == 0 { 0 } else { con.rank(i - 1, j) };
            if total + deletion_rank + contraction_rank > 0 {
                report.blocks.push(ConeBlock {
                    i,
                    j,
                    total_rank: total,
                    deletion_rank,
                    contraction_rank,
                });
            }
            if parts.is_none() || total != deletion_rank + contraction_rank {
                report.bijection = false;
                fail(&mut report, format!("state bijection fails at (i, j) = ({i}, {j})"));
            }
            parts_by_i.push(parts);
        }
        if !report.bijection {
            continue;
        }

        for i in 0..=whole.max_i() {
            let (Some(src), Some(dst)) = (&parts_by_i[i], &parts_by_i[i + 1]) else {
                continue;
            };
            let d = whole.differential(i, j);

            let mut dd = Vec::new(); // deletion -> deletion
            let mut mm = Vec::new(); // deletion -> contraction
            let mut cc = Vec::new(); // contraction -> contraction
            for &(r, c, v) in &d.entries {
                match (src[c], dst[r]) {
                    (Part::Deletion(a), Part::Deletion(b)) => dd.push((b, a, v)),
                    (Part::Deletion(a), Part::Contraction(b)) => mm.push((b, a, v)),
                    (Part::Contraction(a), Part::Contraction(b)) => cc.push((b, a, -v)),
                    (Part::Contraction(_), Part::Deletion(_)) => {
                        report.block_triangular = false;
                        fail(
                            &mut report,
                            format!("nonzero upper-right block at (i, j) = ({i}, {j})"),
                        );
                    }
                }
            }
            dd.sort_unstable_by_key(|&(r, c, _)| (c, r));
            mm.sort_unstable_by_key(|&(r, c, _)| (c, r));
            cc.sort_unstable_by_key(|&(r, c, _)| (c, r));

            if dd != del.differential(i, j).entries {
                report.block_triangular = false;
                fail(&mut report, format!("deletion block differs at (i, j) = ({i}, {j})"));
            }
            if i >= 1 && cc != con.differential(i - 1, j).entries {
                report.block_triangular = false;
                fail(&mut report, format!("contraction block differs at (i, j) = ({i}, {j})"));
            }
            if i == 0 && !cc.is_empty() {
                report.block_triangular = false;
                fail(&mut report, format!("contraction block nonempty at (0, {j})"));
            }
            let expected = induced_map(&del, &con, (keep, gone), i, j);
            if mm != expected {
                report.block_triangular = false;
                fail(&mut report, format!("off-diagonal block differs at (i, j) = ({i}, {j})"));
            }
        }

        // Chain map: m d_del = d_con m.
        for i in 0..whole.max_i() {
            let m_i = induced_map(&del, &con, (keep, gone), i, j);
            let m_next = induced_map(&del, &con, (keep, gone), i + 1, j);
            let left = sparse_product(&m_next, &del.differential(i, j).entries);
            let right = sparse_product(&con.differential(i, j).entries, &m_i);
            if left != right {
                report.chain_map = false;
                fail(&mut report, format!("induced map is not a chain map at (i, j) = ({i}, {j})"));
            }
        }
    }
    Ok(report)
}

/// The map `C^{i,j}(G-e) -> C^{i,j}(G/e)`: identity on labels when `e`
/// closes a component, multiplication when it joins two, followed by the
/// variant's projection. Returned as `(row, col, value)` over the
/// deterministic bases, sorted by column then row.
fn induced_map(
    del: &StateComplex<'_>,
    con: &StateComplex<'_>,
    (keep, gone): (usize, usize),
    i: usize,
    j: usize,
) -> Vec<(usize, usize, i64)> {
    let rename = |v: usize| {
        if v < gone {
            v
        } else if v == gone {
            keep
        } else {
            v - 1
        }
    };
    let target: BTreeMap<(EdgeSubset, u64), usize> = con
        .basis_keys(i, j)
        .into_iter()
        .enumerate()
        .map(|(k, key)| (key, k))
        .collect();
    let mut out = Vec::new();
    for (col, (s, mask)) in del.basis_keys(i, j).into_iter().enumerate() {
        let from = del.structure(s);
        let to = con.structure(s);
        let mut cmask = 0u64;
        let mut killed = false;
        for (c, comp) in from.components.iter().enumerate() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let bit = 1u64 << to.component_of[rename(comp.representative)];
            if cmask & bit != 0 {
                killed = true;
                break;
            }
            cmask |= bit;
        }
        if killed {
            continue;
        }
        if let Some(&row) = target.get(&(s, cmask)) {
            out.push((row, col, 1));
        }
    }
    out
}
