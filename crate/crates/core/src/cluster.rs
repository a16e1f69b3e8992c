//! Model-independent description of a finite-type cluster algebra: the
//! ordered variables, the compatibility degrees and the exchange relations.

use std::fmt;

use num_bigint::BigInt;

use crate::exact::IntVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrozenMode {
    /// Frozen variables indexed by polygon edges (or edge pairs).
    Special,
    /// No frozen variables.
    None,
}

impl fmt::Display for FrozenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrozenMode::Special => write!(f, "special"),
            FrozenMode::None => write!(f, "none"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Cluster,
    Frozen,
}

/// An exchange relation `x * x' = m1 + m2` with exponent vectors of the two
/// right-hand monomials over all variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeRelation {
    pub exchanged: (usize, usize),
    pub terms: [Vec<u32>; 2],
    /// Shape of the exchange quadrilateral, when the relation comes from a
    /// polygon model.
    pub quad_type: Option<u8>,
    /// Indices into `terms` of the primitive terms: empty for a non-primitive
    /// relation, two entries only in rank one.
    pub primitive_terms: Vec<usize>,
}

impl ExchangeRelation {
    pub fn is_primitive(&self) -> bool {
        !self.primitive_terms.is_empty()
    }

    /// Exponent vector of `x * x'`.
    pub fn exchanged_monomial(&self, dim: usize) -> Vec<u32> {
        let mut m = vec![0; dim];
        m[self.exchanged.0] += 1;
        m[self.exchanged.1] += 1;
        m
    }

    pub fn involves(&self, v: usize) -> bool {
        self.exchanged.0 == v || self.exchanged.1 == v
    }
}

/// A cluster algebra of finite type, described entirely by data on its
/// variables. Cluster variables occupy indices `0..n_cluster` and frozen
/// variables follow.
#[derive(Clone, Debug)]
pub struct ClusterData {
    pub labels: Vec<String>,
    pub n_cluster: usize,
    pub n_frozen: usize,
    /// `compat[a][b]` is the compatibility degree of cluster variables `a`
    /// and `b`.
    pub compat: Vec<Vec<u32>>,
    pub relations: Vec<ExchangeRelation>,
}

impl ClusterData {
    pub fn dim(&self) -> usize {
        self.n_cluster + self.n_frozen
    }

    pub fn kind(&self, v: usize) -> VarKind {
        if v < self.n_cluster {
            VarKind::Cluster
        } else {
            VarKind::Frozen
        }
    }

    /// Compatibility degree extended by zero to frozen variables.
    pub fn degree(&self, a: usize, b: usize) -> u32 {
        if a < self.n_cluster && b < self.n_cluster {
            self.compat[a][b]
        } else {
            0
        }
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.degree(a, b) == 0
    }

    pub fn primitive_relations(&self) -> impl Iterator<Item = &ExchangeRelation> {
        self.relations.iter().filter(|r| r.is_primitive())
    }

    /// `deg(x x') - deg(primitive term)` for every primitive term of every
    /// primitive relation.
    pub fn degree_vectors(&self) -> Vec<IntVec> {
        let dim = self.dim();
        self.primitive_relations()
            .flat_map(|r| {
                let lhs = r.exchanged_monomial(dim);
                r.primitive_terms
                    .iter()
                    .map(move |&t| {
                        lhs.iter()
                            .zip(&r.terms[t])
                            .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                            .collect::<IntVec>()
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Maximal sets of pairwise compatible cluster variables.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let n = self.n_cluster;
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| a != b && self.compat[a][b] == 0).collect())
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&adj, &mut Vec::new(), (0..n).collect(), Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&w| adj[u][w]).count())
        .expect("nonempty");
    let mut candidates = candidates;
    let mut excluded = excluded;
    let branch: Vec<usize> = candidates.iter().copied().filter(|&w| !adj[pivot][w]).collect();
    for v in branch {
        current.push(v);
        let next_c = candidates.iter().copied().filter(|&w| adj[v][w]).collect();
        let next_x = excluded.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, current, next_c, next_x, out);
        current.pop();
        candidates.retain(|&w| w != v);
        excluded.push(v);
    }
}
