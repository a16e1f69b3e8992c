//! Polygon models for the classical types.
//!
//! Type A_n lives on the (n+3)-gon, B_n and C_n on centrally symmetric
//! diagonal pairs of the (2n+2)-gon, and D_n on diagonal pairs and two-colored
//! diameters of the 2n-gon. Vertices are numbered `1..=N` counterclockwise.

mod relations;

use std::collections::HashMap;
use std::fmt;

use crate::cluster::{ClusterData, ExchangeRelation, FrozenMode, VarKind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classical {
    A,
    B,
    C,
    D,
}

impl Classical {
    pub fn letter(self) -> char {
        match self {
            Classical::A => 'A',
            Classical::B => 'B',
            Classical::C => 'C',
            Classical::D => 'D',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Plain,
    Blue,
    Red,
}

/// A polygon segment `[lo, hi]` with `1 <= lo < hi <= N`. Colors are used only
/// for diameters in type D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    pub lo: u32,
    pub hi: u32,
    pub color: Color,
}

impl Diagonal {
    pub fn new(a: u32, b: u32) -> Self {
        Diagonal {
            lo: a.min(b),
            hi: a.max(b),
            color: Color::Plain,
        }
    }

    pub fn colored(a: u32, b: u32, color: Color) -> Self {
        Diagonal {
            color,
            ..Diagonal::new(a, b)
        }
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.color {
            Color::Plain => "",
            Color::Blue => "b",
            Color::Red => "r",
        };
        write!(f, "[{},{}]{}", self.lo, self.hi, tag)
    }
}

/// Family, rank and frozen-variable choice of a polygon model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelSpec {
    family: Classical,
    rank: usize,
    frozen: FrozenMode,
}

impl ModelSpec {
    pub fn new(family: Classical, rank: usize, frozen: FrozenMode) -> Result<Self> {
        let min = match family {
            Classical::A => 1,
            Classical::B | Classical::C => 2,
            Classical::D => 4,
        };
        if rank < min {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(ModelSpec {
            family,
            rank,
            frozen,
        })
    }

    pub fn family(&self) -> Classical {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn frozen(&self) -> FrozenMode {
        self.frozen
    }

    pub fn with_frozen(&self, frozen: FrozenMode) -> ModelSpec {
        ModelSpec { frozen, ..*self }
    }

    /// Number of polygon vertices.
    pub fn polygon_size(&self) -> u32 {
        let n = self.rank as u32;
        match self.family {
            Classical::A => n + 3,
            Classical::B | Classical::C => 2 * n + 2,
            Classical::D => 2 * n,
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} ({} frozen)", self.family.letter(), self.rank, self.frozen)
    }
}

/// A polygon model together with its ordered variable table.
#[derive(Clone, Debug)]
pub struct PolygonModel {
    spec: ModelSpec,
    size: u32,
    variables: Vec<Diagonal>,
    n_cluster: usize,
    index: HashMap<Diagonal, usize>,
}

impl PolygonModel {
    pub fn new(spec: ModelSpec) -> Self {
        let size = spec.polygon_size();
        let mut model = PolygonModel {
            spec,
            size,
            variables: Vec::new(),
            n_cluster: 0,
            index: HashMap::new(),
        };
        let mut cluster: Vec<Diagonal> = Vec::new();
        for a in 1..=size {
            for b in a + 1..=size {
                let d = Diagonal::new(a, b);
                if model.length(&d) < 2 || model.representative(&d) != d {
                    continue;
                }
                if spec.family == Classical::D && model.is_diameter(&d) {
                    cluster.push(Diagonal::colored(a, b, Color::Blue));
                    cluster.push(Diagonal::colored(a, b, Color::Red));
                } else {
                    cluster.push(d);
                }
            }
        }
        cluster.sort_by_key(|d| (model.length(d), d.lo, d.hi, d.color));
        model.n_cluster = cluster.len();
        model.variables = cluster;
        if spec.frozen == FrozenMode::Special {
            let edges = match spec.family {
                Classical::A => size,
                _ => size / 2,
            };
            for i in 1..=edges {
                let e = model.representative(&Diagonal::new(i, i % size + 1));
                model.variables.push(e);
            }
        }
        model.index = model
            .variables
            .iter()
            .enumerate()
            .map(|(i, d)| (*d, i))
            .collect();
        model
    }

    pub fn spec(&self) -> ModelSpec {
        self.spec
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn variables(&self) -> &[Diagonal] {
        &self.variables
    }

    pub fn n_cluster(&self) -> usize {
        self.n_cluster
    }

    pub fn n_frozen(&self) -> usize {
        self.variables.len() - self.n_cluster
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn kind(&self, v: usize) -> VarKind {
        if v < self.n_cluster {
            VarKind::Cluster
        } else {
            VarKind::Frozen
        }
    }

    pub fn diagonal(&self, v: usize) -> Result<Diagonal> {
        self.variables
            .get(v)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: v,
                len: self.variables.len(),
            })
    }

    /// Reduces a vertex label into `1..=N`.
    pub fn vertex(&self, i: i64) -> u32 {
        (i - 1).rem_euclid(self.size as i64) as u32 + 1
    }

    pub fn antipode(&self, i: u32) -> u32 {
        self.vertex(i as i64 + (self.size / 2) as i64)
    }

    /// Minimal number of polygon edges between the endpoints.
    pub fn length(&self, d: &Diagonal) -> u32 {
        let gap = d.hi - d.lo;
        gap.min(self.size - gap)
    }

    pub fn is_edge(&self, d: &Diagonal) -> bool {
        self.length(d) == 1
    }

    /// Whether `d` joins antipodal vertices. Only meaningful outside type A.
    pub fn is_diameter(&self, d: &Diagonal) -> bool {
        self.spec.family != Classical::A && self.size % 2 == 0 && d.hi - d.lo == self.size / 2
    }

    /// The 180-degree rotation of `d` (color kept).
    pub fn bar(&self, d: &Diagonal) -> Diagonal {
        Diagonal::colored(self.antipode(d.lo), self.antipode(d.hi), d.color)
    }

    /// Canonical element of the rotation orbit of `d`: `d` itself in type A,
    /// otherwise the lexicographically smaller of `d` and its rotation.
    pub fn representative(&self, d: &Diagonal) -> Diagonal {
        if self.spec.family == Classical::A {
            return *d;
        }
        let b = self.bar(d);
        if (b.lo, b.hi) < (d.lo, d.hi) {
            b
        } else {
            *d
        }
    }

    /// The orbit `{d, bar d}` (a singleton for diameters and in type A).
    pub fn orbit(&self, d: &Diagonal) -> Vec<Diagonal> {
        let b = self.bar(d);
        if self.spec.family == Classical::A || (b.lo, b.hi) == (d.lo, d.hi) {
            vec![*d]
        } else {
            vec![*d, b]
        }
    }

    /// Index of the variable attached to the segment `[a, b]`, if any. In type
    /// D a diameter needs an explicit color.
    pub fn lookup(&self, a: u32, b: u32, color: Color) -> Option<usize> {
        let d = self.representative(&Diagonal::colored(a, b, color));
        self.index.get(&d).copied()
    }

    /// Strict interior crossing of two segments, with the color convention
    /// for type D diameters.
    pub fn crosses(&self, l: &Diagonal, k: &Diagonal) -> bool {
        if l.color != Color::Plain && k.color != Color::Plain {
            return l.color != k.color && (l.lo, l.hi) != (k.lo, k.hi) && geometric_cross(l, k);
        }
        geometric_cross(l, k)
    }

    /// Compatibility degree `(u || v)`, zero when either is frozen.
    pub fn compatibility(&self, u: usize, v: usize) -> u32 {
        if u >= self.n_cluster || v >= self.n_cluster {
            return 0;
        }
        let l = self.variables[u];
        let k = self.variables[v];
        let count = |a: &Diagonal, set: &[Diagonal]| -> u32 {
            set.iter().filter(|b| self.crosses(a, b)).count() as u32
        };
        match self.spec.family {
            Classical::A => u32::from(self.crosses(&l, &k)),
            Classical::B => count(&l, &self.orbit(&k)),
            Classical::C => count(&k, &self.orbit(&l)),
            Classical::D => {
                if l.color != Color::Plain && k.color != Color::Plain {
                    u32::from(self.crosses(&l, &k))
                } else {
                    let ol = self.orbit(&l);
                    let ok = self.orbit(&k);
                    let total: u32 = ol.iter().map(|a| count(a, &ok)).sum();
                    total / 2
                }
            }
        }
    }

    pub fn compatibility_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.n_cluster)
            .map(|u| (0..self.n_cluster).map(|v| self.compatibility(u, v)).collect())
            .collect()
    }

    /// Rotation `[i, j] -> [i+1, j+1]`, swapping diameter colors in type D.
    pub fn rotate(&self, v: usize) -> Result<usize> {
        let d = self.diagonal(v)?;
        let color = match d.color {
            Color::Plain => Color::Plain,
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        };
        let a = self.vertex(d.lo as i64 + 1);
        let b = self.vertex(d.hi as i64 + 1);
        self.lookup(a, b, color).ok_or(Error::IndexOutOfRange {
            index: v,
            len: self.variables.len(),
        })
    }

    pub fn exchange_relations(&self) -> Result<Vec<ExchangeRelation>> {
        relations::exchange_relations(self)
    }

    pub fn cluster_data(&self) -> Result<ClusterData> {
        Ok(ClusterData {
            labels: self.variables.iter().map(|d| d.to_string()).collect(),
            n_cluster: self.n_cluster,
            n_frozen: self.n_frozen(),
            compat: self.compatibility_matrix(),
            relations: self.exchange_relations()?,
        })
    }
}

/// Whether `x` lies strictly inside the counterclockwise arc from `a` to `b`.
pub(crate) fn strictly_between(a: u32, x: u32, b: u32) -> bool {
    if a < b {
        a < x && x < b
    } else {
        x > a || x < b
    }
}

fn geometric_cross(l: &Diagonal, k: &Diagonal) -> bool {
    let (a, b) = (l.lo, l.hi);
    let (c, d) = (k.lo, k.hi);
    if a == c || a == d || b == c || b == d {
        return false;
    }
    strictly_between(a, c, b) != strictly_between(a, d, b)
}
