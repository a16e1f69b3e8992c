//! Polygon and root constructions of the same cluster algebra, checked
//! against each other and against independent counts.

use std::collections::BTreeSet;

use cluster_cone::{
    CartanFamily, CartanType, Classical, ClusterData, FrozenMode, ModelSpec, PolygonModel,
    RootModel,
};

fn polygon(f: Classical, n: usize) -> ClusterData {
    PolygonModel::new(ModelSpec::new(f, n, FrozenMode::None).unwrap())
        .cluster_data()
        .unwrap()
}

fn root(f: CartanFamily, n: usize) -> ClusterData {
    RootModel::new(CartanType::new(f, n).unwrap())
        .unwrap()
        .cluster_data()
        .unwrap()
}

/// Number of clusters from the exponents `e_i` and Coxeter number `h`:
/// `prod (h + e_i + 1) / (e_i + 1)`.
fn catalan(f: CartanFamily, n: u64) -> u64 {
    let (h, exponents): (u64, Vec<u64>) = match f {
        CartanFamily::A => (n + 1, (1..=n).collect()),
        CartanFamily::B | CartanFamily::C => (2 * n, (0..n).map(|i| 2 * i + 1).collect()),
        CartanFamily::D => (
            2 * n - 2,
            (0..n - 1).map(|i| 2 * i + 1).chain([n - 1]).collect(),
        ),
        CartanFamily::E => match n {
            6 => (12, vec![1, 4, 5, 7, 8, 11]),
            7 => (18, vec![1, 5, 7, 9, 11, 13, 17]),
            _ => (30, vec![1, 7, 11, 13, 17, 19, 23, 29]),
        },
        CartanFamily::F => (12, vec![1, 5, 7, 11]),
        CartanFamily::G => (6, vec![1, 5]),
    };
    let num: u128 = exponents.iter().map(|&e| (h + e + 1) as u128).product();
    let den: u128 = exponents.iter().map(|&e| (e + 1) as u128).product();
    assert_eq!(num % den, 0);
    (num / den) as u64
}

/// All triangulations of the convex polygon on `vertices` (in cyclic order),
/// each as a set of diagonals.
fn triangulations(vertices: &[u32]) -> Vec<BTreeSet<(u32, u32)>> {
    if vertices.len() < 3 {
        return vec![BTreeSet::new()];
    }
    let (first, last) = (vertices[0], *vertices.last().unwrap());
    let mut out = Vec::new();
    // The edge (first, last) lies in exactly one triangle, with apex k.
    for k in 1..vertices.len() - 1 {
        let left = triangulations(&vertices[..=k]);
        let right = triangulations(&vertices[k..]);
        for l in &left {
            for r in &right {
                let mut t: BTreeSet<(u32, u32)> = l.union(r).copied().collect();
                let apex = vertices[k];
                if k > 1 {
                    t.insert((first.min(apex), first.max(apex)));
                }
                if k < vertices.len() - 2 {
                    t.insert((apex.min(last), apex.max(last)));
                }
                out.push(t);
            }
        }
    }
    out
}

#[test]
fn triangulation_counts_match_clusters() {
    for n in 1..=5u32 {
        let size = n + 3;
        let count = triangulations(&(1..=size).collect::<Vec<_>>()).len();
        assert_eq!(polygon(Classical::A, n as usize).clusters().len(), count);
    }
    // Centrally symmetric triangulations index the clusters of B and C.
    for n in 2..=4u32 {
        let size = 2 * n + 2;
        let rotate = |v: u32| (v - 1 + n + 1) % size + 1;
        let symmetric = triangulations(&(1..=size).collect::<Vec<_>>())
            .into_iter()
            .filter(|t| {
                t.iter().all(|&(a, b)| {
                    let (c, d) = (rotate(a), rotate(b));
                    t.contains(&(c.min(d), c.max(d)))
                })
            })
            .count();
        assert_eq!(polygon(Classical::B, n as usize).clusters().len(), symmetric);
        assert_eq!(polygon(Classical::C, n as usize).clusters().len(), symmetric);
    }
}

#[test]
fn cluster_counts_follow_exponents() {
    for (pf, rf, n) in [
        (Classical::A, CartanFamily::A, 3),
        (Classical::B, CartanFamily::B, 3),
        (Classical::C, CartanFamily::C, 4),
        (Classical::D, CartanFamily::D, 4),
        (Classical::D, CartanFamily::D, 5),
    ] {
        let expected = catalan(rf, n as u64) as usize;
        assert_eq!(polygon(pf, n).clusters().len(), expected, "{pf:?}{n}");
        assert_eq!(root(rf, n).clusters().len(), expected, "{rf:?}{n}");
    }
    for (f, n) in [(CartanFamily::G, 2), (CartanFamily::F, 4), (CartanFamily::E, 6)] {
        assert_eq!(root(f, n).clusters().len() as u64, catalan(f, n as u64), "{f:?}{n}");
    }
}

fn row_profile(data: &ClusterData) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = data
        .compat
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r
        })
        .collect();
    rows.sort();
    rows
}

#[test]
fn compatibility_profiles_agree() {
    for (pf, rf, n) in [
        (Classical::A, CartanFamily::A, 3),
        (Classical::B, CartanFamily::B, 3),
        (Classical::C, CartanFamily::C, 3),
        (Classical::D, CartanFamily::D, 4),
        (Classical::B, CartanFamily::B, 4),
        (Classical::C, CartanFamily::C, 4),
    ] {
        assert_eq!(row_profile(&polygon(pf, n)), row_profile(&root(rf, n)), "{pf:?}{n}");
    }
    // The profile tells B and C apart, so the agreement above is not vacuous.
    assert_ne!(
        row_profile(&polygon(Classical::B, 3)),
        row_profile(&root(CartanFamily::C, 3))
    );
}

#[test]
#[ignore = "E7 and E8 take minutes"]
fn large_exceptional_counts() {
    for n in [7, 8] {
        assert_eq!(
            root(CartanFamily::E, n).clusters().len() as u64,
            catalan(CartanFamily::E, n as u64)
        );
    }
}
