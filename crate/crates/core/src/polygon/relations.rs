//! Exchange relations read off exchange quadrilaterals.
//!
//! Each exchangeable pair determines a quadrilateral whose two pairs of
//! opposite sides give the two right-hand monomials. The shape of the
//! quadrilateral (types 0 to 4) fixes the exponents.

use super::{strictly_between, Classical, Color, Diagonal, PolygonModel};
use crate::cluster::ExchangeRelation;
use crate::error::{Error, Result};

/// One side of an exchange quadrilateral.
#[derive(Clone, Copy, Debug)]
struct Side {
    a: u32,
    b: u32,
}

struct Term {
    exponents: Vec<u32>,
    frozen_only: bool,
}

pub(super) fn exchange_relations(model: &PolygonModel) -> Result<Vec<ExchangeRelation>> {
    let n = model.n_cluster();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if model.compatibility(u, v) == 1 && model.compatibility(v, u) == 1 {
                out.push(relation(model, u, v)?);
            }
        }
    }
    Ok(out)
}

fn relation(model: &PolygonModel, u: usize, v: usize) -> Result<ExchangeRelation> {
    let l = model.variables()[u];
    let k = model.variables()[v];
    let family = model.spec().family();
    let l_diam = model.is_diameter(&l);
    let k_diam = model.is_diameter(&k);

    let (quad_type, terms) = if family == Classical::A {
        (0, quad_terms(model, &l, &k)?)
    } else if l_diam && k_diam {
        (3, diameter_pair_terms(model, &l, &k)?)
    } else if l_diam || k_diam {
        if family != Classical::D {
            return Err(Error::NotExchangeable(u, v));
        }
        let (diam, pair) = if l_diam { (l, k) } else { (k, l) };
        (4, radius_terms(model, &diam, &pair)?)
    } else {
        let partner = model
            .orbit(&k)
            .into_iter()
            .find(|c| model.crosses(&l, c))
            .ok_or(Error::NotExchangeable(u, v))?;
        let vertices = [l.lo, l.hi, partner.lo, partner.hi];
        let antipodal = vertices
            .iter()
            .any(|&x| vertices.contains(&model.antipode(x)));
        (if antipodal { 2 } else { 1 }, quad_terms(model, &l, &partner)?)
    };

    let mut primitive_terms: Vec<usize> = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        if t.frozen_only {
            primitive_terms.push(1 - i);
        }
    }
    primitive_terms.sort_unstable();
    let [t0, t1] = terms;
    Ok(ExchangeRelation {
        exchanged: (u, v),
        terms: [t0.exponents, t1.exponents],
        quad_type: Some(quad_type),
        primitive_terms,
    })
}

fn index_of(model: &PolygonModel, a: u32, b: u32, color: Color) -> Result<Option<usize>> {
    let d = Diagonal::colored(a, b, color);
    if model.is_edge(&d) {
        // Edges are variables only in the special frozen mode.
        return Ok(model.lookup(a, b, color));
    }
    model
        .lookup(a, b, color)
        .map(Some)
        .ok_or(Error::ParameterOutOfRange(format!("no variable for {d}")))
}

fn term_from_sides(model: &PolygonModel, sides: &[Side]) -> Result<Term> {
    let mut exponents = vec![0u32; model.dim()];
    let mut frozen_only = true;
    for s in sides {
        let d = Diagonal::new(s.a, s.b);
        if model.is_diameter(&d) {
            frozen_only = false;
            match model.spec().family() {
                Classical::B => add(&mut exponents, index_of(model, s.a, s.b, Color::Plain)?, 2),
                Classical::C => add(&mut exponents, index_of(model, s.a, s.b, Color::Plain)?, 1),
                Classical::D => {
                    add(&mut exponents, index_of(model, s.a, s.b, Color::Blue)?, 1);
                    add(&mut exponents, index_of(model, s.a, s.b, Color::Red)?, 1);
                }
                Classical::A => unreachable!("type A has no diameters"),
            }
        } else {
            frozen_only &= model.is_edge(&d);
            add(&mut exponents, index_of(model, s.a, s.b, Color::Plain)?, 1);
        }
    }
    Ok(Term {
        exponents,
        frozen_only,
    })
}

fn add(exponents: &mut [u32], index: Option<usize>, amount: u32) {
    if let Some(i) = index {
        exponents[i] += amount;
    }
}

/// Terms for two crossing non-diameter diagonals: the two pairs of opposite
/// sides of their convex hull.
fn quad_terms(model: &PolygonModel, l: &Diagonal, k: &Diagonal) -> Result<[Term; 2]> {
    let mut p = [l.lo, l.hi, k.lo, k.hi];
    p.sort_unstable();
    let side = |a: u32, b: u32| Side { a, b };
    Ok([
        term_from_sides(model, &[side(p[0], p[1]), side(p[2], p[3])])?,
        term_from_sides(model, &[side(p[1], p[2]), side(p[3], p[0])])?,
    ])
}

/// Two diameters `[a, a']` and `[b, b']`: the monomials in `[a, b]` and
/// `[a, b']`, squared in type C.
fn diameter_pair_terms(model: &PolygonModel, l: &Diagonal, k: &Diagonal) -> Result<[Term; 2]> {
    let power = match model.spec().family() {
        Classical::C => 2,
        _ => 1,
    };
    let a = l.lo;
    let b = k.lo;
    let make = |x: u32, y: u32| -> Result<Term> {
        let mut exponents = vec![0u32; model.dim()];
        add(&mut exponents, index_of(model, x, y, Color::Plain)?, power);
        Ok(Term {
            exponents,
            frozen_only: model.is_edge(&Diagonal::new(x, y)),
        })
    };
    Ok([make(a, b)?, make(a, model.antipode(b))?])
}

/// A colored diameter through `a` against a diagonal pair crossing it. With
/// the pair represented as `[b, c']` where `a, b, c, a'` run counterclockwise,
/// the terms are `[a,b] * diam(c)` and `[a,c'] * diam(b)`, diameters taking
/// the color of the exchanged one.
fn radius_terms(model: &PolygonModel, diam: &Diagonal, pair: &Diagonal) -> Result<[Term; 2]> {
    let a = diam.lo;
    let a_bar = diam.hi;
    let (b, c_bar) = model
        .orbit(pair)
        .into_iter()
        .find_map(|d| {
            for (x, y) in [(d.lo, d.hi), (d.hi, d.lo)] {
                let c = model.antipode(y);
                if strictly_between(a, x, a_bar)
                    && strictly_between(a, c, a_bar)
                    && strictly_between(x, c, a_bar)
                {
                    return Some((x, y));
                }
            }
            None
        })
        .ok_or_else(|| Error::ParameterOutOfRange(format!("{pair} does not cross {diam}")))?;
    let c = model.antipode(c_bar);
    let make = |x: u32, y: u32, z: u32| -> Result<Term> {
        let mut exponents = vec![0u32; model.dim()];
        add(&mut exponents, index_of(model, x, y, Color::Plain)?, 1);
        add(
            &mut exponents,
            index_of(model, z, model.antipode(z), diam.color)?,
            1,
        );
        Ok(Term {
            exponents,
            frozen_only: false,
        })
    };
    Ok([make(a, b, c)?, make(a, c_bar, b)?])
}
