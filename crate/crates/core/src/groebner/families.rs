//! Explicit vectors in the coordinates of a polygon model with frozen
//! variables indexed by edges.
//!
//! Vertices are labelled `1..=N` counterclockwise and any integer label is
//! reduced modulo `N`. A segment that is not a diameter has a minor arc,
//! running counterclockwise from its first vertex `start` for `len` steps.

use num_traits::Zero;

use crate::cluster::FrozenMode;
use crate::error::{Error, Result};
use crate::exact::{rat, rat_frac, Rat, RatVec};
use crate::polygon::{Classical, Color, Diagonal, PolygonModel};

/// Builders for the generator families of a polygon model in the
/// special frozen mode.
#[derive(Clone, Debug)]
pub struct Families<'a> {
    model: &'a PolygonModel,
}

fn add_into(acc: &mut RatVec, v: &RatVec, scale: &Rat) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += x * scale;
    }
}

impl<'a> Families<'a> {
    pub fn new(model: &'a PolygonModel) -> Result<Self> {
        if model.spec().frozen() != FrozenMode::Special {
            return Err(Error::WrongType(format!(
                "{} needs frozen edge variables",
                model.spec()
            )));
        }
        Ok(Families { model })
    }

    pub fn model(&self) -> &PolygonModel {
        self.model
    }

    fn family(&self) -> Classical {
        self.model.spec().family()
    }

    fn size(&self) -> i64 {
        self.model.size() as i64
    }

    fn zero(&self) -> RatVec {
        vec![Rat::zero(); self.model.dim()]
    }

    fn vertex(&self, i: i64) -> u32 {
        self.model.vertex(i)
    }

    fn index(&self, a: u32, b: u32, color: Color) -> Result<usize> {
        self.model
            .lookup(a, b, color)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("no variable for [{a},{b}]")))
    }

    fn unit(&self, index: usize) -> RatVec {
        let mut v = self.zero();
        v[index] = rat(1);
        v
    }

    fn segment(&self, a: i64, b: i64) -> Result<Diagonal> {
        let (a, b) = (self.vertex(a), self.vertex(b));
        if a == b {
            return Err(Error::ParameterOutOfRange(format!("degenerate segment [{a},{a}]")));
        }
        Ok(Diagonal::new(a, b))
    }

    /// Counterclockwise distance from `a` to `b`.
    fn ccw(&self, a: u32, b: u32) -> u32 {
        (b as i64 - a as i64).rem_euclid(self.size()) as u32
    }

    /// First vertex and length of the minor arc of `l`.
    pub fn minor_arc(&self, l: &Diagonal) -> Result<(u32, u32)> {
        let forward = self.ccw(l.lo, l.hi);
        let backward = self.model.size() - forward;
        match forward.cmp(&backward) {
            std::cmp::Ordering::Less => Ok((l.lo, forward)),
            std::cmp::Ordering::Greater => Ok((l.hi, backward)),
            std::cmp::Ordering::Equal => Err(Error::ParameterOutOfRange(format!(
                "{l} has no minor arc"
            ))),
        }
    }

    pub fn delta_minus(&self, l: &Diagonal) -> Result<u32> {
        Ok(self.minor_arc(l)?.0)
    }

    pub fn delta_plus(&self, l: &Diagonal) -> Result<u32> {
        let (start, len) = self.minor_arc(l)?;
        Ok(self.vertex(start as i64 + len as i64))
    }

    /// Length strictly below `floor(N / 2)`.
    pub fn is_non_maximal(&self, l: &Diagonal) -> bool {
        self.model.length(l) < self.model.size() / 2
    }

    /// All edges and diagonals `[a, b]` with `a < b`.
    pub fn segments(&self) -> Vec<Diagonal> {
        let n = self.model.size();
        (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| Diagonal::new(a, b)))
            .collect()
    }

    /// Sum of the coordinates of the edges, diagonals and diameters at
    /// vertex `i`; diameters count twice in type C and in both colors in
    /// type D.
    pub fn e_vertex(&self, i: i64) -> Result<RatVec> {
        let i = self.vertex(i);
        let mut out = self.zero();
        for j in 1..=self.model.size() {
            if j == i {
                continue;
            }
            let d = Diagonal::new(i, j);
            if self.model.is_diameter(&d) {
                match self.family() {
                    Classical::D => {
                        out[self.index(i, j, Color::Blue)?] += rat(1);
                        out[self.index(i, j, Color::Red)?] += rat(1);
                    }
                    Classical::C => out[self.index(i, j, Color::Plain)?] += rat(2),
                    _ => out[self.index(i, j, Color::Plain)?] += rat(1),
                }
            } else {
                out[self.index(i, j, Color::Plain)?] += rat(1);
            }
        }
        Ok(out)
    }

    /// `sum_i E_i` over all vertices.
    pub fn e_total(&self) -> Result<RatVec> {
        let mut out = self.zero();
        for i in 1..=self.size() {
            add_into(&mut out, &self.e_vertex(i)?, &rat(1));
        }
        Ok(out)
    }

    /// `sum_i (-1)^i E_i` over all vertices.
    pub fn e_alternating(&self) -> Result<RatVec> {
        let mut out = self.zero();
        for i in 1..=self.size() {
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            add_into(&mut out, &self.e_vertex(i)?, &sign);
        }
        Ok(out)
    }

    /// `sum_{k=1}^{floor(len/2)} E_{start + 2k - 1}` over the minor arc.
    pub fn e_of(&self, l: &Diagonal) -> Result<RatVec> {
        let (start, len) = self.minor_arc(l)?;
        let mut out = self.zero();
        for k in 1..=(len / 2) as i64 {
            add_into(&mut out, &self.e_vertex(start as i64 + 2 * k - 1)?, &rat(1));
        }
        Ok(out)
    }

    /// The same sum over the major arc, starting at the last vertex of the
    /// minor arc.
    pub fn ebar_of(&self, l: &Diagonal) -> Result<RatVec> {
        let (_, len) = self.minor_arc(l)?;
        let end = self.delta_plus(l)?;
        let mut out = self.zero();
        for k in 1..=((self.model.size() - len) / 2) as i64 {
            add_into(&mut out, &self.e_vertex(end as i64 + 2 * k - 1)?, &rat(1));
        }
        Ok(out)
    }

    /// `sum_{k=0}^{len-1} (-1)^k E_{start + k}`.
    pub fn h_oriented(&self, start: u32, len: u32) -> Result<RatVec> {
        let mut out = self.zero();
        for k in 0..len as i64 {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            add_into(&mut out, &self.e_vertex(start as i64 + k)?, &sign);
        }
        Ok(out)
    }

    /// [`Self::h_oriented`] along the minor arc of `l`.
    pub fn h_of(&self, l: &Diagonal) -> Result<RatVec> {
        let (start, len) = self.minor_arc(l)?;
        self.h_oriented(start, len)
    }

    /// Minus the sum of the coordinates of every edge and diagonal with both
    /// endpoints on the closed minor arc of `l`.
    pub fn v_of(&self, l: &Diagonal) -> Result<RatVec> {
        if !self.is_non_maximal(l) {
            return Err(Error::ParameterOutOfRange(format!("{l} has maximal length")));
        }
        let (start, len) = self.minor_arc(l)?;
        let mut out = self.zero();
        for p in 0..=len as i64 {
            for q in p + 1..=len as i64 {
                let a = self.vertex(start as i64 + p);
                let b = self.vertex(start as i64 + q);
                out[self.index(a, b, Color::Plain)?] -= rat(1);
            }
        }
        Ok(out)
    }

    /// The corrected `v(l)` for the cones without frozen variables.
    pub fn vtilde_of(&self, l: &Diagonal) -> Result<RatVec> {
        let mut out = self.v_of(l)?;
        let n = self.model.spec().rank();
        let odd = self.model.length(l) % 2 == 1;
        let half = self.model.size() / 2;
        match self.family() {
            Classical::A if odd && n % 2 == 0 => {
                add_into(&mut out, &self.e_total()?, &rat_frac(1, 2));
                add_into(&mut out, &self.ebar_of(l)?, &rat(-1));
            }
            Classical::B | Classical::C | Classical::D if odd && half % 2 == 1 => {
                add_into(&mut out, &self.e_total()?, &rat_frac(1, 4));
                let from = self.delta_plus(l)?;
                let to = self.model.antipode(self.delta_minus(l)?);
                add_into(&mut out, &self.e_of(&Diagonal::new(from, to))?, &rat(-1));
            }
            _ => add_into(&mut out, &self.e_of(l)?, &rat(1)),
        }
        Ok(out)
    }

    fn require_d(&self) -> Result<()> {
        if self.family() != Classical::D {
            return Err(Error::WrongType(format!(
                "{} has no colored diameters",
                self.model.spec()
            )));
        }
        Ok(())
    }

    /// Blue diameters minus red diameters.
    pub fn u_diam(&self) -> Result<RatVec> {
        self.require_d()?;
        let mut out = self.zero();
        let n = self.model.size();
        for a in 1..=n / 2 {
            let b = self.model.antipode(a);
            out[self.index(a, b, Color::Blue)?] += rat(1);
            out[self.index(a, b, Color::Red)?] -= rat(1);
        }
        Ok(out)
    }

    fn w_single(
        &self,
        i: i64,
        color: Color,
        v: &dyn Fn(&Diagonal) -> Result<RatVec>,
    ) -> Result<RatVec> {
        self.require_d()?;
        let a = self.vertex(i);
        let b = self.model.antipode(a);
        let mut out = self.unit(self.index(a, b, color)?);
        let inner = self.segment(i + 1, b as i64 - 1)?;
        add_into(&mut out, &v(&inner)?, &rat(1));
        Ok(out)
    }

    /// Blue diameter at `i` plus `v` of the diagonal just inside it.
    pub fn w_of(&self, i: i64) -> Result<RatVec> {
        self.w_single(i, Color::Blue, &|l| self.v_of(l))
    }

    /// Red counterpart of [`Self::w_of`].
    pub fn what_of(&self, i: i64) -> Result<RatVec> {
        self.w_single(i, Color::Red, &|l| self.v_of(l))
    }

    fn w_pair(&self, j: i64, k: i64, v: &dyn Fn(&Diagonal) -> Result<RatVec>) -> Result<RatVec> {
        self.require_d()?;
        let n = self.model.spec().rank() as i64;
        if !(1..=n).contains(&j) || !(0..n).contains(&k) {
            return Err(Error::ParameterOutOfRange(format!(
                "w({j},{k}) needs 1 <= j <= {n} and 0 <= k < {n}"
            )));
        }
        let mut out = self.zero();
        let (plus, minus) = if k % 2 == 0 {
            (k / 2, k / 2)
        } else {
            let tail = self.segment(j + k, j + n + k + 1)?;
            add_into(&mut out, &v(&tail)?, &rat(1));
            ((k - 1) / 2, (k + 1) / 2)
        };
        for i in 0..=plus {
            add_into(&mut out, &self.w_single(j + 2 * i, Color::Blue, v)?, &rat(1));
        }
        for i in 1..=minus {
            add_into(&mut out, &self.w_single(j + 2 * i - 1, Color::Red, v)?, &rat(-1));
        }
        Ok(out)
    }

    pub fn w_jk(&self, j: i64, k: i64) -> Result<RatVec> {
        self.w_pair(j, k, &|l| self.v_of(l))
    }

    /// [`Self::w_jk`] with every `v(l)` replaced by `vtilde(l)`.
    pub fn wtilde_jk(&self, j: i64, k: i64) -> Result<RatVec> {
        self.w_pair(j, k, &|l| self.vtilde_of(l))
    }
}
