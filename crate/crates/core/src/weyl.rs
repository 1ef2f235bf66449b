//! Weyl dimension formula
//! `dim V_{nλ} = Π_{α>0} (nλ + δ, α) / Π_{α>0} (δ, α)` over exact rationals.
//!
//! Root data are explicit positive-root vectors in an ambient space with a
//! rational Gram matrix. Presets carry their fundamental weights so that
//! highest weights can be given in fundamental coordinates.

use num_rational::Ratio;
use num_traits::{CheckedSub, One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::scalar::{self, RationalBase};

type Vector<I> = Vec<Ratio<I>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData<I: RationalBase> {
    name: String,
    rank: usize,
    positive_roots: Vec<Vector<I>>,
    delta: Vector<I>,
    gram: Vec<Vector<I>>,
    fundamental_weights: Option<Vec<Vector<I>>>,
}

impl<I: RationalBase> RootSystemData<I> {
    /// Validates the data and computes `δ = ½ Σ α`.
    pub fn new(rank: usize, positive_roots: Vec<Vector<I>>, gram: Vec<Vector<I>>) -> Result<Self> {
        let dim = gram.len();
        if rank == 0 || positive_roots.is_empty() {
            return Err(Error::param("root system needs rank >= 1 and at least one positive root"));
        }
        if gram.iter().any(|row| row.len() != dim) {
            return Err(Error::param("Gram matrix must be square"));
        }
        if let Some(bad) = positive_roots.iter().find(|a| a.len() != dim) {
            return Err(Error::Dimension { expected: dim, found: bad.len() });
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::param("Gram matrix must be symmetric"));
                }
            }
        }
        if !positive_definite(&gram)? {
            return Err(Error::param("Gram matrix must be positive definite"));
        }
        let half = Ratio::new(I::one(), I::one() + I::one());
        let mut delta = vec![Ratio::zero(); dim];
        for a in &positive_roots {
            for (d, x) in delta.iter_mut().zip(a) {
                *d = scalar::rat_add(d, x, "half root sum")?;
            }
        }
        let delta: Vector<I> = delta.iter().map(|d| scalar::rat_mul(d, &half, "half root sum")).collect::<Result<_>>()?;
        let rs = RootSystemData {
            name: "custom".into(),
            rank,
            positive_roots,
            delta,
            gram,
            fundamental_weights: None,
        };
        for a in &rs.positive_roots {
            if !rs.pairing(&rs.delta, a)?.is_positive() {
                return Err(Error::param("(δ, α) must be positive for every positive root"));
            }
        }
        Ok(rs)
    }

    fn named(mut self, name: &str, fundamental: Vec<Vector<I>>) -> Self {
        self.name = name.into();
        self.fundamental_weights = Some(fundamental);
        self
    }

    pub fn a1() -> Self {
        let q = rat_vecs::<I>(&[&[(1, 1)]]);
        Self::new(1, q.clone(), identity(1)).expect("A1 data").named("A1", rat_vecs(&[&[(1, 2)]]))
    }

    pub fn a2() -> Self {
        let roots = int_vecs::<I>(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let fundamental = rat_vecs(&[&[(2, 3), (-1, 3), (-1, 3)], &[(1, 3), (1, 3), (-2, 3)]]);
        Self::new(2, roots, identity(3)).expect("A2 data").named("A2", fundamental)
    }

    pub fn b2() -> Self {
        let roots = int_vecs::<I>(&[&[1, -1], &[0, 1], &[1, 1], &[1, 0]]);
        let fundamental = rat_vecs(&[&[(1, 1), (0, 1)], &[(1, 2), (1, 2)]]);
        Self::new(2, roots, identity(2)).expect("B2 data").named("B2", fundamental)
    }

    pub fn g2() -> Self {
        // short simple root e1 - e2, long simple root -2e1 + e2 + e3
        let roots =
            int_vecs::<I>(&[&[1, -1, 0], &[-2, 1, 1], &[-1, 0, 1], &[0, -1, 1], &[1, -2, 1], &[-1, -1, 2]]);
        let fundamental = int_vecs(&[&[0, -1, 1], &[-1, -1, 2]]);
        Self::new(2, roots, identity(3)).expect("G2 data").named("G2", fundamental)
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "A1" => Ok(Self::a1()),
            "A2" => Ok(Self::a2()),
            "B2" => Ok(Self::b2()),
            "G2" => Ok(Self::g2()),
            other => Err(Error::param(format!("unknown root system preset {other:?} (A1, A2, B2, G2)"))),
        }
    }

    /// Parses `{"rank": r, "positive_roots": [[..]], "gram": [[..]]}`. Entries
    /// are integers or strings such as `"1/2"`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            rank: usize,
            positive_roots: Vec<Vec<serde_json::Value>>,
            gram: Vec<Vec<serde_json::Value>>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| Error::param(format!("malformed root system: {e}")))?;
        let conv = |rows: Vec<Vec<serde_json::Value>>| -> Result<Vec<Vector<I>>> {
            rows.into_iter().map(|row| row.iter().map(parse_rational).collect()).collect()
        };
        Self::new(doc.rank, conv(doc.positive_roots)?, conv(doc.gram)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.len()
    }

    pub fn positive_roots(&self) -> &[Vector<I>] {
        &self.positive_roots
    }

    pub fn delta(&self) -> &[Ratio<I>] {
        &self.delta
    }

    pub fn fundamental_weights(&self) -> Option<&[Vector<I>]> {
        self.fundamental_weights.as_deref()
    }

    pub fn pairing(&self, u: &[Ratio<I>], v: &[Ratio<I>]) -> Result<Ratio<I>> {
        let dim = self.ambient_dim();
        if u.len() != dim || v.len() != dim {
            return Err(Error::Dimension { expected: dim, found: if u.len() != dim { u.len() } else { v.len() } });
        }
        let mut acc = Ratio::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                let term = scalar::rat_mul(&scalar::rat_mul(ui, &self.gram[i][j], "pairing")?, vj, "pairing")?;
                acc = scalar::rat_add(&acc, &term, "pairing")?;
            }
        }
        Ok(acc)
    }

    /// `Σ c_i ω_i` for a preset with known fundamental weights.
    pub fn weight_from_fundamental(&self, coords: &[i64]) -> Result<Vector<I>> {
        let fw = self
            .fundamental_weights
            .as_ref()
            .ok_or_else(|| Error::param("this root system has no fundamental weights; give an ambient vector"))?;
        if coords.len() != fw.len() {
            return Err(Error::Dimension { expected: fw.len(), found: coords.len() });
        }
        let mut out = vec![Ratio::zero(); self.ambient_dim()];
        for (&c, w) in coords.iter().zip(fw) {
            let c = scalar::rat_from::<I>(c, "fundamental coordinates")?;
            for (o, x) in out.iter_mut().zip(w) {
                *o = scalar::rat_add(o, &scalar::rat_mul(&c, x, "fundamental coordinates")?, "fundamental coordinates")?;
            }
        }
        Ok(out)
    }

    pub fn is_dominant(&self, lambda: &[Ratio<I>]) -> Result<bool> {
        for a in &self.positive_roots {
            if self.pairing(lambda, a)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of positive roots `r`; the growth exponent of `dim V_{nλ}`.
    pub fn positive_root_count(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim G = 2r + rank`.
    pub fn group_dimension(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    /// `[(λ, α), (δ, α)]` for every positive root, after checking dominance.
    fn pairings(&self, lambda: &[Ratio<I>]) -> Result<Vec<(Ratio<I>, Ratio<I>)>> {
        let mut out = Vec::with_capacity(self.positive_roots.len());
        for a in &self.positive_roots {
            let la = self.pairing(lambda, a)?;
            if la.is_negative() {
                return Err(Error::domain("λ is not dominant: (λ, α) < 0 for some positive root"));
            }
            out.push((la, self.pairing(&self.delta, a)?));
        }
        Ok(out)
    }
}

fn identity<I: RationalBase>(dim: usize) -> Vec<Vector<I>> {
    (0..dim).map(|i| (0..dim).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }).collect()).collect()
}

fn int_vecs<I: RationalBase>(rows: &[&[i64]]) -> Vec<Vector<I>> {
    rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(I::from_i64(x).expect("small preset entry"))).collect()).collect()
}

fn rat_vecs<I: RationalBase>(rows: &[&[(i64, i64)]]) -> Vec<Vector<I>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&(p, q)| Ratio::new(I::from_i64(p).expect("small preset entry"), I::from_i64(q).expect("small preset entry")))
                .collect()
        })
        .collect()
}

pub(crate) fn parse_rational<I: RationalBase>(v: &serde_json::Value) -> Result<Ratio<I>> {
    let bad = || Error::param(format!("cannot read {v} as a rational number"));
    match v {
        serde_json::Value::Number(num) => {
            let x = num.as_i64().ok_or_else(bad)?;
            scalar::rat_from(x, "rational entry")
        }
        serde_json::Value::String(s) => parse_rational_str(s),
        _ => Err(bad()),
    }
}

/// Reads `"p"` or `"p/q"`.
pub fn parse_rational_str<I: RationalBase>(s: &str) -> Result<Ratio<I>> {
    let bad = || Error::param(format!("cannot read {s:?} as a rational number"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(I::from_i64(p).ok_or_else(bad)?, I::from_i64(q).ok_or_else(bad)?))
}

/// Sylvester's criterion through fraction-exact Gaussian elimination.
fn positive_definite<I: RationalBase>(gram: &[Vector<I>]) -> Result<bool> {
    let mut m: Vec<Vector<I>> = gram.to_vec();
    let dim = m.len();
    for k in 0..dim {
        let pivot = m[k][k].clone();
        if !pivot.is_positive() {
            return Ok(false);
        }
        for i in k + 1..dim {
            let f = m[i][k].clone() / pivot.clone();
            for j in k..dim {
                let t = scalar::rat_mul(&f, &m[k][j], "positive definiteness")?;
                m[i][j] = m[i][j].checked_sub(&t).ok_or(Error::Overflow("positive definiteness"))?;
            }
        }
    }
    Ok(true)
}

/// `dim V_{nλ}` by the Weyl product, asserted to be a positive integer.
pub fn weyl_dimension<I: RationalBase>(rs: &RootSystemData<I>, lambda: &[Ratio<I>], n: u64) -> Result<I> {
    let n = scalar::rat_from::<I>(i64::try_from(n).map_err(|_| Error::param("n too large"))?, "weyl dimension")?;
    let mut value = Ratio::one();
    for (la, da) in rs.pairings(lambda)? {
        let num = scalar::rat_add(&scalar::rat_mul(&n, &la, "weyl dimension")?, &da, "weyl dimension")?;
        value = scalar::rat_mul(&value, &(num / da), "weyl dimension")?;
    }
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::Consistency(format!("Weyl product evaluated to {value}, not a positive integer")));
    }
    Ok(value.to_integer())
}

/// `n ↦ dim V_{nλ}` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionPolynomial<I: RationalBase> {
    coefficients: Vec<Ratio<I>>,
}

impl<I: RationalBase> DimensionPolynomial<I> {
    pub fn coefficients(&self) -> &[Ratio<I>] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn evaluate(&self, n: u64) -> Result<Ratio<I>> {
        let x = scalar::rat_from::<I>(i64::try_from(n).map_err(|_| Error::param("n too large"))?, "polynomial")?;
        let mut acc = Ratio::zero();
        for c in self.coefficients.iter().rev() {
            acc = scalar::rat_add(&scalar::rat_mul(&acc, &x, "polynomial")?, c, "polynomial")?;
        }
        Ok(acc)
    }
}

/// Expands `Π ((λ,α)·n + (δ,α)) / Π (δ,α)`.
pub fn dimension_polynomial<I: RationalBase>(rs: &RootSystemData<I>, lambda: &[Ratio<I>]) -> Result<DimensionPolynomial<I>> {
    let mut coefficients = vec![Ratio::one()];
    for (la, da) in rs.pairings(lambda)? {
        // multiply by (la/da)·n + 1
        let slope = la / da;
        let mut next = vec![Ratio::zero(); coefficients.len() + 1];
        for (k, c) in coefficients.iter().enumerate() {
            next[k] = scalar::rat_add(&next[k], c, "polynomial expansion")?;
            next[k + 1] = scalar::rat_add(&next[k + 1], &scalar::rat_mul(c, &slope, "polynomial expansion")?, "polynomial expansion")?;
        }
        coefficients = next;
    }
    while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
        coefficients.pop();
    }
    Ok(DimensionPolynomial { coefficients })
}

/// Positive-root count and group dimension of a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthExponent {
    pub positive_roots: usize,
    pub group_dimension: usize,
}

pub fn growth_exponent<I: RationalBase>(rs: &RootSystemData<I>) -> GrowthExponent {
    GrowthExponent { positive_roots: rs.positive_root_count(), group_dimension: rs.group_dimension() }
}
