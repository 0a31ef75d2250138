//! Dense hypermatrices `K(N, m, n)` and the PRO structure on them.
//!
//! An element has an output multi-index `I ∈ [N]^m` and an input multi-index
//! `J ∈ [N]^n`. Entries are stored row-major with the output index as the
//! major block and the first digit most significant. Public indices are
//! 1-based; `*_0` helpers take 0-based digits.

use std::fmt;

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// A 1-based multi-index over `[N]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(digits: Vec<usize>, dim: usize) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d == 0 || d > dim) {
            return Err(Error::Index(format!("digit {d} not in 1..={dim}")));
        }
        Ok(MultiIndex(digits))
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Split every digit as `i = (q - 1) * m + r` with `1 <= r <= m`,
    /// returning `(I % m, I / m)`.
    pub fn mod_div(&self, m: usize) -> Result<(MultiIndex, MultiIndex)> {
        let (r, q) = mod_div(&self.0, m)?;
        Ok((MultiIndex(r), MultiIndex(q)))
    }

    /// All multi-indices of length `len` over `[dim]`, in lexicographic order.
    pub fn all(dim: usize, len: usize) -> impl Iterator<Item = MultiIndex> {
        let count = dim.pow(len as u32);
        (0..count).map(move |c| MultiIndex(unrank(dim, len, c).into_iter().map(|d| d + 1).collect()))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Digitwise `(I % m, I / m)` for 1-based digits.
pub fn mod_div(digits: &[usize], m: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if m < 1 {
        return Err(Error::Invalid("modulus must be at least 1".into()));
    }
    if digits.contains(&0) {
        return Err(Error::Index("digits are 1-based".into()));
    }
    Ok(digits.iter().map(|&i| ((i - 1) % m + 1, (i - 1) / m + 1)).unzip())
}

/// 0-based digits of `code` in base `dim`, most significant first.
pub fn unrank(dim: usize, len: usize, mut code: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % dim;
        code /= dim;
    }
    out
}

/// Inverse of [`unrank`].
pub fn rank(dim: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * dim + d)
}

fn checked_pow(dim: usize, e: usize) -> Result<usize> {
    dim.checked_pow(e as u32)
        .filter(|&n| n <= 1 << 28)
        .ok_or_else(|| Error::Shape(format!("{dim}^{e} entries is too large")))
}

#[derive(Clone, PartialEq)]
pub struct Hypermatrix<S> {
    dim: usize,
    out_rank: usize,
    in_rank: usize,
    entries: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Hypermatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{})", self.dim, self.out_rank, self.in_rank)?;
        if self.entries.len() <= 64 {
            f.debug_list().entries(self.entries.iter()).finish()
        } else {
            write!(f, "[{} entries]", self.entries.len())
        }
    }
}

impl<S: Semiring> fmt::Display for Hypermatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.cols();
        for r in 0..self.rows() {
            let row: Vec<String> = self.entries[r * cols..(r + 1) * cols].iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Semiring> Hypermatrix<S> {
    pub fn zeros(dim: usize, out_rank: usize, in_rank: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("base dimension must be at least 1".into()));
        }
        let len = checked_pow(dim, out_rank + in_rank)?;
        Ok(Hypermatrix { dim, out_rank, in_rank, entries: vec![S::zero(); len] })
    }

    pub fn from_entries(dim: usize, out_rank: usize, in_rank: usize, entries: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("base dimension must be at least 1".into()));
        }
        let len = checked_pow(dim, out_rank + in_rank)?;
        if entries.len() != len {
            return Err(Error::Shape(format!(
                "K({dim},{out_rank},{in_rank}) needs {len} entries, got {}",
                entries.len()
            )));
        }
        Ok(Hypermatrix { dim, out_rank, in_rank, entries })
    }

    /// Build from a function of the 1-based `(I, J)`.
    pub fn from_fn(
        dim: usize,
        out_rank: usize,
        in_rank: usize,
        mut f: impl FnMut(&[usize], &[usize]) -> S,
    ) -> Result<Self> {
        let mut h = Self::zeros(dim, out_rank, in_rank)?;
        for code in 0..h.entries.len() {
            let mut digits = unrank(dim, out_rank + in_rank, code);
            digits.iter_mut().for_each(|d| *d += 1);
            h.entries[code] = f(&digits[..out_rank], &digits[out_rank..]);
        }
        Ok(h)
    }

    /// The element of `K(dim, 0, 0)`.
    pub fn scalar(dim: usize, s: S) -> Result<Self> {
        Self::from_entries(dim, 0, 0, vec![s])
    }

    /// `I(N)^{↔n}`; `n = 0` gives the scalar one.
    pub fn identity(dim: usize, n: usize) -> Result<Self> {
        Self::from_fn(dim, n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The basis element `E(N, p, q; K, L)`.
    pub fn basis(dim: usize, p: usize, q: usize, out: &[usize], inp: &[usize]) -> Result<Self> {
        if out.len() != p || inp.len() != q {
            return Err(Error::Index(format!("basis index lengths ({},{}) vs ranks ({p},{q})", out.len(), inp.len())));
        }
        let mut h = Self::zeros(dim, p, q)?;
        let at = h.offset(out, inp)?;
        h.entries[at] = S::one();
        Ok(h)
    }

    pub fn random<R: Rng + ?Sized>(dim: usize, out_rank: usize, in_rank: usize, rng: &mut R) -> Result<Self> {
        Self::from_fn(dim, out_rank, in_rank, |_, _| S::random(rng))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn out_rank(&self) -> usize {
        self.out_rank
    }

    pub fn in_rank(&self) -> usize {
        self.in_rank
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.dim, self.out_rank, self.in_rank)
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    /// Number of rows when read as an `N^m × N^n` matrix.
    pub fn rows(&self) -> usize {
        self.dim.pow(self.out_rank as u32)
    }

    pub fn cols(&self) -> usize {
        self.dim.pow(self.in_rank as u32)
    }

    fn offset(&self, out: &[usize], inp: &[usize]) -> Result<usize> {
        if out.len() != self.out_rank || inp.len() != self.in_rank {
            return Err(Error::Index(format!(
                "index lengths ({},{}) for K({},{},{})",
                out.len(),
                inp.len(),
                self.dim,
                self.out_rank,
                self.in_rank
            )));
        }
        let mut at = 0;
        for &d in out.iter().chain(inp) {
            if d == 0 || d > self.dim {
                return Err(Error::Index(format!("digit {d} not in 1..={}", self.dim)));
            }
            at = at * self.dim + (d - 1);
        }
        Ok(at)
    }

    /// Entry `a^I_J` with 1-based indices.
    pub fn get(&self, out: &[usize], inp: &[usize]) -> Result<&S> {
        let at = self.offset(out, inp)?;
        Ok(&self.entries[at])
    }

    pub fn set(&mut self, out: &[usize], inp: &[usize], value: S) -> Result<()> {
        let at = self.offset(out, inp)?;
        self.entries[at] = value;
        Ok(())
    }

    /// Entry with 0-based digits; panics when out of range.
    pub fn get0(&self, out: &[usize], inp: &[usize]) -> &S {
        &self.entries[rank(self.dim, out) * self.cols() + rank(self.dim, inp)]
    }

    /// The entry of an element of `K(N, 0, 0)`.
    pub fn as_scalar(&self) -> Option<&S> {
        (self.out_rank == 0 && self.in_rank == 0).then(|| &self.entries[0])
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::BaseDim { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Horizontal composition: `c^{II'}_{JJ'} = a^I_J · b^{I'}_{J'}`.
    pub fn hcomp(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self::zeros(self.dim, self.out_rank + other.out_rank, self.in_rank + other.in_rank)?;
        let (ar, ac) = (self.rows(), self.cols());
        let (br, bc) = (other.rows(), other.cols());
        let cols = ac * bc;
        for i in 0..ar {
            for j in 0..ac {
                let a = &self.entries[i * ac + j];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..br {
                    let row = (i * br + i2) * cols + j * bc;
                    for j2 in 0..bc {
                        out.entries[row + j2] = a.mul(&other.entries[i2 * bc + j2]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Vertical composition: `c^I_J = Σ_K a^I_K · b^K_J` (`self` on top).
    pub fn vcomp(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        if self.in_rank != other.out_rank {
            return Err(Error::Shape(format!(
                "cannot stack K({},{},{}) on K({},{},{})",
                self.dim, self.out_rank, self.in_rank, other.dim, other.out_rank, other.in_rank
            )));
        }
        let mut out = Self::zeros(self.dim, self.out_rank, other.in_rank)?;
        let (rows, inner, cols) = (self.rows(), self.cols(), other.cols());
        for i in 0..rows {
            let dst = &mut out.entries[i * cols..(i + 1) * cols];
            for k in 0..inner {
                let a = &self.entries[i * inner + k];
                if a.is_zero() {
                    continue;
                }
                let src = &other.entries[k * cols..(k + 1) * cols];
                for (d, b) in dst.iter_mut().zip(src) {
                    if !b.is_zero() {
                        *d = d.add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("cannot add {:?} and {:?}", self.shape(), other.shape())));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(self.with_entries(entries))
    }

    pub fn scale(&self, s: &S) -> Self {
        let entries = self.entries.iter().map(|a| s.mul(a)).collect();
        self.with_entries(entries)
    }

    fn with_entries(&self, entries: Vec<S>) -> Self {
        Hypermatrix { dim: self.dim, out_rank: self.out_rank, in_rank: self.in_rank, entries }
    }

    /// `⊙ : K(M,p,q) × K(N,p,q) → K(MN,p,q)` with
    /// `c^I_J = a^{I%M}_{J%M} · b^{I/M}_{J/M}`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        if (self.out_rank, self.in_rank) != (other.out_rank, other.in_rank) {
            return Err(Error::Shape(format!(
                "kronecker needs equal ranks, got ({},{}) and ({},{})",
                self.out_rank, self.in_rank, other.out_rank, other.in_rank
            )));
        }
        let m = self.dim;
        let total = self.out_rank + self.in_rank;
        let mut out = Self::zeros(m * other.dim, self.out_rank, self.in_rank)?;
        let mut lo = vec![0; total];
        let mut hi = vec![0; total];
        for code in 0..out.entries.len() {
            let digits = unrank(out.dim, total, code);
            for (k, &d) in digits.iter().enumerate() {
                lo[k] = d % m;
                hi[k] = d / m;
            }
            let a = &self.entries[rank(m, &lo)];
            if a.is_zero() {
                continue;
            }
            out.entries[code] = a.mul(&other.entries[rank(other.dim, &hi)]);
        }
        Ok(out)
    }

    /// `⊕̂ : K(M,p,q) × K(N,p,q) → K(M+N,p,q)`: `self` on indices all `<= M`,
    /// `other` shifted by `M` on indices all `> M`, zero on mixed indices.
    /// On scalars both blocks cover the empty index, giving `a + b`.
    pub fn quasi_direct_sum(&self, other: &Self) -> Result<Self> {
        if (self.out_rank, self.in_rank) != (other.out_rank, other.in_rank) {
            return Err(Error::Shape(format!(
                "quasi-direct sum needs equal ranks, got ({},{}) and ({},{})",
                self.out_rank, self.in_rank, other.out_rank, other.in_rank
            )));
        }
        let m = self.dim;
        let total = self.out_rank + self.in_rank;
        if total == 0 {
            return Self::scalar(m + other.dim, self.entries[0].add(&other.entries[0]));
        }
        let mut out = Self::zeros(m + other.dim, self.out_rank, self.in_rank)?;
        for code in 0..out.entries.len() {
            let mut digits = unrank(out.dim, total, code);
            if digits.iter().all(|&d| d < m) {
                out.entries[code] = self.entries[rank(m, &digits)].clone();
            } else if digits.iter().all(|&d| d >= m) {
                digits.iter_mut().for_each(|d| *d -= m);
                out.entries[code] = other.entries[rank(other.dim, &digits)].clone();
            }
        }
        Ok(out)
    }

    /// `Σ_I a^I_I`.
    pub fn trace(&self) -> Result<S> {
        if self.out_rank != self.in_rank {
            return Err(Error::Shape(format!("trace of a ({},{}) hypermatrix", self.out_rank, self.in_rank)));
        }
        let n = self.rows();
        Ok((0..n).fold(S::zero(), |acc, i| acc.add(&self.entries[i * n + i])))
    }

    /// Swap the output and input blocks: `b^J_I = a^I_J`.
    pub fn transpose(&self) -> Self {
        let (rows, cols) = (self.rows(), self.cols());
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..cols {
            for i in 0..rows {
                entries.push(self.entries[i * cols + j].clone());
            }
        }
        Hypermatrix { dim: self.dim, out_rank: self.in_rank, in_rank: self.out_rank, entries }
    }

    pub fn map<T: Semiring>(&self, f: impl Fn(&S) -> T) -> Hypermatrix<T> {
        Hypermatrix {
            dim: self.dim,
            out_rank: self.out_rank,
            in_rank: self.in_rank,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Nonzero entries as `(value, I, J)` with 1-based indices; summing
    /// `value · E(N,m,n;I,J)` over the list recovers `self`.
    pub fn decompose(&self) -> Vec<(S, Vec<usize>, Vec<usize>)> {
        let total = self.out_rank + self.in_rank;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(code, v)| {
                let mut digits = unrank(self.dim, total, code);
                digits.iter_mut().for_each(|d| *d += 1);
                let inp = digits.split_off(self.out_rank);
                (v.clone(), digits, inp)
            })
            .collect()
    }

    pub fn eq_within(&self, other: &Self, tol: f64) -> bool {
        self.shape() == other.shape() && self.entries.iter().zip(&other.entries).all(|(a, b)| a.eq_within(b, tol))
    }

    /// First index pair where `self` and `other` differ (1-based).
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.shape() != other.shape() {
            return Some((vec![], vec![]));
        }
        let code = self.entries.iter().zip(&other.entries).position(|(a, b)| a != b)?;
        let mut digits = unrank(self.dim, self.out_rank + self.in_rank, code);
        digits.iter_mut().for_each(|d| *d += 1);
        let inp = digits.split_off(self.out_rank);
        Some((digits, inp))
    }

    /// `{"N", "out_rank", "in_rank", "entries"}` in storage order.
    pub fn to_json(&self) -> Value {
        json!({
            "N": self.dim,
            "out_rank": self.out_rank,
            "in_rank": self.in_rank,
            "entries": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }

    /// Accepts the dense form or the sparse form with a `"sparse"` list of
    /// `{"out", "in", "val"}` records (1-based, unlisted entries zero).
    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| -> Result<usize> {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("hypermatrix field `{k}` missing or not an integer")))
        };
        let (dim, m, n) = (field("N")?, field("out_rank")?, field("in_rank")?);
        if dim == 0 {
            return Err(Error::Parse("N must be positive".into()));
        }
        if let Some(entries) = v.get("entries") {
            let arr = entries.as_array().ok_or_else(|| Error::Parse("`entries` must be a list".into()))?;
            let entries = arr.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
            return Self::from_entries(dim, m, n, entries);
        }
        let sparse = v
            .get("sparse")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("hypermatrix needs `entries` or `sparse`".into()))?;
        let mut h = Self::zeros(dim, m, n)?;
        let idx = |rec: &Value, k: &str| -> Result<Vec<usize>> {
            rec.get(k)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("sparse record needs `{k}`")))?
                .iter()
                .map(|d| d.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse("index digits must be integers".into())))
                .collect()
        };
        for rec in sparse {
            let val = S::from_json(rec.get("val").ok_or_else(|| Error::Parse("sparse record needs `val`".into()))?)?;
            h.set(&idx(rec, "out")?, &idx(rec, "in")?, val)?;
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Boolean, Natural, Rational};

    fn nat(dim: usize, m: usize, n: usize, xs: &[u64]) -> Hypermatrix<Natural> {
        Hypermatrix::from_entries(dim, m, n, xs.iter().map(|&x| Natural::from(x)).collect()).unwrap()
    }

    #[test]
    fn two_by_two_product() {
        let a = nat(2, 1, 1, &[1, 2, 3, 4]);
        let b = nat(2, 1, 1, &[5, 6, 7, 8]);
        assert_eq!(a.vcomp(&b).unwrap(), nat(2, 1, 1, &[19, 22, 43, 50]));
    }

    #[test]
    fn hcomp_is_the_kronecker_block_matrix() {
        let a = nat(2, 1, 1, &[1, 2, 3, 4]);
        let b = nat(2, 1, 1, &[5, 6, 7, 8]);
        let c = a.hcomp(&b).unwrap();
        // Block (i, j) of the 4x4 result is a_ij * B.
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let want = a.get0(&[i], &[j]).mul(b.get0(&[k], &[l]));
                        assert_eq!(c.get0(&[i, k], &[j, l]), &want);
                    }
                }
            }
        }
    }

    #[test]
    fn basis_hcomp_concatenates() {
        let e1 = Hypermatrix::<Natural>::basis(2, 1, 1, &[1], &[2]).unwrap();
        let e2 = Hypermatrix::<Natural>::basis(2, 1, 1, &[2], &[1]).unwrap();
        assert_eq!(e1.hcomp(&e2).unwrap(), Hypermatrix::basis(2, 2, 2, &[1, 2], &[2, 1]).unwrap());
    }

    #[test]
    fn scalar_one_is_the_horizontal_unit() {
        let a = nat(2, 1, 1, &[1, 2, 3, 4]);
        let one = Hypermatrix::identity(2, 0).unwrap();
        assert_eq!(a.hcomp(&one).unwrap(), a);
        assert_eq!(one.hcomp(&a).unwrap(), a);
    }

    #[test]
    fn identity_ranks() {
        let i1 = Hypermatrix::<Boolean>::identity(2, 1).unwrap();
        assert_eq!(Hypermatrix::identity(2, 2).unwrap(), i1.hcomp(&i1).unwrap());
        assert_eq!(Hypermatrix::<Boolean>::identity(3, 0).unwrap().as_scalar(), Some(&Boolean(true)));
    }

    #[test]
    fn mod_div_examples() {
        assert_eq!(mod_div(&[3], 2).unwrap(), (vec![1], vec![2]));
        assert_eq!(mod_div(&[5, 2], 2).unwrap(), (vec![1, 2], vec![3, 1]));
        assert!(mod_div(&[1], 0).is_err());
    }

    #[test]
    fn kronecker_of_identities() {
        let a = Hypermatrix::<Natural>::identity(2, 1).unwrap();
        let b = Hypermatrix::<Natural>::identity(3, 1).unwrap();
        assert_eq!(a.kronecker(&b).unwrap(), Hypermatrix::identity(6, 1).unwrap());
    }

    #[test]
    fn quasi_sum_counterexample() {
        let i1 = Hypermatrix::<Natural>::identity(1, 1).unwrap();
        let s = i1.quasi_direct_sum(&i1).unwrap();
        let left = s.hcomp(&s).unwrap();
        let right = i1.hcomp(&i1).unwrap().quasi_direct_sum(&i1.hcomp(&i1).unwrap()).unwrap();
        assert_eq!(left, Hypermatrix::identity(2, 2).unwrap());
        assert_eq!(left.get(&[1, 2], &[1, 2]).unwrap(), &Natural::from(1));
        assert_eq!(right.get(&[1, 2], &[1, 2]).unwrap(), &Natural::from(0));
    }

    #[test]
    fn trace_of_identity() {
        let i = Hypermatrix::<Natural>::identity(3, 2).unwrap();
        assert_eq!(i.trace().unwrap(), Natural::from(9));
        assert!(nat(2, 1, 0, &[1, 1]).trace().is_err());
    }

    #[test]
    fn shape_errors() {
        let a = nat(2, 1, 1, &[1, 2, 3, 4]);
        let b = nat(2, 2, 1, &[0; 8]);
        assert!(matches!(a.vcomp(&b), Err(Error::Shape(_))));
        let c = nat(3, 1, 1, &[0; 9]);
        assert!(matches!(a.hcomp(&c), Err(Error::BaseDim { .. })));
        assert!(a.add(&b).is_err());
        assert!(Hypermatrix::<Natural>::basis(2, 1, 1, &[3], &[1]).is_err());
    }

    #[test]
    fn json_dense_and_sparse() {
        let a = Hypermatrix::<Rational>::from_entries(
            2,
            1,
            1,
            vec![Rational::new(1, 2), Rational::zero(), Rational::zero(), Rational::new(-3, 7)],
        )
        .unwrap();
        assert_eq!(Hypermatrix::from_json(&a.to_json()).unwrap(), a);
        let sparse = serde_json::json!({
            "N": 2, "out_rank": 1, "in_rank": 1,
            "sparse": [{"out": [1], "in": [1], "val": "1/2"}, {"out": [2], "in": [2], "val": "-3/7"}]
        });
        assert_eq!(Hypermatrix::from_json(&sparse).unwrap(), a);
    }

    #[test]
    fn decompose_round_trips() {
        let a = nat(2, 1, 2, &[0, 3, 1, 0, 0, 0, 2, 5]);
        let mut acc = Hypermatrix::zeros(2, 1, 2).unwrap();
        for (v, i, j) in a.decompose() {
            acc = acc.add(&Hypermatrix::basis(2, 1, 2, &i, &j).unwrap().scale(&v)).unwrap();
        }
        assert_eq!(acc, a);
    }
}
