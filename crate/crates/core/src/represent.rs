//! Representations of free PROs: one hypermatrix per chip, extended to all
//! circuits by structural evaluation.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::circuit::{ChipDecl, Node, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::Hypermatrix;
use crate::semiring::{Semiring, SemiringKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S> {
    dim: usize,
    chips: BTreeMap<String, Hypermatrix<S>>,
}

impl<S: Semiring> Representation<S> {
    /// Every assigned hypermatrix must have base dimension `dim`.
    pub fn new(dim: usize, chips: impl IntoIterator<Item = (String, Hypermatrix<S>)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("base dimension must be at least 1".into()));
        }
        let mut map = BTreeMap::new();
        for (name, h) in chips {
            if h.dim() != dim {
                return Err(Error::BaseDim { left: dim, right: h.dim() });
            }
            if map.insert(name.clone(), h).is_some() {
                return Err(Error::Invalid(format!("chip `{name}` assigned twice")));
            }
        }
        Ok(Representation { dim, chips: map })
    }

    /// Like [`Representation::new`], also requiring that the chips are
    /// exactly those of `sig` with matching ranks.
    pub fn for_signature(
        sig: &Signature,
        dim: usize,
        chips: impl IntoIterator<Item = (String, Hypermatrix<S>)>,
    ) -> Result<Self> {
        let rep = Self::new(dim, chips)?;
        for c in sig.chips() {
            let h = rep.chips.get(&c.name).ok_or_else(|| Error::UnknownChip(c.name.clone()))?;
            if (h.out_rank(), h.in_rank()) != (c.out, c.inp) {
                return Err(Error::Shape(format!(
                    "chip `{}` is ({},{}) but its hypermatrix is ({},{})",
                    c.name,
                    c.out,
                    c.inp,
                    h.out_rank(),
                    h.in_rank()
                )));
            }
        }
        if rep.chips.len() != sig.len() {
            let extra = rep.chips.keys().find(|k| sig.get(k).is_none()).expect("extra chip");
            return Err(Error::Invalid(format!("chip `{extra}` is not in the signature")));
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, name: &str) -> Option<&Hypermatrix<S>> {
        self.chips.get(name)
    }

    pub fn chips(&self) -> impl Iterator<Item = (&String, &Hypermatrix<S>)> {
        self.chips.iter()
    }

    /// The signature read off the assigned shapes.
    pub fn signature(&self) -> Signature {
        Signature::new(self.chips.iter().map(|(n, h)| ChipDecl::new(n.clone(), h.out_rank(), h.in_rank())))
            .expect("names are unique")
    }

    /// The PRO morphism applied to `t`.
    pub fn eval(&self, t: &Term) -> Result<Hypermatrix<S>> {
        match t.node() {
            Node::Empty => Hypermatrix::identity(self.dim, 0),
            Node::Wire => Hypermatrix::identity(self.dim, 1),
            Node::Chip(c) => {
                let h = self.chips.get(&c.name).ok_or_else(|| Error::UnknownChip(c.name.clone()))?;
                if (h.out_rank(), h.in_rank()) != (c.out, c.inp) {
                    return Err(Error::Arity(format!(
                        "chip `{}` used as ({},{}) but represented as ({},{})",
                        c.name,
                        c.out,
                        c.inp,
                        h.out_rank(),
                        h.in_rank()
                    )));
                }
                Ok(h.clone())
            }
            Node::HComp(a, b) => self.eval(a)?.hcomp(&self.eval(b)?),
            Node::VComp(a, b) => self.eval(a)?.vcomp(&self.eval(b)?),
        }
    }

    /// `c · μ(t)` for a covector `c` over `[N]^m` (row-major), returned as a
    /// covector over `[N]^n`, without forming `μ(t)` for juxtapositions.
    pub fn covector_eval(&self, cov: &[S], t: &Term) -> Result<Vec<S>> {
        let m = t.out_arity();
        let size = |k: usize| {
            self.dim
                .checked_pow(k as u32)
                .filter(|&s| s <= 1 << 26)
                .ok_or_else(|| Error::Shape(format!("{}^{k} entries is too large", self.dim)))
        };
        if cov.len() != size(m)? {
            return Err(Error::Shape(format!("covector of length {} for {m} outputs", cov.len())));
        }
        match t.node() {
            Node::Empty | Node::Wire => Ok(cov.to_vec()),
            Node::VComp(a, b) => self.covector_eval(&self.covector_eval(cov, a)?, b),
            Node::HComp(a, b) => {
                let ((m1, n1), (m2, n2)) = (a.arity(), b.arity());
                let (sm2, sn1, sn2) = (size(m2)?, size(n1)?, size(n2)?);
                let sm1 = size(m1)?;
                // mid[v1][u2] = Σ_{u1} cov[u1][u2] · μ(a)^{u1}_{v1}
                let mut mid = vec![S::zero(); sn1 * sm2];
                let mut slice = vec![S::zero(); sm1];
                for u2 in 0..sm2 {
                    let mut nonzero = false;
                    for (u1, s) in slice.iter_mut().enumerate() {
                        *s = cov[u1 * sm2 + u2].clone();
                        nonzero |= !s.is_zero();
                    }
                    if !nonzero {
                        continue;
                    }
                    for (v1, x) in self.covector_eval(&slice, a)?.into_iter().enumerate() {
                        mid[v1 * sm2 + u2] = x;
                    }
                }
                let mut out = vec![S::zero(); sn1 * sn2];
                for v1 in 0..sn1 {
                    let row = &mid[v1 * sm2..(v1 + 1) * sm2];
                    if row.iter().all(S::is_zero) {
                        continue;
                    }
                    let r = self.covector_eval(row, b)?;
                    out[v1 * sn2..(v1 + 1) * sn2].clone_from_slice(&r);
                }
                Ok(out)
            }
            Node::Chip(_) => {
                let h = self.eval(t)?;
                let cols = h.cols();
                let mut out = vec![S::zero(); cols];
                for (u, c) in cov.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (v, o) in out.iter_mut().enumerate() {
                        let e = &h.entries()[u * cols + v];
                        if !e.is_zero() {
                            *o = o.add(&c.mul(e));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        dim: usize,
        f: impl Fn(&Hypermatrix<S>, &Hypermatrix<S>) -> Result<Hypermatrix<S>>,
    ) -> Result<Self> {
        if self.chips.len() != other.chips.len() || self.chips.keys().any(|k| !other.chips.contains_key(k)) {
            return Err(Error::Invalid("representations are over different signatures".into()));
        }
        let chips = self
            .chips
            .iter()
            .map(|(k, a)| {
                let b = &other.chips[k];
                if (a.out_rank(), a.in_rank()) != (b.out_rank(), b.in_rank()) {
                    return Err(Error::Shape(format!("chip `{k}` has different ranks in the two representations")));
                }
                Ok((k.clone(), f(a, b)?))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Representation { dim, chips })
    }

    /// Chipwise Kronecker product, of dimension `M·N`.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, self.dim * other.dim, |a, b| a.kronecker(b))
    }

    /// Chipwise quasi-direct sum, of dimension `M+N`.
    pub fn quasi_sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, self.dim + other.dim, |a, b| a.quasi_direct_sum(b))
    }

    pub fn to_json(&self) -> Value {
        let chips: Map<String, Value> = self.chips.iter().map(|(k, h)| (k.clone(), h.to_json())).collect();
        json!({"N": self.dim, "semiring": S::KIND.name(), "chips": chips})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(tag) = v.get("semiring") {
            let tag = tag.as_str().and_then(SemiringKind::parse);
            if tag != Some(S::KIND) {
                return Err(Error::Parse(format!("representation is not over {}", S::KIND)));
            }
        }
        let dim = v
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("representation needs `N`".into()))? as usize;
        let chips = v
            .get("chips")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("representation needs a `chips` object".into()))?;
        let chips = chips
            .iter()
            .map(|(k, h)| Ok((k.clone(), Hypermatrix::from_json(h)?)))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(dim, chips)
    }
}
