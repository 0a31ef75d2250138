//! PRO automata `(Q, μ, I, J)`: a circuit of arity `(m, n)` is accepted when
//! some output word `u ∈ I` of length `m` and input word `v ∈ J` of length
//! `n` select a non-zero entry `μ(x)^u_v`.

use serde_json::{json, Value};

use crate::circuit::{Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::{Hypermatrix, MultiIndex};
use crate::represent::Representation;
use crate::semiring::{Semiring, SemiringKind};

use super::word::{alphabet, lang_odot, shift_union, WordAutomaton};

/// `E(N,k,0; w, [])`: plugged below a circuit, it feeds the input word `w`.
pub fn in_matrix<S: Semiring>(w: &[usize], n: usize) -> Result<Hypermatrix<S>> {
    Hypermatrix::basis(n, w.len(), 0, w, &[])
}

/// `E(N,0,k; [], w)`: plugged above a circuit, it reads the output word `w`.
pub fn out_matrix<S: Semiring>(w: &[usize], n: usize) -> Result<Hypermatrix<S>> {
    Hypermatrix::basis(n, 0, w.len(), &[], w)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProAutomaton<S> {
    mu: Representation<S>,
    outputs: WordAutomaton<S>,
    inputs: WordAutomaton<S>,
}

impl<S: Semiring> ProAutomaton<S> {
    /// `outputs` weighs the words read at the top of a circuit, `inputs` the
    /// words fed at the bottom; both read the alphabet `1..=N`.
    pub fn new(mu: Representation<S>, outputs: WordAutomaton<S>, inputs: WordAutomaton<S>) -> Result<Self> {
        let want = alphabet(mu.dim());
        for (role, a) in [("output", &outputs), ("input", &inputs)] {
            let mut letters: Vec<&String> = a.letters().collect();
            letters.sort_by_key(|l| l.parse::<usize>().unwrap_or(usize::MAX));
            if letters.len() != want.len() || letters.iter().zip(&want).any(|(l, w)| *l != w) {
                return Err(Error::Invalid(format!("{role} automaton must read exactly 1..={}", mu.dim())));
            }
        }
        for (name, h) in mu.chips() {
            if h.out_rank() == 0 || h.in_rank() == 0 {
                return Err(Error::Invalid(format!("chip `{name}` is not pluggable")));
            }
        }
        Ok(ProAutomaton { mu, outputs, inputs })
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn representation(&self) -> &Representation<S> {
        &self.mu
    }

    pub fn outputs(&self) -> &WordAutomaton<S> {
        &self.outputs
    }

    pub fn inputs(&self) -> &WordAutomaton<S> {
        &self.inputs
    }

    pub fn signature(&self) -> Signature {
        self.mu.signature()
    }

    /// `Σ_{u,v} ⟨u,I⟩ ⟨v,J⟩ μ(t)^u_v`, by forward vectors of both word
    /// automata and a covector sweep through `t`.
    pub fn weighted_accept(&self, t: &Term) -> Result<S> {
        let (m, n) = t.arity();
        let letters = alphabet(self.dim());
        let top = self.outputs.forward_weights(&letters, m)?;
        let below = self.inputs.forward_weights(&letters, n)?;
        let row = self.mu.covector_eval(&top, t)?;
        Ok(row.iter().zip(&below).fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b))))
    }

    /// Membership: some weighted pair `(u, v)` hits a non-zero entry.
    /// Coincides with `weighted_accept(t) != 0` over the booleans.
    pub fn accepts(&self, t: &Term) -> Result<bool> {
        if S::KIND == SemiringKind::Boolean {
            return Ok(!self.weighted_accept(t)?.is_zero());
        }
        self.accepts_by_enumeration(t)
    }

    /// Membership by enumerating `u` and `v` and contracting
    /// `OUT_u ↕ μ(t) ↕ IN_v` explicitly.
    pub fn accepts_by_enumeration(&self, t: &Term) -> Result<bool> {
        let (m, n) = t.arity();
        let dim = self.dim();
        let value = self.mu.eval(t)?;
        let inputs: Vec<Vec<usize>> = MultiIndex::all(dim, n)
            .map(|v| v.digits().to_vec())
            .filter(|v| self.inputs.coeff_digits(v).map(|c| !c.is_zero()).unwrap_or(false))
            .collect();
        for u in MultiIndex::all(dim, m) {
            if self.outputs.coeff_digits(u.digits())?.is_zero() {
                continue;
            }
            let row = out_matrix::<S>(u.digits(), dim)?.vcomp(&value)?;
            for v in &inputs {
                let s = row.vcomp(&in_matrix(v, dim)?)?;
                if !s.as_scalar().expect("closed").is_zero() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// `(NN′, μ ⊙̂ μ′, I ⊙ I′, J ⊙ J′)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        let (n, n2) = (self.dim(), other.dim());
        ProAutomaton::new(
            self.mu.hadamard(&other.mu)?,
            lang_odot(&self.outputs, n, &other.outputs, n2)?,
            lang_odot(&self.inputs, n, &other.inputs, n2)?,
        )
    }

    /// `(N+N′, μ ⊕̂ μ′, I ∪ shift(I′), J ∪ shift(J′))`, boolean only.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if S::KIND != SemiringKind::Boolean {
            return Err(Error::NonBoolean("union of PRO automata"));
        }
        let (n, n2) = (self.dim(), other.dim());
        ProAutomaton::new(
            self.mu.quasi_sum(&other.mu)?,
            shift_union(&self.outputs, n, &other.outputs, n2)?,
            shift_union(&self.inputs, n, &other.inputs, n2)?,
        )
    }

    /// `{"N": .., "mu": representation, "I": word automaton, "J": word automaton}`.
    pub fn to_json(&self) -> Value {
        json!({"N": self.dim(), "mu": self.mu.to_json(), "I": self.outputs.to_json(), "J": self.inputs.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let part = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("PRO automaton needs `{k}`")));
        let mu = Representation::from_json(part("mu")?)?;
        if let Some(n) = v.get("N") {
            if n.as_u64() != Some(mu.dim() as u64) {
                return Err(Error::Parse("`N` disagrees with the representation".into()));
            }
        }
        let outputs = WordAutomaton::from_json(part("I")?)?;
        let inputs = WordAutomaton::from_json(part("J")?)?;
        ProAutomaton::new(mu, outputs, inputs).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::word::{empty_language, universal};
    use crate::circuit::ChipDecl;
    use crate::semiring::{Boolean, Natural};

    #[test]
    fn basis_contraction() {
        let out = out_matrix::<Natural>(&[1, 2], 2).unwrap();
        let inp = in_matrix::<Natural>(&[1, 2], 2).unwrap();
        assert_eq!(out.vcomp(&inp).unwrap().as_scalar().unwrap(), &Natural::from(1));
        let other = in_matrix::<Natural>(&[2, 2], 2).unwrap();
        assert_eq!(out.vcomp(&other).unwrap().as_scalar().unwrap(), &Natural::from(0));
        assert!(in_matrix::<Natural>(&[3], 2).is_err());
    }

    fn swap_automaton() -> ProAutomaton<Boolean> {
        // one chip s (1,1) sending state 1 to 2 and 2 to 1
        let sig = Signature::new([ChipDecl::new("s", 1, 1)]).unwrap();
        let s = Hypermatrix::from_fn(2, 1, 1, |o, i| Boolean(o[0] != i[0])).unwrap();
        let mu = Representation::for_signature(&sig, 2, [("s".to_string(), s)]).unwrap();
        let only = |a: usize| {
            // words made only of letter `a`
            crate::automata::word::dfa::<Boolean>(2, &[if a == 1 { vec![0, 1] } else { vec![1, 0] }, vec![1, 1]], &[0]).unwrap()
        };
        ProAutomaton::new(mu, only(2), only(1)).unwrap()
    }

    #[test]
    fn parity_of_swaps() {
        let a = swap_automaton();
        let s = Term::chip("s", 1, 1);
        let mut t = Term::wire();
        for k in 0..5 {
            assert_eq!(a.accepts(&t).unwrap(), k % 2 == 1, "{k} swaps");
            assert_eq!(a.accepts_by_enumeration(&t).unwrap(), k % 2 == 1);
            t = s.vcomp(&t).unwrap();
        }
        assert!(a.accepts(&Term::empty()).unwrap());
    }

    #[test]
    fn closure_with_trivial_automata() {
        let a = swap_automaton();
        let all = ProAutomaton::new(
            Representation::for_signature(&a.signature(), 1, [("s".to_string(), Hypermatrix::identity(1, 1).unwrap())]).unwrap(),
            universal(1).unwrap(),
            universal(1).unwrap(),
        )
        .unwrap();
        let none = ProAutomaton::new(a.representation().clone(), empty_language(2).unwrap(), a.inputs().clone()).unwrap();
        let i = a.intersect(&all).unwrap();
        let u = a.union(&none).unwrap();
        let s = Term::chip("s", 1, 1);
        let mut t = Term::wire();
        for _ in 0..4 {
            assert_eq!(i.accepts(&t).unwrap(), a.accepts(&t).unwrap());
            assert_eq!(u.accepts(&t).unwrap(), a.accepts(&t).unwrap());
            t = s.vcomp(&t).unwrap();
        }
    }

    #[test]
    fn union_needs_booleans() {
        let sig = Signature::new([ChipDecl::new("s", 1, 1)]).unwrap();
        let mu = Representation::for_signature(&sig, 1, [("s".to_string(), Hypermatrix::<Natural>::identity(1, 1).unwrap())]).unwrap();
        let a = ProAutomaton::new(mu, universal(1).unwrap(), universal(1).unwrap()).unwrap();
        assert_eq!(a.union(&a), Err(Error::NonBoolean("union of PRO automata")));
        assert_eq!(a.weighted_accept(&Term::wires(2)).unwrap(), Natural::from(1));
    }

    #[test]
    fn json_round_trip() {
        let a = swap_automaton();
        assert_eq!(ProAutomaton::<Boolean>::from_json(&a.to_json()).unwrap(), a);
    }
}
