//! Weighted word automata `(λ, ρ, γ)` and their encoding as representations.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::circuit::{ChipDecl, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::Hypermatrix;
use crate::represent::Representation;
use crate::semiring::Semiring;

/// Chip below a word circuit, carrying the initial weights.
pub const BOTTOM: &str = "bot";
/// Chip above a word circuit, carrying the final weights.
pub const TOP: &str = "top";

/// A weighted automaton with `states` states. `ρ(a)` is stored as an element
/// of `K(Q,1,1)` whose entry `^i_j` is the weight of the transition `i → j`.
#[derive(Debug, Clone, PartialEq)]
pub struct WordAutomaton<S> {
    states: usize,
    lambda: Vec<S>,
    rho: BTreeMap<String, Hypermatrix<S>>,
    gamma: Vec<S>,
}

impl<S: Semiring> WordAutomaton<S> {
    pub fn new(lambda: Vec<S>, rho: BTreeMap<String, Hypermatrix<S>>, gamma: Vec<S>) -> Result<Self> {
        let states = lambda.len();
        if states == 0 {
            return Err(Error::Invalid("a word automaton needs at least one state".into()));
        }
        if gamma.len() != states {
            return Err(Error::Shape(format!("λ has {states} states but γ has {}", gamma.len())));
        }
        for (a, m) in &rho {
            if m.shape() != (states, 1, 1) {
                return Err(Error::Shape(format!("ρ({a}) must be {states}×{states}")));
            }
        }
        Ok(WordAutomaton { states, lambda, rho, gamma })
    }

    /// Build from row-major transition matrices.
    pub fn from_rows(lambda: Vec<S>, rho: Vec<(&str, Vec<Vec<S>>)>, gamma: Vec<S>) -> Result<Self> {
        let n = lambda.len();
        let mut map = BTreeMap::new();
        for (a, rows) in rho {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Shape(format!("ρ({a}) must be {n}×{n}")));
            }
            map.insert(a.to_string(), Hypermatrix::from_entries(n, 1, 1, rows.into_iter().flatten().collect())?);
        }
        WordAutomaton::new(lambda, map, gamma)
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn lambda(&self) -> &[S] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[S] {
        &self.gamma
    }

    pub fn letters(&self) -> impl Iterator<Item = &String> {
        self.rho.keys()
    }

    pub fn rho(&self, letter: &str) -> Option<&Hypermatrix<S>> {
        self.rho.get(letter)
    }

    fn step(&self, v: &[S], letter: &str) -> Result<Vec<S>> {
        let m = self.rho.get(letter).ok_or_else(|| Error::UnknownLetter(letter.to_string()))?;
        let n = self.states;
        let e = m.entries();
        let mut out = vec![S::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let w = &e[i * n + j];
                if !w.is_zero() {
                    *o = o.add(&vi.mul(w));
                }
            }
        }
        Ok(out)
    }

    fn finish(&self, v: &[S]) -> S {
        v.iter().zip(&self.gamma).fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// `λ · ρ(w) · γ`.
    pub fn behavior_coeff<L: AsRef<str>>(&self, word: &[L]) -> Result<S> {
        let mut v = self.lambda.clone();
        for a in word {
            v = self.step(&v, a.as_ref())?;
        }
        Ok(self.finish(&v))
    }

    /// Coefficient of a word over the numeric alphabet `1..=N`.
    pub fn coeff_digits(&self, word: &[usize]) -> Result<S> {
        let letters: Vec<String> = word.iter().map(usize::to_string).collect();
        self.behavior_coeff(&letters)
    }

    /// Coefficients of all words of length `len` over `alphabet`, in
    /// lexicographic order of letter positions, by `len` synchronized steps.
    pub fn forward_weights<L: AsRef<str>>(&self, alphabet: &[L], len: usize) -> Result<Vec<S>> {
        let mut layer = vec![self.lambda.clone()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(layer.len() * alphabet.len());
            for v in &layer {
                for a in alphabet {
                    next.push(self.step(v, a.as_ref())?);
                }
            }
            layer = next;
        }
        Ok(layer.iter().map(|v| self.finish(v)).collect())
    }

    /// The signature `{bot ∈ X_{1,0}, top ∈ X_{0,1}, letters ∈ X_{1,1}}` and
    /// the representation with `μ(bot) = λ`, `μ(top) = γ` and `μ(a)` the
    /// transpose of `ρ(a)`, so that the circuit of `w` evaluates to `λρ(w)γ`.
    pub fn word_rep(&self) -> Result<(Signature, Representation<S>)> {
        let mut chips = vec![ChipDecl::new(BOTTOM, 1, 0), ChipDecl::new(TOP, 0, 1)];
        let mut maps = vec![
            (BOTTOM.to_string(), Hypermatrix::from_entries(self.states, 1, 0, self.lambda.clone())?),
            (TOP.to_string(), Hypermatrix::from_entries(self.states, 0, 1, self.gamma.clone())?),
        ];
        for (a, m) in &self.rho {
            if a == BOTTOM || a == TOP {
                return Err(Error::Invalid(format!("letter `{a}` clashes with a boundary chip")));
            }
            chips.push(ChipDecl::new(a.clone(), 1, 1));
            maps.push((a.clone(), m.transpose()));
        }
        let sig = Signature::new(chips)?;
        let rep = Representation::for_signature(&sig, self.states, maps)?;
        Ok((sig, rep))
    }

    pub fn to_json(&self) -> Value {
        let n = self.states;
        let rho: Map<String, Value> = self
            .rho
            .iter()
            .map(|(a, m)| {
                let rows: Vec<Value> =
                    m.entries().chunks(n).map(|r| Value::Array(r.iter().map(S::to_json).collect())).collect();
                (a.clone(), Value::Array(rows))
            })
            .collect();
        json!({
            "lambda": self.lambda.iter().map(S::to_json).collect::<Vec<_>>(),
            "rho": rho,
            "gamma": self.gamma.iter().map(S::to_json).collect::<Vec<_>>(),
        })
    }

    /// `{"lambda": [..], "rho": {"a": [[..], ..]}, "gamma": [..]}`; a letter
    /// matrix may also be given in hypermatrix form.
    pub fn from_json(v: &Value) -> Result<Self> {
        let vector = |k: &str| -> Result<Vec<S>> {
            v.get(k)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("word automaton needs a `{k}` list")))?
                .iter()
                .map(S::from_json)
                .collect()
        };
        let lambda = vector("lambda")?;
        let gamma = vector("gamma")?;
        let n = lambda.len();
        let rho_obj = v
            .get("rho")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("word automaton needs a `rho` object".into()))?;
        let mut rho = BTreeMap::new();
        for (a, m) in rho_obj {
            let h = match m {
                Value::Array(rows) => {
                    let mut entries = Vec::new();
                    for r in rows {
                        let r = r.as_array().ok_or_else(|| Error::Parse(format!("ρ({a}) rows must be lists")))?;
                        if r.len() != n {
                            return Err(Error::Parse(format!("ρ({a}) must be {n}×{n}")));
                        }
                        for x in r {
                            entries.push(S::from_json(x)?);
                        }
                    }
                    Hypermatrix::from_entries(n.max(1), 1, 1, entries).map_err(|e| Error::Parse(e.to_string()))?
                }
                other => Hypermatrix::from_json(other)?,
            };
            rho.insert(a.clone(), h);
        }
        WordAutomaton::new(lambda, rho, gamma).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `⊤ ↕ a_n ↕ .. ↕ a_1 ↕ ⊥`: the first letter sits just above `⊥`.
pub fn word_to_circuit<L: AsRef<str>>(word: &[L]) -> Term {
    let mut t = Term::chip(BOTTOM, 1, 0);
    for a in word {
        t = Term::chip(a.as_ref(), 1, 1).vcomp(&t).expect("letters are (1,1)");
    }
    Term::chip(TOP, 0, 1).vcomp(&t).expect("top closes a (1,0) stack")
}

/// Letters `(v_i - 1)·M + u_i`: the digit pairing of the Kronecker product.
pub fn word_odot(u: &[usize], v: &[usize], m: usize) -> Result<Vec<usize>> {
    if u.len() != v.len() {
        return Err(Error::Shape(format!("words of lengths {} and {}", u.len(), v.len())));
    }
    if u.iter().any(|&x| x == 0 || x > m) || v.contains(&0) {
        return Err(Error::Index(format!("letters of u must lie in 1..={m}, letters of v must be positive")));
    }
    Ok(u.iter().zip(v).map(|(&a, &b)| (b - 1) * m + a).collect())
}

fn numeric_alphabet(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Product automaton over `[M·N]` with `⟨u ⊙ v⟩ = ⟨u, A⟩ · ⟨v, B⟩` for
/// `|u| = |v|`; `a` reads `1..=m`, `b` reads `1..=n`.
pub fn lang_odot<S: Semiring>(a: &WordAutomaton<S>, m: usize, b: &WordAutomaton<S>, n: usize) -> Result<WordAutomaton<S>> {
    let (p, q) = (a.states, b.states);
    let kron_vec = |x: &[S], y: &[S]| -> Vec<S> { x.iter().flat_map(|xi| y.iter().map(move |yj| xi.mul(yj))).collect() };
    let mut rho = BTreeMap::new();
    for beta in 1..=n {
        let rb = b.rho(&beta.to_string()).ok_or_else(|| Error::UnknownLetter(beta.to_string()))?;
        for alpha in 1..=m {
            let ra = a.rho(&alpha.to_string()).ok_or_else(|| Error::UnknownLetter(alpha.to_string()))?;
            let h = Hypermatrix::from_fn(p * q, 1, 1, |i, j| {
                let (i0, j0) = (i[0] - 1, j[0] - 1);
                ra.get0(&[i0 / q], &[j0 / q]).mul(rb.get0(&[i0 % q], &[j0 % q]))
            })?;
            rho.insert(((beta - 1) * m + alpha).to_string(), h);
        }
    }
    WordAutomaton::new(kron_vec(&a.lambda, &b.lambda), rho, kron_vec(&a.gamma, &b.gamma))
}

/// Automaton over `[M+N]` reading `a` on letters `1..=m` and `b` on letters
/// shifted by `m`; words mixing the two ranges get weight zero except `ε`,
/// which gets `⟨ε,a⟩ + ⟨ε,b⟩`.
pub fn shift_union<S: Semiring>(a: &WordAutomaton<S>, m: usize, b: &WordAutomaton<S>, n: usize) -> Result<WordAutomaton<S>> {
    let (p, q) = (a.states, b.states);
    let mut rho = BTreeMap::new();
    for letter in 1..=m + n {
        let (src, off, key) = if letter <= m { (a, 0, letter) } else { (b, p, letter - m) };
        let r = src.rho(&key.to_string()).ok_or_else(|| Error::UnknownLetter(key.to_string()))?;
        let size = src.states;
        let h = Hypermatrix::from_fn(p + q, 1, 1, |i, j| {
            let (i0, j0) = (i[0] - 1, j[0] - 1);
            if (off..off + size).contains(&i0) && (off..off + size).contains(&j0) {
                r.get0(&[i0 - off], &[j0 - off]).clone()
            } else {
                S::zero()
            }
        })?;
        rho.insert(letter.to_string(), h);
    }
    let cat = |x: &[S], y: &[S]| x.iter().chain(y).cloned().collect::<Vec<_>>();
    WordAutomaton::new(cat(&a.lambda, &b.lambda), rho, cat(&a.gamma, &b.gamma))
}

/// The automaton with one state accepting every word over `1..=n` with weight one.
pub fn universal<S: Semiring>(n: usize) -> Result<WordAutomaton<S>> {
    let rho = numeric_alphabet(n)
        .into_iter()
        .map(|a| Ok((a, Hypermatrix::identity(1, 1)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    WordAutomaton::new(vec![S::one()], rho, vec![S::one()])
}

/// A boolean-style automaton with no accepted word.
pub fn empty_language<S: Semiring>(n: usize) -> Result<WordAutomaton<S>> {
    let rho = numeric_alphabet(n)
        .into_iter()
        .map(|a| Ok((a, Hypermatrix::identity(1, 1)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    WordAutomaton::new(vec![S::zero()], rho, vec![S::one()])
}

/// A complete deterministic automaton over `1..=n` given by
/// `next[q][a-1]` (0-based states), start state 0 and `finals`.
pub fn dfa<S: Semiring>(n: usize, next: &[Vec<usize>], finals: &[usize]) -> Result<WordAutomaton<S>> {
    let states = next.len();
    if next.iter().any(|row| row.len() != n || row.iter().any(|&q| q >= states)) {
        return Err(Error::Shape(format!("transition table must be {states}×{n} over 0..{states}")));
    }
    let mut rho = BTreeMap::new();
    for letter in 1..=n {
        let h = Hypermatrix::from_fn(states, 1, 1, |i, j| {
            if next[i[0] - 1][letter - 1] == j[0] - 1 {
                S::one()
            } else {
                S::zero()
            }
        })?;
        rho.insert(letter.to_string(), h);
    }
    let lambda = (0..states).map(|q| if q == 0 { S::one() } else { S::zero() }).collect();
    let gamma = (0..states).map(|q| if finals.contains(&q) { S::one() } else { S::zero() }).collect();
    WordAutomaton::new(lambda, rho, gamma)
}

/// A random complete deterministic automaton over `1..=n`.
pub fn random_dfa<S: Semiring, R: rand::Rng + ?Sized>(states: usize, n: usize, rng: &mut R) -> Result<WordAutomaton<S>> {
    let next: Vec<Vec<usize>> = (0..states).map(|_| (0..n).map(|_| rng.gen_range(0..states)).collect()).collect();
    let finals: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    dfa(n, &next, &finals)
}

/// All words over `1..=n` of length `len`, lexicographic.
pub fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
    crate::hypermat::MultiIndex::all(n, len).map(|w| w.digits().to_vec()).collect()
}

pub(crate) fn alphabet(n: usize) -> Vec<String> {
    numeric_alphabet(n)
}
