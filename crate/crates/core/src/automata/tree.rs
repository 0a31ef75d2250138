//! Bottom-up tree automata and their encoding as representations.
//!
//! A letter of rank `k` becomes a `(k,1)` chip whose input is the state at the
//! node and whose outputs are the children's states, so trees grow upward
//! from the root. The root is closed by a `(1,0)` chip weighting final
//! states, holes by `(0,1)` chips accepting every state.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde_json::{json, Value};

use crate::circuit::{ChipDecl, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::{Hypermatrix, MultiIndex};
use crate::represent::Representation;
use crate::semiring::{Boolean, Semiring};

use super::word::{BOTTOM, TOP};

/// A ranked tree, possibly with holes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Node(String, Vec<Tree>),
    Hole,
}

impl Tree {
    pub fn leaf(letter: &str) -> Tree {
        Tree::Node(letter.to_string(), Vec::new())
    }

    pub fn node(letter: &str, children: Vec<Tree>) -> Tree {
        Tree::Node(letter.to_string(), children)
    }

    /// Number of letter occurrences.
    pub fn size(&self) -> usize {
        match self {
            Tree::Hole => 0,
            Tree::Node(_, c) => 1 + c.iter().map(Tree::size).sum::<usize>(),
        }
    }

    pub fn holes(&self) -> usize {
        match self {
            Tree::Hole => 1,
            Tree::Node(_, c) => c.iter().map(Tree::holes).sum(),
        }
    }

    /// The letters as chips, children juxtaposed above their parent.
    pub fn to_term(&self) -> Term {
        match self {
            Tree::Hole => Term::wire(),
            Tree::Node(a, c) => {
                let kids: Vec<Term> = c.iter().map(Tree::to_term).collect();
                Term::hcat(&kids).vcomp(&Term::chip(a, c.len(), 1)).expect("children match the rank")
            }
        }
    }

    /// All holes-free trees with at most `max_nodes` nodes, over `(letter, rank)`.
    pub fn enumerate(alphabet: &[(&str, usize)], max_nodes: usize) -> Vec<Tree> {
        let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_nodes + 1];
        for n in 1..=max_nodes {
            let mut found = Vec::new();
            for &(a, k) in alphabet {
                for sizes in compositions(n - 1, k) {
                    if sizes.contains(&0) {
                        continue;
                    }
                    let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
                    for &s in &sizes {
                        acc = acc
                            .into_iter()
                            .flat_map(|prefix| {
                                by_size[s].iter().map(move |t| {
                                    let mut p = prefix.clone();
                                    p.push(t.clone());
                                    p
                                })
                            })
                            .collect();
                    }
                    found.extend(acc.into_iter().map(|c| Tree::node(a, c)));
                }
            }
            by_size[n] = found;
        }
        by_size.into_iter().flatten().collect()
    }
}

/// Ordered `k`-tuples of non-negative integers summing to `n`.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Hole => write!(f, "_"),
            Tree::Node(a, c) if c.is_empty() => write!(f, "{a}"),
            Tree::Node(a, c) => {
                write!(f, "{a}(")?;
                for (i, t) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// `circuit(t) = ⊤^{↔holes} ↕ t̃ ↕ ⊥`.
pub fn tree_to_circuit(t: &Tree) -> Term {
    let top = Term::chip(TOP, 0, 1).hpow(t.holes());
    let body = t.to_term();
    let root = Term::chip(BOTTOM, 1, 0);
    top.vcomp(&body.vcomp(&root).expect("single root")).expect("one cap per hole")
}

/// `(Q, Σ, δ, F)` with states `1..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeAutomaton {
    states: usize,
    ranks: BTreeMap<String, usize>,
    delta: BTreeMap<(String, Vec<usize>), BTreeSet<usize>>,
    finals: BTreeSet<usize>,
}

impl TreeAutomaton {
    pub fn new(states: usize, ranks: impl IntoIterator<Item = (String, usize)>, finals: impl IntoIterator<Item = usize>) -> Result<Self> {
        if states == 0 {
            return Err(Error::Invalid("a tree automaton needs at least one state".into()));
        }
        let ranks: BTreeMap<String, usize> = ranks.into_iter().collect();
        if ranks.contains_key(TOP) || ranks.contains_key(BOTTOM) {
            return Err(Error::Invalid(format!("`{TOP}` and `{BOTTOM}` are reserved")));
        }
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        if finals.iter().any(|&q| q == 0 || q > states) {
            return Err(Error::Index(format!("final states must lie in 1..={states}")));
        }
        Ok(TreeAutomaton { states, ranks, delta: BTreeMap::new(), finals })
    }

    /// Add `to ∈ δ(letter, children)`.
    pub fn add_transition(&mut self, letter: &str, children: &[usize], to: usize) -> Result<()> {
        let k = *self.ranks.get(letter).ok_or_else(|| Error::UnknownLetter(letter.to_string()))?;
        if children.len() != k {
            return Err(Error::Arity(format!("`{letter}` has rank {k}, got {} children", children.len())));
        }
        if children.iter().chain([&to]).any(|&q| q == 0 || q > self.states) {
            return Err(Error::Index(format!("states must lie in 1..={}", self.states)));
        }
        self.delta.entry((letter.to_string(), children.to_vec())).or_default().insert(to);
        Ok(())
    }

    /// Each transition is present with probability `density`.
    pub fn random<R: Rng + ?Sized>(states: usize, ranks: &[(&str, usize)], density: f64, rng: &mut R) -> Result<Self> {
        let mut a = TreeAutomaton::new(states, ranks.iter().map(|&(a, k)| (a.to_string(), k)), [])?;
        for q in 1..=states {
            if rng.gen_bool(0.5) {
                a.finals.insert(q);
            }
        }
        for &(letter, k) in ranks {
            for children in MultiIndex::all(states, k) {
                for to in 1..=states {
                    if rng.gen_bool(density) {
                        a.add_transition(letter, children.digits(), to)?;
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn rank(&self, letter: &str) -> Option<usize> {
        self.ranks.get(letter).copied()
    }

    pub fn transitions(&self, letter: &str, children: &[usize]) -> Option<&BTreeSet<usize>> {
        self.delta.get(&(letter.to_string(), children.to_vec()))
    }

    /// `δ*(t)`, with `δ*(hole) = Q`.
    pub fn delta_star(&self, t: &Tree) -> Result<BTreeSet<usize>> {
        match t {
            Tree::Hole => Ok((1..=self.states).collect()),
            Tree::Node(a, c) => {
                let k = self.rank(a).ok_or_else(|| Error::UnknownLetter(a.clone()))?;
                if k != c.len() {
                    return Err(Error::Arity(format!("`{a}` has rank {k}, got {} children", c.len())));
                }
                let kids = c.iter().map(|t| self.delta_star(t)).collect::<Result<Vec<_>>>()?;
                let mut out = BTreeSet::new();
                let mut choice = Vec::with_capacity(k);
                self.collect(a, &kids, &mut choice, &mut out);
                Ok(out)
            }
        }
    }

    fn collect(&self, a: &str, kids: &[BTreeSet<usize>], choice: &mut Vec<usize>, out: &mut BTreeSet<usize>) {
        if choice.len() == kids.len() {
            if let Some(s) = self.transitions(a, choice) {
                out.extend(s);
            }
            return;
        }
        for &q in &kids[choice.len()] {
            choice.push(q);
            self.collect(a, kids, choice, out);
            choice.pop();
        }
    }

    pub fn accepts(&self, t: &Tree) -> Result<bool> {
        Ok(!self.delta_star(t)?.is_disjoint(&self.finals))
    }

    /// Signature `{⊥, ⊤, letters}` and the boolean representation of the automaton.
    pub fn tree_rep(&self) -> Result<(Signature, Representation<Boolean>)> {
        self.tree_rep_in::<Boolean>()
    }

    /// The same representation with entries `0`/`1` in any semiring.
    pub fn tree_rep_in<S: Semiring>(&self) -> Result<(Signature, Representation<S>)> {
        let n = self.states;
        let indicator = |b: bool| if b { S::one() } else { S::zero() };
        let mut chips = vec![ChipDecl::new(BOTTOM, 1, 0), ChipDecl::new(TOP, 0, 1)];
        let mut maps = vec![
            (BOTTOM.to_string(), Hypermatrix::from_fn(n, 1, 0, |o, _| indicator(self.finals.contains(&o[0])))?),
            (TOP.to_string(), Hypermatrix::from_fn(n, 0, 1, |_, _| S::one())?),
        ];
        for (a, &k) in &self.ranks {
            chips.push(ChipDecl::new(a.clone(), k, 1));
            let mut h = Hypermatrix::zeros(n, k, 1)?;
            for ((letter, children), targets) in self.delta.range((a.clone(), Vec::new())..) {
                if letter != a {
                    break;
                }
                for &q in targets {
                    h.set(children, &[q], S::one())?;
                }
            }
            maps.push((a.clone(), h));
        }
        let sig = Signature::new(chips)?;
        let rep = Representation::for_signature(&sig, n, maps)?;
        Ok((sig, rep))
    }

    /// `{"states":N, "arities":{..}, "delta":[{"letter","children","to"}], "finals":[..]}`.
    pub fn to_json(&self) -> Value {
        let delta: Vec<Value> = self
            .delta
            .iter()
            .flat_map(|((a, c), to)| to.iter().map(move |q| json!({"letter": a, "children": c, "to": q})))
            .collect();
        json!({"states": self.states, "arities": self.ranks, "delta": delta, "finals": self.finals})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("tree automaton: {m}"));
        let ranks = v
            .get("arities")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing `arities`"))?
            .iter()
            .map(|(a, k)| Ok((a.clone(), k.as_u64().ok_or_else(|| bad("ranks must be integers"))? as usize)))
            .collect::<Result<Vec<_>>>()?;
        let finals = v
            .get("finals")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `finals`"))?
            .iter()
            .map(|q| q.as_u64().map(|q| q as usize).ok_or_else(|| bad("states must be integers")))
            .collect::<Result<Vec<_>>>()?;
        let delta = v.get("delta").and_then(Value::as_array).ok_or_else(|| bad("missing `delta`"))?;
        let mut max_state = finals.iter().copied().max().unwrap_or(0);
        let mut rules = Vec::new();
        for d in delta {
            let letter = d.get("letter").and_then(Value::as_str).ok_or_else(|| bad("transition without `letter`"))?;
            let children = d
                .get("children")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("transition without `children`"))?
                .iter()
                .map(|q| q.as_u64().map(|q| q as usize).ok_or_else(|| bad("states must be integers")))
                .collect::<Result<Vec<_>>>()?;
            let to = d.get("to").and_then(Value::as_u64).ok_or_else(|| bad("transition without `to`"))? as usize;
            max_state = max_state.max(to).max(children.iter().copied().max().unwrap_or(0));
            rules.push((letter.to_string(), children, to));
        }
        let states = match v.get("states") {
            Some(s) => s.as_u64().ok_or_else(|| bad("`states` must be an integer"))? as usize,
            None => max_state.max(1),
        };
        let mut a = TreeAutomaton::new(states, ranks, finals).map_err(|e| bad(&e.to_string()))?;
        for (letter, children, to) in rules {
            a.add_transition(&letter, &children, to).map_err(|e| bad(&e.to_string()))?;
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const ALPHABET: [(&str, usize); 3] = [("a", 2), ("b", 0), ("c", 0)];

    fn random_automaton(seed: u64) -> TreeAutomaton {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        TreeAutomaton::random(3, &ALPHABET, 0.3, &mut rng).unwrap()
    }

    #[test]
    fn counts_trees() {
        // Catalan(n)·2^(n+1) trees with n binary nodes
        let trees = Tree::enumerate(&ALPHABET, 7);
        assert_eq!(trees.len(), 2 + 4 + 16 + 80);
        assert!(trees.iter().all(|t| t.size() <= 7 && t.size() % 2 == 1));
    }

    #[test]
    fn leaf_letter() {
        let mut a = TreeAutomaton::new(2, [("b".to_string(), 0)], [2]).unwrap();
        a.add_transition("b", &[], 2).unwrap();
        assert_eq!(a.delta_star(&Tree::leaf("b")).unwrap(), BTreeSet::from([2]));
        assert!(a.accepts(&Tree::leaf("b")).unwrap());
    }

    #[test]
    fn representation_agrees_with_delta_star() {
        for seed in 0..3 {
            let a = random_automaton(seed);
            let (_, rep) = a.tree_rep().unwrap();
            for t in Tree::enumerate(&ALPHABET, 5) {
                let v = rep.eval(&tree_to_circuit(&t)).unwrap();
                assert_eq!(v.as_scalar().unwrap().0, a.accepts(&t).unwrap(), "{t}");
            }
        }
    }

    #[test]
    fn holes_accept_all_states() {
        let a = random_automaton(7);
        let (_, rep) = a.tree_rep().unwrap();
        let t = Tree::node("a", vec![Tree::Hole, Tree::leaf("b")]);
        let c = tree_to_circuit(&t);
        assert_eq!(c.arity(), (0, 0));
        assert_eq!(rep.eval(&c).unwrap().as_scalar().unwrap().0, a.accepts(&t).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let a = random_automaton(11);
        assert_eq!(TreeAutomaton::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn unknown_letter() {
        let a = random_automaton(1);
        assert_eq!(a.delta_star(&Tree::leaf("z")), Err(Error::UnknownLetter("z".into())));
    }
}
