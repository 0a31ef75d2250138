//! Branching automata: sequential transitions plus fork and join
//! transitions on multisets of states.
//!
//! States flow upward. `⊥` (1,0) marks initial states, `⊤` (0,1) final
//! states, a letter `(1,1)` reads its source state below and emits its
//! target above, `fork{n}` `(n,1)` splits one state into `n` and `join{m}`
//! `(1,m)` merges `m` states into one.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuit::{ChipDecl, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::{Hypermatrix, MultiIndex};
use crate::represent::Representation;
use crate::semiring::Boolean;

use super::word::{BOTTOM, TOP};

pub fn fork_name(n: usize) -> String {
    format!("fork{n}")
}

pub fn join_name(m: usize) -> String {
    format!("join{m}")
}

/// `(Q, Σ, E_seq, E_fork, E_join, I, F)` with states `1..=N`. Multisets are
/// stored sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchingAutomaton {
    states: usize,
    seq: BTreeSet<(usize, String, usize)>,
    forks: BTreeSet<(usize, Vec<usize>)>,
    joins: BTreeSet<(Vec<usize>, usize)>,
    initial: BTreeSet<usize>,
    finals: BTreeSet<usize>,
}

impl BranchingAutomaton {
    pub fn new(states: usize, initial: impl IntoIterator<Item = usize>, finals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let a = BranchingAutomaton {
            states,
            seq: BTreeSet::new(),
            forks: BTreeSet::new(),
            joins: BTreeSet::new(),
            initial: initial.into_iter().collect(),
            finals: finals.into_iter().collect(),
        };
        if states == 0 {
            return Err(Error::Invalid("a branching automaton needs at least one state".into()));
        }
        a.check_states(a.initial.iter().chain(&a.finals))?;
        Ok(a)
    }

    fn check_states<'a>(&self, qs: impl IntoIterator<Item = &'a usize>) -> Result<()> {
        match qs.into_iter().find(|&&q| q == 0 || q > self.states) {
            Some(q) => Err(Error::Index(format!("state {q} not in 1..={}", self.states))),
            None => Ok(()),
        }
    }

    pub fn add_seq(&mut self, from: usize, letter: &str, to: usize) -> Result<()> {
        self.check_states([&from, &to])?;
        if letter == TOP || letter == BOTTOM || letter.starts_with("fork") || letter.starts_with("join") {
            return Err(Error::Invalid(format!("letter `{letter}` clashes with a structural chip")));
        }
        self.seq.insert((from, letter.to_string(), to));
        Ok(())
    }

    pub fn add_fork(&mut self, from: usize, to: &[usize]) -> Result<()> {
        self.check_states(to.iter().chain([&from]))?;
        if to.len() < 2 {
            return Err(Error::Arity("fork targets need at least two states".into()));
        }
        let mut to = to.to_vec();
        to.sort_unstable();
        self.forks.insert((from, to));
        Ok(())
    }

    pub fn add_join(&mut self, from: &[usize], to: usize) -> Result<()> {
        self.check_states(from.iter().chain([&to]))?;
        if from.len() < 2 {
            return Err(Error::Arity("join sources need at least two states".into()));
        }
        let mut from = from.to_vec();
        from.sort_unstable();
        self.joins.insert((from, to));
        Ok(())
    }

    pub fn letters(&self) -> BTreeSet<&str> {
        self.seq.iter().map(|(_, a, _)| a.as_str()).collect()
    }

    pub fn fork_arities(&self) -> BTreeSet<usize> {
        self.forks.iter().map(|(_, t)| t.len()).collect()
    }

    pub fn join_arities(&self) -> BTreeSet<usize> {
        self.joins.iter().map(|(s, _)| s.len()).collect()
    }

    /// The six-state automaton over `{a, b}` whose circuits pair every `a`
    /// with a `b`: forks `1 → {1,1}`, `1 → {2,3}`, letters `2 -a-> 4`,
    /// `3 -b-> 5`, joins `{4,5} → 6`, `{6,6} → 6`, `I = {1}`, `F = {1,6}`.
    pub fn balanced_example() -> Self {
        let mut a = BranchingAutomaton::new(6, [1], [1, 6]).expect("valid states");
        a.add_seq(2, "a", 4).expect("valid");
        a.add_seq(3, "b", 5).expect("valid");
        a.add_fork(1, &[1, 1]).expect("valid");
        a.add_fork(1, &[2, 3]).expect("valid");
        a.add_join(&[6, 6], 6).expect("valid");
        a.add_join(&[4, 5], 6).expect("valid");
        a
    }

    /// Signature `{⊥, ⊤, letters, fork{n}, join{m}}` and the boolean
    /// representation. Fork and join hypermatrices are symmetric in their
    /// multi-index.
    pub fn branching_rep(&self) -> Result<(Signature, Representation<Boolean>)> {
        let n = self.states;
        let one = Boolean(true);
        let mut chips = vec![ChipDecl::new(BOTTOM, 1, 0), ChipDecl::new(TOP, 0, 1)];
        let mut maps = vec![
            (BOTTOM.to_string(), Hypermatrix::from_fn(n, 1, 0, |o, _| Boolean(self.initial.contains(&o[0])))?),
            (TOP.to_string(), Hypermatrix::from_fn(n, 0, 1, |_, i| Boolean(self.finals.contains(&i[0])))?),
        ];
        let mut letters: BTreeMap<&str, Hypermatrix<Boolean>> = BTreeMap::new();
        for (from, a, to) in &self.seq {
            if !letters.contains_key(a.as_str()) {
                letters.insert(a, Hypermatrix::zeros(n, 1, 1)?);
            }
            letters.get_mut(a.as_str()).expect("inserted").set(&[*to], &[*from], one)?;
        }
        for (a, h) in letters {
            chips.push(ChipDecl::new(a, 1, 1));
            maps.push((a.to_string(), h));
        }
        for k in self.fork_arities() {
            let h = Hypermatrix::from_fn(n, k, 1, |o, i| {
                let mut key = o.to_vec();
                key.sort_unstable();
                Boolean(self.forks.contains(&(i[0], key)))
            })?;
            chips.push(ChipDecl::new(fork_name(k), k, 1));
            maps.push((fork_name(k), h));
        }
        for k in self.join_arities() {
            let h = Hypermatrix::from_fn(n, 1, k, |o, i| {
                let mut key = i.to_vec();
                key.sort_unstable();
                Boolean(self.joins.contains(&(key, o[0])))
            })?;
            chips.push(ChipDecl::new(join_name(k), 1, k));
            maps.push((join_name(k), h));
        }
        let sig = Signature::new(chips)?;
        let rep = Representation::for_signature(&sig, n, maps)?;
        Ok((sig, rep))
    }

    /// Coefficient of a `(1,1)` circuit in the language series:
    /// `μ(⊤ ↕ c ↕ ⊥)`.
    pub fn coefficient(&self, rep: &Representation<Boolean>, c: &Term) -> Result<bool> {
        if c.arity() != (1, 1) {
            return Err(Error::Arity(format!("language circuits are (1,1), got {:?}", c.arity())));
        }
        let closed = Term::chip(TOP, 0, 1).vcomp(&c.vcomp(&Term::chip(BOTTOM, 1, 0))?)?;
        Ok(rep.eval(&closed)?.as_scalar().expect("closed circuit").0)
    }
}

/// The sequential letters of a circuit read left to right in syntax order,
/// dropping boundary, fork and join chips.
pub fn strip_structure(c: &Term) -> Vec<String> {
    c.chip_names()
        .into_iter()
        .filter(|a| a != TOP && a != BOTTOM && !a.starts_with("fork") && !a.starts_with("join"))
        .collect()
}

/// All planar binary trees with `leaves` leaves built from `chip`, as
/// `(leaves, 1)` circuits when `up` (forks) or `(1, leaves)` circuits
/// otherwise (joins).
pub fn binary_trees(chip: &str, leaves: usize, up: bool) -> Vec<Term> {
    if leaves == 1 {
        return vec![Term::wire()];
    }
    let mut out = Vec::new();
    for left in 1..leaves {
        for l in binary_trees(chip, left, up) {
            for r in binary_trees(chip, leaves - left, up) {
                let pair = l.hcomp(&r);
                let t = if up {
                    pair.vcomp(&Term::chip(chip, 2, 1))
                } else {
                    Term::chip(chip, 1, 2).vcomp(&pair)
                };
                out.push(t.expect("binary arities"));
            }
        }
    }
    out
}

/// Letters of `{a,b}`-words of length `len` accepted by some circuit
/// `joins ↕ letters ↕ forks` of the binary fork/join shape.
pub fn accepted_parallel_words(a: &BranchingAutomaton, alphabet: &[&str], len: usize) -> Result<BTreeSet<Vec<String>>> {
    let (_, rep) = a.branching_rep()?;
    let mut out = BTreeSet::new();
    if len == 0 {
        if a.coefficient(&rep, &Term::wire())? {
            out.insert(Vec::new());
        }
        return Ok(out);
    }
    let forks = binary_trees(&fork_name(2), len, true);
    let joins = binary_trees(&join_name(2), len, false);
    for word in MultiIndex::all(alphabet.len(), len) {
        let letters: Vec<Term> = word.digits().iter().map(|&d| Term::chip(alphabet[d - 1], 1, 1)).collect();
        let row = Term::hcat(&letters);
        'search: for f in &forks {
            let lower = row.vcomp(f)?;
            for j in &joins {
                if a.coefficient(&rep, &j.vcomp(&lower)?)? {
                    out.insert(word.digits().iter().map(|&d| alphabet[d - 1].to_string()).collect());
                    break 'search;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fork_is_symmetric() {
        let a = BranchingAutomaton::balanced_example();
        let (_, rep) = a.branching_rep().unwrap();
        let f = rep.get("fork2").unwrap();
        assert_eq!(f.get(&[2, 3], &[1]).unwrap(), &Boolean(true));
        assert_eq!(f.get(&[3, 2], &[1]).unwrap(), &Boolean(true));
        assert_eq!(f.get(&[2, 2], &[1]).unwrap(), &Boolean(false));
        let j = rep.get("join2").unwrap();
        assert_eq!(j.get(&[6], &[5, 4]).unwrap(), &Boolean(true));
    }

    #[test]
    fn short_words() {
        let a = BranchingAutomaton::balanced_example();
        let two = accepted_parallel_words(&a, &["a", "b"], 2).unwrap();
        let expect: BTreeSet<Vec<String>> = [["a", "b"], ["b", "a"]].iter().map(|w| w.iter().map(|s| s.to_string()).collect()).collect();
        assert_eq!(two, expect);
        assert_eq!(accepted_parallel_words(&a, &["a", "b"], 0).unwrap().len(), 1);
        assert!(accepted_parallel_words(&a, &["a", "b"], 1).unwrap().is_empty());
    }

    #[test]
    fn sequential_letters_degenerate_to_words() {
        let mut a = BranchingAutomaton::new(2, [1], [2]).unwrap();
        a.add_seq(1, "a", 2).unwrap();
        a.add_seq(2, "a", 2).unwrap();
        let (sig, rep) = a.branching_rep().unwrap();
        let aa = sig.chip("a").unwrap().vcomp(&sig.chip("a").unwrap()).unwrap();
        assert!(a.coefficient(&rep, &aa).unwrap());
        assert!(!a.coefficient(&rep, &Term::wire()).unwrap());
    }

    #[test]
    fn multisets_need_two_states() {
        let mut a = BranchingAutomaton::new(2, [1], [2]).unwrap();
        assert!(a.add_fork(1, &[2]).is_err());
        assert!(a.add_join(&[1], 2).is_err());
    }
}
