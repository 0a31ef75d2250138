//! Exhaustive enumeration of circuits up to isomorphism.
//!
//! Every circuit is a stack of layers `|^a ↔ c ↔ |^b` with one chip each
//! (take the chips in a topological order). The search stacks layers on top
//! of `|^n` and keeps one representative per canonical key.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;

use super::{Signature, Term};

/// All circuits of arity `(m, n)` with at most `max_chips` chips, one per
/// isomorphism class, ordered by chip count then key.
pub fn enumerate_circuits(sig: &Signature, max_chips: usize, m: usize, n: usize) -> Vec<Term> {
    let growth = sig.chips().map(|c| c.out.saturating_sub(c.inp)).max().unwrap_or(0);
    enumerate_circuits_within(sig, max_chips, m, n, m.max(n) + max_chips * growth)
}

/// As [`enumerate_circuits`], with every intermediate layer at most
/// `max_width` wires wide.
pub fn enumerate_circuits_within(sig: &Signature, max_chips: usize, m: usize, n: usize, max_width: usize) -> Vec<Term> {
    let mut found = BTreeMap::new();
    search(sig, max_chips, max_width, &[n], &mut found, |t| t.out_arity() == m);
    sorted(found)
}

/// Every circuit with at most `max_chips` chips, input and output arity at
/// most `max_arity`, and layers at most `max_width` wide.
pub fn enumerate_all(sig: &Signature, max_chips: usize, max_arity: usize, max_width: usize) -> Vec<Term> {
    let mut found = BTreeMap::new();
    let starts: Vec<usize> = (0..=max_arity).collect();
    search(sig, max_chips, max_width, &starts, &mut found, |t| t.out_arity() <= max_arity);
    sorted(found)
}

/// A random circuit with `chips` chips drawn from `sig`, grown one chip at a
/// time beside, above or below the current circuit.
pub fn random_circuit<R: Rng + ?Sized>(sig: &Signature, chips: usize, rng: &mut R) -> Term {
    let decls: Vec<_> = sig.chips().collect();
    let mut t = Term::empty();
    if decls.is_empty() {
        return t;
    }
    for _ in 0..chips {
        let c = decls[rng.gen_range(0..decls.len())];
        let chip = c.term();
        t = match rng.gen_range(0..4) {
            0 => chip.hcomp(&t),
            1 => t.hcomp(&chip),
            2 => {
                if t.out_arity() < c.inp {
                    t = t.hcomp(&Term::wires(c.inp - t.out_arity()));
                }
                let a = rng.gen_range(0..=t.out_arity() - c.inp);
                let layer = Term::wires(a).hcomp(&chip).hcomp(&Term::wires(t.out_arity() - c.inp - a));
                layer.vcomp(&t).expect("layer fits")
            }
            _ => {
                if t.in_arity() < c.out {
                    t = t.hcomp(&Term::wires(c.out - t.in_arity()));
                }
                let a = rng.gen_range(0..=t.in_arity() - c.out);
                let layer = Term::wires(a).hcomp(&chip).hcomp(&Term::wires(t.in_arity() - c.out - a));
                t.vcomp(&layer).expect("layer fits")
            }
        };
    }
    t
}

fn sorted(found: BTreeMap<Vec<u8>, Term>) -> Vec<Term> {
    let mut v: Vec<(Vec<u8>, Term)> = found.into_iter().collect();
    v.sort_by(|(ka, a), (kb, b)| a.chip_count().cmp(&b.chip_count()).then_with(|| ka.cmp(kb)));
    v.into_iter().map(|(_, t)| t).collect()
}

fn search(
    sig: &Signature,
    max_chips: usize,
    max_width: usize,
    starts: &[usize],
    found: &mut BTreeMap<Vec<u8>, Term>,
    accept: impl Fn(&Term) -> bool,
) {
    let mut seen = HashSet::new();
    let mut frontier: Vec<Term> = Vec::new();
    for &n in starts {
        if n > max_width {
            continue;
        }
        let t = Term::wires(n);
        if seen.insert(t.canonical_key()) {
            frontier.push(t);
        }
    }
    for depth in 0..=max_chips {
        let mut next = Vec::new();
        for t in &frontier {
            if accept(t) {
                found.entry(t.canonical_key()).or_insert_with(|| t.clone());
            }
            if depth == max_chips {
                continue;
            }
            let width = t.out_arity();
            for chip in sig.chips() {
                if chip.inp > width || width - chip.inp + chip.out > max_width {
                    continue;
                }
                for a in 0..=width - chip.inp {
                    let layer = Term::wires(a).hcomp(&chip.term()).hcomp(&Term::wires(width - a - chip.inp));
                    let u = layer.vcomp(t).expect("layer fits");
                    if seen.insert(u.canonical_key()) {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::ChipDecl;

    #[test]
    fn one_chip_two_deep() {
        let sig = Signature::new([ChipDecl::new("c", 1, 1)]).unwrap();
        let all = enumerate_circuits(&sig, 2, 1, 1);
        let c = sig.chip("c").unwrap();
        let want = [Term::wire(), c.clone(), c.vcomp(&c).unwrap()];
        assert_eq!(all.len(), 3);
        for (got, w) in all.iter().zip(&want) {
            assert_eq!(got.canonical_key(), w.canonical_key());
        }
    }

    #[test]
    fn no_chips_gives_wires() {
        let sig = Signature::new([ChipDecl::new("c", 1, 1)]).unwrap();
        let all = enumerate_circuits(&sig, 0, 3, 3);
        assert_eq!(all, vec![Term::wires(3)]);
    }

    #[test]
    fn pluggable_zero_arity_is_empty_only() {
        let sig = Signature::new([ChipDecl::new("c", 1, 1), ChipDecl::new("m", 1, 2)]).unwrap();
        assert_eq!(enumerate_circuits(&sig, 3, 0, 0), vec![Term::empty()]);
    }

    #[test]
    fn classes_are_distinct_and_complete() {
        // Two (1,1) chips, width 2: count circuits with exactly one chip.
        let sig = Signature::new([ChipDecl::new("f", 1, 1), ChipDecl::new("g", 1, 1)]).unwrap();
        let all = enumerate_circuits(&sig, 1, 2, 2);
        // |↔|, f↔|, |↔f, g↔|, |↔g
        assert_eq!(all.len(), 5);
        let keys: HashSet<_> = all.iter().map(Term::canonical_key).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn random_circuits_have_the_requested_size() {
        use rand::SeedableRng;
        let sig = Signature::new([ChipDecl::new("c", 1, 1), ChipDecl::new("m", 2, 1), ChipDecl::new("d", 1, 2)]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for k in 0..8 {
            let t = random_circuit(&sig, k, &mut rng);
            assert_eq!(t.chip_count(), k);
            assert_eq!(t.to_port_graph().arity(), t.arity());
        }
    }
}
