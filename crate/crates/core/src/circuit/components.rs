//! Maximal decomposition of a circuit into connected juxtaposition factors.

use super::{Node, Term};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Leaves are wires and chips, numbered in syntax order; returns the leaf
/// attached to each output and input slot.
fn link(t: &Term, uf: &mut UnionFind) -> (Vec<usize>, Vec<usize>) {
    match t.node() {
        Node::Empty => (vec![], vec![]),
        Node::Wire => {
            let l = uf.add();
            (vec![l], vec![l])
        }
        Node::Chip(c) => {
            let l = uf.add();
            (vec![l; c.out], vec![l; c.inp])
        }
        Node::HComp(a, b) => {
            let (mut ao, mut ai) = link(a, uf);
            let (bo, bi) = link(b, uf);
            ao.extend(bo);
            ai.extend(bi);
            (ao, ai)
        }
        Node::VComp(top, bottom) => {
            let (to, ti) = link(top, uf);
            let (bo, bi) = link(bottom, uf);
            for (x, y) in ti.iter().zip(&bo) {
                uf.union(*x, *y);
            }
            (to, bi)
        }
    }
}

/// The sub-circuit made of the leaves whose class is `keep`.
fn restrict(t: &Term, class: &[usize], keep: usize, next: &mut usize) -> Term {
    match t.node() {
        Node::Empty => Term::empty(),
        Node::Wire | Node::Chip(_) => {
            let mine = class[*next] == keep;
            *next += 1;
            if mine {
                t.clone()
            } else {
                Term::empty()
            }
        }
        Node::HComp(a, b) => {
            let a = restrict(a, class, keep, next);
            a.hcomp(&restrict(b, class, keep, next))
        }
        Node::VComp(top, bottom) => {
            let top = restrict(top, class, keep, next);
            let bottom = restrict(bottom, class, keep, next);
            top.vcomp(&bottom).expect("cut wires stay inside one component")
        }
    }
}

/// The connected components `p1, .., pk` with `t = p1 ↔ .. ↔ pk`, ordered
/// by their first output slot (then first input slot, then syntax order).
/// The empty circuit has no components.
pub fn connected_components(t: &Term) -> Vec<Term> {
    let mut uf = UnionFind(Vec::new());
    let (outs, ins) = link(t, &mut uf);
    let n = uf.0.len();
    let class: Vec<usize> = (0..n).map(|l| uf.find(l)).collect();
    let mut reps: Vec<usize> = class.clone();
    reps.sort();
    reps.dedup();
    let position = |r: usize| {
        let o = outs.iter().position(|&l| class[l] == r).unwrap_or(usize::MAX);
        let i = ins.iter().position(|&l| class[l] == r).unwrap_or(usize::MAX);
        let first = class.iter().position(|&c| c == r).unwrap_or(usize::MAX);
        (o, i, first)
    };
    reps.sort_by_key(|&r| position(r));
    reps.into_iter()
        .map(|r| {
            let mut next = 0;
            restrict(t, &class, r, &mut next)
        })
        .collect()
}

pub fn is_connected(t: &Term) -> bool {
    connected_components(t).len() == 1
}
